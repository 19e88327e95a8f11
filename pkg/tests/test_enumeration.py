"""Streams, closures and the divisibility oracle."""

import itertools
import math
import random

import pytest

from twisted_brauer import (
    ClosureResult,
    DiagramError,
    TwistedElement,
    all_diagrams,
    as_twisted,
    bounded_closure,
    d_class,
    delta,
    divisibility_oracle,
    idempotents,
    identity,
    index_set,
    is_idempotent_plain,
    is_idempotent_twisted,
    make_diagram,
    plain_closure,
    star,
)
from twisted_brauer.enumeration import (
    all_diagrams_split,
    hook_patterns,
    random_diagram,
    split_prefixes,
)


def test_counts_match_double_factorial():
    expected = [1, 1, 3, 15, 105, 945, 10395]
    for n, count in enumerate(expected):
        assert sum(1 for _ in all_diagrams(n)) == count


def test_stream_is_sorted_and_duplicate_free():
    for n in (2, 3, 4):
        pool = list(all_diagrams(n))
        assert pool == sorted(pool)
        assert len(set(pool)) == len(pool)


def test_stream_restartable():
    first = list(all_diagrams(3))
    second = list(all_diagrams(3))
    assert first == second


def test_degree_guard():
    with pytest.raises(DiagramError):
        next(all_diagrams(11))
    assert sum(1 for _ in all_diagrams(2, allow_large=True)) == 3


def test_split_prefixes_partition():
    for n in (2, 3):
        whole = list(all_diagrams(n))
        pieces = [
            list(all_diagrams_split(n, p)) for p in split_prefixes(n)
        ]
        recombined = [d for piece in pieces for d in piece]
        assert sorted(recombined) == whole
        assert sum(len(p) for p in pieces) == len(whole)


def test_hook_patterns_count():
    from twisted_brauer import rho

    for n in (3, 4, 5):
        for r in index_set(n):
            assert sum(1 for _ in hook_patterns(n, r)) == rho(n, r)


def test_d_class_counts():
    assert sum(1 for _ in d_class(4, 2)) == 72
    for n in (3, 4, 5):
        for r in index_set(n):
            members = list(d_class(n, r))
            assert len(members) == delta(n, r)
            assert len(set(members)) == len(members)
            assert all(m.rank == r for m in members)


def test_top_d_class_is_symmetric_group():
    units = set(d_class(4, 4))
    assert len(units) == math.factorial(4)
    assert identity(4) in units


def test_idempotent_streams_nested():
    for n in range(2, 6):
        twisted = set(idempotents(n, twisted=True))
        plain = set(idempotents(n, twisted=False))
        assert twisted < plain
        assert all(is_idempotent_twisted(d) for d in twisted)
        assert all(is_idempotent_plain(d) for d in plain)


def test_idempotent_counts_golden():
    # frozen on first run; the twisted count is rho_nr * b_nr summed over r
    plain_counts = [len(set(idempotents(n, twisted=False))) for n in range(5)]
    twisted_counts = [len(set(idempotents(n, twisted=True))) for n in range(5)]
    assert plain_counts == [1, 1, 2, 10, 40]
    assert twisted_counts == [1, 1, 1, 7, 25]


def test_random_diagram_uniform_support():
    rng = random.Random(0)
    seen = {random_diagram(3, rng) for _ in range(2000)}
    assert seen == set(all_diagrams(3))


def test_bounded_closure_identity_only():
    result = bounded_closure([identity(3)], 2)
    assert result.elements == {as_twisted(identity(3))}
    assert result.saturated_within_bound


def test_bounded_closure_monotone():
    gens = [d for d in d_class(3, 1) if is_idempotent_twisted(d)]
    small = bounded_closure(gens, 1).elements
    large = bounded_closure(gens, 2).elements
    assert small <= large
    fewer = bounded_closure(gens[:2], 2).elements
    assert fewer <= large


def test_bounded_closure_is_closed_under_bound():
    gens = [d for d in d_class(3, 1) if is_idempotent_twisted(d)]
    result = bounded_closure(gens, 2)
    for x, y in itertools.product(result.elements, repeat=2):
        p = star(x, y)
        assert p.twist > 2 or p in result.elements
    assert not result.saturated_within_bound  # twist can exceed 2 here


def test_bounded_closure_rejects_low_bound():
    with pytest.raises(DiagramError):
        bounded_closure([TwistedElement(3, identity(2))], 2)


def test_plain_closure_b2():
    hook = make_diagram(2, [(1, 2), (-1, -2)])
    assert plain_closure([identity(2), hook]) == {identity(2), hook}


def test_oracle_one_shot_agrees_n3():
    from twisted_brauer import leq_J, leq_L, leq_R

    pool = list(all_diagrams(3))
    rng = random.Random(2)
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        assert divisibility_oracle("R", a, b) == leq_R(a, b)
        assert divisibility_oracle("L", a, b) == leq_L(a, b)
        assert divisibility_oracle("J", a, b) == leq_J(a, b)
    with pytest.raises(DiagramError):
        divisibility_oracle("H", pool[0], pool[1])
