"""Green's pre-orders and relations, constructive witnesses, regularity."""

import itertools
import random

import pytest

from twisted_brauer import (
    DivisibilityOracle,
    PreconditionError,
    TwistedElement,
    all_diagrams,
    as_twisted,
    canonical_idempotent,
    d_class,
    delta,
    factor_left,
    factor_right,
    factor_two_sided,
    green_class,
    identity,
    index_set,
    is_idempotent_twisted,
    is_regular,
    leq_J,
    leq_L,
    leq_R,
    multiply,
    permutation_diagram,
    rho,
    same_class,
    star,
    star_chain,
    twisted_leq,
)
from twisted_brauer.enumeration import random_diagram


def test_preorders_reflexive_transitive_n3():
    pool = list(all_diagrams(3))
    for rel in (leq_R, leq_L, leq_J):
        for a in pool:
            assert rel(a, a)
        for a, b, c in itertools.product(pool, repeat=3):
            if rel(a, b) and rel(b, c):
                assert rel(a, c)


def test_preorders_match_divisibility_oracle_n3():
    oracle = DivisibilityOracle(3)
    pool = oracle.diagrams
    for a, b in itertools.product(pool, repeat=2):
        assert leq_R(a, b) == oracle.leq_R(a, b)
        assert leq_L(a, b) == oracle.leq_L(a, b)
        assert leq_J(a, b) == oracle.leq_J(a, b)


def test_mutual_R_is_kernel_equality_n3():
    pool = list(all_diagrams(3))
    for a, b in itertools.product(pool, repeat=2):
        assert (leq_R(a, b) and leq_R(b, a)) == (a.ker == b.ker)


def test_rank0_below_everything():
    low = [d for d in all_diagrams(4) if d.rank == 0]
    assert len(low) == 9
    for a in low:
        for b in all_diagrams(4):
            assert leq_J(a, b)


def test_factor_right_unit_when_kernels_equal():
    pool = list(all_diagrams(4))
    for a, b in itertools.product(pool, repeat=2):
        if a.ker == b.ker:
            dlt = factor_right(a, b)
            assert dlt.rank == 4  # a unit
            assert multiply(b, dlt) == (a, 0)


def test_factor_right_requires_precondition():
    a = identity(4)
    b = next(d for d in all_diagrams(4) if d.rank == 2)
    with pytest.raises(PreconditionError):
        factor_right(a, b)


def test_factor_exhaustive_n4():
    pool = list(all_diagrams(4))
    pairs = 0
    for a, b in itertools.product(pool, repeat=2):
        if leq_R(a, b):
            assert multiply(b, factor_right(a, b)) == (a, 0)
            pairs += 1
        if leq_L(a, b):
            assert multiply(factor_left(a, b), b) == (a, 0)
    assert pairs > len(pool)  # reflexivity alone already gives |B_4|


def test_factor_left_mirrors_right(alpha6):
    gamma = factor_left(alpha6, alpha6)
    assert multiply(gamma, alpha6) == (alpha6, 0)
    delta_w = factor_right(alpha6.star(), alpha6.star())
    assert gamma == delta_w.star()


def test_factor_two_sided_exhaustive_n3():
    pool = list(all_diagrams(3))
    seen = 0
    for a, b in itertools.product(pool, repeat=2):
        if a.rank <= b.rank:
            g, d = factor_two_sided(a, b)
            assert star_chain(g, b, d) == TwistedElement(0, a)
            seen += 1
    assert seen == 171


def test_factor_two_sided_unit_case():
    rng = random.Random(3)
    sigma = permutation_diagram(5, (2, 1, 4, 5, 3))
    for _ in range(100):
        a = random_diagram(5, rng)
        g, d = factor_two_sided(a, sigma)
        assert star_chain(g, sigma, d) == TwistedElement(0, a)


def test_factor_two_sided_random_n5():
    rng = random.Random(31)
    done = 0
    while done < 100:
        a, b = random_diagram(5, rng), random_diagram(5, rng)
        if a.rank > b.rank:
            continue
        g, d = factor_two_sided(a, b)
        assert star_chain(g, b, d) == TwistedElement(0, a)
        done += 1


def test_twisted_leq_statement():
    a = next(d for d in all_diagrams(4) if d.rank == 2)
    b = identity(4)
    assert twisted_leq("J", TwistedElement(2, a), TwistedElement(1, b))
    assert not twisted_leq("R", TwistedElement(0, a), TwistedElement(1, a))
    assert twisted_leq("R", TwistedElement(1, a), TwistedElement(0, a))


def test_twisted_leq_against_bounded_witness_search():
    pool = list(all_diagrams(3))
    elements = [TwistedElement(i, d) for i in range(3) for d in pool]
    low = [x for x in elements if x.twist <= 1]
    rng = random.Random(17)
    sample = [(rng.choice(low), rng.choice(low)) for _ in range(150)]
    for x, y in sample:
        found = any(
            star_chain(g, y, d) == x
            for g in elements
            if g.twist <= x.twist
            for d in pool
        )
        assert found == twisted_leq("J", x, y)


def test_green_classes_counts():
    n = 4
    for r in index_set(n):
        members = list(d_class(n, r))
        assert len(members) == delta(n, r)
        assert len({m.ker for m in members}) == rho(n, r)
        assert len({(m.ker, m.coker) for m in members}) == rho(n, r) ** 2
    assert rho(4, 2) == 6
    descriptions = {
        green_class("D", TwistedElement(i, d))
        for i in range(3)
        for d in all_diagrams(4)
    }
    assert len(descriptions) == 9  # 3 ranks x 3 twists


def test_d_class_order_is_product_of_chains():
    # one representative per rank; order = (rank ascending) x (twist descending)
    reps = {r: next(iter(d_class(4, r))) for r in index_set(4)}
    for (r1, a), (r2, b) in itertools.product(reps.items(), repeat=2):
        for i, j in itertools.product(range(4), repeat=2):
            expected = r1 <= r2 and i >= j
            assert twisted_leq("J", TwistedElement(i, a), TwistedElement(j, b)) == expected


def test_same_class_semantics():
    pool = list(all_diagrams(3))
    for a, b in itertools.product(pool[:8], repeat=2):
        for rel, plain in (
            ("R", a.ker == b.ker),
            ("L", a.coker == b.coker),
            ("H", a.ker == b.ker and a.coker == b.coker),
            ("D", a.rank == b.rank),
            ("J", a.rank == b.rank),
        ):
            assert same_class(rel, as_twisted(a), as_twisted(b)) == plain
            assert not same_class(rel, TwistedElement(1, a), TwistedElement(0, b))
            assert same_class(rel, TwistedElement(2, a), TwistedElement(2, b)) == plain


def test_green_class_description():
    x = TwistedElement(1, identity(3))
    desc = green_class("D", x)
    assert desc.twist == 1 and desc.rank == 3
    assert "rank=3" in str(desc)
    assert green_class("R", x).kernel == ()


def test_class_equals_unit_translates_n3():
    pool = list(all_diagrams(3))
    units = [d for d in pool if d.rank == 3]
    for a in pool:
        r_class = {b for b in pool if same_class("R", as_twisted(a), as_twisted(b))}
        assert r_class == {(a * s) for s in units}
        l_class = {b for b in pool if same_class("L", as_twisted(a), as_twisted(b))}
        assert l_class == {(s * a) for s in units}
        d_cls = {b for b in pool if same_class("D", as_twisted(a), as_twisted(b))}
        assert d_cls == {(s * a) * t for s in units for t in units}


def test_is_regular_statement():
    assert not is_regular(TwistedElement(1, identity(4)))
    rank0 = next(d for d in all_diagrams(4) if d.rank == 0)
    assert not is_regular(as_twisted(rank0))
    assert is_regular(as_twisted(identity(4)))
    assert is_regular(as_twisted(identity(0)))  # trivial monoid


def test_is_regular_against_witness_search():
    pool = list(all_diagrams(3))
    elements = [TwistedElement(i, d) for i in range(2) for d in pool]
    for x in elements:
        found = any(star(star(x, y), x) == x for y in elements)
        assert found == is_regular(x)


def test_canonical_idempotent_shapes():
    for n in range(1, 7):
        for r in index_set(n):
            if r == 0:
                with pytest.raises(PreconditionError):
                    canonical_idempotent(n, r)
                continue
            eps = canonical_idempotent(n, r)
            assert eps.rank == r
            assert is_idempotent_twisted(eps)
    assert canonical_idempotent(5, 5) == identity(5)
