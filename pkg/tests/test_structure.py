"""Graham-Houghton graphs, Strong Hall, singular ideal, idempotent
generation end to end."""

import math
import random

import pytest

from twisted_brauer import (
    DiagramError,
    GHGraph,
    KernelSignature,
    PreconditionError,
    TwistedElement,
    all_diagrams,
    as_twisted,
    bounded_closure,
    build_gh_graph,
    d_class,
    factor_into_idempotents,
    idempotent_generating_set,
    idempotents,
    identity,
    ig_subsemigroup_rank,
    in_idempotent_generated,
    index_set,
    is_idempotent_plain,
    is_idempotent_twisted,
    make_diagram,
    perfect_matching,
    plain_closure,
    rho,
    singular_generating_set,
    singular_rank,
    star_chain,
    strong_hall_check,
    strong_hall_subset_oracle,
    verify_rank_idrank,
)
from twisted_brauer.enumeration import random_diagram
from twisted_brauer.structure import _transposition_factors, all_units


def test_gh_graph_shape_n4_r2():
    graph = build_gh_graph(4, 2)
    assert len(graph.left) == len(graph.right) == rho(4, 2) == 6
    assert graph.common_degree() == 4
    assert len(graph.edges) == 24
    assert graph.is_connected()
    # per-vertex counts match bucketing the idempotents by kernel
    idems = [d for d in d_class(4, 2) if is_idempotent_twisted(d)]
    for li, sig in enumerate(graph.left):
        in_r_class = sum(1 for d in idems if d.ker == sig)
        assert in_r_class == len(graph.neighbors(li)) == 4


def test_gh_graph_regular_degrees_up_to_6():
    for n in range(3, 7):
        for r in index_set(n):
            if r in (0, n):
                continue
            graph = build_gh_graph(n, r)
            b = graph.common_degree()
            assert b is not None and b >= 2
            assert len(graph.edges) == b * rho(n, r)
            idem_count = sum(1 for d in d_class(n, r) if is_idempotent_twisted(d))
            assert idem_count == len(graph.edges)


def test_gh_graph_rejects_extreme_ranks():
    with pytest.raises(PreconditionError):
        build_gh_graph(4, 0)
    with pytest.raises(PreconditionError):
        build_gh_graph(4, 4)
    with pytest.raises(PreconditionError):
        build_gh_graph(2, 2)


def test_h_class_idempotent_is_unique():
    # at most one idempotent per (kernel, cokernel) cell
    for n, r in ((3, 1), (4, 2), (5, 3)):
        seen = set()
        for d in d_class(n, r):
            if is_idempotent_twisted(d):
                key = (d.ker, d.coker)
                assert key not in seen
                seen.add(key)


def _synthetic_graph(edges, size=2):
    hooks = [((1, 2),), ((3, 4),)]
    sigs = tuple(KernelSignature(4, frozenset(h)) for h in hooks[:size])
    return GHGraph(4, 2, sigs, sigs, frozenset(edges), ())


def test_strong_hall_path_graph_fails():
    # 2+2 path: one endpoint's neighborhood is a single vertex
    path = _synthetic_graph({(0, 0), (1, 0), (1, 1)})
    assert not strong_hall_check(path)
    assert not strong_hall_subset_oracle(path)


def test_strong_hall_complete_graph_passes():
    complete = _synthetic_graph({(0, 0), (0, 1), (1, 0), (1, 1)})
    assert strong_hall_check(complete)
    assert strong_hall_subset_oracle(complete)


def test_strong_hall_no_matching_fails():
    isolated = _synthetic_graph({(0, 0), (1, 0)})
    assert perfect_matching(isolated) is None
    assert not strong_hall_check(isolated)
    assert not strong_hall_subset_oracle(isolated)


def test_strong_hall_scc_matches_subset_oracle_on_built_graphs():
    for n, r in ((3, 1), (4, 2), (5, 1), (5, 3), (6, 4)):
        graph = build_gh_graph(n, r)
        if len(graph.left) > 16:
            continue
        assert strong_hall_check(graph) == strong_hall_subset_oracle(graph)


def test_strong_hall_scc_matches_oracle_on_random_bipartite():
    rng = random.Random(4)
    hooks = [((1, 2),), ((1, 3),), ((1, 4),), ((2, 3),), ((2, 4),), ((3, 4),)]
    sigs = tuple(KernelSignature(4, frozenset(h)) for h in hooks)
    for _ in range(300):
        size = rng.randrange(1, 6)
        edges = frozenset(
            (l, r)
            for l in range(size)
            for r in range(size)
            if rng.random() < 0.45
        )
        graph = GHGraph(4, 2, sigs[:size], sigs[:size], edges, ())
        assert strong_hall_check(graph) == strong_hall_subset_oracle(graph)


def test_verify_rank_idrank_certifies():
    for n, r in ((3, 1), (4, 2), (5, 3)):
        report = verify_rank_idrank(n, r)
        assert report.certified and report.certified_rank == rho(n, r)
    assert verify_rank_idrank(5, 3).certified_rank == 10


def test_idempotent_generating_set_shape():
    sigma = idempotent_generating_set(4, 2)
    assert len(sigma) == rho(4, 2) == 6
    assert all(x.twist == 0 and is_idempotent_twisted(x.diagram) for x in sigma)
    kernels = {x.diagram.ker for x in sigma}
    cokernels = {x.diagram.coker for x in sigma}
    assert len(kernels) == len(cokernels) == 6  # a perfect matching hits every class


def test_idempotent_generating_set_generates_desk_scale():
    sigma = idempotent_generating_set(3, 1)
    closure = bounded_closure(sigma, 2).elements
    expected = {
        TwistedElement(i, d) for i in range(3) for d in all_diagrams(3) if d.rank == 1
    }
    assert closure == expected


def test_gh_graph_dot_export():
    dot = build_gh_graph(4, 2).to_dot()
    assert dot.startswith("graph graham_houghton {")
    assert dot.rstrip().endswith("}")
    assert 'L0 [label="ker (1,2)"' in dot
    assert dot.count(" -- ") == 24


def test_singular_rank_values():
    assert singular_rank(3) == 9
    assert singular_rank(4) == 30
    assert singular_rank(5) == math.comb(5, 2) + 120
    with pytest.raises(DiagramError):
        singular_rank(2)


def test_singular_generating_set_covers_truncation():
    gens = singular_generating_set(3)
    assert len(gens) == 9
    units_at_one = [g for g in gens if g.twist == 1]
    assert len(units_at_one) == 6 and all(g.rank == 3 for g in units_at_one)
    closure = bounded_closure(gens, 2).elements
    singular_truncation = {
        TwistedElement(i, d)
        for i in range(2)
        for d in all_diagrams(3)
        if i >= 1 or d.rank < 3
    }
    assert singular_truncation <= closure


def test_in_idempotent_generated():
    rank0 = next(iter(d_class(4, 0)))
    assert in_idempotent_generated(TwistedElement(5, rank0))
    assert in_idempotent_generated(as_twisted(identity(4))) is True
    assert in_idempotent_generated(TwistedElement(1, identity(4))) is False
    sigma = make_diagram(4, [(1, -2), (2, -1), (3, -3), (4, -4)])
    assert in_idempotent_generated(as_twisted(sigma)) is False
    assert ig_subsemigroup_rank(4) == 7


def test_in_idempotent_generated_matches_closure():
    pool = list(all_diagrams(3))
    gens = [d for d in pool if is_idempotent_twisted(d)]
    closure = bounded_closure(gens, 2).elements
    for i in range(3):
        for d in pool:
            x = TwistedElement(i, d)
            assert in_idempotent_generated(x) == (x in closure)


def test_transposition_factors_compose():
    from twisted_brauer import permutation_diagram, transposition

    rng = random.Random(6)
    for _ in range(80):
        images = list(range(1, 6))
        rng.shuffle(images)
        factors = _transposition_factors(images)
        acc = identity(5)
        for i, j in factors:
            acc = acc * transposition(5, i, j)
        assert acc == permutation_diagram(5, images)


def test_factor_into_idempotents_exhaustive_n3():
    for alpha in all_diagrams(3):
        if alpha.rank == 3:
            continue
        chain = factor_into_idempotents(alpha)
        assert all(is_idempotent_twisted(b) for b in chain)
        assert star_chain(chain) == TwistedElement(0, alpha)


def test_factor_into_idempotents_exhaustive_n4():
    for alpha in all_diagrams(4):
        if alpha.rank == 4:
            continue
        chain = factor_into_idempotents(alpha)
        assert all(is_idempotent_twisted(b) for b in chain)
        assert star_chain(chain) == TwistedElement(0, alpha)


def test_factor_into_idempotents_random_n6():
    rng = random.Random(8)
    done = 0
    while done < 40:
        alpha = random_diagram(6, rng)
        if alpha.rank == 6:
            continue
        chain = factor_into_idempotents(alpha)
        assert star_chain(chain) == TwistedElement(0, alpha)
        assert all(is_idempotent_twisted(b) for b in chain)
        done += 1


def test_factor_into_idempotents_fixed_point_on_idempotents():
    for eps in idempotents(4, twisted=True):
        if eps == identity(4):
            continue  # the only unit idempotent, excluded by precondition
        assert factor_into_idempotents(eps) == [eps]


def test_factor_into_idempotents_rejects_units():
    with pytest.raises(PreconditionError):
        factor_into_idempotents(identity(4))
    with pytest.raises(PreconditionError):
        factor_into_idempotents(make_diagram(2, [(1, 2), (-1, -2)]))  # degree 2


def test_bfs_fallback_cross_validates_pipeline_n3():
    from twisted_brauer.structure import factor_into_idempotents_bfs

    for alpha in all_diagrams(3):
        if alpha.rank == 3:
            continue
        bfs_chain = factor_into_idempotents_bfs(alpha)
        assert bfs_chain is not None
        assert star_chain(bfs_chain) == TwistedElement(0, alpha)
        assert all(is_idempotent_twisted(b) for b in bfs_chain)
        pipeline_chain = factor_into_idempotents(alpha)
        assert len(bfs_chain) <= len(pipeline_chain)  # BFS chains are shortest


def test_bfs_fallback_rejects_units():
    from twisted_brauer.structure import factor_into_idempotents_bfs

    sigma = make_diagram(3, [(1, -2), (2, -1), (3, -3)])
    assert factor_into_idempotents_bfs(sigma) is None


def test_plain_idempotent_submonoids_coincide_n3():
    pool = list(all_diagrams(3))
    expected = {d for d in pool if d.rank < 3} | {identity(3)}
    plain = plain_closure([d for d in pool if is_idempotent_plain(d)])
    twisted = plain_closure([d for d in pool if is_idempotent_twisted(d)])
    assert plain == twisted == expected


def test_degree2_anomaly():
    pool = list(all_diagrams(2))
    hook = make_diagram(2, [(1, 2), (-1, -2)])
    plain = plain_closure([d for d in pool if is_idempotent_plain(d)])
    assert plain == {identity(2), hook}
    twisted_gens = [d for d in pool if is_idempotent_twisted(d)]
    assert twisted_gens == [identity(2)]
    assert plain_closure(twisted_gens) == {identity(2)}
    tw_closure = bounded_closure(twisted_gens, 3).elements
    assert tw_closure == {as_twisted(identity(2))}


def test_all_units_count():
    assert sum(1 for _ in all_units(4)) == 24
