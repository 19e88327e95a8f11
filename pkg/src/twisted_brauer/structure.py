"""
Graham-Houghton graphs, the singular ideal and idempotent generation.

The Graham-Houghton graph of a rank-r D-class is bipartite: one side per
R-class (indexed by kernel signature), one per L-class (by cokernel
signature), with an edge wherever the intersection H-class contains a
twisted idempotent.  When such a graph is connected, balanced and
satisfies the Strong Hall Condition, the rank and idempotent rank of the
ideal generated by the D-class both equal the common side size, and an
explicit generating set of that size is read off a perfect matching.

This module also carries the end-to-end factorization of any singular
diagram into twisted idempotents whose chain product creates no floating
components at all.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .diagram import (
    BrauerDiagram,
    DiagramError,
    KernelSignature,
    identity,
    multiply,
    permutation_diagram,
    transposition,
)
from .green import PreconditionError, canonical_idempotent
from .ideals import idempotent_factor_sigma, index_set, lemma_rank_drop, rho
from .twisted import TwistedElement, as_twisted, is_idempotent_twisted
from . import enumeration


@dataclass(frozen=True)
class GHGraph:
    """Bipartite Graham-Houghton graph of the rank-r D-class in degree n.

    ``left`` and ``right`` list the kernel and cokernel signatures;
    ``edges`` holds (left index, right index) pairs, and ``witnesses``
    the unique twisted idempotent sitting in each edge's H-class.
    """

    degree: int
    rank: int
    left: tuple[KernelSignature, ...]
    right: tuple[KernelSignature, ...]
    edges: frozenset[tuple[int, int]]
    witnesses: tuple[tuple[int, int, BrauerDiagram], ...]

    def neighbors(self, li: int) -> tuple[int, ...]:
        return tuple(sorted(r for l, r in self.edges if l == li))

    def left_degrees(self) -> list[int]:
        counts = [0] * len(self.left)
        for l, _ in self.edges:
            counts[l] += 1
        return counts

    def right_degrees(self) -> list[int]:
        counts = [0] * len(self.right)
        for _, r in self.edges:
            counts[r] += 1
        return counts

    def is_balanced(self) -> bool:
        return len(self.left) == len(self.right)

    def common_degree(self) -> int | None:
        """The shared vertex degree if the graph is regular, else None."""
        degrees = set(self.left_degrees()) | set(self.right_degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def is_connected(self) -> bool:
        if not self.left:
            return True
        adj_l: dict[int, list[int]] = {i: [] for i in range(len(self.left))}
        adj_r: dict[int, list[int]] = {i: [] for i in range(len(self.right))}
        for l, r in self.edges:
            adj_l[l].append(r)
            adj_r[r].append(l)
        seen_l, seen_r = {0}, set()
        stack = [("L", 0)]
        while stack:
            side, v = stack.pop()
            if side == "L":
                for r in adj_l[v]:
                    if r not in seen_r:
                        seen_r.add(r)
                        stack.append(("R", r))
            else:
                for l in adj_r[v]:
                    if l not in seen_l:
                        seen_l.add(l)
                        stack.append(("L", l))
        return len(seen_l) == len(self.left) and len(seen_r) == len(self.right)

    def witness(self, li: int, ri: int) -> BrauerDiagram:
        for l, r, d in self.witnesses:
            if (l, r) == (li, ri):
                return d
        raise DiagramError(f"no idempotent witness on edge ({li}, {ri})")

    def to_dot(self) -> str:
        """DOT rendering; vertices carry their canonical signature strings."""
        lines = ["graph graham_houghton {", "  rankdir=LR;"]
        for i, sig in enumerate(self.left):
            lines.append(f'  L{i} [label="ker {sig}" shape=box];')
        for i, sig in enumerate(self.right):
            lines.append(f'  R{i} [label="coker {sig}" shape=ellipse];')
        for l, r in sorted(self.edges):
            lines.append(f"  L{l} -- R{r};")
        lines.append("}")
        return "\n".join(lines)


def build_gh_graph(n: int, r: int) -> GHGraph:
    """Enumerate the twisted idempotents of the rank-r D-class and bucket
    them by (kernel, cokernel).  Requires n >= 3 and 0 < r < n."""
    if n < 3:
        raise PreconditionError("Graham-Houghton analysis needs degree >= 3")
    if r not in index_set(n) or r in (0, n):
        raise PreconditionError(
            f"rank {r} must lie strictly between 0 and {n} in I({n})"
        )
    left = tuple(
        KernelSignature(n, frozenset(hooks))
        for hooks, _ in enumeration.hook_patterns(n, r)
    )
    left = tuple(sorted(left, key=lambda s: s.sorted_hooks()))
    right = left  # same signature universe for kernels and cokernels
    index = {sig.hooks: i for i, sig in enumerate(left)}
    witnesses = []
    for d in enumeration.d_class(n, r):
        if is_idempotent_twisted(d):
            witnesses.append((index[d.ker.hooks], index[d.coker.hooks], d))
    edges = frozenset((l, r_) for l, r_, _ in witnesses)
    if len(edges) != len(witnesses):
        raise DiagramError("an H-class contained two idempotents")
    return GHGraph(n, r, left, right, edges, tuple(sorted(witnesses, key=lambda w: w[:2])))


def perfect_matching(graph: GHGraph) -> dict[int, int] | None:
    """A perfect matching left -> right via augmenting paths, or None.

    Deterministic: left vertices and neighbor lists are scanned in
    canonical signature order.
    """
    match_right: dict[int, int] = {}

    def augment(l: int, banned: set[int]) -> bool:
        for r in graph.neighbors(l):
            if r in banned:
                continue
            banned.add(r)
            if r not in match_right or augment(match_right[r], banned):
                match_right[r] = l
                return True
        return False

    for l in range(len(graph.left)):
        if not augment(l, set()):
            return None
    return {l: r for r, l in match_right.items()}


def strong_hall_check(graph: GHGraph) -> bool:
    """Strong Hall Condition: |N(H)| > |H| for every proper nonempty H.

    Decided in polynomial time: a perfect matching must exist (otherwise
    Hall already fails), and given one, a proper tight set exists exactly
    when the digraph "l to matched partner of each neighbour" is not
    strongly connected.
    """
    size = len(graph.left)
    if size <= 1:
        return True  # no proper nonempty subsets; vacuously Strong Hall
    if not graph.is_balanced():
        return False
    matching = perfect_matching(graph)
    if matching is None:
        return False
    inverse = {r: l for l, r in matching.items()}
    succ = [sorted({inverse[r] for r in graph.neighbors(l)} - {l}) for l in range(size)]
    pred: list[list[int]] = [[] for _ in range(size)]
    for l, outs in enumerate(succ):
        for m in outs:
            pred[m].append(l)

    def reaches_all(adj: list[list[int]]) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == size

    return reaches_all(succ) and reaches_all(pred)


def strong_hall_subset_oracle(graph: GHGraph) -> bool:
    """The 2^|J| definition, kept as an independent check for |J| <= 16."""
    size = len(graph.left)
    if size > 16:
        raise DiagramError(f"subset oracle refused for |J| = {size} > 16")
    masks = [0] * size
    for l, r in graph.edges:
        masks[l] |= 1 << r
    for subset in range(1, (1 << size) - 1):
        nbhd = 0
        h = subset
        count = 0
        while h:
            low = (h & -h).bit_length() - 1
            nbhd |= masks[low]
            h &= h - 1
            count += 1
        if bin(nbhd).count("1") <= count:
            return False
    return True


@dataclass(frozen=True)
class GHReport:
    """Outcome of certifying rank = idrank = rho(n, r) for an ideal I(r;0)."""

    degree: int
    rank_param: int
    side_size: int
    expected_side: int
    balanced: bool
    common_degree: int | None
    connected: bool
    strong_hall: bool
    certified_rank: int | None

    @property
    def certified(self) -> bool:
        return self.certified_rank is not None

    def to_json_obj(self) -> dict:
        return {
            "n": self.degree,
            "r": self.rank_param,
            "side": self.side_size,
            "rho": self.expected_side,
            "balanced": self.balanced,
            "b": self.common_degree,
            "connected": self.connected,
            "strong_hall": self.strong_hall,
            "certified_rank": self.certified_rank,
        }


def verify_rank_idrank(n: int, r: int) -> GHReport:
    """Check the sufficient conditions (balanced, connected, Strong Hall,
    degree >= 2) on the Graham-Houghton graph and certify rho(n, r)."""
    graph = build_gh_graph(n, r)
    expected = rho(n, r)
    balanced = graph.is_balanced() and len(graph.left) == expected
    b = graph.common_degree()
    connected = graph.is_connected()
    hall = strong_hall_check(graph)
    good = balanced and connected and hall and b is not None and b >= 2
    return GHReport(
        n, r, len(graph.left), expected, balanced, b, connected, hall,
        expected if good else None,
    )


def idempotent_generating_set(n: int, r: int) -> list[TwistedElement]:
    """rho(n, r) twisted idempotents generating I(r;0), one per matched edge
    of a perfect matching of the Graham-Houghton graph.

    Which perfect matching is used is a free choice; this takes the one
    found by augmenting paths in canonical vertex order.
    """
    graph = build_gh_graph(n, r)
    matching = perfect_matching(graph)
    if matching is None:
        raise DiagramError(f"Graham-Houghton graph of D_{r} has no perfect matching")
    return [as_twisted(graph.witness(l, r_)) for l, r_ in sorted(matching.items())]


def all_units(n: int):
    """The unit group: all n! permutation diagrams."""
    for images in itertools.permutations(range(1, n + 1)):
        yield permutation_diagram(n, images)


def singular_rank(n: int) -> int:
    """Smallest generating set size of the singular ideal: C(n, 2) + n!."""
    if n < 3:
        raise DiagramError("the singular rank formula is stated for degree >= 3")
    return math.comb(n, 2) + math.factorial(n)


def singular_generating_set(n: int) -> list[TwistedElement]:
    """A generating set of the singular ideal matching the rank formula:
    C(n, 2) idempotents for I(n-2;0) plus every unit at twist 1."""
    if n < 3:
        raise DiagramError("the singular generating set is stated for degree >= 3")
    gens = idempotent_generating_set(n, n - 2)
    gens += [TwistedElement(1, u) for u in all_units(n)]
    return gens


def ig_subsemigroup_rank(n: int) -> int:
    """Rank (= idempotent rank) of the idempotent-generated subsemigroup:
    C(n, 2) + 1."""
    if n < 3:
        raise DiagramError("stated for degree >= 3")
    return math.comb(n, 2) + 1


def in_idempotent_generated(x) -> bool:
    """Membership in the subsemigroup generated by the twisted idempotents:
    the untwisted identity, plus everything of rank at most n - 2."""
    x = as_twisted(x)
    if x.degree < 3:
        raise DiagramError("the description is stated for degree >= 3")
    if x.rank <= x.degree - 2:
        return True
    return x.twist == 0 and x.diagram == identity(x.degree)


# ---------------------------------------------------------------------------
# Factorization into twisted idempotents
# ---------------------------------------------------------------------------


def _transposition_factors(images: list[int]) -> list[tuple[int, int]]:
    """Transpositions whose left-to-right product is the given permutation."""
    n = len(images)
    image_of = {i + 1: v for i, v in enumerate(images)}
    seen: set[int] = set()
    factors: list[tuple[int, int]] = []
    for start in range(1, n + 1):
        if start in seen or image_of[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        nxt = image_of[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = image_of[nxt]
        for idx in range(len(cycle) - 1, 0, -1):
            a, b = cycle[idx - 1], cycle[idx]
            factors.append((min(a, b), max(a, b)))
    return factors


def _sandwich_units(alpha: BrauerDiagram) -> tuple[list[int], list[int]]:
    """Units (lam, rho) with alpha = lam * eps * rho for the canonical
    idempotent eps of alpha's rank, returned as image lists."""
    n, r = alpha.degree, alpha.rank
    tv = alpha.transversal_pairs()
    uppers = alpha.top_hooks()
    lowers = alpha.bottom_hooks()
    lam = [0] * n
    for m, (i, _) in enumerate(tv, start=1):
        lam[i - 1] = m
    for m, (a, b) in enumerate(uppers, start=1):
        lam[a - 1] = r + 2 * m - 1
        lam[b - 1] = r + 2 * m
    rho_images = [0] * n
    for m, (_, j) in enumerate(tv[:-1], start=1):
        rho_images[m - 1] = j
    rho_images[n - 1] = tv[-1][1]
    for m, (c, d) in enumerate(lowers, start=1):
        rho_images[r + 2 * m - 3] = c
        rho_images[r + 2 * m - 2] = d
    return lam, rho_images


def factor_into_idempotents(alpha: BrauerDiagram) -> list[BrauerDiagram]:
    """Twisted idempotents whose star chain is exactly (0, alpha).

    Requires degree >= 3 and alpha outside the unit group (no unit other
    than the identity is a product of idempotents).  Positive-rank
    diagrams are written as unit * canonical idempotent * unit and the
    units are absorbed transposition by transposition; rank-0 diagrams
    are first split into two rank-2 factors with no floating component.
    """
    n, r = alpha.degree, alpha.rank
    if n < 3:
        raise PreconditionError("idempotent factorization is stated for degree >= 3")
    if r == n:
        raise PreconditionError("units admit no idempotent factorization")
    if is_idempotent_twisted(alpha):
        return [alpha]
    if r == 0:
        beta, gamma = lemma_rank_drop(alpha)
        return factor_into_idempotents(beta) + factor_into_idempotents(gamma)

    eps = canonical_idempotent(n, r)
    lam, rho_images = _sandwich_units(alpha)

    chain: list[BrauerDiagram] = [eps]
    current = eps
    for i, j in _transposition_factors(rho_images):
        chain.extend(idempotent_factor_sigma(current, i, j))
        current = multiply(current, transposition(n, i, j))[0]
    for i, j in reversed(_transposition_factors(lam)):
        absorbed = idempotent_factor_sigma(current.star(), i, j)
        chain = [b.star() for b in reversed(absorbed)] + chain
        current = multiply(transposition(n, i, j), current)[0]
    return chain


def factor_into_idempotents_bfs(
    alpha: BrauerDiagram, max_length: int = 32
) -> list[BrauerDiagram] | None:
    """Search fallback for :func:`factor_into_idempotents` at small degree.

    Breadth-first search over zero-twist products of twisted idempotents;
    independent of the constructive pipeline, so the two can be played
    against each other.  Returns a shortest chain, or None if none exists
    within ``max_length`` factors.  Exponential in principle; intended
    for degree <= 3 cross-validation only.
    """
    n = alpha.degree
    idems = [d for d in enumeration.all_diagrams(n) if is_idempotent_twisted(d)]
    parent: dict[BrauerDiagram, tuple[BrauerDiagram, BrauerDiagram] | None] = {
        e: None for e in idems
    }
    frontier = list(idems)
    length = 1
    while alpha not in parent:
        if not frontier or length >= max_length:
            return None
        fresh = []
        for state in frontier:
            for e in idems:
                product, twist = multiply(state, e)
                if twist == 0 and product not in parent:
                    parent[product] = (state, e)
                    fresh.append(product)
        frontier = fresh
        length += 1
    chain: list[BrauerDiagram] = []
    node = alpha
    while True:
        link = parent[node]
        if link is None:
            chain.append(node)
            break
        node, factor = link
        chain.append(factor)
    return list(reversed(chain))
