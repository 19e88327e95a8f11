"""
Exhaustive iteration over Brauer diagrams, D-classes, idempotents and
twist-bounded closures.

Everything here is the brute-force side of a dual route: streams are
deterministic and restartable, closures are plain worklists, and the
divisibility oracle decides Green's pre-orders by exhaustive witness
search so the structural characterisations can be checked against it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .diagram import BrauerDiagram, DiagramError, multiply
from .twisted import TwistedElement, as_twisted, is_idempotent_plain, is_idempotent_twisted, star

ENUMERATION_DEGREE_LIMIT = 10


def _check_degree(n: int, allow_large: bool) -> None:
    if n < 0:
        raise DiagramError("degree must be non-negative")
    if n > ENUMERATION_DEGREE_LIMIT and not allow_large:
        raise DiagramError(
            f"enumeration of degree {n} > {ENUMERATION_DEGREE_LIMIT} refused; "
            "pass allow_large=True to override"
        )


def _complete_pairings(pairing: list[int], free: list[int]):
    if not free:
        yield tuple(pairing)
        return
    first, rest = free[0], free[1:]
    for idx in range(len(rest)):
        partner = rest[idx]
        pairing[first], pairing[partner] = partner, first
        yield from _complete_pairings(pairing, rest[:idx] + rest[idx + 1 :])
    # entries for first/partner are overwritten by the next branch


def all_diagrams(n: int, allow_large: bool = False):
    """All (2n-1)!! diagrams of degree n, in canonical (sorted) order.

    The smallest unpaired point is repeatedly joined to each larger
    unpaired point, so the pairing arrays come out lexicographically
    sorted without any post-processing.

    >>> [sum(1 for _ in all_diagrams(n)) for n in range(5)]
    [1, 1, 3, 15, 105]
    """
    _check_degree(n, allow_large)
    for pairing in _complete_pairings([0] * (2 * n), list(range(2 * n))):
        yield BrauerDiagram(n, pairing)


def split_prefixes(n: int) -> list[int]:
    """Partners of point 0 splitting the enumeration into 2n-1 disjoint parts."""
    return list(range(1, 2 * n))


def all_diagrams_split(n: int, first_partner: int, allow_large: bool = False):
    """The slice of all_diagrams(n) where point 0 pairs with ``first_partner``.

    The slices over split_prefixes(n) partition the full stream and each is
    independently restartable, so they can be consumed in parallel.
    """
    _check_degree(n, allow_large)
    if not 1 <= first_partner < 2 * n:
        raise DiagramError(f"first partner {first_partner} out of range")
    pairing = [0] * (2 * n)
    pairing[0], pairing[first_partner] = first_partner, 0
    free = [p for p in range(1, 2 * n) if p != first_partner]
    for full in _complete_pairings(pairing, free):
        yield BrauerDiagram(n, full)


def _partial_matchings(points: list[int]):
    """All sets of disjoint pairs on ``points`` (including the empty set),
    yielded as (pairs, unmatched)."""
    if not points:
        yield [], []
        return
    first, rest = points[0], points[1:]
    for pairs, unmatched in _partial_matchings(rest):
        yield pairs, [first] + unmatched
    for idx in range(len(rest)):
        partner = rest[idx]
        for pairs, unmatched in _partial_matchings(rest[:idx] + rest[idx + 1 :]):
            yield [(first, partner)] + pairs, unmatched


def hook_patterns(n: int, r: int):
    """All rho(n, r) ways to choose (n-r)/2 disjoint hooks on [n],
    as (hooks, leftover) with both parts sorted."""
    if (n - r) % 2 or not 0 <= r <= n:
        raise DiagramError(f"rank {r} is not attainable in degree {n}")
    s = (n - r) // 2
    for pairs, unmatched in _partial_matchings(list(range(1, n + 1))):
        if len(pairs) == s:
            yield pairs, unmatched


def d_class(n: int, r: int, allow_large: bool = False):
    """All delta(n, r) diagrams of rank r: every choice of upper hooks,
    lower hooks and transversal bijection."""
    _check_degree(n, allow_large)
    lower = list(hook_patterns(n, r))
    for upper_hooks, dom in hook_patterns(n, r):
        for lower_hooks, codom in lower:
            for image in itertools.permutations(codom):
                blocks = [(a, b) for a, b in upper_hooks]
                blocks += [(-c, -d) for c, d in lower_hooks]
                blocks += [(i, -v) for i, v in zip(dom, image)]
                pairing = [0] * (2 * n)
                for x, y in blocks:
                    xi = x - 1 if x > 0 else n - x - 1
                    yi = y - 1 if y > 0 else n - y - 1
                    pairing[xi], pairing[yi] = yi, xi
                yield BrauerDiagram(n, tuple(pairing))


def idempotents(n: int, twisted: bool = True, allow_large: bool = False):
    """Stream of idempotent diagrams; the twisted ones are those whose
    square also creates no floating component."""
    test = is_idempotent_twisted if twisted else is_idempotent_plain
    for d in all_diagrams(n, allow_large):
        if test(d):
            yield d


def random_diagram(n: int, rng: random.Random) -> BrauerDiagram:
    """A uniformly random diagram: pair up a shuffled list of the 2n points."""
    points = list(range(2 * n))
    rng.shuffle(points)
    pairing = [0] * (2 * n)
    for idx in range(0, 2 * n, 2):
        x, y = points[idx], points[idx + 1]
        pairing[x], pairing[y] = y, x
    return BrauerDiagram(n, tuple(pairing))


@dataclass(frozen=True)
class ClosureResult:
    """A twist-bounded closure: the reachable elements with twist <= bound,
    and whether the bound was ever hit (if not, the set is a genuine
    subsemigroup, not just a truncation)."""

    bound: int
    elements: frozenset[TwistedElement]
    saturated_within_bound: bool


def bounded_closure(generators, twist_bound: int) -> ClosureResult:
    """Close a generator set under the star product, discarding any product
    whose twist exceeds ``twist_bound``.

    Terminates because at most (bound+1) * (2n-1)!! elements fit under the
    bound.  Monotone in both the bound and the generator set.
    """
    gens = [as_twisted(g) for g in generators]
    if any(g.twist > twist_bound for g in gens):
        raise DiagramError("twist bound lies below a generator's twist")
    elements: set[TwistedElement] = set(gens)
    frontier = list(elements)
    saturated = True
    while frontier:
        fresh: list[TwistedElement] = []
        for x in frontier:
            for y in list(elements):
                for p in (star(x, y), star(y, x)):
                    if p.twist > twist_bound:
                        saturated = False
                    elif p not in elements:
                        elements.add(p)
                        fresh.append(p)
        frontier = fresh
    return ClosureResult(twist_bound, frozenset(elements), saturated)


def plain_closure(generators) -> frozenset[BrauerDiagram]:
    """Close a set of diagrams under the plain (untwisted) product."""
    elements: set[BrauerDiagram] = set(generators)
    frontier = list(elements)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(elements):
                for p in (multiply(x, y)[0], multiply(y, x)[0]):
                    if p not in elements:
                        elements.add(p)
                        fresh.append(p)
        frontier = fresh
    return frozenset(elements)


class DivisibilityOracle:
    """Green's pre-orders on one degree, by exhaustive witness search.

    Caches the full list of diagrams, the right-translation sets b*B_n,
    and the left-multiple sets B_n*b, so sweeps over many pairs stay
    affordable.  Deliberately never consults kernels or ranks: this is
    the independent route the characterisations are verified against.
    """

    def __init__(self, n: int, allow_large: bool = False):
        self.n = n
        self.diagrams = list(all_diagrams(n, allow_large))
        self._right: dict[BrauerDiagram, frozenset[BrauerDiagram]] = {}
        self._left_products: dict[BrauerDiagram, frozenset[BrauerDiagram]] = {}

    def _right_set(self, beta: BrauerDiagram) -> frozenset[BrauerDiagram]:
        out = self._right.get(beta)
        if out is None:
            out = frozenset(multiply(beta, d)[0] for d in self.diagrams)
            self._right[beta] = out
        return out

    def _left_product_set(self, beta: BrauerDiagram) -> frozenset[BrauerDiagram]:
        out = self._left_products.get(beta)
        if out is None:
            out = frozenset(multiply(g, beta)[0] for g in self.diagrams)
            self._left_products[beta] = out
        return out

    def leq_R(self, alpha: BrauerDiagram, beta: BrauerDiagram) -> bool:
        """Whether alpha = beta * d for some diagram d."""
        return alpha in self._right_set(beta)

    def leq_L(self, alpha: BrauerDiagram, beta: BrauerDiagram) -> bool:
        """Whether alpha = g * beta for some diagram g."""
        return alpha in self._left_product_set(beta)

    def leq_J(self, alpha: BrauerDiagram, beta: BrauerDiagram) -> bool:
        """Whether alpha = g * beta * d for some diagrams g, d."""
        return any(alpha in self._right_set(p) for p in self._left_product_set(beta))


def divisibility_oracle(relation: str, alpha: BrauerDiagram, beta: BrauerDiagram) -> bool:
    """One-shot oracle query; build a DivisibilityOracle directly for sweeps."""
    oracle = DivisibilityOracle(alpha.degree)
    try:
        return {"R": oracle.leq_R, "L": oracle.leq_L, "J": oracle.leq_J}[relation](alpha, beta)
    except KeyError:
        raise DiagramError(f"relation must be R, L or J, not {relation!r}") from None
