"""
The ideal lattice of the twisted Brauer monoid.

A principal ideal I(r;k) consists of all elements of rank at most r and
twist at least k; every ideal is a finite union of principal ones, and
has a unique canonical form with both the rank and the twist parameters
strictly decreasing.  This module also houses the counting formulas
rho(n, r) and delta(n, r), the minimal generating sets M(r;k), the rank
table for principal ideals, and the constructive lemmas used to build
generators: rank-dropping products, twist-raising and twist-keeping
right identities, and the idempotent absorption of transpositions.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass

from .diagram import (
    BrauerDiagram,
    DiagramError,
    identity,
    make_diagram,
    permutation_diagram,
    transposition,
)
from .green import PreconditionError, canonical_idempotent
from .twisted import TwistedElement, as_twisted


def index_set(n: int) -> tuple[int, ...]:
    """The possible ranks in degree n: I(n) = {z, z+2, ..., n}, z = n mod 2."""
    return tuple(range(n % 2, n + 1, 2))


def double_factorial(m: int) -> int:
    """Product m(m-2)(m-4)... down to 1 or 2; empty product for m <= 0.

    >>> [double_factorial(m) for m in (-1, 0, 1, 3, 5)]
    [1, 1, 1, 3, 15]
    """
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def _check_rank_param(n: int, r: int) -> None:
    if n < 0 or r not in index_set(n):
        raise DiagramError(f"rank {r} is not in I({n}) = {index_set(n)}")


def rho(n: int, r: int) -> int:
    """Number of R-classes (= L-classes) in the rank-r D-class of degree n."""
    _check_rank_param(n, r)
    return math.comb(n, r) * double_factorial(n - r - 1)


def delta(n: int, r: int) -> int:
    """Size of the rank-r D-class of degree n: rho(n, r)^2 * r!."""
    return rho(n, r) ** 2 * math.factorial(r)


@dataclass(frozen=True)
class IdealSpec:
    """A canonical finite union of principal ideals I(r_1;k_1) u ... u I(r_s;k_s).

    Canonical form is an antichain with r_1 > ... > r_s and k_1 > ... > k_s;
    use :func:`ideal_normalize` to build one from arbitrary terms.
    """

    degree: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for r, k in self.terms:
            _check_rank_param(self.degree, r)
            if k < 0:
                raise DiagramError(f"twist parameter {k} must be non-negative")
        ranks = [r for r, _ in self.terms]
        twists = [k for _, k in self.terms]
        if ranks != sorted(ranks, reverse=True) or len(set(ranks)) != len(ranks):
            raise DiagramError("term ranks must be strictly decreasing")
        if twists != sorted(twists, reverse=True) or len(set(twists)) != len(twists):
            raise DiagramError("term twists must be strictly decreasing")

    def is_principal(self) -> bool:
        return len(self.terms) == 1

    def to_text(self) -> str:
        if not self.terms:
            return "I()"
        return " + ".join(f"I({r};{k})" for r, k in self.terms)

    def to_json_obj(self) -> dict:
        return {"n": self.degree, "terms": [list(t) for t in self.terms]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def ideal_normalize(degree: int, terms) -> IdealSpec:
    """Drop dominated terms and sort into the canonical antichain.

    A term (r, k) is dominated by (q, l) when r <= q and k >= l, since then
    I(r;k) is contained in I(q;l).
    """
    terms = [(int(r), int(k)) for r, k in terms]
    for r, k in terms:
        _check_rank_param(degree, r)
        if k < 0:
            raise DiagramError(f"twist parameter {k} must be non-negative")
    kept = []
    for r, k in sorted(set(terms), key=lambda t: (-t[0], t[1])):
        if not any(r <= q and k >= l for q, l in kept):
            kept.append((r, k))
    return IdealSpec(degree, tuple(kept))


def ideal_contains(spec: IdealSpec, x) -> bool:
    """Membership: some term (r, k) has rank(x) <= r and twist(x) >= k."""
    x = as_twisted(x)
    if x.degree != spec.degree:
        raise DiagramError(f"degrees differ: {x.degree} vs {spec.degree}")
    return any(x.rank <= r and x.twist >= k for r, k in spec.terms)


def ideal_subset(left: IdealSpec, right: IdealSpec) -> bool:
    """Containment of ideals: every left term is dominated by a right term."""
    if left.degree != right.degree:
        raise DiagramError(f"degrees differ: {left.degree} vs {right.degree}")
    return all(
        any(r <= q and k >= l for q, l in right.terms) for r, k in left.terms
    )


def ideal_equal(left: IdealSpec, right: IdealSpec) -> bool:
    return left.degree == right.degree and left.terms == right.terms


_IDEAL_TERM = re.compile(r"I\(\s*(\d+)\s*;\s*(\d+)\s*\)")


def parse_ideal(text: str, degree: int) -> IdealSpec:
    """Parse the text form ``I(5;2) + I(3;4)`` (terms in any order)."""
    terms = [(int(r), int(k)) for r, k in _IDEAL_TERM.findall(text)]
    if not terms and text.replace(" ", "") not in ("", "I()"):
        raise DiagramError(f"unparsable ideal: {text!r}")
    return ideal_normalize(degree, terms)


def ideal_from_json_obj(obj: dict) -> IdealSpec:
    return ideal_normalize(obj["n"], [tuple(t) for t in obj["terms"]])


# ---------------------------------------------------------------------------
# Constructive lemmas
# ---------------------------------------------------------------------------


def lemma_rank_drop(alpha: BrauerDiagram) -> tuple[BrauerDiagram, BrauerDiagram]:
    """Diagrams (b, g) of rank r+2 with b*g = alpha and no floating component.

    Requires rank(alpha) <= n - 4.  b is alpha with its first hook pair
    promoted to two transversals; g repairs the bottom row with a chain of
    shifted hooks so that the product closes back up without cycles.
    """
    n, r = alpha.degree, alpha.rank
    if r > n - 4:
        raise PreconditionError(f"rank {r} exceeds {n} - 4; cannot drop from above")
    tv = alpha.transversal_pairs()
    A = alpha.top_hooks()
    C = alpha.bottom_hooks()
    s = len(C)

    beta_blocks = [(i, -j) for i, j in tv]
    beta_blocks += [(A[0][0], -C[0][0]), (A[0][1], -C[0][1])]
    beta_blocks += [(a, b) for a, b in A[1:]]
    beta_blocks += [(-c, -d) for c, d in C[1:]]
    beta = make_diagram(n, beta_blocks)

    gamma_blocks = [(j, -j) for _, j in tv]
    gamma_blocks += [(C[1][0], -C[1][0]), (C[s - 1][1], -C[1][1])]
    gamma_blocks.append((C[0][0], C[0][1]))
    gamma_blocks += [(C[m][1], C[m + 1][0]) for m in range(1, s - 1)]
    gamma_blocks.append((-C[0][0], -C[0][1]))
    gamma_blocks += [(-C[m][0], -C[m][1]) for m in range(2, s)]
    gamma = make_diagram(n, gamma_blocks)
    return beta, gamma


def lemma_twist_raise(alpha: BrauerDiagram) -> BrauerDiagram:
    """A diagram b of the same rank with alpha*b = alpha and tau = 1.

    Requires alpha outside the unit group.  The upper hooks of b chain
    alpha's lower hooks with one long bridging hook, closing a single
    middle cycle in the product.
    """
    n, r = alpha.degree, alpha.rank
    if r == n:
        raise PreconditionError("units admit no twist-raising right identity")
    tv = alpha.transversal_pairs()
    C = alpha.bottom_hooks()
    s = len(C)
    blocks = [(j, -j) for _, j in tv]
    blocks.append((C[0][0], C[s - 1][1]))
    blocks += [(C[m][1], C[m + 1][0]) for m in range(s - 1)]
    blocks += [(-c, -d) for c, d in C]
    return make_diagram(n, blocks)


def lemma_twist_keep(alpha: BrauerDiagram) -> BrauerDiagram:
    """A diagram b with alpha*b = alpha and tau = 0.

    Requires alpha outside the unit group.  For positive rank, b lies in
    the D-class of alpha and threads the hook chain through the last
    transversal; for rank 0, b has rank 2 and threads it through the
    first and last lower-hook vertices.
    """
    n, r = alpha.degree, alpha.rank
    if r == n:
        raise PreconditionError("units are excluded from the twist-keeping lemma")
    tv = alpha.transversal_pairs()
    C = alpha.bottom_hooks()
    s = len(C)
    if r > 0:
        j_r = tv[-1][1]
        blocks = [(j, -j) for _, j in tv[:-1]]
        blocks.append((C[s - 1][1], -j_r))
        blocks.append((tv[-1][1], C[0][0]))
        blocks += [(C[m][1], C[m + 1][0]) for m in range(s - 1)]
        blocks += [(-c, -d) for c, d in C]
    else:
        blocks = [(C[0][0], -C[0][0]), (C[s - 1][1], -C[0][1])]
        blocks += [(C[m][1], C[m + 1][0]) for m in range(s - 1)]
        blocks += [(-c, -d) for c, d in C[1:]]
    return make_diagram(n, blocks)


# ---------------------------------------------------------------------------
# Absorbing a transposition into twisted idempotents
# ---------------------------------------------------------------------------


def idempotent_factor_sigma(
    alpha: BrauerDiagram, i: int, j: int
) -> list[BrauerDiagram]:
    """Twisted idempotents whose chain after alpha realises alpha * sigma_ij.

    Returns a list B of at most two twisted idempotents of the same rank
    as alpha such that the star chain alpha * B[0] * ... equals
    (0, alpha sigma_ij).  There are four cases by the position of {i, j}
    relative to the codomain and cokernel of alpha: two codomain vertices
    need two idempotents, mixed or split hook vertices need one, and a
    cokernel hook is absorbed outright (empty list).  Requires
    0 < rank(alpha) < n.
    """
    n, r = alpha.degree, alpha.rank
    if not 0 < r < n:
        raise PreconditionError(f"need 0 < rank < degree, got rank {r} in degree {n}")
    if not 1 <= i < j <= n:
        raise PreconditionError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    codom = set(alpha.codom)
    hooks = alpha.bottom_hooks()
    hook_of = {v: (c, d) for c, d in hooks for v in (c, d)}

    if i in codom and j in codom:
        return _sigma_case_two_codom(alpha, i, j)
    if i in codom or j in codom:
        u, v = (i, j) if i in codom else (j, i)
        return _sigma_case_mixed(alpha, u, v)
    if hook_of[i] == hook_of[j]:
        return []  # sigma_ij permutes a lower hook of alpha: alpha sigma_ij = alpha
    return _sigma_case_two_hooks(alpha, i, j)


def _relabel(alpha, last_bottoms, first_hooks):
    """Transversal bottoms with ``last_bottoms`` moved last, and lower hooks
    with the oriented pairs ``first_hooks`` moved first."""
    jm = [b for _, b in alpha.transversal_pairs() if b not in last_bottoms]
    jm += list(last_bottoms)
    first_keys = {frozenset(h) for h in first_hooks}
    cd = list(first_hooks)
    cd += [h for h in alpha.bottom_hooks() if frozenset(h) not in first_keys]
    return jm, cd


def _shifted_hooks(cd):
    return [(cd[m][1], cd[m + 1][0]) for m in range(len(cd) - 1)]


def _sigma_case_two_codom(alpha, i, j):
    # both i and j are codomain vertices; two idempotents are needed
    n = alpha.degree
    jm, cd = _relabel(alpha, [i, j], [])
    s = len(cd)
    b1 = [(v, -v) for v in jm[:-2]]
    b1 += [(jm[-2], -jm[-1]), (cd[-1][1], -cd[-1][1])]
    b1.append((jm[-1], cd[0][0]))
    b1 += _shifted_hooks(cd)
    b1 += [(-c, -d) for c, d in cd[: s - 1]]
    b1.append((-jm[-2], -cd[-1][0]))
    b2 = [(v, -v) for v in jm[:-2]]
    b2 += [(jm[-1], -jm[-1]), (cd[0][0], -jm[-2])]
    b2.append((jm[-2], cd[-1][1]))
    b2 += _shifted_hooks(cd)
    b2 += [(-c, -d) for c, d in cd]
    return [make_diagram(n, b1), make_diagram(n, b2)]


def _sigma_case_mixed(alpha, u, v):
    # u is in the codomain, v sits in a lower hook
    n = alpha.degree
    partner = next(w for c, d in alpha.bottom_hooks() for w in (c, d)
                   if v in (c, d) and w != v)
    jm, cd = _relabel(alpha, [u], [(v, partner)])
    blocks = [(w, -w) for w in jm[:-1]]
    blocks.append((cd[-1][1], -cd[0][0]))
    blocks.append((jm[-1], cd[0][0]))
    blocks += _shifted_hooks(cd)
    blocks.append((-jm[-1], -cd[0][1]))
    blocks += [(-c, -d) for c, d in cd[1:]]
    return [make_diagram(n, blocks)]


def _sigma_case_two_hooks(alpha, i, j):
    # i and j sit in two different lower hooks
    n = alpha.degree
    hook_of = {v: (c, d) for c, d in alpha.bottom_hooks() for v in (c, d)}
    ci, di = hook_of[i]
    first = (ci if di == i else di, i)
    cj, dj = hook_of[j]
    second = (j, dj if cj == j else cj)
    jm, cd = _relabel(alpha, [], [first, second])
    blocks = [(w, -w) for w in jm[:-1]]
    blocks.append((cd[-1][1], -jm[-1]))
    blocks.append((jm[-1], cd[0][0]))
    blocks += _shifted_hooks(cd)
    blocks += [(-cd[0][0], -cd[1][0]), (-cd[0][1], -cd[1][1])]
    blocks += [(-c, -d) for c, d in cd[2:]]
    return [make_diagram(n, blocks)]


# ---------------------------------------------------------------------------
# Generating sets and the rank table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratingSet:
    """A generating set for a principal ideal, with its provenance."""

    degree: int
    term: tuple[int, int]
    kind: str  # "top-four" | "idempotent-matching" | "d-class-grid"
    elements: tuple[TwistedElement, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


def generating_set(spec: IdealSpec) -> GeneratingSet:
    """The minimal generating set of a principal ideal, materialised.

    For the whole monoid (r = n, k = 0) this is a four-element set; for
    0 < r < n, k = 0 it is a set of rho(n, r) twisted idempotents read off
    a perfect matching of the Graham-Houghton graph; otherwise it is
    M(r;k), the grid of D-classes with twist between k and 2k (inclusive
    on both ends when r = 0, exclusive above otherwise).
    """
    if not spec.is_principal():
        raise DiagramError("generating sets are computed for principal ideals only")
    from . import enumeration, structure  # deferred: structure builds on this module

    n = spec.degree
    (r, k), = spec.terms
    if k == 0 and r == n:
        if n < 3:
            raise DiagramError("the four-generator description needs degree >= 3")
        cycle = permutation_diagram(n, list(range(2, n + 1)) + [1])
        elements = (
            as_twisted(transposition(n, 1, 2)),
            as_twisted(cycle),
            as_twisted(canonical_idempotent(n, n - 2)),
            TwistedElement(1, identity(n)),
        )
        return GeneratingSet(n, (r, k), "top-four", elements)
    if k == 0 and 0 < r < n:
        sigma = structure.idempotent_generating_set(n, r)
        return GeneratingSet(n, (r, k), "idempotent-matching", tuple(sigma))
    top = 2 * k + 1 if r == 0 else 2 * k  # M(0;k) includes twist 2k
    elements = tuple(
        TwistedElement(l, d)
        for l in range(k, top)
        for s in index_set(n)
        if s <= r
        for d in enumeration.d_class(n, s)
    )
    return GeneratingSet(n, (r, k), "d-class-grid", elements)


def minimal_generating_size(n: int, r: int, k: int) -> int:
    """|M(r;k)| for k >= 1, and the k = 0 ranks, straight from the formulas."""
    _check_rank_param(n, r)
    if k == 0:
        return 4 if r == n else (rho(n, r) if r > 0 else delta(n, 0))
    if r == 0:
        return (k + 1) * delta(n, 0)
    return k * sum(delta(n, s) for s in index_set(r))


@dataclass(frozen=True)
class IdealRank:
    """Rank data of a principal ideal (four regimes by r and k)."""

    degree: int
    term: tuple[int, int]
    rank: int
    idempotent_generated: bool
    idrank: int | None

    def to_json_obj(self) -> dict:
        return {
            "n": self.degree,
            "r": self.term[0],
            "k": self.term[1],
            "rank": self.rank,
            "idempotent_generated": self.idempotent_generated,
            "idrank": self.idrank,
        }


def rank_of_ideal(n: int, r: int, k: int) -> IdealRank:
    """Smallest generating-set size of I(r;k), for degree n >= 3.

    The value is 4 at the top (r = n, k = 0), rho(n, r) for the proper
    idempotent-generated ideals (0 < r < n, k = 0), (k+1) * delta(n, 0)
    along the rank-0 column, and k * sum of delta(n, s) over s in I(r)
    otherwise.  Only the 0 < r < n, k = 0 ideals are idempotent-generated,
    and there the idempotent rank equals the rank.
    """
    if n < 3:
        raise DiagramError("the rank table is stated for degree >= 3")
    _check_rank_param(n, r)
    if k < 0:
        raise DiagramError(f"twist parameter {k} must be non-negative")
    if k == 0 and r == n:
        value = 4
    elif k == 0 and 0 < r < n:
        value = rho(n, r)
    elif r == 0:
        value = (k + 1) * delta(n, 0)
    else:
        value = k * sum(delta(n, s) for s in index_set(r))
    ig = 0 < r < n and k == 0
    return IdealRank(n, (r, k), value, ig, value if ig else None)
