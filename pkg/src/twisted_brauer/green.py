"""
Green's relations and pre-orders on the Brauer monoid and its twisted cover.

All decisions run off the structural characterisations: the R pre-order
compares kernels (upper-hook sets), L compares cokernels, J compares
ranks; on the twisted monoid a pre-order additionally reverses the twist
component.  The pre-order proofs are constructive, and the witnesses are
materialised here: ``factor_right(a, b)`` returns a specific d with
a = bd and tau(b, d) = 0, and similarly for the left and two-sided
versions.  Witnesses are not unique; the ones returned are the canonical
block layouts fixed by the module's notation ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    BrauerDiagram,
    DegreeMismatchError,
    DiagramError,
    make_diagram,
    multiply,
    permutation_diagram,
)
from .twisted import as_twisted

RELATIONS = ("R", "L", "H", "D", "J")


class PreconditionError(DiagramError):
    """A factorization was requested where the pre-order does not hold."""


def _check_degrees(alpha: BrauerDiagram, beta: BrauerDiagram) -> None:
    if alpha.degree != beta.degree:
        raise DegreeMismatchError(f"degrees differ: {alpha.degree} vs {beta.degree}")


def leq_R(alpha: BrauerDiagram, beta: BrauerDiagram) -> bool:
    """a <=_R b iff ker(a) contains ker(b), i.e. hooks(b) <= hooks(a)."""
    _check_degrees(alpha, beta)
    return alpha.ker.contains(beta.ker)


def leq_L(alpha: BrauerDiagram, beta: BrauerDiagram) -> bool:
    """a <=_L b iff coker(a) contains coker(b)."""
    _check_degrees(alpha, beta)
    return alpha.coker.contains(beta.coker)


def leq_J(alpha: BrauerDiagram, beta: BrauerDiagram) -> bool:
    """a <=_J b iff rank(a) <= rank(b)."""
    _check_degrees(alpha, beta)
    return alpha.rank <= beta.rank


_LEQ = {"R": leq_R, "L": leq_L, "J": leq_J}


def factor_right(alpha: BrauerDiagram, beta: BrauerDiagram) -> BrauerDiagram:
    """A diagram d with alpha = beta*d and tau(beta, d) = 0.

    Requires ker(alpha) >= ker(beta).  The returned d joins beta's
    codomain to alpha's codomain along the matched transversals, routes
    the hooks of alpha that beta lacks through beta's images, and feeds
    beta's lower hooks into fresh transversals ending at alpha's spare
    lower hooks.  When the kernels are equal, d is a unit.
    """
    _check_degrees(alpha, beta)
    if not alpha.ker.contains(beta.ker):
        raise PreconditionError("ker(alpha) does not contain ker(beta)")
    n = alpha.degree
    beta_hooks = beta.ker.hooks
    split_hooks = [h for h in alpha.top_hooks() if h not in beta_hooks]  # (a_m, b_m)
    alpha_lower = alpha.bottom_hooks()
    s = len(split_hooks)
    own_lower = alpha_lower[:s]  # become d's lower hooks (c_m, d_m)
    routed_lower = alpha_lower[s:]  # reached through beta's lower hooks
    beta_lower = beta.bottom_hooks()  # (e_{s+m}, f_{s+m})

    blocks: list[tuple[int, int]] = []
    for top, bottom in alpha.transversal_pairs():
        blocks.append((beta.image(top), -bottom))
    for (e, f), (c, d) in zip(beta_lower, routed_lower):
        blocks.append((e, -c))
        blocks.append((f, -d))
    for a, b in split_hooks:
        blocks.append((beta.image(a), beta.image(b)))
    for c, d in own_lower:
        blocks.append((-c, -d))
    return make_diagram(n, blocks)


def factor_left(alpha: BrauerDiagram, beta: BrauerDiagram) -> BrauerDiagram:
    """A diagram g with alpha = g*beta and tau(g, beta) = 0.

    Requires coker(alpha) >= coker(beta); obtained from factor_right by
    the * duality.
    """
    _check_degrees(alpha, beta)
    if not alpha.coker.contains(beta.coker):
        raise PreconditionError("coker(alpha) does not contain coker(beta)")
    return factor_right(alpha.star(), beta.star()).star()


def factor_two_sided(
    alpha: BrauerDiagram, beta: BrauerDiagram
) -> tuple[BrauerDiagram, BrauerDiagram]:
    """Diagrams (g, d) with alpha = g*beta*d and chain twist 0.

    Requires rank(alpha) <= rank(beta).  An intermediate diagram e is
    built with coker(e) = coker(alpha) and ker(e) >= ker(beta): it keeps
    beta's first rank(alpha) transversal tops, closes the remaining
    transversal tops of beta into fresh upper hooks pairwise, and copies
    alpha's lower hooks.  Then d = factor_right(e, beta), and g is the
    unit carrying alpha's top structure onto e's.
    """
    _check_degrees(alpha, beta)
    r = alpha.rank
    if r > beta.rank:
        raise PreconditionError("rank(alpha) exceeds rank(beta)")
    n = alpha.degree

    beta_tv = beta.transversal_pairs()
    kept, spare = beta_tv[:r], beta_tv[r:]
    paired_tops = [
        (spare[m][0], spare[m + 1][0]) for m in range(0, len(spare), 2)
    ]  # (g_m, h_m)
    eps_upper = paired_tops + list(beta.top_hooks())
    alpha_tv = alpha.transversal_pairs()
    eps_blocks: list[tuple[int, int]] = []
    for (l, _), (_, j) in zip(kept, alpha_tv):
        eps_blocks.append((l, -j))
    eps_blocks += [(g, h) for g, h in eps_upper]
    eps_blocks += [(-c, -d) for c, d in alpha.bottom_hooks()]
    eps = make_diagram(n, eps_blocks)

    delta = factor_right(eps, beta)

    images = [0] * n  # the unit g as a function on [n]
    for (i, _), (l, _) in zip(alpha_tv, kept):
        images[i - 1] = l
    for (a, b), (g, h) in zip(alpha.top_hooks(), eps_upper):
        images[a - 1], images[b - 1] = g, h
    gamma = permutation_diagram(n, images)
    return gamma, delta


def twisted_leq(relation: str, x, y) -> bool:
    """(i, a) <=_K (j, b) in the twisted monoid iff i >= j and a <=_K b."""
    if relation not in _LEQ:
        raise DiagramError(f"relation must be one of R, L, J, not {relation!r}")
    x, y = as_twisted(x), as_twisted(y)
    return x.twist >= y.twist and _LEQ[relation](x.diagram, y.diagram)


@dataclass(frozen=True)
class ClassDescription:
    """Invariant data identifying a Green's class of the twisted monoid."""

    relation: str
    twist: int
    rank: int | None = None
    kernel: tuple[tuple[int, int], ...] | None = None
    cokernel: tuple[tuple[int, int], ...] | None = None

    def __str__(self) -> str:
        parts = [f"{self.relation}-class", f"twist={self.twist}"]
        if self.rank is not None:
            parts.append(f"rank={self.rank}")
        if self.kernel is not None:
            parts.append("ker=" + "".join(f"({a},{b})" for a, b in self.kernel))
        if self.cokernel is not None:
            parts.append("coker=" + "".join(f"({a},{b})" for a, b in self.cokernel))
        return " ".join(parts)


def green_class(relation: str, x) -> ClassDescription:
    """Describe the K-class of a twisted element; the class is {i} x K_a."""
    if relation not in RELATIONS:
        raise DiagramError(f"relation must be one of {RELATIONS}, not {relation!r}")
    x = as_twisted(x)
    d = x.diagram
    ker = d.ker.sorted_hooks() if relation in ("R", "H") else None
    coker = d.coker.sorted_hooks() if relation in ("L", "H") else None
    rank = d.rank if relation in ("D", "J") else None
    return ClassDescription(relation, x.twist, rank, ker, coker)


def same_class(relation: str, x, y) -> bool:
    """Whether two twisted elements lie in the same K-class (D = J, H = R n L)."""
    x, y = as_twisted(x), as_twisted(y)
    if x.degree != y.degree:
        raise DegreeMismatchError(f"degrees differ: {x.degree} vs {y.degree}")
    if x.twist != y.twist:
        return False
    a, b = x.diagram, y.diagram
    if relation == "R":
        return a.ker == b.ker
    if relation == "L":
        return a.coker == b.coker
    if relation == "H":
        return a.ker == b.ker and a.coker == b.coker
    if relation in ("D", "J"):
        return a.rank == b.rank
    raise DiagramError(f"relation must be one of {RELATIONS}, not {relation!r}")


def is_regular(x) -> bool:
    """Regularity in the twisted monoid: twist 0 and positive rank.

    Degree 0 is the trivial monoid, whose unique untwisted element is its
    identity and hence regular despite having rank 0.
    """
    x = as_twisted(x)
    return x.twist == 0 and (x.diagram.rank > 0 or x.degree == 0)


def canonical_idempotent(n: int, r: int) -> BrauerDiagram:
    """The hook-chain idempotent of rank r witnessing regularity of D_{r;0}.

    Straight transversals on 1..r-1, one long transversal from r down to
    n', upper hooks on adjacent pairs of r+1..n, and lower hooks on
    adjacent pairs of r..n-1.  Its square is itself with no floating
    component.  Requires 0 < r <= n with r = n (mod 2); rank 0 classes
    contain no twisted idempotents.
    """
    if not (0 < r <= n and (n - r) % 2 == 0):
        raise PreconditionError(f"no canonical idempotent for degree {n}, rank {r}")
    blocks = [(i, -i) for i in range(1, r)]
    blocks.append((r, -n))
    blocks += [(a, a + 1) for a in range(r + 1, n, 2)]
    blocks += [(-c, -(c + 1)) for c in range(r, n - 1, 2)]
    return make_diagram(n, blocks)
