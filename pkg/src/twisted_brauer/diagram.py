"""
Brauer diagrams and their multiplication.

A Brauer diagram of degree n is a perfect matching on the 2n points
1, ..., n (top row) and 1', ..., n' (bottom row).  Internally the points
are indexed 0..2n-1: top vertex i is index i-1 and bottom vertex i' is
index n+i-1, and a diagram stores the fixed-point-free involution
``pairing`` with ``pairing[p] == q`` whenever {p, q} is a block.

Two diagrams are multiplied by stacking the first on top of the second:
the bottom row of the first is glued to the top row of the second, and
the blocks of the product are read off from the connected components of
the resulting three-row graph.  Components that stay entirely in the
glued middle row are *floating components*; their number is the twist
``tau`` returned alongside every product.

>>> a = make_diagram(2, [(1, 2), (-1, -2)])
>>> multiply(a, a)
(BrauerDiagram.from_text("n=2: (1,2)(1',2')"), 1)
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass


class DiagramError(ValueError):
    """Base class for malformed diagrams and illegal diagram operations."""


class BlockSizeError(DiagramError):
    """A block does not have exactly two distinct vertices."""


class VertexRangeError(DiagramError):
    """A vertex token is 0 or lies outside 1..n / 1'..n'."""


class DuplicateVertexError(DiagramError):
    """A vertex appears in more than one block."""


class MissingVertexError(DiagramError):
    """Some vertex of [n] u [n]' is not covered by any block."""


class DegreeMismatchError(DiagramError):
    """Operands of a product have different degrees."""


class NotationError(DiagramError):
    """A transversal/hook table violates the partition constraints."""


@dataclass(frozen=True, order=True)
class BrauerDiagram:
    """A perfect matching on [n] u [n]', immutable and totally ordered.

    ``degree`` is n; ``pairing`` is the involution on point indices
    (top i at index i-1, bottom i' at index n+i-1).  Equality, hashing
    and the total order are structural (degree, then pairing array).
    """

    degree: int
    pairing: tuple[int, ...]

    def __post_init__(self) -> None:
        n2 = 2 * self.degree
        p = self.pairing
        if self.degree < 0 or len(p) != n2:
            raise DiagramError(f"pairing must have length {n2}, got {len(p)}")
        for x, y in enumerate(p):
            if not 0 <= y < n2:
                raise VertexRangeError(f"pairing entry {y} out of range")
            if y == x or p[y] != x:
                raise DiagramError("pairing is not a fixed-point-free involution")

    # -- structural invariants ------------------------------------------

    @property
    def rank(self) -> int:
        """Number of transversals (blocks meeting both rows)."""
        n = self.degree
        return sum(1 for i in range(n) if self.pairing[i] >= n)

    @property
    def dom(self) -> tuple[int, ...]:
        """Top vertices (1-based) whose block meets the bottom row."""
        n = self.degree
        return tuple(i + 1 for i in range(n) if self.pairing[i] >= n)

    @property
    def codom(self) -> tuple[int, ...]:
        """Bottom vertices (1-based) whose block meets the top row."""
        n = self.degree
        return tuple(i + 1 for i in range(n) if self.pairing[n + i] < n)

    @property
    def ker(self) -> KernelSignature:
        """Upper hooks of the diagram, as a kernel signature."""
        n, p = self.degree, self.pairing
        hooks = frozenset(
            (i + 1, p[i] + 1) for i in range(n) if i < p[i] < n
        )
        return KernelSignature(n, hooks)

    @property
    def coker(self) -> KernelSignature:
        """Lower hooks of the diagram, as a kernel signature."""
        n, p = self.degree, self.pairing
        hooks = frozenset(
            (i - n + 1, p[i] - n + 1) for i in range(n, 2 * n) if i < p[i]
        )
        return KernelSignature(n, hooks)

    def top_hooks(self) -> list[tuple[int, int]]:
        """Upper hooks in canonical order (sorted, smaller vertex first)."""
        n, p = self.degree, self.pairing
        return sorted((i + 1, p[i] + 1) for i in range(n) if i < p[i] < n)

    def bottom_hooks(self) -> list[tuple[int, int]]:
        """Lower hooks in canonical order."""
        n, p = self.degree, self.pairing
        return sorted((i - n + 1, p[i] - n + 1) for i in range(n, 2 * n) if i < p[i])

    def transversal_pairs(self) -> list[tuple[int, int]]:
        """Transversals as (top, bottom) 1-based pairs, sorted by top."""
        n, p = self.degree, self.pairing
        return [(i + 1, p[i] - n + 1) for i in range(n) if p[i] >= n]

    def image(self, i: int) -> int:
        """Bottom vertex paired with top vertex ``i``; error if i is hooked."""
        n = self.degree
        q = self.pairing[i - 1]
        if q < n:
            raise DiagramError(f"top vertex {i} is not in the domain")
        return q - n + 1

    def is_unit(self) -> bool:
        """True iff the diagram is a permutation (rank n)."""
        return self.rank == self.degree

    # -- involution and operators ---------------------------------------

    def star(self) -> BrauerDiagram:
        """Reflect top-to-bottom: the * anti-automorphism."""
        n = self.degree
        p = self.pairing
        flip = lambda x: x + n if x < n else x - n
        out = [0] * (2 * n)
        for x in range(2 * n):
            out[flip(x)] = flip(p[x])
        return _raw_diagram(n, tuple(out))

    def __mul__(self, other: BrauerDiagram) -> BrauerDiagram:
        """Plain product in the Brauer monoid (twist discarded)."""
        return multiply(self, other)[0]

    # -- presentation -----------------------------------------------------

    def blocks(self) -> list[tuple[int, int]]:
        """Blocks as signed 1-based pairs (negative = bottom), canonical order."""
        out = []
        for x, y in enumerate(self.pairing):
            if x < y:
                out.append((_index_to_token(x, self.degree), _index_to_token(y, self.degree)))
        return out

    def to_text(self) -> str:
        """Canonical human-readable form, e.g. ``n=2: (1,2)(1',2')``."""
        body = "".join(f"({_token_str(a)},{_token_str(b)})" for a, b in self.blocks())
        return f"n={self.degree}: {body}"

    def to_json_obj(self) -> dict:
        return {"n": self.degree, "blocks": [list(b) for b in self.blocks()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @staticmethod
    def from_text(text: str) -> BrauerDiagram:
        return parse_diagram(text)

    def __repr__(self) -> str:
        return f'BrauerDiagram.from_text("{self.to_text()}")'


@dataclass(frozen=True)
class KernelSignature:
    """The set of same-row hooks of a diagram, i.e. its (co)kernel.

    For Brauer diagrams every non-singleton kernel class has size two, so
    containment of kernels is plain containment of hook sets.
    """

    degree: int
    hooks: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for a, b in self.hooks:
            if not (1 <= a < b <= self.degree):
                raise DiagramError(f"bad hook ({a},{b}) for degree {self.degree}")
            if a in seen or b in seen:
                raise DiagramError("hooks are not pairwise disjoint")
            seen.update((a, b))

    @property
    def rank(self) -> int:
        return self.degree - 2 * len(self.hooks)

    def contains(self, other: KernelSignature) -> bool:
        """Kernel containment as equivalences: every block of ``other`` is one of ours."""
        return other.hooks <= self.hooks

    def sorted_hooks(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.hooks))

    def __str__(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.sorted_hooks()) or "()"


@dataclass(frozen=True)
class DiagramNotation:
    """Transversal/hook table of a diagram.

    ``transversals`` lists (top, bottom) pairs; ``upper_hooks`` and
    ``lower_hooks`` list same-row pairs.  Canonical order: transversals
    sorted by top vertex, hooks sorted by their smaller vertex, and each
    hook written smaller-first.  ``from_notation`` accepts any order.
    """

    transversals: tuple[tuple[int, int], ...]
    upper_hooks: tuple[tuple[int, int], ...]
    lower_hooks: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return len(self.transversals) + 2 * len(self.upper_hooks)

    @property
    def rank(self) -> int:
        return len(self.transversals)


def _raw_diagram(degree: int, pairing: tuple[int, ...]) -> BrauerDiagram:
    # construction bypass for outputs that are involutions by construction
    d = object.__new__(BrauerDiagram)
    object.__setattr__(d, "degree", degree)
    object.__setattr__(d, "pairing", pairing)
    return d


def _index_to_token(x: int, n: int) -> int:
    return x + 1 if x < n else -(x - n + 1)


def _token_to_index(t: int, n: int) -> int:
    if not isinstance(t, int) or t == 0 or abs(t) > n:
        raise VertexRangeError(f"vertex token {t!r} out of range for degree {n}")
    return t - 1 if t > 0 else n - t - 1


def _token_str(t: int) -> str:
    return str(t) if t > 0 else f"{-t}'"


def make_diagram(degree: int, blocks) -> BrauerDiagram:
    """Build a diagram from blocks of signed vertices (+i top, -i bottom).

    Raises a distinct error for each failure mode: a block without exactly
    two distinct vertices, an out-of-range vertex, a vertex used twice, or
    a vertex left uncovered.

    >>> make_diagram(2, [(1, -1), (2, -2)]) == identity(2)
    True
    """
    if degree < 0:
        raise DiagramError("degree must be non-negative")
    pairing = [-1] * (2 * degree)
    for block in blocks:
        block = tuple(block)
        if len(block) != 2 or block[0] == block[1]:
            raise BlockSizeError(f"block {block!r} does not have size 2")
        x, y = (_token_to_index(t, degree) for t in block)
        if pairing[x] != -1 or pairing[y] != -1:
            raise DuplicateVertexError(f"vertex repeated in block {block!r}")
        pairing[x], pairing[y] = y, x
    for x, y in enumerate(pairing):
        if y == -1:
            raise MissingVertexError(
                f"vertex {_token_str(_index_to_token(x, degree))} is not covered"
            )
    return BrauerDiagram(degree, tuple(pairing))


def identity(n: int) -> BrauerDiagram:
    """The identity diagram: i joined to i' for every i."""
    if n < 0:
        raise DiagramError("degree must be non-negative")
    return BrauerDiagram(n, tuple(range(n, 2 * n)) + tuple(range(n)))


def transposition(n: int, i: int, j: int) -> BrauerDiagram:
    """The unit interchanging i and j and fixing everything else."""
    if not 1 <= i < j <= n:
        raise VertexRangeError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    pairing = list(range(n, 2 * n)) + list(range(n))
    pairing[i - 1], pairing[j - 1] = n + j - 1, n + i - 1
    pairing[n + i - 1], pairing[n + j - 1] = j - 1, i - 1
    return BrauerDiagram(n, tuple(pairing))


def permutation_diagram(n: int, images) -> BrauerDiagram:
    """The unit sending i to images[i-1] for every i in [n]."""
    images = list(images)
    if len(images) != n or sorted(images) != list(range(1, n + 1)):
        raise DiagramError(f"{images!r} is not a bijection of [{n}]")
    pairing = [0] * (2 * n)
    for i, v in enumerate(images, start=1):
        pairing[i - 1] = n + v - 1
        pairing[n + v - 1] = i - 1
    return BrauerDiagram(n, tuple(pairing))


def multiply(alpha: BrauerDiagram, beta: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Product diagram together with its floating-component count.

    Union-find over the 3n points of the stacked graph: points 0..n-1 are
    the top row, n..2n-1 the glued middle row, 2n..3n-1 the bottom row.
    Components holding a top or bottom point yield blocks of the product;
    middle-only components are floating and only contribute to the twist.
    Parallel edges collapse harmlessly under union.
    """
    n = alpha.degree
    if beta.degree != n:
        raise DegreeMismatchError(f"degrees differ: {n} vs {beta.degree}")
    pa, pb = alpha.pairing, beta.pairing
    n2, n3 = 2 * n, 3 * n
    parent = list(range(n3))
    for p in range(n2):
        q = pa[p]
        if q > p:
            x = p
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            y = q
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            parent[y] = x
        q = pb[p]
        if q > p:
            x = p + n
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            y = q + n
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            parent[y] = x

    roots = [0] * n3
    for x in range(n3):
        r = x
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        roots[x] = r

    out = [-1] * n2
    open_end: dict[int, int] = {}
    for prod in range(n2):
        root = roots[prod] if prod < n else roots[prod + n]
        mate = open_end.pop(root, None)
        if mate is None:
            open_end[root] = prod
        else:
            out[mate], out[prod] = prod, mate
    floating = set(roots[n:n2])
    floating.difference_update(roots[:n])
    floating.difference_update(roots[n2:])
    return _raw_diagram(n, tuple(out)), len(floating)


def tau(alpha: BrauerDiagram, beta: BrauerDiagram) -> int:
    """Number of floating components created by the product alpha*beta."""
    return multiply(alpha, beta)[1]


def star_involution(alpha: BrauerDiagram) -> BrauerDiagram:
    """Interchange top and bottom rows; an anti-automorphism of the monoid."""
    return alpha.star()


def to_notation(alpha: BrauerDiagram) -> DiagramNotation:
    """Canonical transversal/hook table of a diagram."""
    return DiagramNotation(
        tuple(alpha.transversal_pairs()),
        tuple(alpha.top_hooks()),
        tuple(alpha.bottom_hooks()),
    )


def from_notation(notation: DiagramNotation) -> BrauerDiagram:
    """Rebuild a diagram from its table; inverse of :func:`to_notation`."""
    n = notation.degree
    if len(notation.lower_hooks) != len(notation.upper_hooks):
        raise NotationError("upper and lower hook counts differ")
    blocks = (
        [(i, -j) for i, j in notation.transversals]
        + [(a, b) for a, b in notation.upper_hooks]
        + [(-c, -d) for c, d in notation.lower_hooks]
    )
    try:
        return make_diagram(n, blocks)
    except DiagramError as exc:
        raise NotationError(f"notation is not a partition of [{n}] u [{n}]': {exc}") from exc


_TOKEN = re.compile(r"\(\s*(\d+)\s*('?)\s*,\s*(\d+)\s*('?)\s*\)")
_PREFIX = re.compile(r"^\s*n\s*=\s*(\d+)\s*:\s*")


def parse_diagram(text: str, degree: int | None = None) -> BrauerDiagram:
    """Parse the human text format, e.g. ``n=6: (1,3)(2,3')...``.

    Blocks may appear in any order; a leading ``n=K:`` fixes the degree
    (mandatory unless ``degree`` is given).
    """
    m = _PREFIX.match(text)
    body = text
    if m:
        stated = int(m.group(1))
        if degree is not None and degree != stated:
            raise DegreeMismatchError(
                f"text declares degree {stated} but degree {degree} was requested"
            )
        degree = stated
        body = text[m.end():]
    if degree is None:
        raise DiagramError(f"no degree in {text!r}; expected a leading 'n=K:'")
    blocks = []
    consumed = 0
    for m in _TOKEN.finditer(body):
        a = int(m.group(1)) * (-1 if m.group(2) else 1)
        b = int(m.group(3)) * (-1 if m.group(4) else 1)
        blocks.append((a, b))
        consumed += m.end() - m.start()
    if consumed != len(body.replace(" ", "")):
        raise DiagramError(f"unparsable diagram text: {text!r}")
    return make_diagram(degree, blocks)


def diagram_from_json_obj(obj: dict) -> BrauerDiagram:
    """Read the machine format ``{"n": ..., "blocks": [[..], ..]}``."""
    if "n" not in obj or "blocks" not in obj:
        raise DiagramError(f"JSON object needs 'n' and 'blocks': {obj!r}")
    return make_diagram(obj["n"], [tuple(b) for b in obj["blocks"]])


def diagram_from_json(text: str) -> BrauerDiagram:
    return diagram_from_json_obj(json.loads(text))
