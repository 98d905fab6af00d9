"""Exact permutation arithmetic on {1..n}, cycle decompositions and quads.

Permutations act on the right: ``p ^ (g*h) == (p^g)^h``, i.e. composition
applies the left factor first.  Points are 1-based in the public API and in
all cycle notation; storage is 0-based internally.  Permutation objects are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Optional, Sequence, Union


class Permutation:
    """A bijection of {1..n} stored as an image sequence."""

    __slots__ = ("_img", "_hash", "_inv")

    def __init__(self, images: Sequence[int]):
        """Build from 1-based images: entry i-1 is the image of point i."""
        img = tuple(p - 1 for p in images)
        n = len(img)
        seen = [False] * n
        for p in img:
            if not 0 <= p < n or seen[p]:
                raise ValueError(f"not a permutation of 1..{n}: {images!r}")
            seen[p] = True
        self._img = img
        self._hash = None
        self._inv = None

    @classmethod
    def _raw(cls, img0: tuple) -> "Permutation":
        """Wrap an already-validated 0-based image tuple (internal)."""
        p = object.__new__(cls)
        p._img = img0
        p._hash = None
        p._inv = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be a positive integer")
        return cls._raw(tuple(range(degree)))

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """1-based image tuple; entry i-1 is the image of point i."""
        return tuple(p + 1 for p in self._img)

    def apply(self, point: int) -> int:
        """Image of a 1-based point."""
        return self._img[point - 1] + 1

    def __getitem__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self._img))

    # -- arithmetic -------------------------------------------------------

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self._img) != len(other._img):
            raise ValueError("degree mismatch in composition")
        o = other._img
        return Permutation._raw(tuple(o[p] for p in self._img))

    def inverse(self) -> "Permutation":
        if self._inv is None:
            inv = [0] * len(self._img)
            for i, p in enumerate(self._img):
                inv[p] = i
            self._inv = Permutation._raw(tuple(inv))
        return self._inv

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def __pow__(self, k: int) -> "Permutation":
        n = len(self._img)
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, x: "Permutation") -> "Permutation":
        """self^x = x^-1 * self * x (relabels points by x)."""
        if len(self._img) != len(x._img):
            raise ValueError("degree mismatch in conjugation")
        xi = x._img
        img = [0] * len(self._img)
        for i, p in enumerate(self._img):
            img[xi[i]] = xi[p]
        return Permutation._raw(tuple(img))

    def commutes_with(self, other: "Permutation") -> bool:
        a, b = self._img, other._img
        if len(a) != len(b):
            raise ValueError("degree mismatch")
        return all(b[a[i]] == a[b[i]] for i in range(len(a)))

    # -- decompositions ---------------------------------------------------

    def cycles(self) -> list:
        """Nontrivial cycles as 1-based tuples, smallest point first."""
        n = len(self._img)
        seen = [False] * n
        out = []
        for i in range(n):
            if seen[i] or self._img[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self._img[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self._img[j]
            out.append(tuple(p + 1 for p in cyc))
        return out

    def cycle_type(self) -> tuple:
        """Multiset of cycle lengths including fixed points, sorted descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self._img) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def support(self) -> frozenset:
        return frozenset(i + 1 for i, p in enumerate(self._img) if p != i)

    def fixed_points(self) -> frozenset:
        return frozenset(i + 1 for i, p in enumerate(self._img) if p == i)

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.support() else 1

    @property
    def is_even(self) -> bool:
        # parity = (degree - number of cycles) mod 2, fixed points included
        n = len(self._img)
        ncycles = len(self.cycles()) + (n - len(self.support()))
        return (n - ncycles) % 2 == 0

    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    # -- formatting and ordering ------------------------------------------

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cyc)

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()}; n={self.degree}]"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img


# -- module-level operation surface ---------------------------------------


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def compose(g: Permutation, h: Permutation) -> Permutation:
    """Apply g, then h."""
    return g * h


def inverse(g: Permutation) -> Permutation:
    return g.inverse()


def power(g: Permutation, k: int) -> Permutation:
    return g ** k


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    return g.conjugate(x)


def cycles(g: Permutation) -> list:
    return g.cycles()


def cycle_type(g: Permutation) -> tuple:
    return g.cycle_type()


def support(g: Permutation) -> frozenset:
    return g.support()


def fixed_points(g: Permutation) -> frozenset:
    return g.fixed_points()


def order(g: Permutation) -> int:
    return g.order()


def parity(g: Permutation) -> str:
    return g.parity()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycle_text(text: str) -> list:
    s = re.sub(r"\s+", "", text)
    if s == "()" or s == "":
        return []
    cycles_found = []
    consumed = 0
    for m in _CYCLE_RE.finditer(s):
        if m.start() != consumed:
            raise ValueError(f"cannot parse cycle notation: {text!r}")
        consumed = m.end()
        body = m.group(1)
        if not body:
            continue
        cycles_found.append(tuple(int(tok) for tok in body.split(",") if tok))
    if consumed != len(s):
        raise ValueError(f"cannot parse cycle notation: {text!r}")
    return cycles_found


def from_cycles(degree: int, cycle_spec: Union[str, Iterable]) -> Permutation:
    """Build a permutation of the given degree from cycles.

    Accepts the text format ``(1,2,3)(4,5)`` (``()`` for identity,
    whitespace-insensitive) or an iterable of point tuples.
    """
    if degree < 1:
        raise ValueError("degree must be a positive integer")
    if isinstance(cycle_spec, str):
        cycle_list = _parse_cycle_text(cycle_spec)
    else:
        cycle_list = [tuple(c) for c in cycle_spec]
    img = list(range(degree))
    used = set()
    for cyc in cycle_list:
        for p in cyc:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            if p in used:
                raise ValueError(f"repeated point {p} across cycles")
            used.add(p)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return Permutation._raw(tuple(img))


# -- quads (§ double-transposition combinatorics) --------------------------


@dataclass(frozen=True, order=True)
class Quad:
    """A product of two disjoint transpositions, normalized.

    ``first`` and ``second`` are sorted point pairs with first[0] minimal,
    so the three quads on a common 4-point support are distinct values.
    """

    first: tuple
    second: tuple

    @classmethod
    def of(cls, p1: tuple, p2: tuple) -> "Quad":
        a = tuple(sorted(p1))
        b = tuple(sorted(p2))
        pts = {a[0], a[1], b[0], b[1]}
        if len(pts) != 4 or min(pts) < 1:
            raise ValueError(f"quad needs four distinct positive points: {p1}, {p2}")
        return cls(*sorted((a, b)))

    @classmethod
    def from_permutation(cls, g: Permutation) -> "Quad":
        if not is_quad(g):
            raise ValueError(f"not a quad: {g}")
        c1, c2 = g.cycles()
        return cls.of(c1, c2)

    @property
    def points(self) -> tuple:
        return (*self.first, *self.second)

    @property
    def support(self) -> frozenset:
        return frozenset(self.points)

    def to_permutation(self, degree: int) -> Permutation:
        if degree < max(self.points):
            raise ValueError("degree too small for quad support")
        return from_cycles(degree, [self.first, self.second])

    def __str__(self) -> str:
        return f"({self.first[0]},{self.first[1]})({self.second[0]},{self.second[1]})"


@dataclass(frozen=True)
class Exchange:
    """Replacement of one transposition of a quad by one on fresh points."""

    kept: tuple
    removed: tuple
    added: tuple

    def __str__(self) -> str:
        return f"({self.removed[0]},{self.removed[1]})<->({self.added[0]},{self.added[1]})"


def is_quad(g: Permutation) -> bool:
    cyc = g.cycles()
    return len(cyc) == 2 and all(len(c) == 2 for c in cyc)


def quads_on_support(p1: int, p2: int, p3: int, p4: int) -> tuple:
    """The three quads sharing the support {p1,p2,p3,p4}."""
    pts = sorted({p1, p2, p3, p4})
    if len(pts) != 4:
        raise ValueError("four distinct points required")
    w, x, y, z = pts
    return (
        Quad.of((w, x), (y, z)),
        Quad.of((w, y), (x, z)),
        Quad.of((w, z), (x, y)),
    )


def _as_quad(q) -> Quad:
    if isinstance(q, Quad):
        return q
    if isinstance(q, Permutation):
        return Quad.from_permutation(q)
    raise ValueError(f"not a quad: {q!r}")


def exchange_related(q: Union[Quad, Permutation], q2: Union[Quad, Permutation]) -> Optional[Exchange]:
    """Exchange description when q=(ab)(cd) and q2=(ab)(c'd') with {c,d} and
    {c',d'} disjoint; None for same-support or unrelated quads."""
    qa, qb = _as_quad(q), _as_quad(q2)
    if qa == qb or qa.support == qb.support:
        return None
    shared = {qa.first, qa.second} & {qb.first, qb.second}
    if len(shared) != 1:
        return None
    kept = shared.pop()
    removed = qa.second if qa.first == kept else qa.first
    added = qb.second if qb.first == kept else qb.first
    if set(removed) & set(added):
        return None
    return Exchange(kept=kept, removed=removed, added=added)
