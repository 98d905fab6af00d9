"""Permutation-group engine: stabilizer chains, conjugacy and rational
classes, centralizers/normalizers, subgroup enumeration.

PermGroup objects are immutable once constructed and cache derived data
(orbits, stabilizers, element lists) internally; they are safe to share
read-only.  Points are 1-based in the public API, 0-based internally.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import reduce
from math import factorial
from typing import Iterable, Optional, Sequence

from .config import DEFAULT_BOUNDS, BoundExceeded, Bounds
from .perm import Permutation, from_cycles


# -- stabilizer chain -------------------------------------------------------


class _Level:
    __slots__ = ("base", "gens", "orbit", "processed")

    def __init__(self, base: int):
        self.base = base
        self.gens = []            # residues placed at this level
        self.orbit = {}           # 0-based point -> transversal perm u, base^u = point
        self.processed = set()    # (point, schreier generator) pairs already handled


class _Chain:
    """Deterministic incremental Schreier-Sims chain (base points increasing)."""

    def __init__(self, degree: int):
        self.degree = degree
        self.levels = []
        self._identity = Permutation.identity(degree)

    def cumulative_gens(self, i: int) -> list:
        return [g for lvl in self.levels[i:] for g in lvl.gens]

    def _extend_orbit(self, i: int) -> None:
        # extend-only: existing transversal entries stay fixed so processed
        # Schreier pairs remain valid
        lvl = self.levels[i]
        gens = self.cumulative_gens(i)
        orbit = lvl.orbit
        if not orbit:
            orbit[lvl.base] = self._identity
        frontier = deque(sorted(orbit))
        while frontier:
            p = frontier.popleft()
            u = orbit[p]
            for s in gens:
                q = s._img[p]
                if q not in orbit:
                    orbit[q] = u * s
                    frontier.append(q)

    def contains_from(self, i: int, g: Permutation) -> bool:
        for lvl in self.levels[i:]:
            p = g._img[lvl.base]
            if p == lvl.base:
                continue
            u = lvl.orbit.get(p)
            if u is None:
                return False
            g = g * u.inverse()
        return g.is_identity()

    def contains(self, g: Permutation) -> bool:
        return self.contains_from(0, g)

    def _place(self, start: int, g: Permutation) -> bool:
        """Sift g from level `start`; append the residue as a generator.

        Returns True if a generator was added.
        """
        i = start
        while True:
            if g.is_identity():
                return False
            if i == len(self.levels):
                base = min(j for j, p in enumerate(g._img) if p != j)
                self.levels.append(_Level(base))
                self._extend_orbit(i)
            lvl = self.levels[i]
            p = g._img[lvl.base]
            if p != lvl.base:
                u = lvl.orbit.get(p)
                if u is None:
                    lvl.gens.append(g)
                    return True
                g = g * u.inverse()
            i += 1

    def add(self, g: Permutation) -> None:
        if self._place(0, g):
            self.close()

    def close(self) -> None:
        """Fixpoint: every level orbit closed, every Schreier generator sifts
        to identity below its level."""
        self._complete(0)

    def _complete(self, i: int) -> None:
        # deepest-first so membership tests below level i are exact,
        # which keeps the strong generator count small
        if i >= len(self.levels):
            return
        self._complete(i + 1)
        lvl = self.levels[i]
        while True:
            self._extend_orbit(i)
            gens = self.cumulative_gens(i)
            placed_any = False
            for p in sorted(lvl.orbit):
                u = lvl.orbit[p]
                for s in gens:
                    key = (p, s)
                    if key in lvl.processed:
                        continue
                    lvl.processed.add(key)
                    sg = (u * s) * lvl.orbit[s._img[p]].inverse()
                    if sg.is_identity() or self.contains_from(i + 1, sg):
                        continue
                    self._place(i + 1, sg)
                    self._complete(i + 1)
                    placed_any = True
            if not placed_any:
                return

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.orbit)
        return out


# -- public group object ----------------------------------------------------


class PermGroup:
    """A finite permutation group on {1..degree} given by generators.

    Order, membership, orbits and transporter queries are answered from a
    stabilizer chain built deterministically at construction.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), *, name: str = ""):
        if degree < 1:
            raise ValueError("degree must be a positive integer")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                raise ValueError(f"not a permutation: {g!r}")
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self._degree = degree
        self._gens = tuple(gens)
        self.name = name
        chain = _Chain(degree)
        for g in gens:
            chain._place(0, g)
        chain.close()
        self._chain = chain
        self._order = chain.order()
        self._elements = None
        self._element_set = None
        self._orbit_cache = {}
        self._stab_cache = {}
        self._natural_chain = None
        self._classes = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, (), name="1")

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n < 1:
            raise ValueError("n must be positive")
        gens = []
        if n >= 2:
            gens.append(from_cycles(n, [(1, 2)]))
        if n >= 3:
            gens.append(from_cycles(n, [tuple(range(1, n + 1))]))
        return cls(n, gens, name=f"S{n}")

    @classmethod
    def alternating(cls, n: int) -> "PermGroup":
        if n < 1:
            raise ValueError("n must be positive")
        gens = []
        if n >= 3:
            gens.append(from_cycles(n, [(1, 2, 3)]))
        if n >= 4:
            long = tuple(range(1, n + 1)) if n % 2 == 1 else tuple(range(2, n + 1))
            gens.append(from_cycles(n, [long]))
        return cls(n, gens, name=f"A{n}")

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple:
        return self._gens

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def contains(self, g: Permutation) -> bool:
        if not isinstance(g, Permutation) or g.degree != self._degree:
            return False
        return self._chain.contains(g)

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    def natural_kind(self) -> Optional[str]:
        """'S' or 'A' when this is the full symmetric/alternating group on
        its degree in natural action, else None."""
        n = self._degree
        if self._order == factorial(n):
            return "S"
        if n >= 3 and self._order == factorial(n) // 2:
            return "A"
        return None

    def elements(self, bounds: Bounds = DEFAULT_BOUNDS) -> tuple:
        """All elements, sorted; guarded by the element-enumeration bound."""
        if self._elements is None:
            if self._order > bounds.element_enum:
                raise BoundExceeded(
                    f"group order {self._order} exceeds element bound {bounds.element_enum}")
            levels = self._chain.levels

            def rec(i):
                if i == len(levels):
                    return [self.identity()]
                below = rec(i + 1)
                out = []
                for p in sorted(levels[i].orbit):
                    u = levels[i].orbit[p]
                    out.extend(h * u for h in below)
                return out

            self._elements = tuple(sorted(rec(0)))
            self._element_set = frozenset(self._elements)
        return self._elements

    def element_set(self, bounds: Bounds = DEFAULT_BOUNDS) -> frozenset:
        self.elements(bounds)
        return self._element_set

    def random_element(self, rng) -> Permutation:
        g = self.identity()
        for lvl in self._chain.levels:
            pts = sorted(lvl.orbit)
            g = g * lvl.orbit[rng.choice(pts)]
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (self._degree == other._degree and self._order == other._order
                and all(g in other for g in self._gens))

    def __hash__(self):
        return hash((self._degree, self._order))

    def __repr__(self) -> str:
        label = self.name or ",".join(str(g) for g in self._gens[:3]) or "1"
        return f"PermGroup[{label}; degree={self._degree}, order={self._order}]"

    # -- orbits, stabilizers, transporters ----------------------------------

    def orbit(self, point: int) -> frozenset:
        return frozenset(p + 1 for p in self._orbit_transversal0(point - 1))

    def orbits(self) -> list:
        seen = set()
        out = []
        for p in range(self._degree):
            if p in seen:
                continue
            orb = self._orbit_transversal0(p)
            seen |= set(orb)
            out.append(frozenset(q + 1 for q in orb))
        return out

    def _orbit_transversal0(self, p0: int) -> dict:
        cached = self._orbit_cache.get(p0)
        if cached is not None:
            return cached
        orbit = {p0: self.identity()}
        frontier = deque([p0])
        while frontier:
            p = frontier.popleft()
            u = orbit[p]
            for s in self._gens:
                q = s._img[p]
                if q not in orbit:
                    orbit[q] = u * s
                    frontier.append(q)
        self._orbit_cache[p0] = orbit
        return orbit

    def point_stabilizer(self, point: int) -> "PermGroup":
        """Stabilizer of a 1-based point, via pruned Schreier generators."""
        return self._point_stabilizer0(point - 1)

    def _point_stabilizer0(self, p0: int) -> "PermGroup":
        cached = self._stab_cache.get(p0)
        if cached is not None:
            return cached
        orbit = self._orbit_transversal0(p0)
        chain = _Chain(self._degree)
        kept = []
        for p in sorted(orbit):
            u = orbit[p]
            for s in self._gens:
                sg = (u * s) * orbit[s._img[p]].inverse()
                if sg.is_identity() or chain.contains(sg):
                    continue
                chain.add(sg)
                kept.append(sg)
        stab = PermGroup(self._degree, kept)
        self._stab_cache[p0] = stab
        return stab

    def transporter(self, src: Sequence[int], dst: Sequence[int]) -> Optional[Permutation]:
        """Some g with src[i]^g = dst[i] for all i, or None."""
        if len(src) != len(dst):
            raise ValueError("tuples must have equal length")
        return self._transporter0(tuple(p - 1 for p in src), tuple(p - 1 for p in dst))

    def _transporter0(self, src: tuple, dst: tuple) -> Optional[Permutation]:
        if not src:
            return self.identity()
        a, b = src[0], dst[0]
        orbit = self._orbit_transversal0(a)
        t = orbit.get(b)
        if t is None:
            return None
        if len(src) == 1:
            return t
        ti = t.inverse()
        rest_dst = tuple(ti._img[q] for q in dst[1:])
        h = self._point_stabilizer0(a)._transporter0(src[1:], rest_dst)
        return None if h is None else h * t

    # -- natural-point chain (for coset canonicalization) -------------------

    def _natural_point_chain(self) -> list:
        """[(point0, orbit transversal, stabilizer)] along points 1,2,...,
        skipping fixed points; ends when the stabilizer is trivial."""
        if self._natural_chain is not None:
            return self._natural_chain
        out = []
        grp = self
        for p in range(self._degree):
            if grp.is_trivial():
                break
            orbit = grp._orbit_transversal0(p)
            if len(orbit) == 1:
                continue
            out.append((p, orbit, grp))
            grp = grp._point_stabilizer0(p)
        self._natural_chain = out
        return out

    def min_coset_rep(self, x: Permutation) -> Permutation:
        """Lexicographically smallest element of the right coset (self)*x,
        comparing 1-based image sequences."""
        if x.degree != self._degree:
            raise ValueError("degree mismatch")
        m = x
        for (p, orbit, grp) in self._natural_point_chain():
            if len(orbit) == 1:
                continue
            best = min(orbit, key=lambda o: m._img[o])
            t = orbit[best]
            if not t.is_identity():
                m = t * m
        return m

    # -- subgroup relations --------------------------------------------------

    def is_subgroup(self, other: "PermGroup") -> bool:
        """True when other <= self."""
        return other._degree == self._degree and all(g in self for g in other._gens)

    def subgroup_closure(self, elems: Iterable[Permutation]) -> "PermGroup":
        """Smallest subgroup of self containing elems."""
        elems = list(elems)
        for g in elems:
            if g not in self:
                raise ValueError(f"element outside the group: {g}")
        return PermGroup(self._degree, elems)

    def conjugate_group(self, x: Permutation) -> "PermGroup":
        return PermGroup(self._degree, [g.conjugate(x) for g in self._gens])

    def intersection(self, other: "PermGroup", bounds: Bounds = DEFAULT_BOUNDS) -> "PermGroup":
        if other._degree != self._degree:
            raise ValueError("degree mismatch")
        small, big = (self, other) if self._order <= other._order else (other, self)
        elems = [g for g in small.elements(bounds) if g in big]
        return PermGroup(self._degree, elems)

    def centralizer(self, g: Permutation, bounds: Bounds = DEFAULT_BOUNDS) -> "PermGroup":
        """Centralizer of an element, by element filtering at desk scale."""
        if g.degree != self._degree:
            raise ValueError("degree mismatch")
        elems = [x for x in self.elements(bounds) if x.commutes_with(g)]
        return PermGroup(self._degree, elems)

    def normalizer(self, sub: "PermGroup", bounds: Bounds = DEFAULT_BOUNDS) -> "PermGroup":
        """Normalizer of a subgroup, by element filtering at desk scale."""
        if sub._degree != self._degree:
            raise ValueError("degree mismatch")
        sub_set = sub.element_set(bounds)
        elems = [x for x in self.elements(bounds)
                 if all(h.conjugate(x) in sub_set for h in sub._gens)]
        return PermGroup(self._degree, elems)

    def is_conjugate_subgroup(self, h1: "PermGroup", h2: "PermGroup",
                              bounds: Bounds = DEFAULT_BOUNDS) -> Optional[Permutation]:
        """A conjugator x in self with h1^x = h2, or None."""
        if h1.order() != h2.order():
            return None
        set2 = h2.element_set(bounds)
        for x in self.elements(bounds):
            if all(g.conjugate(x) in set2 for g in h1._gens):
                return x
        return None


# -- conjugacy and rational classes ------------------------------------------


@dataclass(frozen=True)
class ConjugacyClass:
    """An explicitly enumerable conjugacy (or rational) class."""

    parent: PermGroup
    representative: Permutation
    rational: bool = False
    _size: Optional[int] = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def size(self) -> int:
        if self._size is not None:
            return self._size
        return len(self.elements())

    def elements(self, bounds: Bounds = DEFAULT_BOUNDS) -> tuple:
        got = self._cache.get("elements")
        if got is None:
            if self.rational:
                got = _rational_orbit(self.parent, self.representative, bounds)
            else:
                got = _conjugation_orbit(self.parent, self.representative, bounds)
            self._cache["elements"] = got
        return got

    def element_set(self, bounds: Bounds = DEFAULT_BOUNDS) -> frozenset:
        got = self._cache.get("set")
        if got is None:
            got = frozenset(self.elements(bounds))
            self._cache["set"] = got
        return got

    def element_order(self) -> int:
        return self.representative.order()

    def __str__(self) -> str:
        tag = "rational class" if self.rational else "class"
        return f"{tag} of {self.representative}"


def _conjugation_orbit(G: PermGroup, g: Permutation, bounds: Bounds) -> tuple:
    seen = {g}
    frontier = deque([g])
    while frontier:
        x = frontier.popleft()
        for s in G.generators:
            y = x.conjugate(s)
            if y not in seen:
                if len(seen) >= bounds.class_pruned:
                    raise BoundExceeded("conjugacy class exceeds enumeration bound")
                seen.add(y)
                frontier.append(y)
    return tuple(sorted(seen))


def _rational_orbit(G: PermGroup, g: Permutation, bounds: Bounds) -> tuple:
    n = g.order()
    seen = set()
    for k in range(1, n + 1):
        if _coprime(k, n):
            seen.update(_conjugation_orbit(G, g ** k, bounds))
    return tuple(sorted(seen))


def _coprime(a: int, b: int) -> bool:
    while b:
        a, b = b, a % b
    return a == 1


def class_of(G: PermGroup, g: Permutation, bounds: Bounds = DEFAULT_BOUNDS) -> ConjugacyClass:
    """The conjugacy class of g in G, with elements enumerated lazily."""
    if g not in G:
        raise ValueError(f"element outside the group: {g}")
    size = _natural_class_size(G, g)
    return ConjugacyClass(G, g, rational=False, _size=size)


def rational_class(G: PermGroup, g: Permutation, bounds: Bounds = DEFAULT_BOUNDS) -> ConjugacyClass:
    """All h in G with <h> conjugate to <g>: union of classes of coprime
    powers of g."""
    if g not in G:
        raise ValueError(f"element outside the group: {g}")
    return ConjugacyClass(G, g, rational=True)


def _partitions(n: int):
    """Partitions of n, descending parts, deterministic order."""
    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - part, part):
                yield (part,) + tail
    yield from rec(n, n)


def _type_rep(n: int, parts: tuple) -> Permutation:
    cyc = []
    next_pt = 1
    for p in parts:
        if p > 1:
            cyc.append(tuple(range(next_pt, next_pt + p)))
        next_pt += p
    return from_cycles(n, cyc)


def _type_class_size(n: int, parts: tuple) -> int:
    counts = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    denom = 1
    for length, mult in counts.items():
        denom *= (length ** mult) * factorial(mult)
    return factorial(n) // denom


def _an_splits(parts: tuple) -> bool:
    """S_n-class splits in A_n iff all cycle lengths distinct and odd."""
    return len(set(parts)) == len(parts) and all(p % 2 == 1 for p in parts)


def _natural_class_size(G: PermGroup, g: Permutation) -> Optional[int]:
    kind = G.natural_kind()
    if kind is None:
        return None
    parts = g.cycle_type()
    size = _type_class_size(G.degree, parts)
    if kind == "A" and _an_splits(parts):
        return size // 2
    return size


def conjugacy_classes(G: PermGroup, bounds: Bounds = DEFAULT_BOUNDS) -> list:
    """All conjugacy classes of G, sorted by representative.

    Natural S_n/A_n take the cycle-type path (with the A_n splitting rule);
    any other group is partitioned by explicit conjugation orbits.
    """
    if G._classes is not None:
        return G._classes
    kind = G.natural_kind()
    if kind is not None:
        out = []
        n = G.degree
        for parts in _partitions(n):
            rep = _type_rep(n, parts)
            if kind == "A" and not rep.is_even:
                continue
            size = _type_class_size(n, parts)
            if kind == "A" and _an_splits(parts):
                half = size // 2
                out.append(ConjugacyClass(G, rep, _size=half))
                swap = _split_partner(rep, n)
                out.append(ConjugacyClass(G, swap, _size=half))
            else:
                out.append(ConjugacyClass(G, rep, _size=size))
        out.sort(key=lambda c: c.representative)
        G._classes = out
        return out
    if G.order() > bounds.element_enum:
        raise BoundExceeded(
            f"group order {G.order()} exceeds class-enumeration bound")
    remaining = set(G.elements(bounds))
    out = []
    while remaining:
        rep = min(remaining)
        orbit = _conjugation_orbit(G, rep, bounds)
        cls = ConjugacyClass(G, rep, _size=len(orbit))
        cls._cache["elements"] = orbit
        out.append(cls)
        remaining.difference_update(orbit)
    out.sort(key=lambda c: c.representative)
    G._classes = out
    return out


def _split_partner(rep: Permutation, n: int) -> Permutation:
    """Representative of the other half of a split A_n class."""
    cyc = rep.cycles()
    a, b = cyc[0][0], cyc[0][1]
    swap = from_cycles(n, [(a, b)])
    return rep.conjugate(swap)


def same_class(G: PermGroup, a: Permutation, b: Permutation,
               bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    """Whether a and b are conjugate in G."""
    kind = G.natural_kind()
    if kind == "S":
        return a.cycle_type() == b.cycle_type()
    if kind == "A":
        parts = a.cycle_type()
        if parts != b.cycle_type():
            return False
        if not _an_splits(parts):
            return True
        sigma = _matching_conjugator(a, b, G.degree)
        return sigma.is_even
    if a.cycle_type() != b.cycle_type():
        return False
    return b in class_of(G, a).element_set(bounds)


def _matching_conjugator(a: Permutation, b: Permutation, n: int) -> Permutation:
    """Some x in S_n with a^x = b (equal cycle types required)."""
    by_len_a = {}
    by_len_b = {}
    for c in a.cycles():
        by_len_a.setdefault(len(c), []).append(c)
    for c in b.cycles():
        by_len_b.setdefault(len(c), []).append(c)
    img = [None] * n
    for length, acs in sorted(by_len_a.items()):
        for ca, cb in zip(acs, by_len_b[length]):
            for pa, pb in zip(ca, cb):
                img[pa - 1] = pb - 1
    fixed_a = sorted(set(range(n)) - {p - 1 for c in a.cycles() for p in c})
    fixed_b = sorted(set(range(n)) - {p - 1 for c in b.cycles() for p in c})
    for pa, pb in zip(fixed_a, fixed_b):
        img[pa] = pb
    return Permutation._raw(tuple(img))


def conjugator_in(G: PermGroup, a: Permutation, b: Permutation,
                  bounds: Bounds = DEFAULT_BOUNDS) -> Optional[Permutation]:
    """Some x in G with a^x = b, or None."""
    kind = G.natural_kind()
    if kind is not None:
        if a.cycle_type() != b.cycle_type():
            return None
        sigma = _matching_conjugator(a, b, G.degree)
        if kind == "S" or sigma.is_even:
            return sigma
        # adjust parity with an odd element of the centralizer of a, if any;
        # when none exists the class splits and a, b lie in different halves
        for c in a.cycles():
            if len(c) % 2 == 0:
                return from_cycles(G.degree, [c]) * sigma
        pairs = {}
        for c in a.cycles():
            pairs.setdefault(len(c), []).append(c)
        for length, cs in sorted(pairs.items()):
            if len(cs) >= 2 and length % 2 == 1:
                x = _cycle_swap(cs[0], cs[1], G.degree)
                return x * sigma
        fixed = sorted(a.fixed_points())
        if len(fixed) >= 2:
            t = from_cycles(G.degree, [(fixed[0], fixed[1])])
            return t * sigma
        return None
    for x in G.elements(bounds):
        if a.conjugate(x) == b:
            return x
    return None


def _cycle_swap(c1: tuple, c2: tuple, n: int) -> Permutation:
    """Permutation exchanging two equal-length disjoint cycles pointwise."""
    img = list(range(n))
    for pa, pb in zip(c1, c2):
        img[pa - 1] = pb - 1
        img[pb - 1] = pa - 1
    return Permutation._raw(tuple(img))


# -- centralizer of a natural permutation (constructive, for fast graphs) ----


def centralizer_elements_natural(g: Permutation):
    """Iterate C_{S_n}(g) elements constructively.

    Elements commuting with g = rotations within cycles x permutations of
    equal-length cycles x anything on fixed points; used as a pruned
    candidate stream for class-graph neighbors.
    """
    n = g.degree
    by_len = {}
    for c in g.cycles():
        by_len.setdefault(len(c), []).append(c)
    fixed = sorted(g.fixed_points())
    groups = sorted(by_len.items())

    def block_choices(length, cys):
        m = len(cys)
        for perm in itertools.permutations(range(m)):
            for offsets in itertools.product(range(length), repeat=m):
                yield perm, offsets

    def fixed_perms():
        for fp in itertools.permutations(fixed):
            yield fp

    streams = [block_choices(length, cys) for length, cys in groups]
    for combo in itertools.product(*streams, fixed_perms()):
        img = list(range(n))
        for (length, cys), (perm, offsets) in zip(groups, combo[:-1]):
            for i, c in enumerate(cys):
                target = cys[perm[i]]
                off = offsets[i]
                for j, p in enumerate(c):
                    img[p - 1] = target[(j + off) % length] - 1
        for src, dst in zip(fixed, combo[-1]):
            img[src - 1] = dst - 1
        yield Permutation._raw(tuple(img))


def centralizer_order_natural(g: Permutation) -> int:
    counts = {}
    for c in g.cycles():
        counts[len(c)] = counts.get(len(c), 0) + 1
    out = factorial(len(g.fixed_points()))
    for length, mult in counts.items():
        out *= (length ** mult) * factorial(mult)
    return out


# -- subgroup enumeration -----------------------------------------------------


def subgroups_up_to_conjugacy(G: PermGroup, bounds: Bounds = DEFAULT_BOUNDS) -> list:
    """One representative per conjugacy class of subgroups of G.

    Layered extension BFS: every class representative H is extended by
    generators x (up to H-conjugacy) and the results deduplicated by
    subgroup conjugacy in G.  Sorted by (order, element list).
    """
    if G.order() > bounds.subgroup_order:
        raise BoundExceeded(
            f"group order {G.order()} exceeds subgroup-enumeration bound "
            f"{bounds.subgroup_order}")
    all_elements = G.elements(bounds)
    trivial = PermGroup.trivial(G.degree)
    found = [trivial]
    signatures = {_subgroup_signature(trivial): [trivial]}
    frontier = [trivial]
    while frontier:
        next_frontier = []
        for H in frontier:
            hset = H.element_set(bounds)
            seen_x = set()
            for x in all_elements:
                if x in hset or x in seen_x:
                    continue
                seen_x.update(_conjugation_orbit(H, x, bounds))
                K = PermGroup(G.degree, list(H.generators) + [x])
                sig = _subgroup_signature(K)
                bucket = signatures.setdefault(sig, [])
                if any(G.is_conjugate_subgroup(K, other, bounds) is not None
                       for other in bucket):
                    continue
                bucket.append(K)
                found.append(K)
                next_frontier.append(K)
        frontier = next_frontier
    found.sort(key=lambda H: (H.order(), H.elements(bounds)))
    return found


def _subgroup_signature(H: PermGroup) -> tuple:
    orders = {}
    for g in H.elements():
        orders[g.order()] = orders.get(g.order(), 0) + 1
    orbit_sizes = tuple(sorted(len(o) for o in H.orbits()))
    return (H.order(), tuple(sorted(orders.items())), orbit_sizes)


# -- spec operation surface ----------------------------------------------------


def generate(degree: int, generators: Iterable[Permutation] = (), *, name: str = "") -> PermGroup:
    return PermGroup(degree, generators, name=name)


def symmetric(n: int) -> PermGroup:
    return PermGroup.symmetric(n)


def alternating(n: int) -> PermGroup:
    return PermGroup.alternating(n)


def contains(G: PermGroup, g: Permutation) -> bool:
    return G.contains(g)


def order(G: PermGroup) -> int:
    return G.order()


def elements(G: PermGroup, bounds: Bounds = DEFAULT_BOUNDS) -> tuple:
    return G.elements(bounds)


def centralizer(G: PermGroup, g: Permutation, bounds: Bounds = DEFAULT_BOUNDS) -> PermGroup:
    return G.centralizer(g, bounds)


def normalizer(G: PermGroup, sub: PermGroup, bounds: Bounds = DEFAULT_BOUNDS) -> PermGroup:
    return G.normalizer(sub, bounds)


def subgroup_closure(G: PermGroup, elems: Iterable[Permutation]) -> PermGroup:
    return G.subgroup_closure(elems)


def is_subgroup(G: PermGroup, H: PermGroup) -> bool:
    return G.is_subgroup(H)
