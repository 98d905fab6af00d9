"""Group actions: natural, coset (transitive on right cosets), unions.

An Action wraps a PermGroup with a point set {1..npoints} and an apply map.
The induced permutation image on the points is available as a PermGroup for
orbit/transporter machinery; it need not be faithful.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

from .config import DEFAULT_BOUNDS, BoundExceeded, Bounds
from .group import (ConjugacyClass, PermGroup, class_of, conjugacy_classes)
from .perm import Permutation


class Action:
    """Base: a PermGroup acting on {1..npoints}."""

    def __init__(self, group: PermGroup, npoints: int):
        self.group = group
        self.npoints = npoints
        self._image_group = None
        self._image_cache = {}
        self._pair_labels = None

    def apply(self, point: int, g: Permutation) -> int:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def point_stabilizer_abstract(self, point: int) -> PermGroup:
        """The stabilizer of the point as a subgroup of the abstract group."""
        raise NotImplementedError

    # -- induced permutation image ------------------------------------------

    def image_of(self, g: Permutation) -> Permutation:
        got = self._image_cache.get(g)
        if got is None:
            got = Permutation._raw(
                tuple(self.apply(p, g) - 1 for p in range(1, self.npoints + 1)))
            self._image_cache[g] = got
        return got

    def image_group(self) -> PermGroup:
        if self._image_group is None:
            gens = [self.image_of(g) for g in self.group.generators]
            self._image_group = PermGroup(max(1, self.npoints), gens)
        return self._image_group

    # -- orbits ----------------------------------------------------------------

    def orbits(self) -> list:
        return self.image_group().orbits() if self.npoints else []

    def is_transitive(self) -> bool:
        return len(self.orbits()) <= 1

    def is_trivial_action(self) -> bool:
        return all(g.is_identity() for g in self.image_group().generators)

    def is_semiregular(self) -> bool:
        """Only the identity of the acting group fixes a point."""
        if self.npoints == 0:
            return True
        img = self.image_group()
        if img.order() != self.group.order():
            return False  # nontrivial kernel fixes everything
        return all(len(o) == img.order() for o in img.orbits())

    # -- relatedness support ----------------------------------------------------

    def pair_orbit_labels(self, bounds: Bounds = DEFAULT_BOUNDS) -> dict:
        """Orbit label for every ordered point pair under the diagonal action."""
        if self._pair_labels is not None:
            return self._pair_labels
        n = self.npoints
        if n > bounds.pair_table:
            raise BoundExceeded(f"pair-orbit table over {bounds.pair_table} points")
        gens = self.image_group().generators
        labels = {}
        next_label = 0
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if (a, b) in labels:
                    continue
                frontier = deque([(a, b)])
                labels[(a, b)] = next_label
                while frontier:
                    x, y = frontier.popleft()
                    for s in gens:
                        pair = (s.apply(x), s.apply(y))
                        if pair not in labels:
                            labels[pair] = next_label
                            frontier.append(pair)
                next_label += 1
        self._pair_labels = labels
        return labels


class NaturalAction(Action):
    """G in its defining action on {1..degree}."""

    def __init__(self, group: PermGroup):
        super().__init__(group, group.degree)

    def apply(self, point: int, g: Permutation) -> int:
        return g.apply(point)

    def image_of(self, g: Permutation) -> Permutation:
        return g

    def image_group(self) -> PermGroup:
        return self.group

    def point_stabilizer_abstract(self, point: int) -> PermGroup:
        return self.group.point_stabilizer(point)

    def describe(self) -> str:
        return f"natural action of {self.group.name or 'G'} on {self.npoints} points"


class CosetAction(Action):
    """Transitive action of G on the right cosets of H; point 1 is H itself.

    Cosets are keyed by their lexicographically minimal representative.
    """

    def __init__(self, G: PermGroup, H: PermGroup, bounds: Bounds = DEFAULT_BOUNDS):
        if H.degree != G.degree:
            raise ValueError("subgroup degree mismatch")
        if not G.is_subgroup(H):
            raise ValueError("H is not a subgroup of G")
        index = G.order() // H.order()
        if index > bounds.coset_index:
            raise BoundExceeded(f"coset index {index} exceeds bound {bounds.coset_index}")
        self.subgroup = H
        reps = [H.min_coset_rep(G.identity())]
        lookup = {reps[0]._img: 1}
        frontier = deque([reps[0]])
        while frontier:
            r = frontier.popleft()
            for s in G.generators:
                key = H.min_coset_rep(r * s)
                if key._img not in lookup:
                    reps.append(key)
                    lookup[key._img] = len(reps)
                    frontier.append(key)
        self.transversal = tuple(reps)
        self._lookup = lookup
        super().__init__(G, len(reps))
        if self.npoints != index:
            raise AssertionError("coset enumeration does not match the index")

    def apply(self, point: int, g: Permutation) -> int:
        rep = self.subgroup.min_coset_rep(self.transversal[point - 1] * g)
        return self._lookup[rep._img]

    def point_stabilizer_abstract(self, point: int) -> PermGroup:
        r = self.transversal[point - 1]
        return PermGroup(self.group.degree,
                         [h.conjugate(r) for h in self.subgroup.generators])

    def describe(self) -> str:
        gname = self.group.name or "G"
        return f"action of {gname} on {self.npoints} cosets of a subgroup of order {self.subgroup.order()}"


class UnionAction(Action):
    """Disjoint union of actions of one group; points renumbered in blocks."""

    def __init__(self, parts: Sequence[Action]):
        if not parts:
            raise ValueError("empty union")
        group = parts[0].group
        for a in parts[1:]:
            if a.group is not group and a.group != group:
                raise ValueError("union parts must share the acting group")
        self.parts = tuple(parts)
        self.offsets = []
        total = 0
        for a in parts:
            self.offsets.append(total)
            total += a.npoints
        super().__init__(group, total)

    def _locate(self, point: int) -> tuple:
        for part, off in zip(reversed(self.parts), reversed(self.offsets)):
            if point > off:
                return part, off
        raise ValueError(f"point {point} out of range")

    def apply(self, point: int, g: Permutation) -> int:
        part, off = self._locate(point)
        return off + part.apply(point - off, g)

    def point_stabilizer_abstract(self, point: int) -> PermGroup:
        part, off = self._locate(point)
        return part.point_stabilizer_abstract(point - off)

    def describe(self) -> str:
        return " + ".join(p.describe() for p in self.parts)


class RestrictedAction(Action):
    """An action restricted to a stable subset of its points."""

    def __init__(self, base: Action, points: Iterable[int]):
        pts = sorted(set(points))
        back = {p: i + 1 for i, p in enumerate(pts)}
        for p in pts:
            for s in base.group.generators:
                if base.apply(p, s) not in back:
                    raise ValueError("subset is not stable under the action")
        self.base = base
        self._points = tuple(pts)
        self._back = back
        super().__init__(base.group, len(pts))

    def apply(self, point: int, g: Permutation) -> int:
        return self._back[self.base.apply(self._points[point - 1], g)]

    def point_stabilizer_abstract(self, point: int) -> PermGroup:
        return self.base.point_stabilizer_abstract(self._points[point - 1])

    def describe(self) -> str:
        return f"{self.base.describe()} restricted to {self.npoints} points"


# -- constructors ------------------------------------------------------------


def natural_action(G: PermGroup) -> NaturalAction:
    return NaturalAction(G)


def coset_action(G: PermGroup, H: PermGroup, bounds: Bounds = DEFAULT_BOUNDS) -> CosetAction:
    return CosetAction(G, H, bounds)


def regular_action(G: PermGroup, bounds: Bounds = DEFAULT_BOUNDS) -> CosetAction:
    return CosetAction(G, PermGroup.trivial(G.degree), bounds)


def trivial_action(G: PermGroup) -> CosetAction:
    return CosetAction(G, G)


def point_stabilizer(action: Action, point: int) -> PermGroup:
    return action.point_stabilizer_abstract(point)


# -- fixity -------------------------------------------------------------------


def fixed_set(action: Action, g: Permutation) -> frozenset:
    """Points of the action fixed by g."""
    return frozenset(p for p in range(1, action.npoints + 1)
                     if action.apply(p, g) == p)


def fixity(action: Action, g: Permutation) -> int:
    return len(fixed_set(action, g))


def fixed_set_subgroup(action: Action, K: PermGroup) -> frozenset:
    """Common fixed points of all elements of K (= of its generators)."""
    pts = frozenset(range(1, action.npoints + 1))
    for g in K.generators:
        pts &= fixed_set(action, g)
    return pts


def max_fixity_classes(action: Action, p: int, *, element_kind: str = "prime",
                       bounds: Bounds = DEFAULT_BOUNDS) -> list:
    """Classes of elements of order exactly p (default) attaining the maximum
    fixity in the action; element_kind="p-element" widens to p-power orders.

    Ties return every attaining class, sorted by representative.
    """
    G = action.group
    if G.order() % p != 0:
        raise ValueError(f"{p} does not divide the group order {G.order()}")
    if element_kind not in ("prime", "p-element"):
        raise ValueError(f"unknown element kind: {element_kind}")
    candidates = []
    for cls in conjugacy_classes(G, bounds):
        o = cls.element_order()
        if element_kind == "prime":
            if o != p:
                continue
        else:
            if o == 1 or o % p != 0 or o != p ** _p_valuation(o, p):
                continue
        candidates.append(cls)
    if not candidates:
        return []
    scored = [(fixity(action, cls.representative), cls) for cls in candidates]
    best = max(score for score, _ in scored)
    out = [cls for score, cls in scored if score == best]
    out.sort(key=lambda c: c.representative)
    return out


def _p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
