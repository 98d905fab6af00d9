"""Graphs on conjugacy classes: construction, components, component groups,
the quad-combinatorics edge oracle and involution normal forms.

Vertices of Gamma(C) are the elements of C; x and y are joined when they
commute and x*y^-1 (or y*x^-1) stays in C.  For a rational class the test is
x*y^-1 in C^rat.  Vertex ids follow the sorted element order, so output is
deterministic across runs.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .config import DEFAULT_BOUNDS, BoundExceeded, Bounds
from .group import (ConjugacyClass, PermGroup, centralizer_elements_natural,
                    centralizer_order_natural, same_class)
from .perm import Exchange, Permutation, Quad, exchange_related, is_quad


@dataclass(frozen=True)
class ClassGraph:
    """Gamma(C) or Gamma(C^rat): indexed class elements plus adjacency."""

    cls: ConjugacyClass
    kind: str                    # "ordinary" | "rational"
    vertices: tuple              # sorted Permutations
    adjacency: tuple             # per-vertex sorted tuple of neighbor ids

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def vertex_id(self, g: Permutation) -> int:
        i = self._index().get(g)
        if i is None:
            raise ValueError(f"not a vertex: {g}")
        return i

    def _index(self) -> dict:
        got = self.cls._cache.get(("graph_index", self.kind))
        if got is None:
            got = {g: i for i, g in enumerate(self.vertices)}
            self.cls._cache[("graph_index", self.kind)] = got
        return got

    def has_edge(self, a: Permutation, b: Permutation) -> bool:
        return self.vertex_id(b) in self.adjacency[self.vertex_id(a)]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, v: int) -> int:
        while v != self.parent[v]:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


def _edge_predicate_ordinary(x: Permutation, y: Permutation, members: frozenset) -> bool:
    if x == y or not x.commutes_with(y):
        return False
    xy = x * y.inverse()
    return xy in members or xy.inverse() in members


def _edge_predicate_rational(x: Permutation, y: Permutation, members: frozenset) -> bool:
    if x == y or not x.commutes_with(y):
        return False
    return (x * y.inverse()) in members


def _neighbor_stream(cls: ConjugacyClass, vertices: tuple, bounds: Bounds):
    """Yield (vertex, candidate) pairs covering all commuting pairs.

    Natural S_n/A_n classes with small centralizers stream candidates from
    the constructive centralizer; otherwise all pairs are scanned with an
    early commutation filter.
    """
    G = cls.parent
    n = len(vertices)
    rep = cls.representative
    use_centralizer = (G.natural_kind() is not None
                       and centralizer_order_natural(rep) < n
                       and not cls.rational)
    if use_centralizer:
        member_type = rep.cycle_type()
        for g in vertices:
            for z in centralizer_elements_natural(g):
                if z != g and z.cycle_type() == member_type:
                    yield g, z
    else:
        if n > bounds.class_all_pairs:
            raise BoundExceeded(
                f"class size {n} exceeds all-pairs bound {bounds.class_all_pairs}")
        for i in range(n):
            x = vertices[i]
            for j in range(i + 1, n):
                yield x, vertices[j]


def _build(cls: ConjugacyClass, kind: str, bounds: Bounds) -> ClassGraph:
    if len(cls.elements(bounds)) > bounds.class_pruned:
        raise BoundExceeded("class exceeds the graph construction bound")
    order = cls.element_order()
    if order > 1 and not _is_prime(order):
        warnings.warn(
            f"class elements have composite order {order}; the graph is defined "
            "for classes of prime order", stacklevel=3)
    vertices = cls.elements(bounds)
    members = cls.element_set(bounds)
    index = {g: i for i, g in enumerate(vertices)}
    predicate = _edge_predicate_rational if kind == "rational" else _edge_predicate_ordinary
    nbrs = [set() for _ in vertices]
    for x, y in _neighbor_stream(cls, vertices, bounds):
        j = index.get(y)
        if j is None:
            continue
        if predicate(x, y, members):
            i = index[x]
            nbrs[i].add(j)
            nbrs[j].add(i)
    graph = ClassGraph(cls=cls, kind=kind, vertices=vertices,
                       adjacency=tuple(tuple(sorted(s)) for s in nbrs))
    return graph


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def build_gamma(cls: ConjugacyClass, bounds: Bounds = DEFAULT_BOUNDS) -> ClassGraph:
    """Gamma(C): edge iff commute and x*y^-1 or y*x^-1 lies in C."""
    if cls.rational:
        raise ValueError("use build_gamma_rational for rational classes")
    return _build(cls, "ordinary", bounds)


def build_gamma_rational(cls: ConjugacyClass, bounds: Bounds = DEFAULT_BOUNDS) -> ClassGraph:
    """Gamma(C^rat): edge iff commute and x*y^-1 lies in C^rat."""
    if not cls.rational:
        raise ValueError("expected a rational class")
    return _build(cls, "rational", bounds)


def connected_components(graph: ClassGraph) -> list:
    """Vertex-id sets of the components, largest first then by least id."""
    uf = _UnionFind(graph.vertex_count)
    for i, nbrs in enumerate(graph.adjacency):
        for j in nbrs:
            uf.union(i, j)
    comps = {}
    for v in range(graph.vertex_count):
        comps.setdefault(uf.find(v), []).append(v)
    out = [frozenset(vs) for vs in comps.values()]
    out.sort(key=lambda c: (-len(c), min(c)))
    return out


def component_of(graph: ClassGraph, g: Permutation) -> frozenset:
    start = graph.vertex_id(g)
    seen = {start}
    frontier = deque([start])
    while frontier:
        v = frontier.popleft()
        for w in graph.adjacency[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return frozenset(seen)


def component_group(graph: ClassGraph, g: Permutation) -> PermGroup:
    """Subgroup generated by all vertices in the component containing g."""
    comp = component_of(graph, g)
    return graph.cls.parent.subgroup_closure([graph.vertices[v] for v in sorted(comp)])


# -- quad edge oracle ----------------------------------------------------------


@dataclass(frozen=True)
class QuadPair:
    """Matched quads of an involution edge: same support or an exchange."""

    q: Quad
    q2: Quad
    exchange: Optional[Exchange]    # None = same support

    @property
    def kind(self) -> str:
        return "exchange" if self.exchange is not None else "same-support"


@dataclass(frozen=True)
class EdgeWitness:
    """Quad decompositions certifying an involution edge of Gamma(C)."""

    s: Permutation
    t: Permutation
    pairs: tuple

    @property
    def kind(self) -> str:
        kinds = {p.kind for p in self.pairs}
        return kinds.pop() if len(kinds) == 1 else "generic"

    def check(self) -> bool:
        """Products of the listed quads reproduce s and t on disjoint supports."""
        n = self.s.degree
        supports_s = [p.q.support for p in self.pairs]
        supports_t = [p.q2.support for p in self.pairs]
        for sup in (supports_s, supports_t):
            all_pts = set()
            for piece in sup:
                if all_pts & piece:
                    return False
                all_pts |= piece
        prod_s = Permutation.identity(n)
        prod_t = Permutation.identity(n)
        for p in self.pairs:
            prod_s = prod_s * p.q.to_permutation(n)
            prod_t = prod_t * p.q2.to_permutation(n)
        return prod_s == self.s and prod_t == self.t


def quad_edge_oracle(s: Permutation, t: Permutation, cls: ConjugacyClass,
                     bounds: Bounds = DEFAULT_BOUNDS) -> Optional[EdgeWitness]:
    """Witness for the edge s—t of Gamma(C) built from the orbit structure of
    <s,t>, for involution classes; None exactly when there is no edge."""
    if s.order() != 2 or t.order() != 2:
        raise ValueError("quad edge oracle needs involutions")
    if s not in cls.element_set(bounds) or t not in cls.element_set(bounds):
        raise ValueError("elements outside the class")
    if s == t or not s.commutes_with(t):
        return None
    n = s.degree
    # orbit analysis of the Klein group <s, t>
    free_orbits = []      # size-4 orbits: quads with equal support
    b_pairs = []          # moved by t only
    c_pairs = []          # moved by s only
    d_pairs = []          # moved by s and t identically
    seen = set()
    for p in range(1, n + 1):
        if p in seen:
            continue
        ps, pt = s.apply(p), t.apply(p)
        orbit = {p, ps, pt, s.apply(pt)}
        seen |= orbit
        if len(orbit) == 4:
            free_orbits.append(p)
        elif len(orbit) == 2:
            if ps == p:
                b_pairs.append(tuple(sorted((p, pt))))
            elif pt == p:
                c_pairs.append(tuple(sorted((p, ps))))
            else:
                d_pairs.append(tuple(sorted((p, ps))))
    if not (len(b_pairs) == len(c_pairs) == len(d_pairs)):
        return None
    st = s * t
    if st not in cls.element_set(bounds) and st.inverse() not in cls.element_set(bounds):
        return None
    pairs = []
    for p in free_orbits:
        q = Quad.of(tuple(sorted((p, s.apply(p)))), tuple(sorted((t.apply(p), s.apply(t.apply(p))))))
        q2 = Quad.of(tuple(sorted((p, t.apply(p)))), tuple(sorted((s.apply(p), t.apply(s.apply(p))))))
        pairs.append(QuadPair(q=q, q2=q2, exchange=None))
    for delta, gamma, beta in zip(d_pairs, c_pairs, b_pairs):
        q = Quad.of(delta, gamma)
        q2 = Quad.of(delta, beta)
        pairs.append(QuadPair(q=q, q2=q2,
                              exchange=Exchange(kept=delta, removed=gamma, added=beta)))
    witness = EdgeWitness(s=s, t=t, pairs=tuple(pairs))
    if not witness.check():
        raise AssertionError("quad witness failed to multiply back")
    return witness


# -- involution normal form ------------------------------------------------------


def _pair_transpositions(g: Permutation) -> list:
    return [tuple(c) for c in g.cycles()]


def _final_prefix(g: Permutation, k: int) -> int:
    """Number of leading target transpositions (1,2),(3,4),... present in g."""
    trans = set(_pair_transpositions(g))
    count = 0
    for j in range(1, 2 * k + 1):
        if (2 * j - 1, 2 * j) in trans:
            count += 1
        else:
            break
    return count


def _single_quad_path(graph: ClassGraph, s: Permutation, q1: Quad, q1p: Quad,
                      rest: list) -> list:
    """Path s -> t of length <= 3 replacing q1 by q1p, via the 3-step move.

    rest: remaining quads of s (disjoint from q1), kept in t.
    """
    n = s.degree
    if q1 == q1p:
        return []
    t = q1p.to_permutation(n)
    for q in rest:
        t = t * q.to_permutation(n)
    if q1.support == q1p.support:
        third = next(q for q in _quads_on(q1.support) if q not in (q1, q1p))
        q1pp = third
    else:
        a, b = q1p.first
        c, d = q1p.second
        q1pp = Quad.of((a, c), (b, d))
    variants = []
    for q in rest:
        w, x = q.first
        y, z = q.second
        variants.append((Quad.of((w, y), (x, z)), Quad.of((w, z), (x, y))))
    s1 = q1p.to_permutation(n)
    s2 = q1pp.to_permutation(n)
    for (qa, qb) in variants:
        s1 = s1 * qa.to_permutation(n)
        s2 = s2 * qb.to_permutation(n)
    path = [s1, s2, t]
    prev = s
    for step in path:
        if not graph.has_edge(prev, step):
            raise AssertionError("single-quad move produced a non-edge")
        prev = step
    return path


def _quads_on(support: frozenset) -> tuple:
    from .perm import quads_on_support
    return quads_on_support(*sorted(support))


def _as_quads(g: Permutation, first_pair: tuple = None) -> tuple:
    """Pair the transpositions of g into quads deterministically; when
    first_pair (two transpositions of g) is given it forms the first quad."""
    trans = sorted(_pair_transpositions(g))
    if first_pair is not None:
        t1, t2 = first_pair
        trans.remove(t1)
        trans.remove(t2)
        head = [Quad.of(t1, t2)]
    else:
        head = []
    rest = [Quad.of(trans[i], trans[i + 1]) for i in range(0, len(trans), 2)]
    return tuple(head + rest)


def normalize_involution(graph: ClassGraph, s: Permutation,
                         bounds: Bounds = DEFAULT_BOUNDS) -> list:
    """Path in Gamma(C) from s to (1,2)(3,4)...(4k-1,4k), following the
    proof's move order; raises for n = 4k+1 where no such path exists."""
    cls = graph.cls
    rep = cls.representative
    parts = rep.cycle_type()
    if set(parts) - {1, 2} or list(parts).count(2) % 2 != 0:
        raise ValueError("normal form applies to classes of quad products")
    k = list(parts).count(2) // 2
    n = rep.degree
    if n == 4 * k + 1:
        raise ValueError(f"n = 4k+1 = {n}: the graph has {n} components, no general path")
    if s not in cls.element_set(bounds):
        raise ValueError("vertex outside the class")
    target_trans = [(2 * j - 1, 2 * j) for j in range(1, 2 * k + 1)]
    path = []
    current = s
    guard = min(bounds.path_moves, 6 * k + n)
    while len(path) <= guard:
        trans = sorted(_pair_transpositions(current))
        missing = [tt for tt in target_trans if tt not in trans]
        if not missing:
            break
        tgt = missing[0]
        step = _stage_step(graph, current, tgt, target_trans)
        if step is None:
            step = _bfs_progress(graph, current, k, bounds)
        path.extend(step)
        current = path[-1]
    else:
        raise BoundExceeded("involution normalization exceeded the path bound")
    return path


def _stage_step(graph: ClassGraph, s: Permutation, tgt: tuple, target_trans: list):
    """One greedy stage forcing the transposition tgt into s, or None."""
    n = s.degree
    trans = sorted(_pair_transpositions(s))
    final = [t for t in trans if t in target_trans and t < tgt]
    junk = [t for t in trans if t not in final]
    a, b = tgt
    partner = {p: q for t in trans for p, q in (t, reversed(t))}
    in_a, in_b = a in partner, b in partner
    if in_a and in_b:
        # same-support move on the quad covering both target points
        ta = tuple(sorted((a, partner[a])))
        tb = tuple(sorted((b, partner[b])))
        if ta == tb:
            return []
        q1 = Quad.of(ta, tb)
        q1p = Quad.of((a, b), tuple(sorted((partner[a], partner[b]))))
        rest = _as_quads(s, first_pair=(ta, tb))[1:]
        return _single_quad_path(graph, s, q1, q1p, list(rest))
    if not in_a and not in_b:
        nonfixed_junk = [t for t in junk]
        if len(nonfixed_junk) >= 2:
            t1, t2 = nonfixed_junk[0], nonfixed_junk[1]
            q1 = Quad.of(t1, t2)
            q1p = Quad.of(t1, (a, b))
            rest = _as_quads(s, first_pair=(t1, t2))[1:]
            return _single_quad_path(graph, s, q1, q1p, list(rest))
        if len(nonfixed_junk) == 1 and final:
            t1 = final[-1]
            t2 = nonfixed_junk[0]
            q1 = Quad.of(t1, t2)
            q1p = Quad.of(t1, (a, b))
            rest = _as_quads(s, first_pair=(t1, t2))[1:]
            return _single_quad_path(graph, s, q1, q1p, list(rest))
        return None
    # exactly one target point in the support
    moved = a if in_a else b
    fixed_tgt = b if in_a else a
    t_moved = tuple(sorted((moved, partner[moved])))
    companions = [t for t in junk if t != t_moved]
    free_points = sorted(set(range(1, n + 1)) - {p for t in trans for p in t}
                         - {fixed_tgt})
    if companions and free_points:
        comp = companions[0]
        q1 = Quad.of(t_moved, comp)
        q1p = Quad.of(t_moved, (fixed_tgt, free_points[0]))
        rest = _as_quads(s, first_pair=(t_moved, comp))[1:]
        first = _single_quad_path(graph, s, q1, q1p, list(rest))
        return first if first else None
    return None


def _bfs_progress(graph: ClassGraph, s: Permutation, k: int, bounds: Bounds) -> list:
    """Shortest path to any vertex with a strictly longer final prefix."""
    start = graph.vertex_id(s)
    score = _final_prefix(s, k)
    prev = {start: None}
    frontier = deque([start])
    while frontier:
        v = frontier.popleft()
        for w in graph.adjacency[v]:
            if w in prev:
                continue
            prev[w] = v
            if _final_prefix(graph.vertices[w], k) > score:
                out = []
                node = w
                while node is not None and node != start:
                    out.append(graph.vertices[node])
                    node = prev[node]
                out.reverse()
                return out
            frontier.append(w)
    raise BoundExceeded("no progress vertex reachable; graph not connected?")


# -- export -----------------------------------------------------------------------


def graph_summary(graph: ClassGraph) -> dict:
    comps = connected_components(graph)
    rep0 = graph.vertices[min(comps[0])]
    return {
        "group": graph.cls.parent.name or repr(graph.cls.parent),
        "class_rep": graph.cls.representative.cycle_string(),
        "kind": graph.kind,
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "components": [
            {"size": len(c),
             "group_order": component_group(graph, graph.vertices[min(c)]).order()}
            for c in comps
        ],
    }


def dot_export(graph: ClassGraph, *, components: bool = False) -> str:
    """Undirected DOT output, vertices labeled in cycle notation."""
    lines = ["graph classgraph {"]
    color_of = {}
    if components:
        palette = ["lightblue", "lightgreen", "lightsalmon", "plum", "khaki",
                   "lightgray", "lightpink", "palegoldenrod"]
        for ci, comp in enumerate(connected_components(graph)):
            for v in comp:
                color_of[v] = palette[ci % len(palette)]
    for i, g in enumerate(graph.vertices):
        attrs = [f'label="{g.cycle_string()}"']
        if i in color_of:
            attrs.append(f'style=filled fillcolor="{color_of[i]}"')
        lines.append(f"  v{i} [{' '.join(attrs)}];")
    for i, nbrs in enumerate(graph.adjacency):
        for j in nbrs:
            if i < j:
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
