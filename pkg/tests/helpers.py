"""Independent oracles used to freeze expected values: naive closures,
brute-force class partitions, definitional relatedness checks.

Everything here avoids the stabilizer-chain machinery on purpose.
"""

import itertools

from binact.perm import Permutation, identity


def naive_closure(degree, gens):
    """All products of the generators, by plain BFS over multiplication."""
    out = {identity(degree)}
    frontier = list(out)
    gens = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in out:
                    out.add(y)
                    new.append(y)
        frontier = new
    return out


def brute_classes(group_elements):
    """Conjugation orbits of a full element list (the oracle for class sizes)."""
    all_elems = list(group_elements)
    remaining = set(all_elems)
    out = []
    while remaining:
        rep = min(remaining)
        orbit = {rep.conjugate(g) for g in all_elems}
        out.append(frozenset(orbit))
        remaining -= orbit
    return out


def brute_subgroups(group_elements, degree):
    """Every subgroup of a small group, as frozensets of elements."""
    elems = sorted(group_elements)
    found = {frozenset([identity(degree)])}
    frontier = list(found)
    while frontier:
        new = []
        for sub in frontier:
            for x in elems:
                if x in sub:
                    continue
                closed = frozenset(naive_closure(degree, list(sub) + [x]))
                if closed not in found:
                    found.add(closed)
                    new.append(closed)
        frontier = new
    return found


def brute_transporter(image_elements, src, dst):
    """Some image element mapping src onto dst coordinatewise, or None."""
    for e in image_elements:
        if all(e.apply(s) == d for s, d in zip(src, dst)):
            return e
    return None


def brute_k_related(image_elements, I, J, k):
    for idx in itertools.combinations(range(len(I)), k):
        if brute_transporter(image_elements, [I[i] for i in idx],
                             [J[i] for i in idx]) is None:
            return False
    return True


def brute_rc(action, max_len=None):
    """Definitional relational complexity for tiny actions.

    Scans all pairs of injective tuples per length; valid because critical
    pairs are injective once k >= 2.
    """
    n = action.npoints
    img = sorted(set(action.image_of(g) for g in action.group.elements()))
    if max_len is None:
        max_len = n
    best = 2
    for length in range(3, max_len + 1):
        for I in itertools.permutations(range(1, n + 1), length):
            for J in itertools.permutations(range(1, n + 1), length):
                if brute_transporter(img, I, J) is not None:
                    continue
                k = length - 1
                while k >= 2 and not brute_k_related(img, I, J, k):
                    k -= 1
                if k >= 2:
                    best = max(best, k + 1)
    return best


def definitional_edge(x, y, member_set):
    """The class-graph edge predicate, straight from the definition."""
    if x == y or not x.commutes_with(y):
        return False
    xy = x * y.inverse()
    return xy in member_set or xy.inverse() in member_set
