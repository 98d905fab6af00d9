import random
from math import lcm

import pytest

from binact.perm import (Exchange, Permutation, Quad, compose, conjugate,
                         cycle_type, cycles, exchange_related, fixed_points,
                         from_cycles, identity, inverse, is_quad, order,
                         parity, power, quads_on_support, support)


def P(degree, text):
    return from_cycles(degree, text)


class TestCompose:
    def test_transpositions(self):
        assert compose(P(3, "(1,2)"), P(3, "(2,3)")) == P(3, "(1,3,2)")

    def test_inverse_gives_identity(self):
        g = P(6, "(1,4,2)(3,6)")
        assert compose(g, inverse(g)) == identity(6)

    def test_paper_p5_product(self):
        # h1 = (1..5), h2 = h1^sigma; product matches the displayed cycle
        h1 = P(5, "(1,2,3,4,5)")
        h2 = P(5, "(1,2,4,5,3)")
        assert compose(h1, h2) == P(5, "(2,1,4,3,5)")

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(P(3, "(1,2)"), P(4, "(1,2)"))


class TestBasics:
    def test_inverse(self):
        assert inverse(P(3, "(1,2,3)")) == P(3, "(1,3,2)")

    def test_power_order_divides(self):
        assert power(P(5, "(1,2,3,4,5)"), 5) == identity(5)
        assert power(P(5, "(1,2,3,4,5)"), -1) == P(5, "(1,5,4,3,2)")

    def test_conjugate_relabels(self):
        assert conjugate(P(4, "(1,2,3)"), P(4, "(2,3,4)")) == P(4, "(1,3,4)")

    def test_cycle_type_includes_fixed_points(self):
        assert cycle_type(P(9, "(1,2,3)(4,5,6)")) == (3, 3, 1, 1, 1)

    def test_parity(self):
        assert parity(P(4, "(1,2)(3,4)")) == "even"
        assert parity(P(4, "(1,2)")) == "odd"

    def test_fixed_points(self):
        assert fixed_points(P(6, "(1,2)(3,4)")) == frozenset({5, 6})

    def test_support_partition(self):
        g = P(8, "(1,2,3)(5,6)")
        assert len(support(g)) + len(fixed_points(g)) == 8

    def test_order(self):
        assert order(P(6, "(1,2,3)(4,5)")) == 6
        assert order(identity(4)) == 1


class TestFromCycles:
    def test_round_trip_explicit(self):
        g = from_cycles(9, "(1,2,3)(4,5,6)(7,8,9)")
        assert from_cycles(9, cycles(g)) == g

    def test_identity_text(self):
        assert from_cycles(5, "()") == identity(5)

    def test_repeated_point(self):
        with pytest.raises(ValueError, match="repeated"):
            from_cycles(5, "(1,2)(2,3)")

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="range"):
            from_cycles(3, "(1,4)")

    def test_whitespace_insensitive(self):
        assert from_cycles(5, " (1, 2) (3,4) ") == P(5, "(1,2)(3,4)")

    def test_garbage(self):
        with pytest.raises(ValueError):
            from_cycles(5, "(1,2")


class TestQuads:
    def test_quads_on_support(self):
        qs = quads_on_support(1, 2, 3, 4)
        perms = {q.to_permutation(4) for q in qs}
        assert perms == {P(4, "(1,2)(3,4)"), P(4, "(1,3)(2,4)"), P(4, "(1,4)(2,3)")}

    def test_is_quad(self):
        assert is_quad(P(5, "(1,2)(3,4)"))
        assert not is_quad(P(5, "(1,2)"))
        assert not is_quad(P(6, "(1,2)(3,4,5)"))

    def test_exchange(self):
        ex = exchange_related(P(6, "(1,2)(3,4)"), P(6, "(1,2)(5,6)"))
        assert ex == Exchange(kept=(1, 2), removed=(3, 4), added=(5, 6))

    def test_same_support_no_exchange(self):
        assert exchange_related(P(4, "(1,2)(3,4)"), P(4, "(1,3)(2,4)")) is None

    def test_non_quad_errors(self):
        with pytest.raises(ValueError):
            exchange_related(P(4, "(1,2)"), P(4, "(1,2)(3,4)"))

    def test_klein_group_on_support(self):
        qs = [q.to_permutation(4) for q in quads_on_support(1, 2, 3, 4)]
        assert qs[0] * qs[1] == qs[2]

    def test_distinct_points_required(self):
        with pytest.raises(ValueError):
            quads_on_support(1, 1, 2, 3)


class TestRandomizedInvariants:
    def test_associativity_and_conjugation(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randrange(2, 12)
            g, h, k = (_random_perm(rng, n) for _ in range(3))
            assert (g * h) * k == g * (h * k)
            assert conjugate(conjugate(g, h), k) == conjugate(g, compose(h, k))

    def test_parity_homomorphism(self):
        rng = random.Random(13)
        flip = {"even": 0, "odd": 1}
        for _ in range(1000):
            n = rng.randrange(2, 12)
            g, h = _random_perm(rng, n), _random_perm(rng, n)
            assert flip[parity(g * h)] == flip[parity(g)] ^ flip[parity(h)]

    def test_order_is_least_power_and_lcm(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randrange(2, 12)
            g = _random_perm(rng, n)
            o = order(g)
            assert power(g, o) == identity(n)
            assert all(power(g, k) != identity(n) for k in range(1, o))
            assert o == lcm(*cycle_type(g))

    def test_from_cycles_round_trip(self):
        rng = random.Random(19)
        for _ in range(1000):
            n = rng.randrange(1, 21)
            g = _random_perm(rng, n)
            assert from_cycles(n, cycles(g)) == g
            assert from_cycles(n, g.cycle_string()) == g


def _random_perm(rng, n):
    imgs = list(range(1, n + 1))
    rng.shuffle(imgs)
    return Permutation(imgs)
