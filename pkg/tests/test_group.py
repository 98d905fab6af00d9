import random

import pytest

from binact.config import BoundExceeded
from binact.group import (PermGroup, class_of, centralizer, conjugacy_classes,
                          conjugator_in, normalizer, rational_class, same_class,
                          subgroup_closure, subgroups_up_to_conjugacy)
from binact.perm import from_cycles, identity

from helpers import brute_classes, brute_subgroups, naive_closure


def P(degree, text):
    return from_cycles(degree, text)


class TestGenerate:
    def test_a5_order_matches_closure(self):
        gens = [P(5, "(1,2,3,4,5)"), P(5, "(1,2,3)")]
        G = PermGroup(5, gens)
        assert G.order() == 60 == len(naive_closure(5, gens))

    def test_trivial(self):
        G = PermGroup(4, [])
        assert G.order() == 1
        assert G.contains(identity(4))

    def test_s6_order_matches_closure(self):
        gens = [P(6, "(1,2)"), P(6, "(1,2,3,4,5,6)")]
        G = PermGroup(6, gens)
        assert G.order() == 720 == len(naive_closure(6, gens))

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            PermGroup(0, [])

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            PermGroup(4, [P(5, "(1,2)")])


class TestNamedGroups:
    def test_alternating_orders(self):
        assert PermGroup.alternating(5).order() == 60
        assert PermGroup.alternating(9).order() == 181440

    def test_symmetric_one(self):
        assert PermGroup.symmetric(1).order() == 1

    def test_chain_matches_closure_for_random_subgroups(self):
        rng = random.Random(23)
        for _ in range(50):
            n = rng.randrange(2, 7)
            gens = []
            for _ in range(rng.randrange(1, 4)):
                imgs = list(range(1, n + 1))
                rng.shuffle(imgs)
                from binact.perm import Permutation
                gens.append(Permutation(imgs))
            assert PermGroup(n, gens).order() == len(naive_closure(n, gens))


class TestMembership:
    def test_parity_exclusion(self, A4):
        assert not A4.contains(P(4, "(1,2)"))
        assert A4.contains(P(4, "(1,2)(3,4)"))

    def test_order_a6(self, A6):
        assert A6.order() == 360

    def test_elements_guarded(self, A9):
        with pytest.raises(BoundExceeded):
            A9.elements()


class TestConjugacyClasses:
    def test_s4_class_sizes_vs_brute(self, S4):
        sizes = sorted(c.size for c in conjugacy_classes(S4))
        brute = sorted(len(c) for c in brute_classes(naive_closure(4, S4.generators)))
        assert sizes == brute == [1, 3, 6, 6, 8]

    def test_a4_three_cycles_split(self, A4):
        sizes = sorted(c.size for c in conjugacy_classes(A4))
        assert sizes == [1, 3, 4, 4]

    def test_a5_quads_single_class(self, A5):
        cls = class_of(A5, P(5, "(1,2)(3,4)"))
        assert cls.size == 15 == len(cls.elements())

    def test_natural_path_agrees_with_generic_up_to_a8(self):
        # splitting rule vs explicit conjugation orbits
        for n in range(4, 9):
            G = PermGroup.alternating(n)
            natural = conjugacy_classes(G)
            elems = G.elements()
            brute = brute_classes(elems)
            assert sorted(len(c) for c in brute) == sorted(c.size for c in natural)
            for c in natural:
                match = [b for b in brute if c.representative in b]
                assert len(match) == 1 and len(match[0]) == c.size

    def test_class_sizes_divide_group_order(self, A6):
        for c in conjugacy_classes(A6):
            assert A6.order() % c.size == 0

    def test_classes_partition(self, S4):
        classes = conjugacy_classes(S4)
        union = set()
        for c in classes:
            elems = set(c.elements())
            assert not (union & elems)
            union |= elems
        assert len(union) == 24

    def test_conjugator_search_on_samples(self, A6):
        rng = random.Random(31)
        for cls in conjugacy_classes(A6):
            sample = list(cls.elements())
            rng.shuffle(sample)
            for g in sample[:20]:
                x = conjugator_in(A6, cls.representative, g)
                assert x is not None and x in A6
                assert cls.representative.conjugate(x) == g


class TestRationalClasses:
    def test_a4_rational_three_cycles(self, A4):
        cls = rational_class(A4, P(4, "(1,2,3)"))
        assert len(cls.elements()) == 8
        assert cls.rational

    def test_involutions_rational_is_ordinary(self, A6):
        g = P(6, "(1,2)(3,4)")
        assert (set(rational_class(A6, g).elements())
                == set(class_of(A6, g).elements()))

    def test_s3_five_cycle_inverse_closed(self, S3):
        cls = rational_class(S3, P(3, "(1,2,3)"))
        assert set(cls.elements()) == {P(3, "(1,2,3)"), P(3, "(1,3,2)")}

    def test_closed_under_coprime_powers(self, A5):
        cls = rational_class(A5, P(5, "(1,2,3,4,5)"))
        members = cls.element_set()
        for g in list(members)[:10]:
            for k in (2, 3, 4):
                assert g ** k in members


class TestCentralizerNormalizer:
    def test_normalizer_five_cycle(self, S5):
        N = normalizer(S5, PermGroup(5, [P(5, "(1,2,3,4,5)")]))
        assert N.order() == 20
        # defining property, member by member
        h = P(5, "(1,2,3,4,5)")
        powers = {h ** k for k in range(1, 6)}
        for g in N.elements():
            assert h.conjugate(g) in powers

    def test_centralizer_identity(self, A5):
        assert centralizer(A5, identity(5)).order() == 60

    def test_paper_normalizer_intersection_order_4(self, S5):
        h1 = P(5, "(1,2,3,4,5)")
        h2 = h1.conjugate(P(5, "(3,4,5)"))
        N1 = normalizer(S5, PermGroup(5, [h1]))
        N2 = normalizer(S5, PermGroup(5, [h2]))
        assert N1.intersection(N2).order() == 4

    def test_centralizer_defining_property(self, S4):
        g = P(4, "(1,2)(3,4)")
        C = centralizer(S4, g)
        for x in C.elements():
            assert x.commutes_with(g)
        assert all(x in C for x in S4.elements() if x.commutes_with(g))


class TestSubgroupClosure:
    def test_klein_closure(self, A6):
        K = subgroup_closure(A6, [P(6, "(1,2)(3,4)"), P(6, "(1,3)(2,4)")])
        assert K.order() == 4

    def test_empty_closure(self, A6):
        assert subgroup_closure(A6, []).order() == 1

    def test_quads_generate_a6(self, A6):
        quads = class_of(A6, P(6, "(1,2)(3,4)")).elements()
        assert subgroup_closure(A6, quads).order() == 360

    def test_outside_element_errors(self, A4):
        with pytest.raises(ValueError):
            subgroup_closure(A4, [P(4, "(1,2)")])


class TestSubgroupEnumeration:
    def test_s3_vs_brute(self, S3):
        reps = subgroups_up_to_conjugacy(S3)
        assert len(reps) == 4
        brute = brute_subgroups(naive_closure(3, S3.generators), 3)
        # 6 subgroups total, 4 up to conjugacy
        assert len(brute) == 6

    def test_a4_five_classes(self, A4):
        reps = subgroups_up_to_conjugacy(A4)
        assert [H.order() for H in reps] == [1, 2, 3, 4, 12]
        brute = brute_subgroups(naive_closure(4, A4.generators), 4)
        assert len(brute) == 10

    def test_a6_has_22_classes(self, A6):
        reps = subgroups_up_to_conjugacy(A6)
        assert len(reps) == 22
        # representatives pairwise non-conjugate
        for i, H in enumerate(reps):
            for K in reps[i + 1:]:
                if H.order() == K.order():
                    assert A6.is_conjugate_subgroup(H, K) is None

    def test_bound_guard(self):
        with pytest.raises(BoundExceeded):
            subgroups_up_to_conjugacy(PermGroup.symmetric(7))


class TestSameClass:
    def test_split_halves_not_conjugate(self, A5):
        s = P(5, "(1,2,3,4,5)")
        partner = s.conjugate(P(5, "(1,2)"))
        assert not same_class(A5, s, partner)
        assert same_class(A5, s, s ** 4 if same_class(A5, s, s ** 4) else s)

    def test_same_class_random(self, A6):
        rng = random.Random(37)
        for _ in range(50):
            g = A6.random_element(rng)
            x = A6.random_element(rng)
            assert same_class(A6, g, g.conjugate(x))
