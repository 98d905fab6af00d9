import itertools
import random

import pytest

from binact.action import (CosetAction, UnionAction, coset_action, fixed_set,
                           fixed_set_subgroup, fixity, max_fixity_classes,
                           natural_action, point_stabilizer, regular_action,
                           trivial_action)
from binact.config import BoundExceeded, Bounds
from binact.group import PermGroup
from binact.perm import from_cycles


def P(degree, text):
    return from_cycles(degree, text)


@pytest.fixture(scope="module")
def A5_mod():
    return PermGroup.alternating(5)


class TestCosetAction:
    def test_a5_mod_a4_is_natural(self, A5):
        A4sub = PermGroup(5, [P(5, "(1,2,3)"), P(5, "(1,2)(3,4)")])
        act = coset_action(A5, A4sub)
        assert act.npoints == 5
        # permutation isomorphic to the natural action: some point
        # relabeling carries the image onto A5 itself
        img = set(act.image_of(g) for g in A5.elements())
        nat = set(A5.elements())
        found = False
        for relab in itertools.permutations(range(1, 6)):
            table = dict(zip(range(1, 6), relab))
            relabeled = set()
            for e in img:
                imgs = [0] * 5
                for p in range(1, 6):
                    imgs[table[p] - 1] = table[e.apply(p)]
                from binact.perm import Permutation
                relabeled.add(Permutation(imgs))
            if relabeled == nat:
                found = True
                break
        assert found

    def test_whole_group_single_point(self, A6):
        assert trivial_action(A6).npoints == 1

    def test_regular_s3(self, S3):
        act = regular_action(S3)
        assert act.npoints == 6
        assert act.is_semiregular()

    def test_stabilizer_of_base_point_is_subgroup(self, A6):
        H = PermGroup(6, [P(6, "(1,2)(3,4)"), P(6, "(1,2,3)")])
        act = coset_action(A6, H)
        assert act.npoints == A6.order() // H.order()
        stab = point_stabilizer(act, 1)
        assert set(stab.elements()) == set(H.elements())

    def test_action_is_homomorphism(self, A6):
        H = PermGroup(6, [P(6, "(1,2,3)")])
        act = coset_action(A6, H)
        rng = random.Random(41)
        for _ in range(200):
            g, h = A6.random_element(rng), A6.random_element(rng)
            p = rng.randrange(1, act.npoints + 1)
            assert act.apply(act.apply(p, g), h) == act.apply(p, g * h)

    def test_transitive(self, A5):
        H = PermGroup(5, [P(5, "(1,2,3)")])
        assert coset_action(A5, H).is_transitive()

    def test_not_subgroup_errors(self, A5):
        with pytest.raises(ValueError):
            coset_action(A5, PermGroup(5, [P(5, "(1,2)")]))

    def test_index_bound(self, A9):
        small = Bounds(coset_index=5)
        with pytest.raises(BoundExceeded):
            coset_action(A9, PermGroup.trivial(9), small)


class TestFixity:
    def test_natural_quad_fixity(self, A5):
        assert fixity(natural_action(A5), P(5, "(1,2)(3,4)")) == 1

    def test_natural_a9_three_cycle(self, A9):
        act = natural_action(A9)
        assert fixity(act, P(9, "(1,2,3)")) == 6
        assert fixed_set(act, P(9, "(1,2,3)")) == frozenset(range(4, 10))

    def test_coset_fixity(self, A5):
        A4sub = PermGroup(5, [P(5, "(1,2,3)"), P(5, "(1,2)(3,4)")])
        act = coset_action(A5, A4sub)
        assert fixity(act, P(5, "(1,2,3)")) == 2

    def test_fixed_set_subgroup_is_intersection(self, A6):
        act = natural_action(A6)
        K = PermGroup(6, [P(6, "(1,2)(3,4)"), P(6, "(1,3)(2,4)")])
        expected = frozenset.intersection(
            *[fixed_set(act, g) for g in K.generators])
        assert fixed_set_subgroup(act, K) == expected == frozenset({5, 6})


class TestMaxFixity:
    def test_a6_p2_quads(self, A6):
        classes = max_fixity_classes(natural_action(A6), 2)
        assert [c.representative for c in classes] == [P(6, "(1,2)(3,4)")]
        assert fixity(natural_action(A6), classes[0].representative) == 2

    def test_a9_p3_three_cycles(self, A9):
        act = natural_action(A9)
        classes = max_fixity_classes(act, 3)
        assert [c.representative for c in classes] == [P(9, "(1,2,3)")]
        assert fixity(act, classes[0].representative) == 6

    def test_a9_p2_quads_beat_four_transpositions(self, A9):
        act = natural_action(A9)
        classes = max_fixity_classes(act, 2)
        assert [c.representative for c in classes] == [P(9, "(1,2)(3,4)")]
        assert fixity(act, classes[0].representative) == 5
        assert fixity(act, P(9, "(1,2)(3,4)(5,6)(7,8)")) == 1

    def test_error_when_p_does_not_divide(self, A4):
        with pytest.raises(ValueError):
            max_fixity_classes(natural_action(A4), 5)

    def test_p_element_variant(self, S4):
        act = natural_action(S4)
        wide = max_fixity_classes(act, 2, element_kind="p-element")
        orders = {c.element_order() for c in wide}
        assert orders <= {2, 4}


class TestUnion:
    def test_union_points(self, S4):
        u = UnionAction([natural_action(S4), natural_action(S4)])
        assert u.npoints == 8
        assert len(u.orbits()) == 2

    def test_union_apply_blocks(self, S4):
        u = UnionAction([natural_action(S4), trivial_action(S4)])
        g = P(4, "(1,2,3)")
        assert u.apply(1, g) == 2
        assert u.apply(5, g) == 5

    def test_mixed_groups_rejected(self, S4, S3):
        with pytest.raises(ValueError):
            UnionAction([natural_action(S4), natural_action(S3)])
