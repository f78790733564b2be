"""Tests for smallcovers.schema.symmetries"""
import itertools


import pydantic
import pytest


from smallcovers.gf2 import Perm
from smallcovers.schema.symmetries import CubeSymmetry


class TestCubeSymmetry:
    @staticmethod
    def test_identity():
        identity = CubeSymmetry.identity(3)
        assert identity.facet_map() == (0, 1, 2, 3, 4, 5)
        assert identity.mu == Perm.identity(3)
        assert identity.reflection_count == 0

    @staticmethod
    def test_reflection_swaps_a_pair():
        chi = CubeSymmetry.from_reflections(3, [1])
        assert chi.facet_map() == (0, 4, 2, 3, 1, 5)
        assert chi.reflection_count == 1

    @staticmethod
    def test_permutation_moves_pairs_together():
        symmetry = CubeSymmetry(perm=(1, 2, 0), reflections=(0, 0, 0))
        assert symmetry.facet_map() == (1, 2, 0, 4, 5, 3)

    @staticmethod
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_all(n):
        symmetries = list(CubeSymmetry.all(n))
        assert len(symmetries) == 2 ** n * len(list(itertools.permutations(range(n))))
        assert len(set(symmetries)) == len(symmetries)
        assert symmetries[0] == CubeSymmetry.identity(n)

    @staticmethod
    def test_facet_maps_are_distinct_bijections():
        maps = [symmetry.facet_map() for symmetry in CubeSymmetry.all(3)]
        assert len(set(maps)) == 48
        assert all(sorted(facet_map) == list(range(6)) for facet_map in maps)

    @staticmethod
    def test_product_composes_facet_maps():
        symmetries = list(CubeSymmetry.all(2))
        for left, right in itertools.product(symmetries, repeat=2):
            product = (left * right).facet_map()
            assert product == tuple(left.facet_map()[image] for image in right.facet_map())

    @staticmethod
    def test_group_identity_and_closure():
        symmetries = set(CubeSymmetry.all(2))
        identity = CubeSymmetry.identity(2)
        for symmetry in symmetries:
            assert symmetry * identity == symmetry
            assert identity * symmetry == symmetry
            assert any(symmetry * other == identity for other in symmetries)

    @staticmethod
    def test_mismatched_sizes():
        with pytest.raises(ValueError):
            CubeSymmetry.identity(2) * CubeSymmetry.identity(3)

    @staticmethod
    @pytest.mark.parametrize(
        "perm, reflections", [((0, 0), (0, 0)), ((0, 1), (0,)), ((0, 1), (0, 2)), ((1, 2), (0, 0))]
    )
    def test_invalid(perm, reflections):
        with pytest.raises(pydantic.ValidationError):
            CubeSymmetry(perm=perm, reflections=reflections)
