"""Tests for smallcovers.covers"""
import itertools


import pydantic
import pytest


from smallcovers import covers
from smallcovers.counts import dj_product, dj_weight, fixed_set_formula, gl2_order, r_labeled
from smallcovers.dags import Digraph, count_unlabeled_dags, enumerate_dags, outdegrees
from smallcovers.errors import CapExceededError, CycleError, DimensionError, MembershipError
from smallcovers.gf2 import (
    BitMatrix,
    Perm,
    all_principal_minors_one,
    conjugate_by_perm,
    has_positive_spectrum,
    is_unipotent_upper,
    mul_gf2,
)
from smallcovers.schema.polytopes import Cube, SimplexProduct
from smallcovers.schema.symmetries import CubeSymmetry
from smallcovers.util.partition import PartitionPlan


def all_matrices(n_rows, n_cols):
    for rows in itertools.product(range(1 << n_cols), repeat=n_rows):
        yield BitMatrix(rows, n_cols)


def with_unit(reduced, n):
    return covers.CharMatrix(spec=Cube(dimension=n), mat=BitMatrix.identity(n).augment(reduced))


def compositions(total):
    if total == 0:
        yield ()
        return

    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


SMALL_PRODUCTS = [dims for total in range(1, 5) for dims in compositions(total)] + [(1, 2, 2), (1, 1, 3)]


def within_factor_swaps(spec):
    for factor, (dim, offset) in enumerate(zip(spec.factors, spec.offsets)):
        for own in range(offset, offset + dim):
            order = list(range(spec.facet_count))
            order[own], order[spec.n + factor] = order[spec.n + factor], order[own]
            yield order


@pytest.fixture(scope="module")
def cube_2():
    return covers.enumerate_cube_characteristic(2)


@pytest.fixture(scope="module")
def cube_3():
    return covers.enumerate_cube_characteristic(3)


@pytest.fixture(scope="module")
def mn_3():
    return covers.enumerate_mn(3).cached_list


@pytest.fixture(scope="module")
def dags_5():
    return enumerate_dags(5).cached_list


@pytest.fixture(scope="module")
def mn_5():
    return covers.enumerate_mn(5).cached_list


class TestVertices:
    @staticmethod
    def test_square():
        assert covers.vertices(Cube(dimension=2)) == [(0, 1), (0, 3), (1, 2), (2, 3)]

    @staticmethod
    def test_triangle():
        assert sorted(covers.vertices(SimplexProduct(dims=(2,)))) == [(0, 1), (0, 2), (1, 2)]

    @staticmethod
    def test_product_vertex_count():
        assert len(covers.vertices(SimplexProduct(dims=(1, 2, 3)))) == 2 * 3 * 4
        assert len(covers.vertices(Cube(dimension=4))) == 16

    @staticmethod
    def test_first_facets_meet():
        assert tuple(range(5)) in covers.vertices(SimplexProduct(dims=(2, 3)))


class TestCharacteristic:
    @staticmethod
    def test_is_characteristic():
        spec = Cube(dimension=2)
        assert covers.is_characteristic(BitMatrix.from_lists([[1, 0, 1, 0], [0, 1, 0, 1]]), spec)
        assert covers.is_characteristic(BitMatrix.from_lists([[1, 0, 1, 1], [0, 1, 0, 1]]), spec)
        assert not covers.is_characteristic(BitMatrix.from_lists([[1, 0, 1, 0], [0, 1, 1, 0]]), spec)
        with pytest.raises(DimensionError):
            covers.is_characteristic(BitMatrix.identity(2), spec)

    @staticmethod
    def test_char_matrix_validation():
        spec = Cube(dimension=2)
        char = covers.CharMatrix(spec=spec, mat=BitMatrix.from_lists([[1, 0, 1, 1], [0, 1, 0, 1]]))
        assert char.spec == spec

        with pytest.raises(pydantic.ValidationError):
            covers.CharMatrix(spec=spec, mat=BitMatrix.from_lists([[1, 0, 0, 1], [0, 1, 0, 1]]))

        with pytest.raises(pydantic.ValidationError):
            covers.CharMatrix(spec=spec, mat=BitMatrix.identity(2))

    @staticmethod
    def test_spec_union():
        char = covers.CharMatrix(spec=SimplexProduct(dims=(2,)), mat=BitMatrix.from_lists([[1, 0, 1], [0, 1, 1]]))
        assert isinstance(char.spec, SimplexProduct)

    @staticmethod
    @pytest.mark.parametrize("dims", SMALL_PRODUCTS)
    def test_product_check_matches_vertex_condition(dims):
        spec = SimplexProduct(dims=dims)
        unit = BitMatrix.identity(spec.n)
        for matrix in all_matrices(spec.n, spec.l):
            expected = covers.is_characteristic(unit.augment(matrix), spec)
            assert covers.nonsingular_product_check(matrix, spec) is expected

    @staticmethod
    def test_product_check_matches_vertex_condition_on_cube_4():
        spec = Cube(dimension=4)
        unit = BitMatrix.identity(4)
        for rows in itertools.product(range(16), repeat=4):
            if all((row >> index) & 1 for index, row in enumerate(rows)):
                matrix = BitMatrix(rows, 4)
                expected = covers.is_characteristic(unit.augment(matrix), spec)
                assert covers.nonsingular_product_check(matrix, spec) is expected

    @staticmethod
    @pytest.mark.parametrize("dims", [(1, 2), (2, 1), (2, 2), (1, 1, 2)])
    def test_facets_of_one_simplex_are_interchangeable(dims):
        spec = SimplexProduct(dims=dims)
        unit = BitMatrix.identity(spec.n)
        swaps = list(within_factor_swaps(spec))
        for matrix in all_matrices(spec.n, spec.l):
            full = unit.augment(matrix)
            columns = full.columns()
            expected = covers.is_characteristic(full, spec)
            for order in swaps:
                swapped = BitMatrix.from_columns([columns[column] for column in order], spec.n)
                assert covers.is_characteristic(swapped, spec) is expected

    @staticmethod
    def test_product_check_on_cube_is_minor_check():
        spec = Cube(dimension=3)
        for matrix in list(all_matrices(3, 3))[::3]:
            assert covers.nonsingular_product_check(matrix, spec) is all_principal_minors_one(matrix)

    @staticmethod
    def test_product_check_shape():
        with pytest.raises(DimensionError):
            covers.nonsingular_product_check(BitMatrix.identity(3), SimplexProduct(dims=(1, 2)))


class TestRefine:
    @staticmethod
    def test_refine():
        spec = Cube(dimension=2)
        left = BitMatrix.from_lists([[1, 1], [0, 1]])
        reduced = BitMatrix.from_lists([[1, 1], [0, 1]])
        char = covers.CharMatrix(spec=spec, mat=left.augment(mul_gf2(left, reduced)))
        assert covers.refine(char).mat == reduced

    @staticmethod
    def test_refined_forms(cube_2, cube_3):
        for found, n in ((cube_2, 2), (cube_3, 3)):
            refined = {covers.refine(char).mat for char in found}
            assert len(refined) == r_labeled(n)
            assert all(all_principal_minors_one(matrix) for matrix in refined)

    @staticmethod
    def test_characteristic_refines_to_itself():
        spec = SimplexProduct(dims=(1, 2))
        for reduced in covers.enumerate_reduced_product(spec).cached_list:
            char = reduced.characteristic()
            assert covers.is_characteristic(char.mat, spec)
            assert covers.refine(char).mat == reduced.mat

    @staticmethod
    def test_reduced_matrix_validation():
        spec = SimplexProduct(dims=(1, 1))
        assert covers.ReducedMatrix(spec=spec, mat=BitMatrix.from_lists([[1, 1], [0, 1]])).mat.n_cols == 2
        with pytest.raises(pydantic.ValidationError):
            covers.ReducedMatrix(spec=spec, mat=BitMatrix.from_lists([[1, 1], [1, 1]]))


class TestMn:
    @staticmethod
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 25), (4, 543)])
    def test_count_mn(n, expected):
        assert covers.count_mn(n) == expected

    @staticmethod
    @pytest.mark.parametrize("dims", SMALL_PRODUCTS)
    def test_closed_form_matches_enumeration(dims):
        assert covers.count_reduced_product(SimplexProduct(dims=dims)) == dj_product(*dims)

    @staticmethod
    @pytest.mark.parametrize("dims", [(1, 1, 2), (1, 2, 2), (1, 2, 3)])
    def test_count_ignores_factor_order(dims):
        found = {covers.count_reduced_product(SimplexProduct(dims=order)) for order in itertools.permutations(dims)}
        assert found == {dj_product(*dims)}

    @staticmethod
    def test_count_is_plan_independent():
        for parts in (2, 5, 13):
            assert covers.count_mn(4, plan=PartitionPlan.split(covers.mn_candidate_count(4), parts)) == 543

    @staticmethod
    def test_enumerate_mn(mn_3):
        assert len(mn_3) == 25
        assert len(set(mn_3)) == 25
        assert all(all_principal_minors_one(matrix) for matrix in mn_3)
        assert mn_3[0] == BitMatrix.identity(3)

    @staticmethod
    def test_caps():
        with pytest.raises(DimensionError):
            covers.enumerate_mn(0)

        with pytest.raises(CapExceededError):
            covers.enumerate_mn(6)

        with pytest.raises(CapExceededError):
            covers.count_mn(7, allow_long_runs=True)


class TestBijection:
    @staticmethod
    def test_phi():
        graph = Digraph(3, [(0, 1), (2, 1)])
        assert covers.phi(graph).to_string() == "110,010,011"

    @staticmethod
    def test_phi_rejects_cycles():
        with pytest.raises(CycleError):
            covers.phi(Digraph(2, [(0, 1), (1, 0)]))

    @staticmethod
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_phi_is_a_bijection(n):
        graphs = enumerate_dags(n).cached_list
        images = [covers.phi(graph) for graph in graphs]
        assert len(set(images)) == len(graphs)
        assert set(images) == set(covers.enumerate_mn(n).cached_list)
        assert all(covers.phi_inv(image) == graph for graph, image in zip(graphs, images))

    @staticmethod
    def test_five_nodes(dags_5, mn_5):
        assert len(dags_5) == len(mn_5) == r_labeled(5) == 29281
        images = {covers.phi(graph) for graph in dags_5}
        assert len(images) == len(dags_5)
        assert images == set(mn_5)

    @staticmethod
    def test_five_nodes_up_to_relabeling():
        assert count_unlabeled_dags(5) == covers.sn_conjugation_orbit_count(5) == 302

    @staticmethod
    def test_phi_inv_rejects_non_members():
        with pytest.raises(MembershipError):
            covers.phi_inv(BitMatrix.from_lists([[1, 1], [1, 1]]))

        with pytest.raises(MembershipError):
            covers.phi_inv(BitMatrix.from_lists([[1, 0, 1], [0, 1, 1]]))


class TestLemmaNormalForm:
    @staticmethod
    def test_invertible():
        form = covers.lemma_normal_form(BitMatrix.from_lists([[1, 0], [1, 1]]))
        assert form == covers.UnipotentForm(perm=Perm([1, 0]))

    @staticmethod
    def test_cycle():
        matrix = BitMatrix.from_lists([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        form = covers.lemma_normal_form(matrix)
        assert isinstance(form, covers.CycleForm)
        assert conjugate_by_perm(matrix, form.perm).rows == covers.cycle_form_rows(3)

    @staticmethod
    def test_single_singular_entry():
        assert covers.lemma_normal_form(BitMatrix([0], 1)) == covers.CycleForm(perm=Perm.identity(1))

    @staticmethod
    @pytest.mark.parametrize("n, cycles", [(2, 1), (3, 2)])
    def test_exhaustive(n, cycles):
        found = 0
        for matrix in all_matrices(n, n):
            try:
                form = covers.lemma_normal_form(matrix)
            except MembershipError:
                continue

            conjugated = conjugate_by_perm(matrix, form.perm)
            if isinstance(form, covers.CycleForm):
                found += 1
                assert conjugated.rows == covers.cycle_form_rows(n)
            else:
                assert is_unipotent_upper(conjugated)

        assert found == cycles

    @staticmethod
    def test_members_of_m4_are_triangularized():
        members = covers.enumerate_mn(4).cached_list
        assert len(members) == 543
        for matrix in members:
            form = covers.lemma_normal_form(matrix)
            assert isinstance(form, covers.UnipotentForm)
            assert is_unipotent_upper(conjugate_by_perm(matrix, form.perm))
            assert has_positive_spectrum(matrix)

    @staticmethod
    def test_rejects():
        with pytest.raises(MembershipError):
            covers.lemma_normal_form(BitMatrix.from_lists([[0, 1], [1, 1]]))

        with pytest.raises(DimensionError):
            covers.lemma_normal_form(BitMatrix.from_lists([[1, 0, 1], [0, 1, 1]]))


class TestProducts:
    @staticmethod
    @pytest.mark.parametrize(
        "dims, expected",
        [((1,), 1), ((3,), 1), ((1, 1), 3), ((1, 2), 5), ((2, 2), 7), ((1, 1, 1), 25), ((2, 2, 2), 289)],
    )
    def test_count_reduced_product(dims, expected):
        spec = SimplexProduct(dims=dims)
        assert covers.count_reduced_product(spec) == expected
        assert dj_product(*dims) == expected

    @staticmethod
    def test_count_is_plan_independent():
        spec = SimplexProduct(dims=(1, 2, 1))
        expected = covers.count_reduced_product(spec)
        plan = PartitionPlan.split(covers.reduced_candidate_count(spec), 6)
        assert covers.count_reduced_product(spec, plan=plan) == expected
        assert len(covers.enumerate_reduced_product(spec, plan=plan).collect()) == expected

    @staticmethod
    def test_candidates_force_the_diagonal():
        spec = SimplexProduct(dims=(2, 1))
        assert covers.reduced_candidate_count(spec) == 1 << 3

    @staticmethod
    def test_psi():
        spec = SimplexProduct(dims=(1, 2))
        reduced = covers.ReducedMatrix(spec=spec, mat=BitMatrix.from_lists([[1, 0], [1, 1], [0, 1]]))
        assert covers.psi(reduced) == Digraph(2, [(1, 0)])

    @staticmethod
    @pytest.mark.parametrize("dims", SMALL_PRODUCTS)
    def test_psi_fibers(dims):
        spec = SimplexProduct(dims=dims)
        sizes = covers.psi_fiber_sizes(spec)
        graphs = enumerate_dags(len(dims)).cached_list
        assert set(sizes) <= set(graphs)
        for graph in graphs:
            assert sizes.get(graph, 0) == dj_weight(dims, outdegrees(graph))

    @staticmethod
    def test_cap():
        with pytest.raises(CapExceededError):
            covers.count_reduced_product(SimplexProduct(dims=(1,) * 6))


class TestCubeBruteForce:
    @staticmethod
    def test_counts(cube_2, cube_3):
        assert len(covers.enumerate_cube_characteristic(1)) == 1
        assert len(cube_2) == 18
        assert len(cube_3) == 4200
        assert covers.count_cube_dj_bruteforce(2) == 3
        assert covers.count_cube_dj_bruteforce(3) == 25

    @staticmethod
    def test_matrices_are_characteristic(cube_2):
        assert all(covers.is_characteristic(char.mat, char.spec) for char in cube_2)

    @staticmethod
    def test_caps():
        with pytest.raises(DimensionError):
            covers.enumerate_cube_characteristic(0)

        with pytest.raises(CapExceededError):
            covers.count_cube_dj_bruteforce(4)

    @staticmethod
    def test_zero_cube():
        assert covers.CubeCharacteristicCache().get(0) == ((),)
        assert covers.count_cube_dj_bruteforce(0) == 1
        assert covers.fixed_set_size(0, CubeSymmetry.identity(0)) == 1
        assert covers.orbit_count_equivariant_bruteforce(0) == 1
        assert covers.burnside_equivariant_bruteforce(0) == 1

    @staticmethod
    def test_cache():
        cache = covers.CubeCharacteristicCache()
        first = cache.get(2)
        assert cache.get(2) is first
        assert len(first) == 18

    @staticmethod
    def test_over_a_plan():
        plan = PartitionPlan.split(covers.cube_candidate_count(2), 7)
        assert covers.CubeCharacteristicCache().get(2, plan=plan) == covers.CubeCharacteristicCache().get(2)


class TestSymmetries:
    @staticmethod
    def test_preserves_characteristic(cube_2):
        for char in cube_2:
            for symmetry in CubeSymmetry.all(2):
                image = covers.symmetry_apply(char, symmetry)
                assert covers.is_characteristic(image.mat, image.spec)

    @staticmethod
    def test_right_action(cube_2):
        symmetries = list(CubeSymmetry.all(2))
        for char in cube_2[::5]:
            for g, h in itertools.product(symmetries, repeat=2):
                assert covers.symmetry_apply(covers.symmetry_apply(char, g), h).mat == (
                    covers.symmetry_apply(char, g * h).mat
                )

    @staticmethod
    def test_reflection_swaps_opposite_facets():
        char = with_unit(BitMatrix.from_lists([[1, 1], [0, 1]]), 2)
        image = covers.symmetry_apply(char, CubeSymmetry.from_reflections(2, [0]))
        columns = char.mat.columns()
        assert image.mat.columns() == (columns[2], columns[1], columns[0], columns[3])

    @staticmethod
    def test_permutation_conjugates(mn_3):
        for reduced in mn_3[::4]:
            char = with_unit(reduced, 3)
            for perm in Perm.all(3):
                symmetry = CubeSymmetry(perm=perm.mapping, reflections=(0, 0, 0))
                assert covers.refine(covers.symmetry_apply(char, symmetry)).mat == conjugate_by_perm(reduced, perm)

    @staticmethod
    def test_dimension_mismatch(cube_2):
        with pytest.raises(DimensionError):
            covers.symmetry_apply(cube_2[0], CubeSymmetry.identity(3))

    @staticmethod
    @pytest.mark.parametrize("n, k", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)])
    def test_fixed_set_size(n, k, cube_3):
        size = covers.fixed_set_size(n, CubeSymmetry.from_reflections(n, range(k)))
        assert size == fixed_set_formula(n, k)
        assert size == gl2_order(n) * 2 ** (k * (n - k)) * r_labeled(n - k)

    @staticmethod
    def test_fixed_set_depends_only_on_reflection_count(cube_3):
        for indices in ([0], [1], [2]):
            assert covers.fixed_set_size(3, CubeSymmetry.from_reflections(3, indices)) == 2016

    @staticmethod
    def test_moving_a_pair_fixes_nothing(cube_3):
        assert covers.fixed_set_size(3, CubeSymmetry(perm=(1, 0, 2), reflections=(0, 0, 0))) == 0

    @staticmethod
    def test_fixed_set_dimension_mismatch():
        with pytest.raises(DimensionError):
            covers.fixed_set_size(2, CubeSymmetry.identity(3))

    @staticmethod
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 6), (3, 259)])
    def test_equivariant_orbits(n, expected, cube_3):
        assert covers.orbit_count_equivariant_bruteforce(n) == expected
        assert covers.burnside_equivariant_bruteforce(n) == expected


class TestConjugationOrbits:
    @staticmethod
    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 6), (4, 31)])
    def test_sn_conjugation_orbit_count(n, expected):
        assert covers.sn_conjugation_orbit_count(n) == expected

    @staticmethod
    def test_plan_independent():
        plan = PartitionPlan.split(covers.mn_candidate_count(4), 10)
        assert covers.sn_conjugation_orbit_count(4, plan=plan) == 31

    @staticmethod
    def test_cap():
        with pytest.raises(CapExceededError):
            covers.sn_conjugation_orbit_count(6)
