"""Tests for smallcovers.counts"""
import concurrent.futures


import pytest


from smallcovers import counts
from smallcovers.errors import CapExceededError, ConsistencyError, DimensionError


class TestLabeledDags:
    @staticmethod
    def test_table():
        assert [counts.r_labeled(n) for n in range(len(counts.LABELED_DAG_TABLE))] == list(counts.LABELED_DAG_TABLE)

    @staticmethod
    def test_negative():
        with pytest.raises(DimensionError):
            counts.r_labeled(-1)

    @staticmethod
    def test_memo_grows_on_demand():
        table = counts.LabeledDagTable()
        assert len(table) == 1
        assert table[5] == 29281
        assert len(table) == 6
        assert table[3] == 25
        assert len(table) == 6

    @staticmethod
    def test_concurrent_readers():
        table = counts.LabeledDagTable()
        with concurrent.futures.ThreadPoolExecutor(max_workers=4) as executor:
            values = list(executor.map(table.__getitem__, [7, 3, 6, 7, 0, 5]))

        assert values == [1138779265, 25, 3781503, 1138779265, 1, 29281]


class TestGroups:
    @staticmethod
    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 6), (3, 168), (4, 20160)])
    def test_gl2_order(n, expected):
        assert counts.gl2_order(n) == expected

    @staticmethod
    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 2), (2, 8), (3, 48)])
    def test_cube_symmetry_order(n, expected):
        assert counts.cube_symmetry_order(n) == expected

    @staticmethod
    def test_exact_quotient():
        assert counts.exact_quotient(4200, 168, "cf") == 25
        with pytest.raises(ConsistencyError):
            counts.exact_quotient(10, 3, "ten")


class TestEquivariant:
    @staticmethod
    def test_table():
        computed = [counts.q_equivariant(n) for n in range(len(counts.EQUIVARIANT_CLASS_TABLE))]
        assert computed == list(counts.EQUIVARIANT_CLASS_TABLE)

    @staticmethod
    @pytest.mark.parametrize(
        "n, k, expected", [(0, 0, 1), (2, 0, 18), (2, 1, 12), (2, 2, 6), (3, 0, 4200), (3, 1, 2016), (3, 2, 672)]
    )
    def test_fixed_set_formula(n, k, expected):
        assert counts.fixed_set_formula(n, k) == expected

    @staticmethod
    @pytest.mark.parametrize("n, k", [(2, 3), (2, -1)])
    def test_fixed_set_formula_range(n, k):
        with pytest.raises(DimensionError):
            counts.fixed_set_formula(n, k)

    @staticmethod
    @pytest.mark.parametrize("n", range(6))
    def test_burnside_matches_closed_form(n):
        sizes = counts.burnside_fixed_sizes(n)
        assert len(sizes) == counts.cube_symmetry_order(n)
        assert counts.burnside(sizes, counts.cube_symmetry_order(n)) == counts.q_equivariant(n)

    @staticmethod
    def test_burnside_rejects():
        with pytest.raises(DimensionError):
            counts.burnside([1], 0)

        with pytest.raises(ConsistencyError):
            counts.burnside([1, 2], 2)


class TestProducts:
    @staticmethod
    def test_dj_weight():
        assert counts.dj_weight((1, 2), (0, 1)) == 3
        assert counts.dj_weight((2, 3), (1, 1)) == 21
        assert counts.dj_weight((2, 3), (0, 0)) == 1

    @staticmethod
    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_intervals_give_labeled_dags(size):
        assert counts.dj_product(*(1,) * size) == counts.r_labeled(size)

    @staticmethod
    @pytest.mark.parametrize("dims", [(1, 1), (1, 2), (2, 2), (3, 5), (4, 1)])
    def test_pair(dims):
        assert counts.dj_product(*dims) == counts.dj_product_pair(*dims)

    @staticmethod
    @pytest.mark.parametrize("dims", [(1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 1, 1), (4, 2, 1)])
    def test_triple(dims):
        assert counts.dj_product(*dims) == counts.dj_product_triple(*dims)

    @staticmethod
    def test_known_values():
        assert counts.dj_product(1, 2) == 5
        assert counts.dj_product(2, 2) == 7
        assert counts.dj_product_triple(2, 2, 2) == 289
        assert counts.dj_product(5) == 1

    @staticmethod
    @pytest.mark.parametrize("dims", [(), (0,), (2, 0)])
    def test_invalid(dims):
        with pytest.raises(DimensionError):
            counts.dj_product(*dims)

    @staticmethod
    def test_cap():
        with pytest.raises(CapExceededError):
            counts.dj_product(*(1,) * 6)


class TestUnlabeledBound:
    @staticmethod
    def test_table():
        assert [counts.t_upper_bound(n) for n in range(8)] == list(counts.UNLABELED_DAG_TABLE)

    @staticmethod
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_computed(n):
        assert counts.t_upper_bound(n, compute=True) == counts.UNLABELED_DAG_TABLE[n]

    @staticmethod
    def test_caps():
        with pytest.raises(CapExceededError):
            counts.t_upper_bound(6, compute=True)

        with pytest.raises(CapExceededError):
            counts.t_upper_bound(8)

    @staticmethod
    def test_disagreement(monkeypatch):
        monkeypatch.setattr(counts, "UNLABELED_DAG_TABLE", (1, 1, 2, 7))
        with pytest.raises(ConsistencyError):
            counts.t_upper_bound(3, compute=True)
