"""Tests for smallcovers.util.partition"""
import functools
import pickle


import pytest


from smallcovers.util import partition


def _evens(mask_range):
    return [index for index in mask_range.indices() if index % 2 == 0]


class TestMaskRange:
    @staticmethod
    def test_size():
        assert partition.MaskRange(3, 8).size == 5
        assert partition.MaskRange(4, 4).size == 0

    @staticmethod
    def test_indices():
        assert list(partition.MaskRange(2, 5).indices()) == [2, 3, 4]

    @staticmethod
    def test_pickle():
        mask_range = partition.MaskRange(1, 1 << 40)
        assert pickle.loads(pickle.dumps(mask_range)) == mask_range


class TestPartitionPlan:
    @staticmethod
    @pytest.mark.parametrize("total, parts", [(0, 1), (1, 4), (10, 3), (16, 4), (1 << 20, 7)])
    def test_split_tiles(total, parts):
        plan = partition.PartitionPlan.split(total, parts)
        assert plan.total == total
        assert len(plan) == max(1, min(parts, total))
        position = 0
        for mask_range in plan:
            assert mask_range.start == position
            position = mask_range.stop

        assert position == total
        sizes = [mask_range.size for mask_range in plan]
        assert max(sizes) - min(sizes) <= 1

    @staticmethod
    def test_paged():
        plan = partition.PartitionPlan.paged(10, page_size=4)
        assert list(plan) == [partition.MaskRange(0, 4), partition.MaskRange(4, 8), partition.MaskRange(8, 10)]

    @staticmethod
    def test_rejects_gaps():
        with pytest.raises(ValueError):
            partition.PartitionPlan(10, [partition.MaskRange(0, 4), partition.MaskRange(5, 10)])

    @staticmethod
    def test_rejects_short_cover():
        with pytest.raises(ValueError):
            partition.PartitionPlan(10, [partition.MaskRange(0, 4)])


class TestPartitionedStream:
    @pytest.fixture()
    def stream(self):
        return partition.PartitionedStream(_evens, partition.PartitionPlan.paged(20, page_size=3))

    def test_iteration_order(self, stream):
        assert list(stream) == list(range(0, 20, 2))

    def test_cached_list(self, stream):
        first = stream.cached_list
        assert first == list(range(0, 20, 2))
        assert stream.cached_list is first
        assert stream.get_cached_list(overwrite=True) == first

    def test_collect(self, stream):
        assert next(stream) == 0
        assert stream.collect() == list(range(2, 20, 2))
        assert list(stream) == []

    def test_collect_with_mapper(self, stream):
        calls = []

        def mapper(worker, items):
            calls.append(len(items))
            return map(worker, items)

        assert stream.collect(mapper) == list(range(0, 20, 2))
        assert calls == [7]


def test_map_plan():
    plan = partition.PartitionPlan.split(100, 5)
    worker = functools.partial(lambda offset, mask_range: mask_range.size + offset, 1)
    assert partition.map_plan(worker, plan) == [21] * 5
