"""Used for splitting exhaustive searches into disjoint candidate ranges."""
import typing


from smallcovers.util.logging import LoggingClass


class MaskRange(typing.NamedTuple):
    """A half-open range `[start, stop)` of candidate indices."""

    start: int
    stop: int

    @property
    def size(self) -> int:
        """The number of candidates in this range."""
        return max(0, self.stop - self.start)

    def indices(self) -> range:
        """Get the candidate indices of this range in ascending order."""
        return range(self.start, self.stop)


class PartitionPlan:
    """
    An ordered set of disjoint ranges that together cover `[0, total)`.

    Attributes:
        total (int): The number of candidates covered.
        ranges (tuple): The `smallcovers.util.partition.MaskRange` objects in ascending order.
    """

    __slots__ = ("total", "ranges")

    def __init__(self, total: int, ranges: typing.Sequence[MaskRange]) -> None:
        """
        Args:
            total (int): The number of candidates covered.
            ranges (sequence): Contiguous ascending ranges.

        Raises:
            ValueError: If the ranges don't tile `[0, total)`.
        """
        position = 0
        for mask_range in ranges:
            if mask_range.start != position or mask_range.stop < mask_range.start:
                raise ValueError(f"Ranges must tile [0, {total}) in order, got {list(ranges)}")

            position = mask_range.stop

        if position != total:
            raise ValueError(f"Ranges cover [0, {position}) instead of [0, {total})")

        self.total = total
        self.ranges = tuple(ranges)

    @classmethod
    def split(cls, total: int, parts: int = 1) -> "PartitionPlan":
        """
        Split `[0, total)` into at most `parts` contiguous ranges of near-equal size.

        Args:
            total (int): The number of candidates.
            parts (int, optional): The requested number of ranges.

        Returns:
            `smallcovers.util.partition.PartitionPlan`
        """
        parts = max(1, min(parts, total))
        size, extra = divmod(total, parts)
        ranges = []
        start = 0
        for index in range(parts):
            stop = start + size + (1 if index < extra else 0)
            ranges.append(MaskRange(start, stop))
            start = stop

        return cls(total, ranges)

    @classmethod
    def paged(cls, total: int, page_size: int = 1 << 16) -> "PartitionPlan":
        """
        Split `[0, total)` into consecutive pages of at most `page_size` candidates.

        Args:
            total (int): The number of candidates.
            page_size (int, optional): The largest range produced.

        Returns:
            `smallcovers.util.partition.PartitionPlan`
        """
        starts = range(0, total, page_size)
        return cls(total, [MaskRange(start, min(start + page_size, total)) for start in starts])

    def __iter__(self) -> typing.Iterator[MaskRange]:
        return iter(self.ranges)

    def __len__(self) -> int:
        return len(self.ranges)

    def __repr__(self) -> str:
        return f"<PartitionPlan(total={self.total}, parts={len(self.ranges)})>"


class PartitionedStream(LoggingClass):
    """
    Used for lazily iterating a candidate stream one range at a time.

    Attributes:
        crawler (callable): Called with a `MaskRange`, returns the items found in that range.
        plan (smallcovers.util.partition.PartitionPlan): The ranges crawled, in order.
    """

    _list: typing.Optional[list] = None

    def __init__(self, crawler: typing.Callable[[MaskRange], typing.Iterable], plan: PartitionPlan) -> None:
        """
        Args:
            crawler (callable): Called with each range to produce that range's items.
            plan (smallcovers.util.partition.PartitionPlan): The ranges to crawl.
        """
        self.crawler = crawler
        self.plan = plan
        self._buffer: typing.List = []
        self._ranges = iter(plan)

    def __iter__(self) -> "PartitionedStream":
        return self

    def __next__(self) -> typing.Any:
        while not self._buffer:
            if not self.crawl_data():
                raise StopIteration()

        return self._buffer.pop()

    def __repr__(self) -> str:
        return f"<PartitionedStream({self.plan!r})>"

    @property
    def cached_list(self) -> list:
        """A simple cached list property."""
        return self.get_cached_list()

    def get_cached_list(self, overwrite: bool = None) -> list:
        """
        Used to drain the stream into a list while caching it for later calls.

        Args:
            overwrite (bool, optional): Used to recompute a previously cached list.

        Returns:
             list
        """
        if self._list is None or overwrite:
            if overwrite:
                self._ranges = iter(self.plan)
                self._buffer.clear()

            self._list = list(self)

        return self._list

    def collect(self, mapper: typing.Callable = map) -> list:
        """
        Used to crawl every remaining range at once, in plan order.

        Args:
            mapper (callable, optional): An order preserving `map` used to crawl the ranges, e.g.
                `smallcovers.pool.WorkerPool.map`.

        Returns:
            list: The buffered items followed by the items of every remaining range.
        """
        items = list(reversed(self._buffer))
        self._buffer.clear()
        for crawled in mapper(self.crawler, list(self._ranges)):
            items.extend(crawled)

        self.log.debug("Collected %s item(s) over %r", len(items), self.plan)
        return items

    def crawl_data(self) -> bool:
        """
        Used to get the next range's items and store them in _buffer.

        Returns:
            bool: False once every range has been crawled.
        """
        mask_range = next(self._ranges, None)
        if mask_range is None:
            return False

        items = list(self.crawler(mask_range))
        self.log.debug("Crawled %s: %s item(s)", mask_range, len(items))
        # Reversed so pop() hands items out in crawl order.
        self._buffer.extend(reversed(items))
        return True


def map_plan(
    worker: typing.Callable[[MaskRange], typing.Any], plan: PartitionPlan, mapper: typing.Callable = map
) -> list:
    """
    Run a per-range worker over every range of a plan.

    Args:
        worker (callable): A picklable callable taking one `MaskRange`.
        plan (smallcovers.util.partition.PartitionPlan): The ranges to run.
        mapper (callable, optional): An order preserving `map`, e.g. `smallcovers.pool.WorkerPool.map`.

    Returns:
        list: One result per range, in plan order.
    """
    return list(mapper(worker, plan.ranges))


__all__ = ["MaskRange", "PartitionPlan", "PartitionedStream", "map_plan"]
