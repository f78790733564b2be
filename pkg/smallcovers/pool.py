"""The worker pool used for running partitioned searches."""
import multiprocessing
import multiprocessing.pool
import typing


from smallcovers.util.logging import LoggingClass


class WorkerPool(LoggingClass):
    """
    The pool used for mapping per-range workers over partition plans.

    Attributes:
        jobs (int): The number of worker processes, 1 meaning everything runs in this process.
        pool (multiprocessing.pool.Pool, optional): The process pool, only set when `jobs > 1`.
    """

    pool: typing.Optional[multiprocessing.pool.Pool] = None

    def __init__(self, jobs: int = 1) -> None:
        """
        Args:
            jobs (int, optional): The number of worker processes.

        Raises:
            ValueError: If `jobs` is below 1.
        """
        if jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {jobs}")

        self.jobs = jobs
        if jobs > 1:
            self.log.debug("Starting %s worker processes", jobs)
            self.pool = multiprocessing.Pool(processes=jobs)

    def __enter__(self) -> "WorkerPool":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()

    def map(self, worker: typing.Callable, items: typing.Iterable) -> list:
        """
        Apply a picklable worker to every item, keeping the item order.

        Args:
            worker (callable): A top level function or `functools.partial` of one.
            items (iterable): The worker inputs.

        Returns:
            list: One result per item.
        """
        if self.pool is None:
            return list(map(worker, items))

        return self.pool.map(worker, list(items))

    def close(self) -> None:
        """Shut the process pool down, waiting for its workers."""
        if self.pool is not None:
            self.pool.close()
            self.pool.join()
            self.pool = None

    def __repr__(self) -> str:
        return f"<WorkerPool(jobs={self.jobs})>"


__all__ = ["WorkerPool"]
