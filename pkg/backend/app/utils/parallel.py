from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, List, TypeVar
import logging

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1,
                chunksize: int = 1) -> Iterator[R]:
    """
    Map a picklable top-level function over items, preserving input order

    Args:
        func: Function applied to each item
        items: Inputs
        workers: Number of worker processes; 1 runs in-process
        chunksize: Items handed to a worker at a time

    Yields:
        func(item) for each item, in input order
    """
    if workers <= 1:
        for item in items:
            yield func(item)
        return

    jobs: List[T] = list(items)
    logger.debug(f"Dispatching {len(jobs)} jobs to {workers} workers")
    with Pool(processes=workers) as pool:
        yield from pool.imap(func, jobs, chunksize=chunksize)
