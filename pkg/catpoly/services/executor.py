"""Chunked execution for the exhaustive checks.

Workers must be module-level functions so they pickle into worker processes. Results
come back in chunk order whatever the worker count, so merges stay byte-identical.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import islice
from typing import Callable, Iterable, Iterator, List, Sequence, TypeVar

from tqdm import tqdm

T = TypeVar('T')
R = TypeVar('R')

logger = logging.getLogger(__name__)


def chunked(items: Iterable[T], size: int) -> Iterator[List[T]]:
    """Split an iterable into lists of at most ``size`` items."""
    if size < 1:
        raise ValueError(f"chunk size must be positive, got {size}")
    iterator = iter(items)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


def run_chunks(
    worker: Callable[[T], R],
    chunks: Sequence[T],
    jobs: int = 1,
    progress: bool = False,
    desc: str = 'chunks',
) -> List[R]:
    """Apply ``worker`` to every chunk; returns results in chunk order."""
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    chunks = list(chunks)
    bar = tqdm(total=len(chunks), desc=desc, disable=not progress, leave=False)
    try:
        if jobs == 1 or len(chunks) <= 1:
            results = []
            for chunk in chunks:
                results.append(worker(chunk))
                bar.update(1)
            return results
        logger.debug(f"Running {len(chunks)} chunks of {desc} on {jobs} workers")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = []
            for result in pool.map(worker, chunks):
                results.append(result)
                bar.update(1)
            return results
    finally:
        bar.close()
