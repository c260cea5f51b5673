# Shared helpers: CSV export, worker pools, fingerprints
import hashlib
import logging
import os
from multiprocessing import Pool
from typing import Any, Callable, Dict, Iterable, Iterator, List, Sequence, TypeVar

import pandas as pd

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], size: int) -> Iterator[Sequence[T]]:
    """Split a sequence into contiguous chunks of at most ``size`` items"""
    size = max(1, size)
    for start in range(0, len(items), size):
        yield items[start:start + size]


def run_parallel(func: Callable[[Any], R], tasks: List[Any], workers: int) -> List[R]:
    """Map ``func`` over ``tasks`` in a process pool; results keep task order"""
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    with Pool(processes=min(workers, len(tasks))) as pool:
        return pool.map(func, tasks)


def export_to_csv(rows: Iterable[Dict[str, Any]], filepath: str, columns: List[str]) -> str:
    """Write report rows to CSV with a fixed column order"""
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)
    df = pd.DataFrame(list(rows), columns=columns)
    df.to_csv(filepath, index=False)
    logger.debug("Wrote %d rows to %s", len(df), filepath)
    return filepath


def file_fingerprint(*paths: str) -> str:
    """Short content hash over one or more files, used as a cache key"""
    digest = hashlib.sha256()
    for path in paths:
        with open(path, "rb") as handle:
            for block in iter(lambda: handle.read(1 << 20), b""):
                digest.update(block)
    return digest.hexdigest()[:16]
