import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

from tqdm import tqdm

log = logging.getLogger()

T = TypeVar('T')
R = TypeVar('R')


def ordered_map(fn: Callable[[T], R], items: Iterable[T], *, workers: int = 1,
                desc: str = 'grid') -> list[R]:
    """fn over items, in submission order; a process pool when workers > 1.

    `fn` and the items must be picklable when a pool is used.
    """
    items = list(items)
    quiet = len(items) < 2
    if workers <= 1 or quiet:
        return [fn(x) for x in tqdm(items, desc=desc, disable=quiet)]
    log.debug(f'{desc}: {len(items)} tasks on {workers} workers')
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, x) for x in items]
        return [f.result() for f in tqdm(futures, desc=desc)]
