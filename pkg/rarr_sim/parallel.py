"""
Ordered parallel map for independent sweep points.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply ``fn`` to every item and return the results in input order.

    Args:
        fn: Picklable, side-effect free function
        items: Inputs
        workers: Number of worker processes; ``None`` or ``<= 1`` runs inline

    Returns:
        Results, ordered as ``items``
    """
    items = list(items)
    if not workers or workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))
