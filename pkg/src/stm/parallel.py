"""Tiny deterministic work-mapper.

All computations in the package are exact and order-sensitive only in
their output ordering, so the one thing a parallel map must guarantee is
that results come back in input order.  ``pmap`` does that with a thread
pool whose size is capped by the STM_THREADS environment variable
(STM_THREADS=1 short-circuits to a plain loop, the default when the
variable is unset is a modest pool).
"""

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count(n_items):
    env = os.environ.get('STM_THREADS', '').strip()
    if env:
        try:
            cap = max(1, int(env))
        except ValueError:
            cap = 1
    else:
        cap = min(4, os.cpu_count() or 1)
    return max(1, min(cap, n_items))


def pmap(fn, items):
    """Map fn over items, results in input order."""
    items = list(items)
    if not items:
        return []
    w = worker_count(len(items))
    if w == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=w) as pool:
        return list(pool.map(fn, items))
