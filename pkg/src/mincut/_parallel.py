from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def worker_count() -> int:
    """Worker cap from ``MINCUT_THREADS``.

    Unset or 0 picks automatically. The kernels are pure Python and hold the
    GIL, so the automatic choice is a single worker.
    """
    raw = os.environ.get("MINCUT_THREADS", "0").strip() or "0"
    try:
        wanted = int(raw)
    except ValueError:
        raise ValueError(f"MINCUT_THREADS must be an integer, got {raw!r}") from None
    if wanted < 0:
        raise ValueError("MINCUT_THREADS must be >= 0")
    return wanted or 1


def pmap(fn, items) -> list:
    """``list(map(fn, items))``, possibly on a thread pool; order is kept."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
