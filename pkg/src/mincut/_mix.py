"""Counter-based 64-bit mixing; platform independent by construction."""

MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """splitmix64 finalizer."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def unit(seed: int, counter: int) -> float:
    """Deterministic value in ``[0, 1)`` for ``(seed, counter)``."""
    return mix64(mix64(seed & MASK64) ^ (counter & MASK64)) / float(1 << 64)
