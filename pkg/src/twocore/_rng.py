"""Counter-based randomness: every draw is a pure function of (seed, stream, counter)."""

import numpy as np
from numba import njit

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1


@njit(cache=True, inline="always")
def splitmix64(x):
    z = x + np.uint64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def mix_key(seed: int, stream: int) -> np.uint64:
    """Fold a 64-bit seed and a stream tag into one key."""
    s = int(seed) & _MASK64
    t = int(stream) & _MASK64
    return np.uint64(_py_splitmix(s ^ _py_splitmix(t)))


def _py_splitmix(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def hash_counters(key: np.uint64, counters: np.ndarray) -> np.ndarray:
    """Vectorized splitmix64 of ``key + counter * golden`` (wrapping uint64 arithmetic)."""
    c = np.asarray(counters, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = key + c * _GOLDEN
        z = z + _GOLDEN
        z = (z ^ (z >> np.uint64(30))) * _M1
        z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def uniforms(key: np.uint64, counters: np.ndarray) -> np.ndarray:
    """Uniform floats in [0, 1) with 53 random bits each."""
    return (hash_counters(key, counters) >> np.uint64(11)).astype(np.float64) * 2.0**-53


@njit(cache=True)
def counter_index(key, t, n):
    """Uniform index in ``range(n)`` for counter ``t`` (multiply-shift, bias < n / 2**32)."""
    z = splitmix64(key + np.uint64(t) * np.uint64(0x9E3779B97F4A7C15))
    return np.int64(((z >> np.uint64(32)) * np.uint64(n)) >> np.uint64(32))


STREAM_PERCOLATION = 1
STREAM_SAMPLES = 2
STREAM_SPRINKLE = 3
