"""
Deterministic 64-bit pseudorandom streams

Behavioral stand-in for the accelerator's XORSHIFT PNRG. A stream is a bank
of LANES xorshift64* generators advanced in lock step with numpy; the
stream's output sequence is the lane outputs of step 1, then step 2, and so
on. Every draw (scalar or block) consumes words from that single sequence,
so a (seed, stream, call sequence) triple always yields the same values.

Stream derivation:
    stream_seed = splitmix64(splitmix64(master_seed) ^ stream)
    lane_seed_i = splitmix64(stream_seed + i), zero remapped to ZERO_STATE_REPLACEMENT
"""

from typing import Tuple

import numpy as np

MASK64 = (1 << 64) - 1
LANES = 16
XORSHIFT_MULTIPLIER = 0x2545F4914F6CDD1D
ZERO_STATE_REPLACEMENT = 0x9E3779B97F4A7C15
UNIT_SCALE = 2.0 ** -53

# Integer draws are reduced from 53-bit words; vectorized reduction keeps
# (2^53 - 1) * n inside uint64.
MAX_VECTOR_BOUND = 1 << 11


def splitmix64(value: int) -> int:
    """One round of the splitmix64 finalizer (seed mixing)"""
    z = (value + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_stream_seed(master_seed: int, stream: int) -> int:
    """Mix a master seed and a stream id (e.g. a try index) into a stream seed"""
    return splitmix64(splitmix64(master_seed & MASK64) ^ (stream & MASK64))


def xorshift64star(state: int) -> Tuple[int, int]:
    """
    Scalar reference step of xorshift64*

    Returns:
        (new_state, output)
    """
    x = state & MASK64
    x ^= x >> 12
    x ^= (x << 25) & MASK64
    x ^= x >> 27
    return x, (x * XORSHIFT_MULTIPLIER) & MASK64


class XorShiftRng:
    """Seeded xorshift64* stream, owned by a single worker"""

    def __init__(self, seed: int = 0, stream: int = 0, lanes: int = LANES):
        """
        Args:
            seed: Master seed (any integer, reduced mod 2^64)
            stream: Stream id; different ids give independent sequences
            lanes: Number of xorshift lanes advanced per refill
        """
        if lanes < 1:
            raise ValueError(f"lanes must be >= 1, got {lanes}")
        self.seed = seed
        self.stream = stream
        stream_seed = derive_stream_seed(seed, stream)

        lane_states = []
        for i in range(lanes):
            s = splitmix64((stream_seed + i) & MASK64)
            lane_states.append(s if s != 0 else ZERO_STATE_REPLACEMENT)
        self._lanes = np.array(lane_states, dtype=np.uint64)
        self._buffer = np.empty(0, dtype=np.uint64)
        self._pos = 0

    @property
    def lane_states(self) -> Tuple[int, ...]:
        """Current lane state words (never zero)"""
        return tuple(int(s) for s in self._lanes)

    def _refill(self):
        s = self._lanes
        s ^= s >> np.uint64(12)
        s ^= s << np.uint64(25)
        s ^= s >> np.uint64(27)
        self._buffer = s * np.uint64(XORSHIFT_MULTIPLIER)
        self._pos = 0

    def random_u64(self, n: int) -> np.ndarray:
        """Next n 64-bit words as a uint64 array"""
        out = np.empty(n, dtype=np.uint64)
        filled = 0
        while filled < n:
            if self._pos >= self._buffer.size:
                self._refill()
            take = min(n - filled, self._buffer.size - self._pos)
            out[filled:filled + take] = self._buffer[self._pos:self._pos + take]
            self._pos += take
            filled += take
        return out

    def next_u64(self) -> int:
        if self._pos >= self._buffer.size:
            self._refill()
        value = int(self._buffer[self._pos])
        self._pos += 1
        return value

    def next_unit(self) -> float:
        """Uniform real in [0, 1) with 53-bit resolution"""
        return (self.next_u64() >> 11) * UNIT_SCALE

    def random_units(self, n: int) -> np.ndarray:
        return (self.random_u64(n) >> np.uint64(11)).astype(np.float64) * UNIT_SCALE

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n)"""
        if n < 1:
            raise ValueError(f"randbelow needs n >= 1, got {n}")
        return ((self.next_u64() >> 11) * n) >> 53

    def randbelow_array(self, n: int, size: int) -> np.ndarray:
        """Vector of uniform integers in [0, n); same reduction as randbelow"""
        if not 1 <= n <= MAX_VECTOR_BOUND:
            raise ValueError(f"randbelow_array needs 1 <= n <= {MAX_VECTOR_BOUND}, got {n}")
        words = self.random_u64(size) >> np.uint64(11)
        return ((words * np.uint64(n)) >> np.uint64(53)).astype(np.int64)

    def random_bits(self, n: int) -> np.ndarray:
        """n fair bits (top bit of each word) as int8"""
        return (self.random_u64(n) >> np.uint64(63)).astype(np.int8)

    def shuffle(self, items: list) -> list:
        """Fisher-Yates shuffle returning a new list"""
        result = list(items)
        for i in range(len(result) - 1, 0, -1):
            j = self.randbelow(i + 1)
            result[i], result[j] = result[j], result[i]
        return result

    def __repr__(self):
        return f"XorShiftRng(seed={self.seed}, stream={self.stream})"


# Name used throughout the solver code for a per-worker generator state
RngState = XorShiftRng
