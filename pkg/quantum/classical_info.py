"""
Typical sequences, classical data compression, repetition coding and the
binary symmetric channel.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.special import gammaln

from .entropy import LN2, binary_entropy
from .exceptions import AtypicalSequenceError, ContractError, DomainError, ResourceError

logger = logging.getLogger(__name__)

EXACT_BINOMIAL_LIMIT = 64
MAX_CODEBOOK_LENGTH = 20
SIMULATION_BATCH = 100_000


class CompressionBits(NamedTuple):
    exact: float
    stirling: float


def as_bits(bits):
    """Accept '101', [1, 0, 1] or any iterable of 0/1 and return a tuple of ints"""
    values = tuple(int(b) for b in bits)
    if not values:
        raise ContractError("Bit strings need at least one bit")
    if any(b not in (0, 1) for b in values):
        raise ContractError(f"Bits must be 0 or 1, got {values}")
    return values


def bits_to_str(bits):
    return ''.join(str(b) for b in bits)


def _check_probability(p, name='probability'):
    if not 0 <= p <= 1:
        raise DomainError(f"{name} must lie in [0, 1], got {p}")


def typical_ones(N, p1):
    """
    Number of ones in an exactly typical string of length N

    N * p1 is rounded to the nearest integer when it is not one already, halves upward.
    """
    if N < 1:
        raise ContractError(f"Sequence length must be positive, got {N}")
    _check_probability(p1, 'p1')
    expected = N * p1
    ones = math.floor(expected + 0.5)
    if abs(expected - ones) > 1e-9:
        logger.debug(f"Rounding N*p1 = {expected:.6g} to {ones} for exact typicality")
    return ones


def typical_count(N, p1):
    """Number of distinct typical messages, the binomial C(N, N*p1)"""
    return math.comb(N, typical_ones(N, p1))


def log2_typical_count(N, p1):
    """log2 C(N, N*p1); exact integer arithmetic up to N = 64, log-gamma beyond"""
    ones = typical_ones(N, p1)
    if N <= EXACT_BINOMIAL_LIMIT:
        return math.log2(math.comb(N, ones))
    return float((gammaln(N + 1) - gammaln(ones + 1) - gammaln(N - ones + 1)) / LN2)


def compression_bits(N, p1):
    """
    Bits needed to label the typical messages

    Returns:
        CompressionBits: exact log2 of the typical count and the Stirling value N*H(p1)
    """
    return CompressionBits(exact=log2_typical_count(N, p1), stirling=N * binary_entropy(p1))


def exact_typical_set(N, p1):
    """All strings with exactly typical_ones(N, p1) ones, in lexicographic order"""
    if N > MAX_CODEBOOK_LENGTH:
        raise ResourceError(f"Enumerating strings of length {N} exceeds the {MAX_CODEBOOK_LENGTH} guard")
    ones = typical_ones(N, p1)
    strings = []
    for index in range(2 ** N):
        if bin(index).count('1') == ones:
            strings.append(tuple(int(b) for b in format(index, f'0{N}b')))
    return strings


def channel_capacity(N_C, q):
    """Upper bound N = N_C (1 - H(q)) on the bits a noisy channel of N_C uses can carry"""
    return N_C * (1 - binary_entropy(q))


def error_pattern_bits(N_C, q):
    """N_C H(q) bits needed to say where the flips happened"""
    return N_C * binary_entropy(q)


def repetition_encode(bit, n_copies):
    if bit not in (0, 1):
        raise ContractError(f"Bit must be 0 or 1, got {bit}")
    if n_copies < 1 or n_copies % 2 == 0:
        raise ContractError(f"Repetition code needs an odd number of copies, got {n_copies}")
    return (bit,) * n_copies


def repetition_decode(bits):
    """Majority vote"""
    bits = as_bits(bits)
    if len(bits) % 2 == 0:
        raise ContractError(f"Majority vote is undefined for {len(bits)} copies")
    return int(sum(bits) * 2 > len(bits))


def bsc_transmit(bits, q, rng):
    """Send bits through a binary symmetric channel flipping each with probability q"""
    _check_probability(q, 'q')
    sent = np.asarray(as_bits(bits), dtype=np.int8)
    flips = rng.random(sent.size) < q
    return tuple(int(b) for b in sent ^ flips)


def bsc_residual_error(n_copies, q):
    """Exact probability that majority decoding of n_copies fails: sum_{k > n/2} C(n,k) q^k (1-q)^(n-k)"""
    _check_probability(q, 'q')
    if n_copies < 1 or n_copies % 2 == 0:
        raise ContractError(f"Repetition code needs an odd number of copies, got {n_copies}")
    return sum(
        math.comb(n_copies, k) * q ** k * (1 - q) ** (n_copies - k)
        for k in range(n_copies // 2 + 1, n_copies + 1)
    )


def bsc_simulate(n_copies, q, trials, seed, workers=1):
    """
    Monte Carlo estimate of the residual error of the repetition code

    Trials are split across `workers` child seeds spawned from `seed`, so a run is
    reproducible for a given (seed, workers) pair.
    """
    _check_probability(q, 'q')
    if trials <= 0:
        raise ContractError("Simulation needs at least one trial")
    if n_copies < 1 or n_copies % 2 == 0:
        raise ContractError(f"Repetition code needs an odd number of copies, got {n_copies}")
    if workers < 1:
        raise ContractError(f"workers must be positive, got {workers}")

    shares = [trials // workers + (1 if i < trials % workers else 0) for i in range(workers)]
    children = np.random.SeedSequence(seed).spawn(workers)
    failures = 0
    for share, child in zip(shares, children):
        rng = np.random.default_rng(child)
        remaining = share
        while remaining > 0:
            batch = min(remaining, SIMULATION_BATCH)
            flips = rng.random((batch, n_copies)) < q
            failures += int(np.count_nonzero(flips.sum(axis=1) > n_copies // 2))
            remaining -= batch
    rate = failures / trials
    logger.debug(f"BSC simulation n={n_copies} q={q} trials={trials}: {failures} failures")
    return rate


def binomial_sigma(p, trials):
    """Standard deviation of an empirical rate over `trials` Bernoulli(p) draws"""
    return math.sqrt(p * (1 - p) / trials)


@dataclass(frozen=True)
class TypicalCodebook:
    N: int
    typical: tuple
    code_bits: int
    mass: float
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {bits: i for i, bits in enumerate(self.typical)})

    def compress(self, bits):
        """Index of a typical string as code_bits bits (most significant first)"""
        bits = as_bits(bits)
        if len(bits) != self.N:
            raise ContractError(f"Expected {self.N} bits, got {len(bits)}")
        try:
            index = self._index[bits]
        except KeyError:
            raise AtypicalSequenceError(bits)
        return tuple(int(b) for b in format(index, f'0{self.code_bits}b')) if self.code_bits else ()

    def expand(self, code):
        code = tuple(int(b) for b in code)
        if len(code) != self.code_bits:
            raise ContractError(f"Expected {self.code_bits} code bits, got {len(code)}")
        index = int(bits_to_str(code), 2) if code else 0
        if index >= len(self.typical):
            raise ContractError(f"Code {bits_to_str(code)} does not label a typical string")
        return self.typical[index]


def string_probabilities(N, p1):
    """Probability of every N-bit string, indexed by its integer value"""
    indices = np.arange(2 ** N, dtype=np.int64)
    ones = np.zeros(indices.size, dtype=np.int64)
    for shift in range(N):
        ones += (indices >> shift) & 1
    per_count = np.array([p1 ** k * (1 - p1) ** (N - k) for k in range(N + 1)])
    return per_count[ones]


def build_codebook(N, p1, coverage):
    """
    Smallest probability-ordered set of strings whose mass reaches `coverage`

    Strings are ranked by probability (descending), ties broken lexicographically,
    so the codebook is the same on every run and platform.
    """
    if N < 1 or N > MAX_CODEBOOK_LENGTH:
        raise ResourceError(f"Codebook length must be in [1, {MAX_CODEBOOK_LENGTH}], got {N}")
    _check_probability(p1, 'p1')
    if not 0 < coverage <= 1:
        raise ContractError(f"Coverage must lie in (0, 1], got {coverage}")

    probabilities = string_probabilities(N, p1)
    order = np.lexsort((np.arange(probabilities.size), -probabilities))
    if coverage >= 1:
        size = order.size
    else:
        cumulative = np.cumsum(probabilities[order])
        size = min(int(np.searchsorted(cumulative, coverage - 1e-12)) + 1, order.size)
    chosen = order[:size]
    typical = tuple(tuple(int(b) for b in format(int(i), f'0{N}b')) for i in chosen)
    code_bits = math.ceil(math.log2(size)) if size > 1 else 0
    mass = float(probabilities[chosen].sum())
    logger.debug(f"Codebook N={N} p1={p1} coverage={coverage}: {size} strings, {code_bits} bits")
    return TypicalCodebook(N=N, typical=typical, code_bits=code_bits, mass=mass)
