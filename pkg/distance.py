"""Exact minimum-distance searches over C(S)\\S under the Hamming, effective and block metrics.

Two engines:
  - centralizer enumeration walks all 2^(n+k) combinations of stabilizer
    generators and logical operators (only combinations with a non-trivial
    logical part lie in C(S)\\S);
  - weight-ordered enumeration visits every Pauli shell by shell and stops
    after the first shell containing an undetectable operator.

Both report the minimum weight and the witness with the smallest symplectic
key among minimum-weight operators, so their reports coincide.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config import getCentralizerCap, getSearchThreads, getShellSearchLimit
from models import CodeValidationError, DistanceReport, SearchLimitError
from pauli import PauliString, block_weights, effective_weights, hamming_weights, split_keys
from stabilizer import StabilizerCode, ensure_logicals, in_stabilizer, validate

logger = logging.getLogger(__name__)

METRICS = ("hamming", "effective", "block")
STRATEGIES = ("auto", "centralizer", "weight")

_LOW_BITS = 18
_SENTINEL = np.iinfo(np.int64).max


def _weights(
    keys: np.ndarray,
    n: int,
    metric: str,
    block_widths: Optional[Sequence[int]],
    pauli_type: Optional[str],
) -> np.ndarray:
    if metric == "hamming":
        w = hamming_weights(keys, n)
    elif metric == "effective":
        w = effective_weights(keys, n)
    else:
        w = block_weights(keys, n, block_widths or ())
    if pauli_type is not None:
        x, z = split_keys(keys, n)
        wrong = (z != 0) if pauli_type == "X" else (x != 0)
        w = np.where(wrong, _SENTINEL, w)
    return w


def _span_table(vectors: Sequence[int]) -> np.ndarray:
    """All 2^len(vectors) XOR combinations; entry i combines the vectors at the set bits of i."""
    table = np.zeros(1, dtype=np.uint64)
    for v in vectors:
        table = np.concatenate([table, table ^ np.uint64(v)])
    return table


def _centralizer_search(
    code: StabilizerCode,
    metric: str,
    block_widths: Optional[Sequence[int]],
    pauli_type: Optional[str],
    threads: int,
) -> Tuple[int, Optional[int]]:
    n = code.n
    # coefficient index i = (high << low_bits) | low; bits below num_stab select generators
    basis = [g.key for g in code.generators] + [p.key for p in code.logical_x] + [p.key for p in code.logical_z]
    num_stab = len(code.generators)
    low_bits = min(len(basis), _LOW_BITS)
    low_table = _span_table(basis[:low_bits])
    high_basis = basis[low_bits:]
    num_high = 1 << len(high_basis)

    if num_stab < low_bits:
        start = 0
        low_valid = (np.arange(1 << low_bits, dtype=np.int64) >> num_stab) != 0
    else:
        start = 1 << (num_stab - low_bits)
        low_valid = None

    def scan(high_range: range) -> Tuple[int, Optional[int]]:
        best_w, best_key = _SENTINEL, None
        for h in high_range:
            offset = 0
            for j, v in enumerate(high_basis):
                if (h >> j) & 1:
                    offset ^= v
            keys = low_table ^ np.uint64(offset)
            w = _weights(keys, n, metric, block_widths, pauli_type)
            if h == 0 and low_valid is not None:
                w = np.where(low_valid, w, _SENTINEL)
            m = int(w.min())
            if m == _SENTINEL or m > best_w:
                continue
            key = int(keys[w == m].min())
            if m < best_w or best_key is None or key < best_key:
                best_w, best_key = m, key
        return best_w, best_key

    span = num_high - start
    workers = max(1, min(threads, span))
    chunk = math.ceil(span / workers)
    ranges = [range(i, min(i + chunk, num_high)) for i in range(start, num_high, chunk)]
    if workers == 1:
        results = [scan(r) for r in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(scan, ranges))
    return min(((w, key) for w, key in results if key is not None), default=(_SENTINEL, None))


def _shell_pairs(weight: int, n: int, metric: str, pauli_type: Optional[str]) -> List[Tuple[int, int]]:
    """(a, b) splits of a shell: a positions carry X or Y, b positions carry Z."""
    if metric == "effective":
        pairs = [(weight - 2 * b, b) for b in range(weight // 2 + 1)]
    else:
        pairs = [(weight - b, b) for b in range(weight + 1)]
    pairs = [(a, b) for a, b in pairs if a + b <= n]
    if pauli_type == "X":
        pairs = [(a, b) for a, b in pairs if b == 0]
    elif pauli_type == "Z":
        pairs = [(a, b) for a, b in pairs if a == 0]
    return pairs


def shell_size(weight: int, n: int, metric: str = "effective", pauli_type: Optional[str] = None) -> int:
    """Number of Paulis in a weight shell."""
    total = 0
    for a, b in _shell_pairs(weight, n, metric, pauli_type):
        choices = 1 if pauli_type == "X" else 2 ** a
        total += math.comb(n, b) * math.comb(n - b, a) * choices
    return total


def _syndrome_words(code: StabilizerCode) -> Tuple[np.ndarray, np.ndarray]:
    """Per-qubit syndromes of X and Z as packed uint64 words over the generators."""
    n, m = code.n, len(code.generators)
    words = max(1, math.ceil(m / 64))
    sx = np.zeros((n, words), dtype=np.uint64)
    sz = np.zeros((n, words), dtype=np.uint64)
    for j, g in enumerate(code.generators):
        word, bit = divmod(j, 64)
        for i in range(n):
            shift = n - 1 - i
            if (g.z >> shift) & 1:
                sx[i, word] |= np.uint64(1 << bit)
            if (g.x >> shift) & 1:
                sz[i, word] |= np.uint64(1 << bit)
    return sx, sz


def _weight_search(
    code: StabilizerCode,
    metric: str,
    max_weight: int,
    limit: Optional[int],
    pauli_type: Optional[str],
) -> Tuple[int, Optional[int], int]:
    n = code.n
    sx, sz = _syndrome_words(code)
    visited = 0
    top = min(max_weight, 2 * n if metric == "effective" else n)
    for weight in range(1, top + 1):
        size = shell_size(weight, n, metric, pauli_type)
        if limit is not None and visited + size > limit:
            raise SearchLimitError(
                f"Weight-ordered search would visit more than {limit} candidates before weight {weight}; "
                "pass a budget or raise ADCODES_SHELL_LIMIT"
            )
        visited += size
        found: List[int] = []
        for a, b in _shell_pairs(weight, n, metric, pauli_type):
            found.extend(_scan_shell(code, sx, sz, a, b, pauli_type))
        if found:
            return weight, min(found), visited
    return _SENTINEL, None, visited


def _scan_shell(
    code: StabilizerCode,
    sx: np.ndarray,
    sz: np.ndarray,
    a: int,
    b: int,
    pauli_type: Optional[str],
) -> Iterator[int]:
    n = code.n
    for zset in itertools.combinations(range(n), b):
        zsyn = np.bitwise_xor.reduce(sz[list(zset)], axis=0) if zset else np.zeros(sx.shape[1], np.uint64)
        zword = sum(1 << (n - 1 - i) for i in zset)
        rest = [i for i in range(n) if i not in zset]
        for xyset in itertools.combinations(rest, a):
            if xyset:
                table = (zsyn ^ np.bitwise_xor.reduce(sx[list(xyset)], axis=0))[None, :]
            else:
                table = zsyn[None, :]
            if pauli_type != "X":
                for i in xyset:
                    table = np.vstack([table, table ^ sz[i]])
            hits = np.nonzero(~table.any(axis=1))[0]
            if not hits.size:
                continue
            xword = sum(1 << (n - 1 - i) for i in xyset)
            for idx in hits.tolist():
                yword = sum(1 << (n - 1 - i) for j, i in enumerate(xyset) if (idx >> j) & 1)
                candidate = PauliString(n, xword, zword | yword)
                if not in_stabilizer(code, candidate):
                    yield candidate.key


def min_distance(
    code: StabilizerCode,
    metric: str = "hamming",
    budget: Optional[int] = None,
    *,
    strategy: str = "auto",
    cap: Optional[int] = None,
    threads: Optional[int] = None,
    block_widths: Optional[Sequence[int]] = None,
    pauli_type: Optional[str] = None,
) -> DistanceReport:
    """Exact minimum of the metric weight over C(S)\\S, with a witness.

    Args:
        code: A code with k >= 1.
        metric: hamming, effective or block (block needs block_widths).
        budget: When given, searching stops above this weight and the report says so.
        strategy: auto picks centralizer enumeration when n + k <= cap.
        cap: Overrides the configured centralizer cap.
        threads: Worker threads for centralizer enumeration.
        block_widths: Contiguous block widths summing to n, for the block metric.
        pauli_type: Restrict to X-only or Z-only operators ('X' / 'Z').

    Raises:
        CodeValidationError: k = 0 or invalid generators.
        SearchLimitError: the search space exceeds both engines without a budget.
    """
    if metric not in METRICS:
        raise ValueError(f"Unknown metric {metric!r}; expected one of {METRICS}")
    if strategy not in STRATEGIES:
        raise ValueError(f"Unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if pauli_type not in (None, "X", "Z"):
        raise ValueError(f"pauli_type must be 'X', 'Z' or None, got {pauli_type!r}")
    if budget is not None and budget < 0:
        raise ValueError(f"Budget must be non-negative, got {budget}")
    if metric == "block":
        if not block_widths or sum(block_widths) != code.n:
            raise ValueError("The block metric needs block widths summing to n")

    validate(code)
    if code.k == 0:
        raise CodeValidationError("k = 0: the code has no logical operators, distance is undefined")

    cap = cap if cap is not None else getCentralizerCap()
    fits_centralizer = code.n + code.k <= cap and 2 * code.n <= 64
    if strategy == "auto":
        strategy = "centralizer" if fits_centralizer or metric == "block" else "weight"
    if strategy == "weight" and metric == "block":
        raise ValueError("The block metric is only supported by centralizer enumeration")
    if strategy == "centralizer":
        if 2 * code.n > 64:
            raise SearchLimitError(f"Centralizer enumeration packs keys in 64 bits; n={code.n} is too long")
        if metric == "block" and code.n + code.k > cap:
            raise SearchLimitError(
                f"Block distance needs centralizer enumeration and n+k={code.n + code.k} exceeds the cap {cap}"
            )

    started = time.monotonic()
    if strategy == "centralizer":
        code = ensure_logicals(code)
        threads = threads if threads is not None else getSearchThreads()
        weight, key = _centralizer_search(code, metric, block_widths, pauli_type, threads)
        method = "centralizer_enumeration"
        logger.info(
            "Centralizer enumeration of 2^%d vectors for %s took %.3fs",
            code.n + code.k, code.describe(), time.monotonic() - started,
        )
    else:
        limit = None if budget is not None else getShellSearchLimit()
        top = budget if budget is not None else 2 * code.n
        weight, key, visited = _weight_search(code, metric, top, limit, pauli_type)
        method = "weight_enumeration"
        logger.info(
            "Weight-ordered search visited %d candidates for %s in %.3fs",
            visited, code.describe(), time.monotonic() - started,
        )

    if key is None or (budget is not None and weight > budget):
        if budget is None:
            raise CodeValidationError(f"No {pauli_type or ''}-type logical operator exists in {code.describe()}")
        return DistanceReport(metric=metric, value=None, witness=None, method=method, budget=budget, exceeds_budget=True)
    witness = PauliString.from_key(code.n, key)
    return DistanceReport(metric=metric, value=int(weight), witness=witness, method=method, budget=budget)


def css_distances(code: StabilizerCode, **kwargs) -> Tuple[DistanceReport, DistanceReport]:
    """Minimum Hamming weight of X-only and of Z-only undetectable operators."""
    return (
        min_distance(code, "hamming", pauli_type="X", **kwargs),
        min_distance(code, "hamming", pauli_type="Z", **kwargs),
    )
