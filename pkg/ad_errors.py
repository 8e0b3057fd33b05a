"""Amplitude-damping Pauli error sets A^{1}, A^{t} and t-code certification."""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple

import numpy as np

from config import getErrorSetLimit
from distance import min_distance
from models import Certificate, SearchLimitError
from pauli import PauliString, effective_weights
from stabilizer import StabilizerCode, detects_set, undetectable_keys, validate

logger = logging.getLogger(__name__)

_PRODUCT_CHUNK = 20_000


@dataclass(frozen=True)
class ErrorSet:
    """A deduplicated set of n-qubit Paulis, stored as sorted symplectic keys."""

    n: int
    keys: Tuple[int, ...]
    label: str = ""

    @classmethod
    def from_paulis(cls, n: int, paulis: Iterable[PauliString], label: str = "") -> "ErrorSet":
        keys = set()
        for p in paulis:
            if p.n != n:
                raise ValueError(f"Error {p} has length {p.n}, expected {n}")
            keys.add(p.key)
        return cls(n, tuple(sorted(keys)), label)

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self) -> Iterator[PauliString]:
        return (PauliString.from_key(self.n, key) for key in self.keys)

    def __contains__(self, p: object) -> bool:
        return isinstance(p, PauliString) and p.n == self.n and p.key in self._key_set

    @functools.cached_property
    def _key_set(self) -> FrozenSet[int]:
        return frozenset(self.keys)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.keys, dtype=np.uint64)

    def max_effective_weight(self) -> int:
        return int(effective_weights(self.as_array(), self.n).max()) if self.keys else 0


def gen_A1(n: int) -> ErrorSet:
    """Identity, every single-qubit X/Y/Z, and every two-qubit operator with factors in {X, Y}."""
    if n < 1:
        raise ValueError(f"gen_A1 needs n >= 1, got {n}")
    keys = {0}
    for i in range(n):
        for letter in "XYZ":
            keys.add(PauliString.single(n, i, letter).key)
    for i in range(n):
        for j in range(i + 1, n):
            for li in "XY":
                for lj in "XY":
                    keys.add((PauliString.single(n, i, li) * PauliString.single(n, j, lj)).key)
    return ErrorSet(n, tuple(sorted(keys)), f"A^1({n})")


def gen_At(n: int, t: int, limit: Optional[int] = None) -> ErrorSet:
    """All products of t elements of A^{1}(n), modulo phase.

    Raises:
        SearchLimitError: if the set would exceed the configured size limit.
    """
    if t < 1:
        raise ValueError(f"gen_At needs t >= 1, got {t}")
    base = gen_A1(n)
    if t == 1:
        return base
    if 2 * n > 64:
        raise SearchLimitError(f"Materializing A^{t}({n}) needs 2n <= 64; use by_distance certification")
    limit = limit if limit is not None else getErrorSetLimit()
    factor = base.as_array()
    current = factor
    for step in range(2, t + 1):
        parts = [
            np.unique((current[i:i + _PRODUCT_CHUNK, None] ^ factor[None, :]).ravel())
            for i in range(0, current.size, _PRODUCT_CHUNK)
        ]
        current = np.unique(np.concatenate(parts))
        if current.size > limit:
            raise SearchLimitError(
                f"A^{step}({n}) has {current.size} elements, above the limit {limit}; use by_distance certification"
            )
        logger.debug("A^%d(%d) has %d elements", step, n, current.size)
    return ErrorSet(n, tuple(int(k) for k in current.tolist()), f"A^{t}({n})")


def certify_t_code(code: StabilizerCode, t: int, mode: str = "direct", **search_options) -> Certificate:
    """Certify that a code detects A^{t}, either directly or through its effective distance.

    direct checks every element of the materialized A^{t}(n); by_distance checks
    d_e >= 2t + 1 with a search budgeted at 2t.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    validate(code)
    if mode == "direct":
        errors = gen_At(code.n, t)
        if 2 * code.n <= 64:
            failing = undetectable_keys(code, errors.as_array())
            counterexample = PauliString.from_key(code.n, int(failing[0])) if failing.size else None
        else:
            counterexample = detects_set(code, errors)
        evidence = {"error_set": errors.label, "size": len(errors), "exhaustive": True}
        logger.info("Direct certification of %s against %s (%d elements)", code.describe(), errors.label, len(errors))
        return Certificate(mode=mode, t=t, certified=counterexample is None, evidence=evidence,
                           counterexample=counterexample)
    if mode == "by_distance":
        report = min_distance(code, "effective", budget=2 * t, **search_options)
        certified = report.exceeds_budget or (report.value is not None and report.value >= 2 * t + 1)
        evidence = {"distance": report.to_dict(), "required": 2 * t + 1}
        return Certificate(mode=mode, t=t, certified=certified, evidence=evidence,
                           counterexample=None if certified else report.witness)
    raise ValueError(f"Unknown certification mode {mode!r}; expected direct or by_distance")
