"""Stabilizer codes: validation, logical operators, membership and error detection."""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field, replace
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from gf2 import GF2Matrix, _reduce, nullspace, reduce_against
from models import CodeValidationError
from pauli import PauliString, anticommute_mask, commutes, parse_pauli

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StabilizerCode:
    """A stabilizer code given by generators and, optionally, logical pairs.

    Attributes:
        n: Number of physical qubits.
        generators: Commuting, independent generators (n - k of them once validated).
        logical_x: Optional logical X operators, one per encoded qubit.
        logical_z: Optional logical Z operators, paired with logical_x by index.
        name: Display name.
        comments: Provenance lines written as '#' comments when saved.
    """

    n: int
    generators: Tuple[PauliString, ...]
    logical_x: Optional[Tuple[PauliString, ...]] = None
    logical_z: Optional[Tuple[PauliString, ...]] = None
    name: str = ""
    comments: Tuple[str, ...] = field(default=(), compare=False)

    @property
    def k(self) -> int:
        return self.n - len(self.generators)

    @property
    def has_logicals(self) -> bool:
        return self.logical_x is not None and self.logical_z is not None

    @functools.cached_property
    def stabilizer_matrix(self) -> GF2Matrix:
        rows = [g.symplectic() for g in self.generators]
        if not rows:
            return GF2Matrix(np.zeros((0, 2 * self.n), dtype=np.uint8))
        return GF2Matrix(np.vstack(rows))

    @functools.cached_property
    def _reduced(self) -> Tuple[np.ndarray, List[int]]:
        return _reduce(self.stabilizer_matrix.rows)

    def with_logicals(self, logical_x: Sequence[PauliString], logical_z: Sequence[PauliString]) -> "StabilizerCode":
        return replace(self, logical_x=tuple(logical_x), logical_z=tuple(logical_z))

    def describe(self) -> str:
        label = f"[[{self.n},{self.k}]]"
        return f"{self.name} {label}" if self.name else label


def from_strings(generators: Iterable[str], name: str = "") -> StabilizerCode:
    """Convenience constructor from Pauli text strings."""
    paulis = tuple(parse_pauli(g) for g in generators)
    if not paulis:
        raise CodeValidationError("At least one generator is required to infer n")
    return StabilizerCode(n=paulis[0].n, generators=paulis, name=name)


def validate(code: StabilizerCode) -> StabilizerCode:
    """Check commutation, independence and logical pairings; return the code unchanged.

    Raises:
        CodeValidationError: naming the offending generator indices or logical pair.
    """
    gens = code.generators
    for i, g in enumerate(gens):
        if g.n != code.n:
            raise CodeValidationError(f"Generator {i} has length {g.n}, expected {code.n}", (i,))
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not commutes(gens[i], gens[j]):
                raise CodeValidationError(f"Generators {i} and {j} anticommute ({gens[i]}, {gens[j]})", (i, j))

    _, pivots = code._reduced
    if len(pivots) != len(gens):
        raise CodeValidationError(
            f"Generators are dependent: rank {len(pivots)} < {len(gens)} generators"
        )

    if code.logical_x is not None or code.logical_z is not None:
        _check_logicals(code)
    return code


def _check_logicals(code: StabilizerCode) -> None:
    lx, lz = code.logical_x, code.logical_z
    if lx is None or lz is None or len(lx) != len(lz):
        raise CodeValidationError("Logical operators must come in X/Z pairs")
    if len(lx) != code.k:
        raise CodeValidationError(f"Expected {code.k} logical pairs, got {len(lx)}")
    for kind, ops in (("X", lx), ("Z", lz)):
        for i, op in enumerate(ops):
            if op.n != code.n:
                raise CodeValidationError(f"Logical {kind}{i} has length {op.n}, expected {code.n}", (i,))
            for j, g in enumerate(code.generators):
                if not commutes(op, g):
                    raise CodeValidationError(f"Logical {kind}{i} anticommutes with generator {j}", (i, j))
    for i in range(len(lx)):
        for j in range(len(lx)):
            if commutes(lx[i], lz[j]) != (i != j):
                raise CodeValidationError(f"Logical X{i} and Z{j} break the pairing", (i, j))
            if i < j and not commutes(lx[i], lx[j]):
                raise CodeValidationError(f"Logical X{i} and X{j} anticommute", (i, j))
            if i < j and not commutes(lz[i], lz[j]):
                raise CodeValidationError(f"Logical Z{i} and Z{j} anticommute", (i, j))


def _symplectic_form(u: np.ndarray, v: np.ndarray, n: int) -> int:
    return int((np.dot(u[:n], v[n:]) + np.dot(u[n:], v[:n])) & 1)


def compute_logicals(code: StabilizerCode) -> StabilizerCode:
    """Return the code with k canonical logical pairs.

    The stabilizer is brought to reduced row-echelon form first, so the result
    does not depend on generator order. The centralizer basis comes from the
    null space of the swapped stabilizer matrix; vectors outside the stabilizer
    span are paired off by symplectic Gram-Schmidt.
    """
    validate(replace(code, logical_x=None, logical_z=None))
    n = code.n
    reduced, pivots = code._reduced
    stab_rows = reduced[: len(pivots)]

    # v commutes with row s iff s_x . v_z + s_z . v_x = 0, i.e. [s_z | s_x] v = 0
    swapped = np.hstack([stab_rows[:, n:], stab_rows[:, :n]]) if len(pivots) else np.zeros((0, 2 * n), np.uint8)
    centralizer = nullspace(GF2Matrix(swapped)).rows

    span = stab_rows.copy()
    span_reduced, span_pivots = _reduce(span) if len(span) else (span, [])
    candidates: List[np.ndarray] = []
    for vec in centralizer:
        residue = reduce_against(span_reduced, span_pivots, vec) if span_pivots else vec
        if residue.any():
            candidates.append(vec.copy())
            span = np.vstack([span, vec]) if len(span) else vec[None, :].copy()
            span_reduced, span_pivots = _reduce(span)

    logical_x: List[PauliString] = []
    logical_z: List[PauliString] = []
    pool = candidates
    while pool:
        first = pool[0]
        partner_index = next((i for i in range(1, len(pool)) if _symplectic_form(first, pool[i], n)), None)
        if partner_index is None:
            raise CodeValidationError("Symplectic completion failed: centralizer is degenerate")
        partner = pool[partner_index]
        rest = []
        for i, vec in enumerate(pool):
            if i in (0, partner_index):
                continue
            vec = vec.copy()
            if _symplectic_form(vec, partner, n):
                vec ^= first
            if _symplectic_form(vec, first, n):
                vec ^= partner
            rest.append(vec)
        logical_x.append(PauliString.from_symplectic(first))
        logical_z.append(PauliString.from_symplectic(partner))
        pool = rest

    result = code.with_logicals(logical_x, logical_z)
    _check_logicals(result)
    logger.debug("Completed %d logical pairs for %s", len(logical_x), code.describe())
    return result


def ensure_logicals(code: StabilizerCode) -> StabilizerCode:
    return code if code.has_logicals else compute_logicals(code)


def in_stabilizer(code: StabilizerCode, p: PauliString) -> bool:
    """Membership in S modulo phase."""
    if p.n != code.n:
        raise ValueError(f"Pauli length {p.n} does not match code length {code.n}")
    reduced, pivots = code._reduced
    if not pivots:
        return p.is_identity()
    return not reduce_against(reduced, pivots, p.symplectic()).any()


def in_centralizer(code: StabilizerCode, p: PauliString) -> bool:
    return all(commutes(p, g) for g in code.generators)


def is_detectable(code: StabilizerCode, error: PauliString) -> bool:
    """False exactly when the error lies in C(S)\\S."""
    if not in_centralizer(code, error):
        return True
    return in_stabilizer(code, error)


def undetectable_keys(code: StabilizerCode, keys: np.ndarray) -> np.ndarray:
    """Sorted subset of *keys* (uint64 symplectic keys) lying in C(S)\\S."""
    keys = np.asarray(keys, dtype=np.uint64)
    commuting = np.ones(keys.shape, dtype=bool)
    for g in code.generators:
        commuting &= ~anticommute_mask(keys, code.n, g)
    survivors = np.sort(keys[commuting])
    flagged = [key for key in survivors.tolist() if not in_stabilizer(code, PauliString.from_key(code.n, key))]
    return np.asarray(flagged, dtype=np.uint64)


def detects_set(code: StabilizerCode, errors: Iterable[PauliString]) -> Optional[PauliString]:
    """Return None if every error is detectable, else the lexicographically smallest failure."""
    errors = list(errors)
    for e in errors:
        if e.n != code.n:
            raise ValueError(f"Error {e} has length {e.n}, expected {code.n}")
    if 2 * code.n <= 64:
        keys = np.asarray(sorted({e.key for e in errors}), dtype=np.uint64)
        failing = undetectable_keys(code, keys)
        return PauliString.from_key(code.n, int(failing[0])) if failing.size else None
    for e in sorted(errors, key=lambda p: p.key):
        if not is_detectable(code, e):
            return e
    return None


def same_stabilizer(a: StabilizerCode, b: StabilizerCode) -> bool:
    """Row-space equality of the two stabilizer matrices."""
    if a.n != b.n:
        return False
    ra, pa = a._reduced
    rb, pb = b._reduced
    return pa == pb and np.array_equal(ra[: len(pa)], rb[: len(pb)])
