"""Data models and error types shared by the construction and verification layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Dict, Optional

if TYPE_CHECKING:
    from pauli import PauliString


class PauliParseError(ValueError):
    """Raised when a Pauli text string contains a symbol outside I/X/Y/Z."""

    def __init__(self, text: str, position: int) -> None:
        self.text = text
        self.position = position
        self.char = text[position] if 0 <= position < len(text) else ""
        super().__init__(f"Invalid Pauli symbol {self.char!r} at position {position} in {text!r}")


class CodeValidationError(ValueError):
    """Raised when generators or logical operators break the stabilizer code invariants."""

    def __init__(self, message: str, indices: Optional[tuple] = None) -> None:
        self.indices = indices
        super().__init__(message)


class ConcatenationError(ValueError):
    """Raised when an inner/outer pair cannot be concatenated."""


class CodeFormatError(ValueError):
    """Raised for syntax errors in code, error set or parameter files."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class SearchLimitError(RuntimeError):
    """Raised when an exhaustive search would exceed the configured limits."""


@dataclass(frozen=True)
class CodeParams:
    """Parameter tuple of an AD code.

    Attributes:
        n: Physical qubits.
        k: Logical qubits.
        d_e_bound: Lower bound on the effective distance.
        t: Number of AD errors corrected, floor((d_e_bound - 1) / 2).
        provenance: One of constructed, arithmetic, declared.
        note: Free-form qualifier, e.g. when the bound rests on a declared delta.
    """

    n: int
    k: int
    d_e_bound: int
    t: int
    provenance: str = "arithmetic"
    note: str = ""

    def __post_init__(self) -> None:
        if not (self.n >= self.k >= 0):
            raise ValueError(f"Invalid code parameters: n={self.n}, k={self.k}")
        if self.d_e_bound < 1:
            raise ValueError(f"Effective distance bound must be positive, got {self.d_e_bound}")
        if self.t != (self.d_e_bound - 1) // 2:
            raise ValueError(f"t={self.t} inconsistent with d_e={self.d_e_bound}")
        if self.provenance not in ("constructed", "arithmetic", "declared"):
            raise ValueError(f"Unknown provenance {self.provenance!r}")

    @classmethod
    def from_bound(cls, n: int, k: int, d_e_bound: int, provenance: str = "arithmetic", note: str = "") -> "CodeParams":
        return cls(n=n, k=k, d_e_bound=d_e_bound, t=(d_e_bound - 1) // 2, provenance=provenance, note=note)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "n": self.n,
            "k": self.k,
            "d_e_bound": self.d_e_bound,
            "t": self.t,
            "provenance": self.provenance,
        }
        if self.note:
            data["note"] = self.note
        return data


@dataclass(frozen=True)
class DistanceReport:
    """Outcome of a minimum-distance search over C(S)\\S.

    When a budget was given and nothing of weight <= budget exists, value and
    witness are None and exceeds_budget is True.
    """

    metric: str
    value: Optional[int]
    witness: Optional["PauliString"]
    method: str
    budget: Optional[int] = None
    exceeds_budget: bool = False

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "metric": self.metric,
            "value": self.value,
            "witness": str(self.witness) if self.witness is not None else None,
            "method": self.method,
        }
        if self.budget is not None:
            data["budget"] = self.budget
            data["exceeds_budget"] = self.exceeds_budget
        return data

    def describe(self) -> str:
        if self.exceeds_budget:
            return f"{self.metric} distance greater than budget {self.budget} ({self.method})"
        return f"{self.metric} distance {self.value}, witness {self.witness} ({self.method})"


@dataclass(frozen=True)
class Certificate:
    """Result of a t-code certification; counterexample is set when certification fails."""

    mode: str
    t: int
    certified: bool
    evidence: Dict[str, Any] = field(default_factory=dict)
    counterexample: Optional["PauliString"] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "t": self.t,
            "certified": self.certified,
            "evidence": self.evidence,
            "counterexample": str(self.counterexample) if self.counterexample is not None else None,
        }


_EXIT_CODES = {"ok": 0, "fail": 1, "error": 2}


@dataclass
class CommandResult:
    """Status and payload returned by every CLI command."""

    status: str
    payload: Dict[str, Any] = field(default_factory=dict)
    message: str = ""

    def __post_init__(self) -> None:
        if self.status not in _EXIT_CODES:
            raise ValueError(f"Unknown status {self.status!r}")

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]

    def to_dict(self) -> Dict[str, Any]:
        return {"status": self.status, "message": self.message, "payload": self.payload}


@dataclass(frozen=True)
class OuterParams:
    """Parameters (n, k, delta)_q of a qudit outer code, q = 2^m."""

    n: int
    k: int
    delta: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 2 or self.q & (self.q - 1):
            raise ValueError(f"Qudit dimension must be a power of 2, got {self.q}")
        if not (self.n >= self.k >= 0) or self.delta < 1:
            raise ValueError(f"Invalid outer parameters ({self.n},{self.k},{self.delta})_{self.q}")

    @property
    def block_size(self) -> int:
        return self.q.bit_length() - 1

    def __str__(self) -> str:
        return f"({self.n},{self.k},{self.delta})_{self.q}"


@dataclass(frozen=True)
class TableRow:
    """One transcribed row of a published parameter table.

    d_lb is the published reference value for the best known stabilizer code
    and is echoed, never recomputed.
    """

    t: int
    outer: OuterParams
    n: int
    k: int
    d_e: int
    d_lb: int
    table: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "table": self.table,
            "t": self.t,
            "outer": str(self.outer),
            "n": self.n,
            "k": self.k,
            "d_e": self.d_e,
            "d_lb": self.d_lb,
        }
