"""Built-in codes, QMDS outer-code parameters and reproduction of the published parameter tables."""

from __future__ import annotations

import functools
import logging
import os
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import pandas as pd

from code_files import loadCodeFile, loadParamsFile
from concat import BlockCode, expected_params, make_qr
from config import getFixturesDir
from models import CodeParams, OuterParams, TableRow
from pauli import parse_pauli
from stabilizer import StabilizerCode, validate

logger = logging.getLogger(__name__)

TABLES = ("table1", "table2", "table3")
DLB_LABEL = "d_lb (published reference value)"

_FIXTURE_CODES = {
    "five_one_three": "five_one_three.stab",
    "eight_three_css": "eight_three_css.stab",
}


def _fixture_path(filename: str) -> str:
    return os.path.join(getFixturesDir(), filename)


@functools.lru_cache(maxsize=None)
def _load_fixture(path: str) -> Union[StabilizerCode, BlockCode]:
    return loadCodeFile(path)


def _four_two_two() -> BlockCode:
    code = StabilizerCode(
        4,
        (parse_pauli("XXXX"), parse_pauli("ZZZZ")),
        logical_x=(parse_pauli("XXII"), parse_pauli("XIXI")),
        logical_z=(parse_pauli("ZIZI"), parse_pauli("ZZII")),
        name="four_two_two",
    )
    return BlockCode(n_blocks=4, block_size=1, code=validate(code), delta=2)


def builtin_names() -> List[str]:
    return sorted(list(_FIXTURE_CODES) + ["four_two_two"]) + ["qr:<r>"]


def builtin(name: str) -> Union[StabilizerCode, BlockCode]:
    """Look up a built-in code.

    Outer codes (five_one_three, four_two_two) come back as BlockCode with
    one-qubit blocks; inner codes as StabilizerCode. 'qr:<r>' builds Q_r.

    Raises:
        KeyError: for unknown names.
    """
    if name.startswith("qr:"):
        try:
            r = int(name[3:])
        except ValueError:
            raise KeyError(f"Invalid Q_r name {name!r}; expected qr:<int>")
        return make_qr(r)
    if name == "four_two_two":
        return _four_two_two()
    filename = _FIXTURE_CODES.get(name)
    if filename is None:
        raise KeyError(f"Unknown built-in code {name!r}; available: {', '.join(builtin_names())}")
    return _load_fixture(_fixture_path(filename))


def example_nine_one() -> StabilizerCode:
    """The published eight-generator listing of the [[9,1]] code, for row-space comparison."""
    return _load_fixture(_fixture_path("nine_one_example.stab"))


@dataclass(frozen=True)
class Rejection:
    """Why a parameter set is not admitted; `bound` names the violated condition."""

    bound: str
    message: str

    def __str__(self) -> str:
        return f"reject: {self.message}"


def _check_power_of_two(q: int) -> None:
    if q < 2 or q & (q - 1):
        raise ValueError(f"Qudit dimension must be a power of 2, got {q}")


@dataclass(frozen=True)
class QmdsFamily:
    """Admissible QMDS parameters [[n, n + 2 - 2d, d]]_q for one qudit dimension.

    Regular members have d <= q + 1 and n <= q^2 + 1. The exceptional members
    have n = q^2 + 2 and d = 4, dimension q^2 - 4.
    """

    q: int

    def __post_init__(self) -> None:
        _check_power_of_two(self.q)

    @property
    def max_distance(self) -> int:
        return self.q + 1

    @property
    def max_length(self) -> int:
        return self.q ** 2 + 1

    @property
    def exception_length(self) -> int:
        return self.q ** 2 + 2

    def admits(self, n: int, d: int) -> Optional[Rejection]:
        """None when [[n, n + 2 - 2d, d]]_q is admissible, else the violated bound."""
        k = n + 2 - 2 * d
        if d < 1 or n < 1:
            return Rejection("positivity", f"n = {n}, d = {d} must be positive")
        if k < 0:
            return Rejection("dimension", f"k = n + 2 - 2d = {k} < 0")
        if n == self.exception_length and d == 4:
            return None
        if d > self.max_distance:
            return Rejection("distance", f"d = {d} > q+1 = {self.max_distance}")
        if n > self.max_length:
            return Rejection("length", f"n = {n} > q^2+1 = {self.max_length}")
        return None

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "max_distance": self.max_distance,
            "max_length": self.max_length,
            "exception": {"n": self.exception_length, "k": self.q ** 2 - 4, "d": 4},
        }


def qmds_family(q: int) -> QmdsFamily:
    return QmdsFamily(q)


def qmds_params(q: int, t: int, n: int) -> Union[OuterParams, Rejection]:
    """Outer parameters (n, n - 2t, t + 1)_q of a QMDS code correcting t errors, or a Rejection."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    rejection = qmds_family(q).admits(n, t + 1)
    if rejection is not None:
        return rejection
    return OuterParams(n, n - 2 * t, t + 1, q)


def qmds_outer_codes(q: int, t: int, n_max: int = 128) -> List[OuterParams]:
    """Every admissible QMDS outer code with k >= 1 whose concatenation with Q_r has length <= n_max."""
    family = qmds_family(q)
    r = q.bit_length()
    outers = []
    for n in range(2 * t + 1, family.exception_length + 1):
        if r * n - 1 > n_max:
            break
        params = qmds_params(q, t, n)
        if isinstance(params, OuterParams):
            outers.append(params)
    return outers


def _r_for(outer: OuterParams) -> int:
    return outer.block_size + 1


def table_rows(outers: Sequence[OuterParams], r: Optional[int] = None, source: str = "user") -> List[CodeParams]:
    """Parameters of Q_r concatenated with each outer code, first block left unencoded.

    Each outer (n, k, delta)_q with q = 2^(r-1) gives [[rn - 1, (r - 1)k]] with
    d_e = 2 delta - 1 and t = delta - 1. When r is omitted it is derived from q.

    Raises:
        ValueError: for a qudit dimension that does not match r, or, with
            source='qmds', an outer code outside the QMDS family.
    """
    if source not in ("user", "qmds"):
        raise ValueError(f"Unknown source {source!r}; expected user or qmds")
    if r is not None and r < 2:
        raise ValueError(f"Q_r needs r >= 2, got {r}")
    results = []
    for outer in outers:
        row_r = r if r is not None else _r_for(outer)
        if outer.q != 2 ** (row_r - 1):
            raise ValueError(f"Outer code {outer} has qudit dimension {outer.q}, Q_{row_r} needs {2 ** (row_r - 1)}")
        if source == "qmds":
            rejection = qmds_family(outer.q).admits(outer.n, outer.delta)
            if rejection is not None or outer.k != outer.n + 2 - 2 * outer.delta:
                raise ValueError(f"Outer code {outer} is not a QMDS code")
        results.append(expected_params(row_r, row_r - 1, 2, outer.n, outer.k, outer.delta, "first_block_trivial"))
    return results


def load_table(table_id: str) -> List[TableRow]:
    if table_id not in TABLES:
        raise ValueError(f"Unknown table {table_id!r}; expected one of {TABLES}")
    rows, _ = loadParamsFile(_fixture_path(f"{table_id}.params"), table_id)
    logger.debug("Loaded %d rows from %s", len(rows), table_id)
    return rows


def reproduce_table(table_id: str) -> List[Tuple[TableRow, CodeParams]]:
    """Recompute every transcribed row of a table from its outer parameters."""
    rows = load_table(table_id)
    source = "qmds" if table_id == "table1" else "user"
    computed = table_rows([row.outer for row in rows], source=source)
    return list(zip(rows, computed))


def row_matches(row: TableRow, params: CodeParams) -> bool:
    return (row.n, row.k, row.d_e, row.t) == (params.n, params.k, params.d_e_bound, params.t)


def rows_dataframe(pairs: Sequence[Tuple[Optional[TableRow], CodeParams]], outers: Optional[Sequence[OuterParams]] = None) -> pd.DataFrame:
    """Tabulate computed parameters next to the transcribed row, when there is one.

    beats_dlb compares the computed d_e with the published d_lb; it is empty for
    user lists without a reference value.
    """
    records = []
    for i, (row, params) in enumerate(pairs):
        outer = row.outer if row is not None else (outers[i] if outers else None)
        record = {
            "outer": str(outer) if outer is not None else "",
            "n": params.n,
            "k": params.k,
            "d_e": params.d_e_bound,
            "t": params.t,
        }
        if row is not None:
            record[DLB_LABEL] = row.d_lb
            record["beats_dlb"] = params.d_e_bound > row.d_lb
            record["matches"] = row_matches(row, params)
        records.append(record)
    return pd.DataFrame.from_records(records)
