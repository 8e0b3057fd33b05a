"""Local file storage: code, error set and parameter files, with atomic writes."""

import os
import re
import tempfile
from typing import List, Optional, Tuple, Union

from ad_errors import ErrorSet
from concat import BlockCode
from models import CodeFormatError, CodeValidationError, OuterParams, TableRow
from pauli import PauliString, parse_pauli
from stabilizer import StabilizerCode, validate

_HEADER_FIELD = re.compile(r"(\w+)=(\S+)")
_NAME_PREFIX = "name:"


def loadTextFile(path: str) -> str:
    """Read a UTF-8 text file. Missing files raise FileNotFoundError."""
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _defaultFileMode() -> int:
    # umask can only be read by setting it
    mask = os.umask(0o022)
    os.umask(mask)
    return 0o666 & ~mask


def saveTextFileAtomic(path: str, content: str) -> None:
    """Write content to path through a temporary file in the same directory and a rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmpPath = tempfile.mkstemp(prefix=".tmp-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(content)
        os.chmod(tmpPath, _defaultFileMode())
        os.replace(tmpPath, path)
    except BaseException:
        if os.path.exists(tmpPath):
            os.unlink(tmpPath)
        raise


def _parseHeader(line: str, keyword: str, lineNo: int) -> dict:
    parts = line.split(None, 1)
    if not parts or parts[0] != keyword:
        raise CodeFormatError(f"Expected a '{keyword}' header, got {line!r}", lineNo)
    fields = dict(_HEADER_FIELD.findall(parts[1] if len(parts) > 1 else ""))
    return fields


def _headerInt(fields: dict, key: str, lineNo: int, required: bool = True) -> Optional[int]:
    raw = fields.get(key)
    if raw is None:
        if required:
            raise CodeFormatError(f"Header is missing '{key}='", lineNo)
        return None
    try:
        return int(raw)
    except ValueError:
        raise CodeFormatError(f"Header field {key}={raw!r} is not an integer", lineNo)


def _parsePauliLine(text: str, n: int, lineNo: int) -> PauliString:
    try:
        p = parse_pauli(text)
    except ValueError as e:
        raise CodeFormatError(str(e), lineNo)
    if p.n != n:
        raise CodeFormatError(f"Pauli {text!r} has length {p.n}, header says n={n}", lineNo)
    return p


def parseCodeText(text: str) -> Union[StabilizerCode, BlockCode]:
    """Parse the stabilizer file format; a header with blocks= yields a BlockCode.

    Layout: '#' comments anywhere, a `code n= k=` header, one generator per
    line, then an optional `logicals` line followed by `X:` and `Z:` lines.

    Raises:
        CodeFormatError: for syntax errors, with the line number.
        CodeValidationError: when the generators do not form a code with the declared k.
    """
    name = ""
    comments: List[str] = []
    header: Optional[dict] = None
    headerLine = 0
    generators: List[PauliString] = []
    logicalX: List[PauliString] = []
    logicalZ: List[PauliString] = []
    inLogicals = False
    n = 0

    for lineNo, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith(_NAME_PREFIX):
                name = body[len(_NAME_PREFIX):].strip()
            elif body:
                comments.append(body)
            continue
        if header is None:
            header = _parseHeader(line, "code", lineNo)
            headerLine = lineNo
            n = _headerInt(header, "n", lineNo)
            if n < 1:
                raise CodeFormatError(f"n must be positive, got {n}", lineNo)
            continue
        if line == "logicals":
            if inLogicals:
                raise CodeFormatError("Duplicate 'logicals' section", lineNo)
            inLogicals = True
            continue
        if inLogicals:
            kind, sep, body = line.partition(":")
            if not sep or kind.strip() not in ("X", "Z"):
                raise CodeFormatError(f"Expected 'X: <pauli>' or 'Z: <pauli>', got {line!r}", lineNo)
            target = logicalX if kind.strip() == "X" else logicalZ
            target.append(_parsePauliLine(body.strip(), n, lineNo))
            continue
        generators.append(_parsePauliLine(line, n, lineNo))

    if header is None:
        raise CodeFormatError("File has no 'code' header")
    k = _headerInt(header, "k", headerLine)
    code = StabilizerCode(
        n=n,
        generators=tuple(generators),
        logical_x=tuple(logicalX) if inLogicals else None,
        logical_z=tuple(logicalZ) if inLogicals else None,
        name=name,
        comments=tuple(comments),
    )
    if code.k != k:
        raise CodeValidationError(f"Header declares k={k} but {len(generators)} generators on {n} qubits give k={code.k}")
    validate(code)

    blocks = _headerInt(header, "blocks", headerLine, required=False)
    if blocks is None:
        return code
    blockSize = _headerInt(header, "blocksize", headerLine)
    delta = _headerInt(header, "delta", headerLine)
    try:
        return BlockCode(blocks, blockSize, code, delta)
    except ValueError as e:
        raise CodeFormatError(str(e), headerLine)


def formatCode(code: Union[StabilizerCode, BlockCode]) -> str:
    """Render a code in the stabilizer file format; output is deterministic."""
    block = code if isinstance(code, BlockCode) else None
    stab = block.code if block is not None else code
    lines: List[str] = []
    if stab.name:
        lines.append(f"# {_NAME_PREFIX} {stab.name}")
    lines.extend(f"# {comment}" for comment in stab.comments)
    header = f"code n={stab.n} k={stab.k}"
    if block is not None:
        header += f" blocks={block.n_blocks} blocksize={block.block_size} delta={block.delta}"
    lines.append(header)
    lines.extend(str(g) for g in stab.generators)
    if stab.has_logicals:
        lines.append("logicals")
        for lx, lz in zip(stab.logical_x, stab.logical_z):
            lines.append(f"X: {lx}")
            lines.append(f"Z: {lz}")
    return "\n".join(lines) + "\n"


def loadCodeFile(path: str) -> Union[StabilizerCode, BlockCode]:
    return parseCodeText(loadTextFile(path))


def saveCodeFile(path: str, code: Union[StabilizerCode, BlockCode]) -> None:
    saveTextFileAtomic(path, formatCode(code))


def formatErrorSet(errors: ErrorSet) -> str:
    label = errors.label or "unnamed"
    lines = [f"errorset n={errors.n} label={label}"]
    lines.extend(str(p) for p in errors)
    return "\n".join(lines) + "\n"


def parseErrorSetText(text: str) -> ErrorSet:
    header: Optional[dict] = None
    n = 0
    paulis: List[PauliString] = []
    for lineNo, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parseHeader(line, "errorset", lineNo)
            n = _headerInt(header, "n", lineNo)
            continue
        paulis.append(_parsePauliLine(line, n, lineNo))
    if header is None:
        raise CodeFormatError("File has no 'errorset' header")
    return ErrorSet.from_paulis(n, paulis, header.get("label", ""))


def saveErrorSetFile(path: str, errors: ErrorSet) -> None:
    saveTextFileAtomic(path, formatErrorSet(errors))


def _parseInts(tokens: List[str], lineNo: int) -> List[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise CodeFormatError(f"Expected integers, got {' '.join(tokens)!r}", lineNo)


def parseParamsText(text: str, table: str = "") -> Tuple[List[TableRow], List[OuterParams]]:
    """Parse a parameters file.

    Full rows read `t n_outer k_outer delta q -> n k de dlb`; bare rows read
    `n_outer k_outer delta q` and only list outer codes. Returns (rows, outers)
    with one outer entry per line in file order.
    """
    rows: List[TableRow] = []
    outers: List[OuterParams] = []
    for lineNo, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        left, arrow, right = line.partition("->")
        if arrow:
            lhs = _parseInts(left.split(), lineNo)
            rhs = _parseInts(right.split(), lineNo)
            if len(lhs) != 5 or len(rhs) != 4:
                raise CodeFormatError("Expected 't n_outer k_outer delta q -> n k de dlb'", lineNo)
            t, nOuter, kOuter, delta, q = lhs
            outer = _outerParams(nOuter, kOuter, delta, q, lineNo)
            rows.append(TableRow(t, outer, rhs[0], rhs[1], rhs[2], rhs[3], table))
        else:
            values = _parseInts(line.split(), lineNo)
            if len(values) != 4:
                raise CodeFormatError("Expected 'n_outer k_outer delta q'", lineNo)
            outer = _outerParams(*values, lineNo)
        outers.append(outer)
    return rows, outers


def _outerParams(n: int, k: int, delta: int, q: int, lineNo: int) -> OuterParams:
    try:
        return OuterParams(n, k, delta, q)
    except ValueError as e:
        raise CodeFormatError(str(e), lineNo)


def loadParamsFile(path: str, table: str = "") -> Tuple[List[TableRow], List[OuterParams]]:
    return parseParamsText(loadTextFile(path), table)
