"""Plain-text witness files and bare code-set text.

A witness file looks like::

    # partbase witness
    a: 8
    b: 3
    group: alt
    size: 3
    provenance: paper_8_3_triple
    status: verified-base
    verifier: partbase 1
    partitions:
    0 1 2 3 4 5 6 7 | 8 9 10 11 12 13 14 15 | 16 17 18 19 20 21 22 23
    ...
    codeset:
    0 0 0
    ...
    end

Header keys appear in this fixed order.  Parts are written sorted, ordered
by their smallest point, points 0-indexed.  The optional code set block has
one word per line in lexicographic order, duplicates repeated.  Serializing
a parsed canonical file reproduces it byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .core import (GROUPS, CodeSet, Params, Provenance, RegularPartition, ShapeError,
                   WitnessCertificate, partitions_to_codeset)

MAGIC = "# partbase witness"
VERIFIER_VERSION = "partbase 1"
HEADER_KEYS = ("a", "b", "group", "size", "provenance", "status", "verifier")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class WitnessFile:
    a: int
    b: int
    group: str
    provenance: Provenance
    status: str
    partitions: list[RegularPartition]
    codeset: CodeSet | None = None
    verifier: str = VERIFIER_VERSION
    size: int = field(default=-1)

    def __post_init__(self):
        if self.size == -1:
            self.size = len(self.partitions)

    @classmethod
    def from_certificate(cls, cert: WitnessCertificate, with_codeset: bool = True) -> "WitnessFile":
        ps = list(cert.partitions)
        return cls(cert.params.a, cert.params.b, cert.group, cert.provenance, cert.status, ps,
                   partitions_to_codeset(ps) if with_codeset and ps else None, size=cert.size)


def format_provenance(p: Provenance) -> str:
    return str(p)


_PROV = re.compile(r"^([A-Za-z0-9_]+)(?:\((.*)\))?$")


def parse_provenance(text: str) -> Provenance:
    m = _PROV.match(text)
    if not m:
        raise ValueError(f"bad provenance {text!r}")
    params = []
    if m.group(2):
        for item in m.group(2).split(","):
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"bad provenance parameter {item!r}")
            params.append((key, int(value) if re.fullmatch(r"-?\d+", value) else value))
    return Provenance(m.group(1), tuple(params))


def serialize(w: WitnessFile) -> str:
    lines = [MAGIC,
             f"a: {w.a}",
             f"b: {w.b}",
             f"group: {w.group}",
             f"size: {w.size}",
             f"provenance: {format_provenance(w.provenance)}",
             f"status: {w.status}",
             f"verifier: {w.verifier}",
             "partitions:"]
    for p in w.partitions:
        lines.append(" | ".join(" ".join(map(str, part)) for part in p.parts))
    if w.codeset is not None:
        lines.append("codeset:")
        lines.extend(" ".join(map(str, row)) for row in w.codeset.words.tolist())
    lines.append("end")
    return "\n".join(lines) + "\n"


def _ints(text: str, lineno: int, col0: int, offset: int = 0) -> list[int]:
    out = []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        if not re.fullmatch(r"\d+", tok):
            raise ParseError(f"expected a non-negative integer, got {tok!r}", lineno, col0 + m.start())
        out.append(int(tok) - offset)
    return out


def _partition_line(text: str, lineno: int, offset: int) -> RegularPartition:
    parts, col = [], 1
    for chunk in text.split("|"):
        pts = _ints(chunk, lineno, col, offset)
        if not pts:
            raise ParseError("empty part", lineno, col)
        if min(pts) < 0:
            raise ParseError("point below the index base", lineno, col)
        parts.append(pts)
        col += len(chunk) + 1
    try:
        return RegularPartition(parts)
    except ShapeError as exc:
        raise ParseError(str(exc), lineno) from None


def parse(text: str, index_base: int = 0) -> WitnessFile:
    """Parse a witness file; ``index_base=1`` accepts points numbered from 1."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MAGIC:
        raise ParseError(f"expected {MAGIC!r}", 1)
    header: dict[str, str] = {}
    i = 1
    for key in HEADER_KEYS:
        if i >= len(lines):
            raise ParseError(f"missing header key {key!r}", i + 1)
        k, sep, v = lines[i].partition(": ")
        if not sep or k != key:
            raise ParseError(f"expected header key {key!r}", i + 1)
        header[key] = v
        i += 1
    try:
        a, b, size = int(header["a"]), int(header["b"]), int(header["size"])
        Params(a, b)
    except ValueError as exc:
        raise ParseError(f"bad header value: {exc}", 2) from None
    if header["group"] not in GROUPS:
        raise ParseError(f"unknown group {header['group']!r}", 4, 8)
    try:
        prov = parse_provenance(header["provenance"])
    except ValueError as exc:
        raise ParseError(str(exc), 6, 13) from None

    if i >= len(lines) or lines[i] != "partitions:":
        raise ParseError("expected 'partitions:'", i + 1)
    i += 1
    partitions = []
    while i < len(lines) and lines[i] not in ("codeset:", "end"):
        p = _partition_line(lines[i], i + 1, index_base)
        if (p.a, p.b) != (a, b):
            raise ParseError(f"partition is ({p.a},{p.b})-regular, header says ({a},{b})", i + 1)
        partitions.append(p)
        i += 1
    if len(partitions) != size and partitions:
        raise ParseError(f"header size {size} but {len(partitions)} partitions", i + 1)

    codeset = None
    if i < len(lines) and lines[i] == "codeset:":
        start = i + 2  # first code word, 1-based
        i += 1
        rows = []
        while i < len(lines) and lines[i] != "end":
            row = _ints(lines[i], i + 1, 1)
            if rows and len(row) != len(rows[0]):
                raise ParseError("code words of different lengths", i + 1)
            if any(x >= b for x in row):
                raise ParseError(f"symbol outside 0..{b - 1}", i + 1)
            rows.append(row)
            i += 1
        if not rows:
            raise ParseError("empty code set block", start)
        codeset = CodeSet(np.array(rows, dtype=np.int64), b)
        if partitions and codeset != partitions_to_codeset(partitions):
            raise ParseError("code set block does not match the partitions", start)
    if i >= len(lines) or lines[i] != "end":
        raise ParseError("expected 'end'", i + 1)
    if i + 1 != len(lines):
        raise ParseError("trailing content after 'end'", i + 2)
    return WitnessFile(a, b, header["group"], prov, header["status"], partitions, codeset,
                       header["verifier"], size)


def parse_codeset_text(text: str, b: int | None = None) -> CodeSet:
    """One word per line, symbols separated by spaces; blank lines and ``#`` comments skipped."""
    rows, width = [], None
    for lineno, line in enumerate(text.split("\n"), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        row = _ints(body, lineno, 1)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"expected {width} symbols, got {len(row)}", lineno)
        rows.append(row)
    if not rows:
        raise ParseError("no code words", 1)
    arr = np.array(rows, dtype=np.int64)
    alphabet = int(arr.max()) + 1 if b is None else b
    if arr.max() >= alphabet:
        raise ParseError(f"symbol outside 0..{alphabet - 1}", 1)
    return CodeSet(arr, max(alphabet, 2))


def load(text: str, index_base: int = 0) -> WitnessFile | CodeSet:
    """A witness file if the magic line is present, otherwise bare code set text."""
    if text.startswith(MAGIC):
        return parse(text, index_base)
    return parse_codeset_text(text)
