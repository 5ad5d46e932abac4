"""Batch sequence generation and OEIS b-file comparison.

A b-file is the OEIS plain-text dump of a sequence: one ``index value``
pair per line, ``#`` comment lines and blank lines allowed. Indices must be
contiguous; a gap usually means a truncated download.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

from .boundaries import fuss_boundary, rational_boundary
from .closed_forms import bizley_count, catalan, fuss_catalan
from .engines import Engine, determinant
from .exact import parse_integer
from .hessenberg import build_path_matrix
from .paths import count_below_line

ORACLE_MAX_COLUMNS = 24


class Route(str, enum.Enum):
    DETERMINANT = "determinant"
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"

    @classmethod
    def parse(cls, name: "str | Route") -> "Route":
        if isinstance(name, Route):
            return name
        return cls(name.strip().lower().replace("-", "_"))


class CostGuard(RuntimeError):
    pass


class BFileError(ValueError):
    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class MalformedLine(BFileError):
    pass


class NonContiguousIndex(BFileError):
    pass


class EmptyOverlap(ValueError):
    pass


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence family plus an inclusive index range.

    ``kind`` is ``"catalan"``, ``"fuss"`` (needs ``k``) or ``"rational"``
    (needs coprime ``m`` and ``r``). Use the classmethods to build one.
    """

    kind: str
    start: int = 0
    stop: int = 0
    k: int | None = None
    m: int | None = None
    r: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("catalan", "fuss", "rational"):
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        if not 0 <= self.start <= self.stop:
            raise ValueError(f"invalid index range [{self.start}, {self.stop}]")
        if self.kind == "fuss" and (self.k is None or self.k < 1):
            raise ValueError(f"fuss sequences need a positive k, got {self.k}")
        if self.kind == "rational":
            if self.m is None or self.r is None or self.m < 1 or self.r < 1:
                raise ValueError(f"rational sequences need positive m and r, got m={self.m}, r={self.r}")
            if math.gcd(self.m, self.r) != 1:
                raise ValueError(f"m={self.m} and r={self.r} are not coprime")

    @classmethod
    def catalan(cls, start: int, stop: int) -> "SequenceSpec":
        return cls("catalan", start, stop)

    @classmethod
    def fuss(cls, k: int, start: int, stop: int) -> "SequenceSpec":
        return cls("fuss", start, stop, k=k)

    @classmethod
    def rational(cls, m: int, r: int, start: int, stop: int) -> "SequenceSpec":
        return cls("rational", start, stop, m=m, r=r)

    @property
    def indices(self) -> range:
        return range(self.start, self.stop + 1)

    @property
    def slope(self) -> tuple[int, int]:
        """``(m, r)`` of the bounding line ``y = (r/m) x``."""
        if self.kind == "catalan":
            return 1, 1
        if self.kind == "fuss":
            return 1, self.k
        return self.m, self.r

    def boundary(self, n: int):
        m, r = self.slope
        return fuss_boundary(r, n) if m == 1 else rational_boundary(m, r, n)

    def closed_form(self, n: int) -> int:
        if self.kind == "catalan":
            return catalan(n)
        if self.kind == "fuss":
            return fuss_catalan(self.k, n)
        return bizley_count(self.m, self.r, n)

    def oracle_allowed(self, n: int) -> bool:
        return self.slope[0] * n <= ORACLE_MAX_COLUMNS


def value_at(spec: SequenceSpec, n: int, route: "str | Route", engine: "str | Engine" = Engine.RECURRENCE) -> int:
    route = Route.parse(route)
    if route is Route.CLOSED_FORM:
        return spec.closed_form(n)
    m, r = spec.slope
    if route is Route.DETERMINANT:
        return determinant(build_path_matrix(spec.boundary(n)), engine).value
    if not spec.oracle_allowed(n):
        raise CostGuard(f"oracle route limited to m*n <= {ORACLE_MAX_COLUMNS}, got m*n = {m * n}")
    return count_below_line(m, r, n).value


def generate(spec: SequenceSpec, route: "str | Route" = Route.CLOSED_FORM, engine: "str | Engine" = Engine.RECURRENCE) -> list[int]:
    """Values of ``spec`` over its index range, in index order, via one route."""
    route = Route.parse(route)
    if route is Route.ORACLE and not spec.oracle_allowed(spec.stop):
        m = spec.slope[0]
        raise CostGuard(
            f"oracle route limited to m*n <= {ORACLE_MAX_COLUMNS}, got m*n = {m * spec.stop}"
        )
    return [value_at(spec, n, route, engine) for n in spec.indices]


@dataclass(frozen=True)
class BFile:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i in range(1, len(self.pairs)):
            if self.pairs[i][0] != self.pairs[i - 1][0] + 1:
                raise NonContiguousIndex(
                    f"index {self.pairs[i][0]} does not follow {self.pairs[i - 1][0]}", i + 1
                )

    @classmethod
    def from_values(cls, values: Iterable[int], offset: int = 0) -> "BFile":
        return cls(tuple((offset + i, int(v)) for i, v in enumerate(values)))

    @property
    def offset(self) -> int | None:
        return self.pairs[0][0] if self.pairs else None

    @property
    def indices(self) -> range:
        if not self.pairs:
            return range(0)
        return range(self.pairs[0][0], self.pairs[-1][0] + 1)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def parse_bfile(text: "str | bytes") -> BFile:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise MalformedLine(f"expected 'index value', got {line!r}", lineno)
        try:
            index, value = parse_integer(fields[0]), parse_integer(fields[1])
        except ValueError:
            raise MalformedLine(f"non-integer field in {line!r}", lineno) from None
        if pairs and index != pairs[-1][0] + 1:
            raise NonContiguousIndex(f"index {index} does not follow {pairs[-1][0]}", lineno)
        pairs.append((index, value))
    return BFile(tuple(pairs))


def render_bfile(bfile: BFile, header: str | None = None) -> str:
    lines = [f"# {line}" for line in header.splitlines()] if header else []
    lines.extend(f"{index} {value}" for index, value in bfile.pairs)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Comparison:
    matched: int
    # (spec index, b-file value, computed value)
    mismatches: list[tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare(
    spec: SequenceSpec,
    bfile: BFile,
    align: int = 0,
    route: "str | Route" = Route.CLOSED_FORM,
) -> Comparison:
    """Compare ``spec`` term ``n`` with b-file entry ``n + align`` over the overlap."""
    reference = bfile.as_dict()
    overlap = [n for n in spec.indices if n + align in reference]
    if not overlap:
        raise EmptyOverlap(
            f"spec indices {spec.start}..{spec.stop} (shifted by {align}) miss the b-file range "
            f"{bfile.indices.start}..{bfile.indices.stop - 1}"
        )
    matched = 0
    mismatches = []
    for n in overlap:
        actual = value_at(spec, n, route)
        expected = reference[n + align]
        if actual == expected:
            matched += 1
        else:
            mismatches.append((n, expected, actual))
    return Comparison(matched, mismatches)
