"""Colour matrices over dense palettes: certificates for complete colourings.

A p x q matrix over a palette C encodes a vertex colouring of the p x q rook
graph (cells in a common row or column are adjacent).  The matrix certifies a
proper complete colouring exactly when every line (row or column) has pairwise
distinct entries and every unordered pair of palette colours shares a line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import MatrixFormatError, MatrixStructureError

ROW_BASED = "row"
COLUMN_BASED = "column"
BOTH_BASED = "both"


@dataclass(frozen=True)
class Colour:
    """A palette entry: dense non-negative id plus display token."""

    id: int
    token: str


@dataclass(frozen=True)
class Palette:
    """Ordered colour set with ids exactly 0..len-1 and distinct tokens."""

    colours: tuple[Colour, ...]

    def __post_init__(self) -> None:
        if not self.colours:
            raise MatrixStructureError("palette must be non-empty")
        for k, colour in enumerate(self.colours):
            if colour.id != k:
                raise MatrixStructureError(
                    f"palette ids must be dense 0..{len(self.colours) - 1}, "
                    f"got id {colour.id} at position {k}"
                )
        tokens = {c.token for c in self.colours}
        if len(tokens) != len(self.colours):
            raise MatrixStructureError("palette tokens must be pairwise distinct")

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "Palette":
        return cls(tuple(Colour(k, tok) for k, tok in enumerate(tokens)))

    @classmethod
    def of_size(cls, n: int) -> "Palette":
        """Palette with tokens '0'..'n-1' matching the ids."""
        return cls.from_tokens(str(k) for k in range(n))

    def __len__(self) -> int:
        return len(self.colours)

    def token(self, colour_id: int) -> str:
        return self.colours[colour_id].token

    def id_of(self, token: str) -> int:
        try:
            return self._token_index[token]
        except KeyError:
            raise KeyError(f"unknown colour token {token!r}") from None

    @property
    def _token_index(self) -> dict[str, int]:
        idx = self.__dict__.get("_token_index_cache")
        if idx is None:
            idx = {c.token: c.id for c in self.colours}
            self.__dict__["_token_index_cache"] = idx
        return idx


@dataclass(frozen=True)
class ColourMatrix:
    """Immutable p x q grid of colour ids over a palette.

    Well-formedness (enforced here, not by the verifier): rows are non-empty
    and rectangular, every entry id indexes the palette, and every palette
    colour occurs at least once.  A palette colour that never occurs would not
    be a colour of the matrix, so such input is rejected outright.
    """

    entries: tuple[tuple[int, ...], ...]
    palette: Palette

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise MatrixStructureError("matrix must have at least one row and column")
        q = len(self.entries[0])
        n = len(self.palette)
        seen = [False] * n
        for i, row in enumerate(self.entries):
            if len(row) != q:
                raise MatrixStructureError(f"row {i} has length {len(row)}, expected {q}")
            for entry in row:
                if not 0 <= entry < n:
                    raise MatrixStructureError(
                        f"entry id {entry} outside palette range 0..{n - 1}"
                    )
                seen[entry] = True
        if not all(seen):
            missing = [self.palette.token(k) for k, s in enumerate(seen) if not s]
            raise MatrixStructureError(f"palette colours never used: {missing}")

    @property
    def p(self) -> int:
        return len(self.entries)

    @property
    def q(self) -> int:
        return len(self.entries[0])

    @classmethod
    def from_ids(
        cls, entries: Sequence[Sequence[int]], tokens: Sequence[str] | None = None
    ) -> "ColourMatrix":
        """Build from an integer grid; default tokens are the decimal ids."""
        grid = tuple(tuple(row) for row in entries)
        n = 1 + max(max(row) for row in grid) if grid and grid[0] else 0
        palette = Palette.of_size(n) if tokens is None else Palette.from_tokens(tokens)
        return cls(grid, palette)

    @classmethod
    def from_token_rows(cls, rows: Sequence[Sequence[str]]) -> "ColourMatrix":
        """Build from token rows; the palette is taken in order of first appearance."""
        order: dict[str, int] = {}
        for row in rows:
            for tok in row:
                if tok not in order:
                    order[tok] = len(order)
        palette = Palette.from_tokens(order)
        grid = tuple(tuple(order[tok] for tok in row) for row in rows)
        return cls(grid, palette)

    def row_ids(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col_ids(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def token_at(self, i: int, j: int) -> str:
        return self.palette.token(self.entries[i][j])

    def token_rows(self) -> list[list[str]]:
        return [[self.palette.token(e) for e in row] for row in self.entries]


@dataclass(frozen=True)
class LineViolation:
    """A colour repeated within one line, with the 0-based positions involved."""

    kind: str  # ROW_BASED or COLUMN_BASED
    line: int
    colour: int
    positions: tuple[int, ...]


@dataclass(frozen=True)
class VerificationReport:
    """Standalone pass/fail evidence for membership of the certificate set."""

    row_violations: tuple[LineViolation, ...]
    col_violations: tuple[LineViolation, ...]
    missing_pairs: tuple[tuple[int, int], ...]
    good_pair_count: int

    @property
    def proper(self) -> bool:
        return not self.row_violations and not self.col_violations

    @property
    def complete(self) -> bool:
        return not self.missing_pairs

    @property
    def member(self) -> bool:
        return self.proper and self.complete

    def to_dict(self, m: "ColourMatrix") -> dict:
        tok = m.palette.token
        return {
            "proper": self.proper,
            "complete": self.complete,
            "member": self.member,
            "row_violations": [
                {
                    "row": v.line + 1,
                    "colour": tok(v.colour),
                    "columns": [p + 1 for p in v.positions],
                }
                for v in self.row_violations
            ],
            "col_violations": [
                {
                    "column": v.line + 1,
                    "colour": tok(v.colour),
                    "rows": [p + 1 for p in v.positions],
                }
                for v in self.col_violations
            ],
            "missing_pairs": [[tok(a), tok(b)] for a, b in self.missing_pairs],
            "good_pair_count": self.good_pair_count,
        }


def _line_repeats(values: Sequence[int]) -> dict[int, tuple[int, ...]]:
    positions: dict[int, list[int]] = {}
    for pos, value in enumerate(values):
        positions.setdefault(value, []).append(pos)
    return {v: tuple(ps) for v, ps in positions.items() if len(ps) > 1}


def check_proper(m: ColourMatrix) -> tuple[bool, tuple[LineViolation, ...]]:
    """True iff every line of m has pairwise distinct entries.

    All violations are itemized (repeated colour per line with its positions),
    not just the first one found.
    """
    violations: list[LineViolation] = []
    for i in range(m.p):
        for colour, positions in sorted(_line_repeats(m.row_ids(i)).items()):
            violations.append(LineViolation(ROW_BASED, i, colour, positions))
    for j in range(m.q):
        for colour, positions in sorted(_line_repeats(m.col_ids(j)).items()):
            violations.append(LineViolation(COLUMN_BASED, j, colour, positions))
    return (not violations, tuple(violations))


def good_pairs(m: ColourMatrix) -> dict[tuple[int, int], str]:
    """Unordered colour pairs sharing a line, annotated by the witnessing line kind.

    Keys are (a, b) with a < b; values are ROW_BASED, COLUMN_BASED or
    BOTH_BASED depending on which line kinds witness the pair.
    """
    row_pairs: set[tuple[int, int]] = set()
    col_pairs: set[tuple[int, int]] = set()
    for i in range(m.p):
        for a, b in combinations(sorted(set(m.row_ids(i))), 2):
            row_pairs.add((a, b))
    for j in range(m.q):
        for a, b in combinations(sorted(set(m.col_ids(j))), 2):
            col_pairs.add((a, b))
    annotated: dict[tuple[int, int], str] = {}
    for pair in row_pairs | col_pairs:
        if pair in row_pairs and pair in col_pairs:
            annotated[pair] = BOTH_BASED
        elif pair in row_pairs:
            annotated[pair] = ROW_BASED
        else:
            annotated[pair] = COLUMN_BASED
    return annotated


def verify_membership(m: ColourMatrix) -> VerificationReport:
    """Full certificate check: proper and complete iff the report says so."""
    _, violations = check_proper(m)
    pairs = good_pairs(m)
    n = len(m.palette)
    missing = tuple(
        (a, b) for a, b in combinations(range(n), 2) if (a, b) not in pairs
    )
    return VerificationReport(
        row_violations=tuple(v for v in violations if v.kind == ROW_BASED),
        col_violations=tuple(v for v in violations if v.kind == COLUMN_BASED),
        missing_pairs=missing,
        good_pair_count=len(pairs),
    )


def _check_permutation(perm: Sequence[int], size: int, name: str) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(size)):
        raise ValueError(f"{name} is not a bijection of 0..{size - 1}: {perm}")
    return perm


def permute(
    m: ColourMatrix,
    row_perm: Sequence[int] | None = None,
    col_perm: Sequence[int] | None = None,
    colour_perm: Sequence[int] | None = None,
) -> ColourMatrix:
    """Reindex rows/columns and recolour: output (i,j) = pi(m[rho(i)][sigma(j)]).

    All three maps must be bijections of the matching sizes; identity is used
    where a map is omitted.  Membership of the certificate set is preserved.
    """
    rho = (
        tuple(range(m.p))
        if row_perm is None
        else _check_permutation(row_perm, m.p, "row_perm")
    )
    sigma = (
        tuple(range(m.q))
        if col_perm is None
        else _check_permutation(col_perm, m.q, "col_perm")
    )
    n = len(m.palette)
    pi = (
        tuple(range(n))
        if colour_perm is None
        else _check_permutation(colour_perm, n, "colour_perm")
    )
    grid = tuple(
        tuple(pi[m.entries[rho[i]][sigma[j]]] for j in range(m.q)) for i in range(m.p)
    )
    return ColourMatrix(grid, m.palette)


def write_matrix(m: ColourMatrix) -> str:
    """Serialize to the text format: 'p q' header then p rows of q tokens.

    Single-space separated, trailing newline; byte-exact for determinism
    checks.
    """
    lines = [f"{m.p} {m.q}"]
    for row in m.token_rows():
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def read_matrix(text: str) -> ColourMatrix:
    """Parse the text format; palette is taken in order of first appearance."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise MatrixFormatError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"header must be 'p q', got {lines[0]!r}")
    try:
        p, q = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixFormatError(f"non-integer header {lines[0]!r}") from None
    if p < 1 or q < 1:
        raise MatrixFormatError(f"dimensions must be positive, got {p} x {q}")
    if len(lines) != p + 1:
        raise MatrixFormatError(f"expected {p} matrix rows, got {len(lines) - 1}")
    rows: list[list[str]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != q:
            raise MatrixFormatError(
                f"line {lineno}: expected {q} tokens, got {len(tokens)}"
            )
        rows.append(tokens)
    return ColourMatrix.from_token_rows(rows)
