"""Generators for the optimal 6-row colour matrices, one family per column range.

Each family produces a member of the certificate set deterministically:
identical inputs yield byte-identical serialized output.  Palette numbering is
fixed: base colours keep their printed integers, family colours are appended
in a fixed block order, so palettes are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .errors import ConstructionRangeError
from .matrix import ColourMatrix, Palette

FAMILIES = ("base4", "base6", "base8", "block_9_15", "even_16plus", "block_16_40")

# The three hand-built 6-column-or-fewer optima, with 12/18/21 colours.
_BASE_GRIDS = {
    4: (
        (1, 2, 3, 4),
        (5, 6, 7, 8),
        (9, 10, 11, 12),
        (2, 1, 4, 3),
        (7, 8, 5, 6),
        (12, 11, 10, 9),
    ),
    6: (
        (1, 2, 3, 4, 5, 6),
        (7, 8, 9, 10, 11, 12),
        (13, 14, 15, 16, 17, 18),
        (2, 1, 17, 12, 15, 10),
        (11, 18, 4, 3, 7, 14),
        (16, 9, 8, 13, 6, 5),
    ),
    8: (
        (1, 2, 3, 4, 5, 16, 17, 18),
        (6, 7, 8, 9, 10, 18, 16, 17),
        (11, 12, 13, 14, 15, 17, 18, 16),
        (4, 8, 7, 1, 19, 15, 20, 21),
        (13, 5, 11, 21, 2, 9, 19, 20),
        (10, 14, 20, 12, 6, 3, 21, 19),
    ),
}


def base_matrix(q: int) -> ColourMatrix:
    """The literal 6 x q base matrix for q in {4, 6, 8} (12/18/21 colours)."""
    if q not in _BASE_GRIDS:
        raise ConstructionRangeError(f"no base matrix for q={q}; supported: 4, 6, 8")
    grid = _BASE_GRIDS[q]
    n = max(max(row) for row in grid)
    palette = Palette.from_tokens(str(k) for k in range(1, n + 1))
    return ColourMatrix(tuple(tuple(e - 1 for e in row) for row in grid), palette)


def shift_step(r: int) -> int:
    """Row stride of the lower block of the 6 x r shift fragment: ceil((r-1)/3)."""
    return ceil((r - 1) / 3)


def _fragment_token(letter: str, r: int, tag: int, k: int) -> str:
    if tag == 0:
        return f"{letter}{r}({k})"
    return f"{letter}{r}^{tag}({k})"


def n_r(r: int, tag: int = 0, swap: bool = False) -> ColourMatrix:
    """The 6 x r shift fragment over 2r fresh colours, standalone-certifiable.

    Rows 0-2 cycle one colour family forward by one per row, rows 3-5 cycle a
    second family forward by shift_step(r) per row; indices are reduced mod r
    to representatives in [1, r].  With swap=True, rows tag-1 and tag+2
    (printed rows tag and tag+3) are interchanged; swap requires tag in [1,3].
    """
    if not 3 <= r <= 9:
        raise ConstructionRangeError(f"fragment width must be in [3,9], got {r}")
    if not 0 <= tag <= 3:
        raise ValueError(f"tag must be in [0,3], got {tag}")
    if swap and tag == 0:
        raise ValueError("swap requires tag in [1,3]")
    step = shift_step(r)
    tokens = [_fragment_token("v", r, tag, k) for k in range(1, r + 1)]
    tokens += [_fragment_token("w", r, tag, k) for k in range(1, r + 1)]

    def v(k: int) -> int:
        return k % r  # id of v(k+1) in 0-based cyclic indexing

    def w(k: int) -> int:
        return r + k % r

    grid = [[v(i + j) for j in range(r)] for i in range(3)]
    grid += [[w(i * step + j) for j in range(r)] for i in range(3)]
    if swap:
        grid[tag - 1], grid[tag + 2] = grid[tag + 2], grid[tag - 1]
    return ColourMatrix(tuple(tuple(row) for row in grid), Palette.from_tokens(tokens))


def hconcat(*parts: ColourMatrix) -> ColourMatrix:
    """Concatenate matrices side by side, merging palettes left to right.

    All parts must have the same row count and pairwise disjoint token sets.
    """
    if not parts:
        raise ValueError("nothing to concatenate")
    p = parts[0].p
    tokens: list[str] = []
    offsets: list[int] = []
    for part in parts:
        if part.p != p:
            raise ValueError("row counts differ between concatenated parts")
        offsets.append(len(tokens))
        tokens.extend(c.token for c in part.palette.colours)
    grid = tuple(
        tuple(
            entry + offsets[k]
            for k, part in enumerate(parts)
            for entry in part.entries[i]
        )
        for i in range(p)
    )
    return ColourMatrix(grid, Palette.from_tokens(tokens))


def block_9_15(q: int) -> ColourMatrix:
    """6 x q member with 2q+6 colours for q in [9,15]: base6 plus one fragment."""
    if not 9 <= q <= 15:
        raise ConstructionRangeError(f"q must be in [9,15], got {q}")
    return hconcat(base_matrix(6), n_r(q - 6))


def even_16plus(q: int) -> ColourMatrix:
    """6 x q member with 2q+4 colours for even q >= 16.

    Columns 0-3 carry the base4 block; the remaining 2s columns (s=(q-4)/2)
    carry two blocks of four cyclic colour families x, y, z, t, three rows
    each, arranged so that any two row sets intersect.
    """
    if q < 16 or q % 2:
        raise ConstructionRangeError(f"q must be even and >= 16, got {q}")
    s = (q - 4) // 2
    tokens = [str(k) for k in range(1, 13)]
    for letter in "xyzt":
        tokens += [f"{letter}{k}" for k in range(1, s + 1)]

    def fam(letter: str, k: int) -> int:
        # id of letter_{k} with k interpreted cyclically in [1, s]
        return 12 + "xyzt".index(letter) * s + (k - 1) % s

    base = base_matrix(4)
    # per-row family and index offset for the two blocks of s columns
    first_block = (("x", 0), ("x", -1), ("t", 0), ("z", 0), ("t", -1), ("y", 0))
    second_block = (("y", 0), ("z", 0), ("x", 0), ("t", 0), ("y", -1), ("z", -1))
    grid = []
    for i in range(6):
        row = list(base.entries[i])
        for letter, off in (first_block[i], second_block[i]):
            row += [fam(letter, j + off) for j in range(1, s + 1)]
        grid.append(tuple(row))
    return ColourMatrix(tuple(grid), Palette.from_tokens(tokens))


def default_partition(total: int) -> tuple[int, int, int, int]:
    """Balanced largest-first split of total into four parts (e.g. 19 -> 5,5,5,4)."""
    base, rem = divmod(total, 4)
    return tuple(base + 1 if k < rem else base for k in range(4))  # type: ignore[return-value]


def block_16_40(
    q: int, partition: tuple[int, int, int, int] | None = None
) -> ColourMatrix:
    """6 x q member with 2q+4 colours for q in [16,40]: base4 plus four fragments.

    The fragment widths must lie in [3,9] and sum to q-4; fragments 1-3 have
    one upper row swapped with its lower counterpart so that every pair of
    row sets across fragments intersects.
    """
    if not 16 <= q <= 40:
        raise ConstructionRangeError(f"q must be in [16,40], got {q}")
    if partition is None:
        partition = default_partition(q - 4)
    if len(partition) != 4:
        raise ValueError(f"partition must have four parts, got {partition}")
    if any(not 3 <= r <= 9 for r in partition):
        raise ValueError(f"partition parts must be in [3,9], got {partition}")
    if sum(partition) != q - 4:
        raise ValueError(f"partition must sum to q-4={q - 4}, got {partition}")
    fragments = [n_r(partition[0], tag=0, swap=False)]
    fragments += [n_r(partition[l], tag=l, swap=True) for l in (1, 2, 3)]
    return hconcat(base_matrix(4), *fragments)


def construct_best(q: int) -> ColourMatrix:
    """The matrix achieving the exact achromatic value for a supported q.

    Supported: q in {4,6,8}, [9,15], [16,40] and even q >= 42.  Other q
    (including 5, 7, odd q >= 41 and q <= 3) are settled elsewhere; see the
    bounds module for the value and its source.
    """
    if q in (4, 6, 8):
        return base_matrix(q)
    if 9 <= q <= 15:
        return block_9_15(q)
    if 16 <= q <= 40:
        return block_16_40(q)
    if q >= 42 and q % 2 == 0:
        return even_16plus(q)
    raise ConstructionRangeError(
        f"construction out of scope for q={q}; "
        "see the bounds module for the value and the external source"
    )


def supported_qs(limit: int) -> list[int]:
    """All q <= limit for which construct_best produces a matrix."""
    return [
        q
        for q in range(4, limit + 1)
        if q in (4, 6, 8) or 9 <= q <= 40 or (q >= 42 and q % 2 == 0)
    ]


@dataclass(frozen=True)
class ConstructionSpec:
    """Validated request for one matrix family at one column count."""

    family: str
    q: int
    partition: tuple[int, int, int, int] | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        admissible = {
            "base4": self.q == 4,
            "base6": self.q == 6,
            "base8": self.q == 8,
            "block_9_15": 9 <= self.q <= 15,
            "even_16plus": self.q >= 16 and self.q % 2 == 0,
            "block_16_40": 16 <= self.q <= 40,
        }[self.family]
        if not admissible:
            raise ConstructionRangeError(
                f"family {self.family!r} is not admissible for q={self.q}"
            )
        if self.partition is not None and self.family != "block_16_40":
            raise ValueError("partition applies to block_16_40 only")

    def build(self) -> ColourMatrix:
        if self.family in ("base4", "base6", "base8"):
            return base_matrix(self.q)
        if self.family == "block_9_15":
            return block_9_15(self.q)
        if self.family == "even_16plus":
            return even_16plus(self.q)
        return block_16_40(self.q, self.partition)
