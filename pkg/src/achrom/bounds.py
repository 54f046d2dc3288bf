"""Achromatic-number bounds for rook graphs, exact for six rows.

For p = 6 the exact value is total over q >= 1: it is 2q+a where a in [3,6]
is determined by the column-count class below.  Values this toolkit cannot
reconstruct by its own matrices (q in {1,2,3,5,7} and odd q >= 41) are table
entries with external citation keys; everything else is backed by a generated
matrix plus the matching upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass

# citation keys for the externally settled six-row values
_EXTERNAL = {
    1: ("HoPu",),
    2: ("HoPu", "ChiF"),
    3: ("HoPu", "ChiF"),
    4: ("HoPu",),
    5: ("HoPc",),
    6: ("B",),
    7: ("Ho2",),
}


def generic_upper(p: int, q: int) -> int:
    """Frequency-slack upper bound on the achromatic number of any p x q grid.

    A colour of frequency l meets at most l*(p+q-l-1) other cells, so a
    palette of size n needs some l in [1, min(p,q)] with l*(p+q-l-1) >= n-1;
    n is also capped by the cell count.
    """
    if p < 1 or q < 1:
        raise ValueError("dimensions must be positive")
    best = max(l * (p + q - l - 1) for l in range(1, min(p, q) + 1))
    return min(1 + best, p * q)


def k6_upper(q: int) -> int:
    """Upper bound for six rows: 2q+6 once q >= 7, else the generic bound."""
    if q < 1:
        raise ValueError("q must be positive")
    if q >= 7:
        return 2 * q + 6
    return generic_upper(6, q)


def table_class(q: int) -> int:
    """The offset a in [3,6] with achr(6 x q grid) = 2q + a."""
    if q < 1:
        raise ValueError("q must be positive")
    if q in (2, 3) or (q >= 41 and q % 2 == 1):
        return 3
    if q in (1, 4, 7) or 16 <= q <= 40 or (q >= 42 and q % 2 == 0):
        return 4
    if q in (5, 8):
        return 5
    # q == 6 or 9 <= q <= 15
    return 6


@dataclass(frozen=True)
class ExactValue:
    q: int
    value: int
    offset: int  # the a in 2q+a
    sources: tuple[str, ...]  # citation keys, or ("internal",)


def exact_value(q: int) -> ExactValue:
    """Exact achromatic number of the 6 x q rook graph with provenance."""
    a = table_class(q)
    if q in _EXTERNAL:
        sources = _EXTERNAL[q]
    elif q >= 41 and q % 2 == 1:
        sources = ("Ho1",)
    else:
        sources = ("internal",)
    return ExactValue(q, 2 * q + a, a, sources)


def corollary_band(q: int) -> tuple[int, int]:
    """The universal six-row band [2q+3, 2q+6] containing the exact value."""
    if q < 1:
        raise ValueError("q must be positive")
    return 2 * q + 3, 2 * q + 6


def _construction_family(q: int) -> str | None:
    if q in (4, 6, 8):
        return f"base{q}"
    if 9 <= q <= 15:
        return "block_9_15"
    if 16 <= q <= 40:
        return "block_16_40"
    if q >= 42 and q % 2 == 0:
        return "even_16plus"
    return None


@dataclass(frozen=True)
class BoundResult:
    """Lower/upper achromatic bounds with provenance; exact when they meet."""

    p: int
    q: int
    lower: int
    lower_source: str
    upper: int
    upper_source: str

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(
                f"lower bound {self.lower} exceeds upper bound {self.upper}"
            )

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "provenance": {"lower": self.lower_source, "upper": self.upper_source},
        }


def _six_row_bound(q: int, transposed: bool) -> BoundResult:
    ev = exact_value(q)
    fam = _construction_family(q)
    if fam is not None:
        lower_source = f"construction:{fam}"
    else:
        lower_source = "external:" + ",".join(ev.sources)
    if ev.sources == ("internal",):
        upper_source = "table:internal"
    else:
        upper_source = "table:external:" + ",".join(ev.sources)
    p_out, q_out = (q, 6) if transposed else (6, q)
    return BoundResult(p_out, q_out, ev.value, lower_source, ev.value, upper_source)


def bound(p: int, q: int) -> BoundResult:
    """Best bounds this toolkit knows for the p x q grid.

    Exact for six rows (or six columns, by transposition).  Otherwise the
    lower bound is max(p,q) from the cyclic colouring and the upper bound is
    the generic frequency-slack formula.
    """
    if p < 1 or q < 1:
        raise ValueError("dimensions must be positive")
    if p == 6:
        return _six_row_bound(q, transposed=False)
    if q == 6:
        return _six_row_bound(p, transposed=True)
    lower = max(p, q)
    return BoundResult(
        p, q, lower, "construction:cyclic", generic_upper(p, q), "formula:frequency-slack"
    )


def cyclic_matrix(p: int, q: int):
    """The diagonal colouring with max(p,q) colours: entry (i,j) = (i+j) mod n.

    Every line has distinct entries and every long line carries all n
    colours, so this is always a member; it witnesses the generic lower
    bound for arbitrary p, q.
    """
    from .matrix import ColourMatrix

    n = max(p, q)
    return ColourMatrix.from_ids(
        [[(i + j) % n for j in range(q)] for i in range(p)]
    )
