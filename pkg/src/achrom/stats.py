"""Diagnostics over colour matrices: frequencies, excesses, line statistics,
coverage, crossing configurations, the row-pair auxiliary graph and the
six-row surplus checklist.

Everything here is computable on non-members too (useful when debugging a
failed construction); assertions that hold for members by theorem are
reported as pass/fail records rather than raised as errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .matrix import ColourMatrix


@dataclass(frozen=True)
class FrequencyProfile:
    """Occurrence counts per colour and the induced frequency classes."""

    freq: tuple[int, ...]  # by colour id
    classes: dict[int, tuple[int, ...]]  # level -> colour ids, ascending

    @property
    def min_frequency(self) -> int:
        return min(self.freq)

    def c(self, level: int) -> int:
        """Number of colours of frequency exactly level."""
        return len(self.classes.get(level, ()))

    def c_plus(self, level: int) -> int:
        """Number of colours of frequency at least level."""
        return sum(len(ids) for l, ids in self.classes.items() if l >= level)

    def colours_at(self, level: int) -> tuple[int, ...]:
        return self.classes.get(level, ())


def frequency_profile(m: ColourMatrix) -> FrequencyProfile:
    counts = [0] * len(m.palette)
    for row in m.entries:
        for e in row:
            counts[e] += 1
    classes: dict[int, list[int]] = {}
    for cid, f in enumerate(counts):
        classes.setdefault(f, []).append(cid)
    return FrequencyProfile(
        tuple(counts), {l: tuple(ids) for l, ids in sorted(classes.items())}
    )


def excess_of(level: int, p: int, q: int, n_colours: int) -> int:
    """Slack of a colour of frequency `level`: level*(p+q-level-1) - (n-1).

    Non-negative for every colour of a member; a negative value certifies
    non-membership.
    """
    return level * (p + q - level - 1) - (n_colours - 1)


@dataclass(frozen=True)
class ExcessProfile:
    exc: tuple[int, ...]  # by colour id

    @property
    def matrix_excess(self) -> int:
        return min(self.exc)

    @property
    def negative_colours(self) -> tuple[int, ...]:
        return tuple(cid for cid, e in enumerate(self.exc) if e < 0)


def excess_profile(m: ColourMatrix, profile: FrequencyProfile | None = None) -> ExcessProfile:
    profile = profile or frequency_profile(m)
    n = len(m.palette)
    return ExcessProfile(
        tuple(excess_of(f, m.p, m.q, n) for f in profile.freq)
    )


class LineStats:
    """Per-line colour sets and the level-restricted intersection counts."""

    def __init__(self, m: ColourMatrix):
        self._m = m
        self._profile = frequency_profile(m)
        self._rows = [frozenset(m.row_ids(i)) for i in range(m.p)]
        self._cols = [frozenset(m.col_ids(j)) for j in range(m.q)]
        self._two = frozenset(self._profile.colours_at(2))
        self._three = frozenset(self._profile.colours_at(3))

    @property
    def profile(self) -> FrequencyProfile:
        return self._profile

    def row_colours(self, i: int) -> frozenset[int]:
        return self._rows[i]

    def col_colours(self, j: int) -> frozenset[int]:
        return self._cols[j]

    def row_level_count(self, i: int, level: int) -> int:
        """Number of colours of frequency `level` in row i."""
        members = set(self._profile.colours_at(level))
        return len(members & self._rows[i])

    def col_level_count(self, j: int, level: int) -> int:
        members = set(self._profile.colours_at(level))
        return len(members & self._cols[j])

    def row_pair(self, i: int, k: int) -> int:
        """Number of 2-frequency colours appearing in both rows i and k."""
        if i == k:
            raise ValueError("row indices must be distinct")
        return len(self._two & self._rows[i] & self._rows[k])

    def row_pair_colours(self, i: int, k: int) -> frozenset[int]:
        if i == k:
            raise ValueError("row indices must be distinct")
        return self._two & self._rows[i] & self._rows[k]

    def row_triple(self, i: int, j: int, k: int) -> int:
        """Number of 3-frequency colours appearing in all of rows i, j, k."""
        if len({i, j, k}) != 3:
            raise ValueError("row indices must be pairwise distinct")
        return len(self._three & self._rows[i] & self._rows[j] & self._rows[k])

    def col_pair(self, m_: int, n_: int) -> int:
        """Number of 2-frequency colours appearing in both columns m and n."""
        if m_ == n_:
            raise ValueError("column indices must be distinct")
        return len(self._two & self._cols[m_] & self._cols[n_])

    def rows_of(self, colour: int) -> tuple[int, ...]:
        return tuple(i for i in range(self._m.p) if colour in self._rows[i])


def line_stats(m: ColourMatrix) -> LineStats:
    return LineStats(m)


@dataclass(frozen=True)
class CoverageMap:
    """Columns meeting a colour set, 0-based."""

    columns: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.columns)


def coverage(m: ColourMatrix, colours: frozenset[int] | set[int]) -> CoverageMap:
    """Cov(A): the set of columns whose colour set meets A.  A must be non-empty."""
    if not colours:
        raise ValueError("coverage of the empty colour set is undefined")
    n = len(m.palette)
    for c in colours:
        if not 0 <= c < n:
            raise ValueError(f"colour id {c} outside palette range")
    wanted = set(colours)
    cols = frozenset(
        j for j in range(m.q) if wanted & {row[j] for row in m.entries}
    )
    return CoverageMap(cols)


@dataclass(frozen=True)
class XConfiguration:
    """Two 2-frequency colours on opposite diagonals of one matrix rectangle."""

    pair: tuple[int, int]  # colour ids, the first on the main diagonal
    rows: tuple[int, int]
    cols: tuple[int, int]


def x_configurations(m: ColourMatrix) -> list[XConfiguration]:
    """All unordered pairs of 2-frequency colours occupying rectangle corners.

    The first colour sits at (rows[0], cols[0]) and (rows[1], cols[1]); the
    second at the two remaining corners.
    """
    profile = frequency_profile(m)
    positions: dict[int, list[tuple[int, int]]] = {
        cid: [] for cid in profile.colours_at(2)
    }
    for i, row in enumerate(m.entries):
        for j, e in enumerate(row):
            if e in positions:
                positions[e].append((i, j))
    by_rect: dict[tuple[tuple[int, int], tuple[int, int]], list[int]] = {}
    for cid, ((i1, j1), (i2, j2)) in positions.items():
        if i1 == i2 or j1 == j2:
            continue  # improper matrix; no rectangle
        key = ((min(i1, i2), max(i1, i2)), (min(j1, j2), max(j1, j2)))
        by_rect.setdefault(key, []).append(cid)
    found: list[XConfiguration] = []
    for (rows, cols), ids in sorted(by_rect.items()):
        if len(ids) != 2:
            continue
        a, b = sorted(ids)
        pos_a = sorted(positions[a])
        # diagonal check: the two colours must interleave on the four corners
        main = [(rows[0], cols[0]), (rows[1], cols[1])]
        anti = [(rows[0], cols[1]), (rows[1], cols[0])]
        if pos_a == main and sorted(positions[b]) == anti:
            found.append(XConfiguration((a, b), rows, cols))
        elif pos_a == anti and sorted(positions[b]) == main:
            found.append(XConfiguration((b, a), rows, cols))
    return found


@dataclass(frozen=True)
class SetType:
    """Multiset signature of per-column intersection sizes of a colour set.

    signature is a decreasing list of (size, multiplicity) pairs; columns with
    empty intersection are omitted.
    """

    signature: tuple[tuple[int, int], ...]

    def total(self) -> int:
        return sum(size * mult for size, mult in self.signature)

    def __str__(self) -> str:
        return " ".join(f"{size}^{mult}" for size, mult in self.signature)


def set_type(m: ColourMatrix, colours: frozenset[int] | set[int]) -> SetType:
    if not colours:
        raise ValueError("set type of the empty colour set is undefined")
    wanted = set(colours)
    sizes: dict[int, int] = {}
    for j in range(m.q):
        hit = len(wanted & {row[j] for row in m.entries})
        if hit:
            sizes[hit] = sizes.get(hit, 0) + 1
    return SetType(tuple(sorted(sizes.items(), reverse=True)))


@dataclass(frozen=True)
class Matching:
    """A perfect matching of the complete 3+3 bipartite row graph."""

    edges: tuple[tuple[int, int], ...]
    weight: int


@dataclass(frozen=True)
class AuxGraph:
    """Row graph of a matrix: rows are vertices, an edge {i,k} carries the
    number of 2-frequency colours shared by rows i and k (edges with label 0
    are absent)."""

    p: int
    edges: dict[tuple[int, int], int]
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    matchings: tuple[Matching, ...] | None
    matching_support: str  # "ok" or the reason matchings are unavailable

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        deg = [0] * self.p
        for i, k in self.edges:
            deg[i] += 1
            deg[k] += 1
        return tuple(sorted(deg, reverse=True))

    def label(self, i: int, k: int) -> int:
        return self.edges.get((min(i, k), max(i, k)), 0)


def _find_balanced_bipartition(
    p: int, edges: dict[tuple[int, int], int]
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    if p != 6:
        return None
    rest = range(1, 6)
    for half in combinations(rest, 2):
        part_a = (0,) + half
        part_b = tuple(v for v in range(6) if v not in part_a)
        if all((i in part_a) != (k in part_a) for i, k in edges):
            return part_a, part_b
    return None


def aux_graph(m: ColourMatrix) -> AuxGraph:
    """Build the row graph; for 6 rows with a balanced bipartition, also list
    the six perfect matchings of the complete bipartite closure with their
    label weights."""
    stats = line_stats(m)
    edges: dict[tuple[int, int], int] = {}
    for i, k in combinations(range(m.p), 2):
        r = stats.row_pair(i, k)
        if r >= 1:
            edges[(i, k)] = r
    bipartition = _find_balanced_bipartition(m.p, edges)
    matchings: tuple[Matching, ...] | None = None
    if m.p != 6:
        support = "matching analytics requires a 6-row matrix"
    elif bipartition is None:
        support = "row graph is not bipartite with balanced 3+3 parts"
    else:
        part_a, part_b = bipartition
        collected = []
        for perm in permutations(range(3)):
            pairs = tuple(
                (min(part_a[t], part_b[perm[t]]), max(part_a[t], part_b[perm[t]]))
                for t in range(3)
            )
            weight = sum(edges.get(pair, 0) for pair in pairs)
            collected.append(Matching(pairs, weight))
        matchings = tuple(collected)
        support = "ok"
    return AuxGraph(m.p, edges, bipartition, matchings, support)


SUITE_NAMES = (
    "no_single_frequency_colours",
    "no_frequency_above_six",
    "two_frequency_lower_bound",
    "three_plus_upper_bound",
    "weighted_mid_frequency_bound",
    "min_frequency_is_two",
    "matrix_excess_is_seven_minus_s",
    "four_plus_upper_bound",
    "row_pair_upper_bound",
)


@dataclass(frozen=True)
class SuiteCheck:
    name: str
    holds: bool
    observed: int
    bound: int
    relation: str  # "==", "<=", ">="


def lemma_plus_m_suite(m: ColourMatrix, s: int | None = None) -> list[SuiteCheck]:
    """The nine frequency/excess identities that every 6-row member with
    q >= 7 columns and 2q+s colours satisfies (s in [0,7]).

    On a non-member the checks still evaluate; failures then localize what is
    broken, which makes the suite double as a corruption detector.
    """
    n = len(m.palette)
    if m.p != 6:
        raise ValueError(f"suite requires 6 rows, got {m.p}")
    if m.q < 7:
        raise ValueError(f"suite requires q >= 7, got {m.q}")
    inferred = n - 2 * m.q
    if s is None:
        s = inferred
    if not 0 <= s <= 7:
        raise ValueError(f"s must be in [0,7], got {s}")
    if s != inferred:
        raise ValueError(
            f"palette size {n} is 2q+{inferred}, inconsistent with s={s}"
        )
    profile = frequency_profile(m)
    exc = excess_profile(m, profile)
    stats = line_stats(m)
    q = m.q
    c2 = profile.c(2)
    weighted_mid = sum(l * profile.c(l) for l in range(3, 7))
    max_row_pair = max(
        stats.row_pair(i, k) for i, k in combinations(range(6), 2)
    )
    checks = [
        SuiteCheck(SUITE_NAMES[0], profile.c(1) == 0, profile.c(1), 0, "=="),
        SuiteCheck(SUITE_NAMES[1], profile.c_plus(7) == 0, profile.c_plus(7), 0, "=="),
        SuiteCheck(SUITE_NAMES[2], c2 >= 3 * s, c2, 3 * s, ">="),
        SuiteCheck(
            SUITE_NAMES[3],
            profile.c_plus(3) <= 2 * q - 2 * s,
            profile.c_plus(3),
            2 * q - 2 * s,
            "<=",
        ),
        SuiteCheck(
            SUITE_NAMES[4],
            weighted_mid <= 6 * q - 6 * s,
            weighted_mid,
            6 * q - 6 * s,
            "<=",
        ),
        SuiteCheck(
            SUITE_NAMES[5],
            profile.min_frequency == 2,
            profile.min_frequency,
            2,
            "==",
        ),
        SuiteCheck(
            SUITE_NAMES[6],
            exc.matrix_excess == 7 - s,
            exc.matrix_excess,
            7 - s,
            "==",
        ),
        SuiteCheck(
            SUITE_NAMES[7],
            profile.c_plus(4) <= c2 - 3 * s,
            profile.c_plus(4),
            c2 - 3 * s,
            "<=",
        ),
        SuiteCheck(
            SUITE_NAMES[8],
            max_row_pair <= 8 - s,
            max_row_pair,
            8 - s,
            "<=",
        ),
    ]
    return checks


def stats_report(
    m: ColourMatrix,
    suite_s: int | None = None,
    run_suite: bool = False,
    extra_coverage: list[frozenset[int]] | None = None,
) -> dict:
    """The full JSON-serializable diagnostics report.

    Keys, in stable order: frequency, excess, line_stats, coverage_queries,
    x_configurations, aux_graph, lemma_plus_m.  All values are integers,
    strings or booleans; colours appear as palette tokens; rows and columns
    are printed 1-based.
    """
    tok = m.palette.token
    profile = frequency_profile(m)
    exc = excess_profile(m, profile)
    stats = line_stats(m)

    levels = sorted(profile.classes)
    frequency = {
        "per_colour": {tok(cid): f for cid, f in enumerate(profile.freq)},
        "classes": {str(l): [tok(c) for c in profile.colours_at(l)] for l in levels},
        "class_sizes": {str(l): profile.c(l) for l in levels},
        "cumulative_sizes": {str(l): profile.c_plus(l) for l in levels},
        "min_frequency": profile.min_frequency,
    }
    excess = {
        "per_colour": {tok(cid): e for cid, e in enumerate(exc.exc)},
        "matrix_excess": exc.matrix_excess,
        "negative_colours": [tok(c) for c in exc.negative_colours],
    }
    line_block = {
        "rows": [
            {
                "row": i + 1,
                "by_level": {str(l): stats.row_level_count(i, l) for l in levels},
            }
            for i in range(m.p)
        ],
        "columns": [
            {
                "column": j + 1,
                "by_level": {str(l): stats.col_level_count(j, l) for l in levels},
            }
            for j in range(m.q)
        ],
        "row_pair_two_colour_counts": [
            {"rows": [i + 1, k + 1], "count": stats.row_pair(i, k)}
            for i, k in combinations(range(m.p), 2)
        ],
        "row_triple_three_colour_counts": [
            {"rows": [i + 1, j + 1, k + 1], "count": stats.row_triple(i, j, k)}
            for i, j, k in combinations(range(m.p), 3)
        ],
        "column_pair_two_colour_counts": [
            {"columns": [a + 1, b + 1], "count": stats.col_pair(a, b)}
            for a, b in combinations(range(m.q), 2)
            if stats.col_pair(a, b) > 0
        ],
        "rows_of_colour": {
            tok(cid): [i + 1 for i in stats.rows_of(cid)]
            for cid in range(len(m.palette))
        },
    }
    queries = [frozenset(profile.colours_at(l)) for l in levels]
    queries += extra_coverage or []
    coverage_block = []
    for colour_set in queries:
        cov = coverage(m, colour_set)
        coverage_block.append(
            {
                "colours": sorted(tok(c) for c in colour_set),
                "columns": sorted(j + 1 for j in cov.columns),
                "size": cov.size,
            }
        )
    x_block = [
        {
            "pair": [tok(x.pair[0]), tok(x.pair[1])],
            "rows": [x.rows[0] + 1, x.rows[1] + 1],
            "columns": [x.cols[0] + 1, x.cols[1] + 1],
        }
        for x in x_configurations(m)
    ]
    graph = aux_graph(m)
    graph_block = {
        "vertices": list(range(1, m.p + 1)),
        "edges": [
            {"rows": [i + 1, k + 1], "label": label}
            for (i, k), label in sorted(graph.edges.items())
        ],
        "degree_sequence": list(graph.degree_sequence),
        "bipartition": (
            None
            if graph.bipartition is None
            else [[v + 1 for v in part] for part in graph.bipartition]
        ),
        "perfect_matchings": (
            None
            if graph.matchings is None
            else [
                {
                    "edges": [[i + 1, k + 1] for i, k in mt.edges],
                    "weight": mt.weight,
                }
                for mt in graph.matchings
            ]
        ),
        "matching_support": graph.matching_support,
    }
    suite_block = None
    if run_suite:
        checks = lemma_plus_m_suite(m, suite_s)
        suite_block = {
            "s": suite_s if suite_s is not None else len(m.palette) - 2 * m.q,
            "assertions": [
                {
                    "name": c.name,
                    "holds": c.holds,
                    "observed": c.observed,
                    "relation": c.relation,
                    "bound": c.bound,
                }
                for c in checks
            ],
            "all_hold": all(c.holds for c in checks),
        }
    return {
        "p": m.p,
        "q": m.q,
        "palette_size": len(m.palette),
        "frequency": frequency,
        "excess": excess,
        "line_stats": line_block,
        "coverage_queries": coverage_block,
        "x_configurations": x_block,
        "aux_graph": graph_block,
        "lemma_plus_m": suite_block,
    }
