"""Exact existence search for complete-colouring certificates at desk scale.

`exists_matrix` decides whether some p x q matrix over exactly n colours has
distinct lines and full pair coverage, by backtracking over cells in
row-major order with canonical-form symmetry breaking:

  * the first row is fixed to colours 0..q-1;
  * colours are numbered by first occurrence in the row-major scan;
  * first-column ids strictly increase down the rows.

These three rules are jointly attainable for every member: renaming colours
by first occurrence realizes the first two, and ordering the remaining rows
greedily by the first occurrence of their first-column colour realizes the
third (each chosen colour first occurs no later than (row, 0), so first
occurrences, and hence ids, increase down the first column).  UNSAT under
the reduced search therefore certifies true nonexistence; `naive_oracle`
re-derives the same predicate by unreduced partition enumeration.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .matrix import ColourMatrix, verify_membership


class SearchStatus(Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"


@dataclass(frozen=True)
class SearchProblem:
    """One existence question: a p x q matrix over exactly n colours."""

    p: int
    q: int
    n: int
    node_budget: int | None = None
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError("dimensions must be positive")
        if self.n < max(self.p, self.q):
            raise ValueError(
                f"n={self.n} below max(p,q)={max(self.p, self.q)}: "
                "every line needs distinct colours"
            )
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node budget must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    witness: ColourMatrix | None
    nodes_explored: int
    branch_nodes: tuple[int, ...] = ()


class _BudgetExhausted(Exception):
    pass


class _Aborted(Exception):
    pass


def min_feasible_frequency(p: int, q: int, n: int) -> int | None:
    """Smallest frequency a colour can have in a member with n colours, or
    None when no frequency level has non-negative slack (instant UNSAT)."""
    for l in range(1, min(p, q) + 1):
        if l * (p + q - l - 1) >= n - 1:
            return l
    return None


class _Search:
    """One backtracking run; state is mutated in place with explicit undo."""

    def __init__(
        self,
        problem: SearchProblem,
        budget: int | None,
        stop: threading.Event | None = None,
    ):
        p, q, n = problem.p, problem.q, problem.n
        self.p, self.q, self.n = p, q, n
        self.cells = p * q
        self.budget = budget
        self.stop = stop
        self.nodes = 0
        self.l_min = min_feasible_frequency(p, q, n)
        self.grid = [[-1] * q for _ in range(p)]
        self.row_mask = [0] * p
        self.col_mask = [0] * q
        self.row_fill = [0] * p
        self.col_fill = [0] * q
        self.covered = [0] * n
        self.uncovered = n * (n - 1) // 2
        self.capacity = p * (q * (q - 1) // 2) + q * (p * (p - 1) // 2)
        self.count = [0] * n
        self.introduced = 0
        self.deficit = n * (self.l_min or 0)
        self.witness: ColourMatrix | None = None

    # -- feasibility that needs no search -----------------------------------
    def infeasible_upfront(self) -> bool:
        if self.l_min is None:
            return True
        # with minimum frequency l every colour eats l cells
        return self.n > self.cells // self.l_min

    # -- incremental state ---------------------------------------------------
    def place(self, i: int, j: int, c: int) -> int:
        """Set cell (i,j) to colour c; returns the newly covered pair mask."""
        new_pairs = (self.row_mask[i] | self.col_mask[j]) & ~self.covered[c]
        if new_pairs:
            self.covered[c] |= new_pairs
            bit_c = 1 << c
            mask = new_pairs
            while mask:
                low = mask & -mask
                self.covered[low.bit_length() - 1] |= bit_c
                mask ^= low
            self.uncovered -= new_pairs.bit_count()
        self.grid[i][j] = c
        bit = 1 << c
        self.row_mask[i] |= bit
        self.col_mask[j] |= bit
        self.row_fill[i] += 1
        self.col_fill[j] += 1
        self.capacity -= self.row_fill[i] - 1 + self.col_fill[j] - 1
        self.count[c] += 1
        if self.count[c] == 1:
            self.introduced += 1
        if self.count[c] <= self.l_min:
            self.deficit -= 1
        return new_pairs

    def unplace(self, i: int, j: int, c: int, new_pairs: int) -> None:
        if self.count[c] <= self.l_min:
            self.deficit += 1
        self.count[c] -= 1
        if self.count[c] == 0:
            self.introduced -= 1
        self.capacity += self.row_fill[i] - 1 + self.col_fill[j] - 1
        self.row_fill[i] -= 1
        self.col_fill[j] -= 1
        bit = 1 << c
        self.row_mask[i] ^= bit
        self.col_mask[j] ^= bit
        self.grid[i][j] = -1
        if new_pairs:
            self.covered[c] &= ~new_pairs
            clear = ~bit
            mask = new_pairs
            while mask:
                low = mask & -mask
                self.covered[low.bit_length() - 1] &= clear
                mask ^= low
            self.uncovered += new_pairs.bit_count()

    # -- pruning -------------------------------------------------------------
    def row_start_feasible(self, i: int) -> bool:
        rows_left = self.p - i
        if self.introduced < self.n and self.l_min > rows_left:
            return False
        for c in range(self.introduced):
            need = self.l_min - self.count[c]
            if need > 0 and (need > rows_left or need > self.q - self.count[c]):
                return False
        return True

    # -- search --------------------------------------------------------------
    def run(self, seed: list[int]) -> SearchStatus:
        """Search with the first len(seed) cells forced to the given colours."""
        if self.infeasible_upfront():
            return SearchStatus.UNSAT
        try:
            for t, c in enumerate(seed):
                i, j = divmod(t, self.q)
                self.nodes += 1
                self.place(i, j, c)
            if self.extend(len(seed)):
                return SearchStatus.SAT
            return SearchStatus.UNSAT
        except _BudgetExhausted:
            return SearchStatus.BUDGET_EXHAUSTED

    def extend(self, t: int) -> bool:
        if self.stop is not None and self.stop.is_set():
            raise _Aborted
        if t == self.cells:
            if self.introduced == self.n and self.uncovered == 0:
                self.witness = ColourMatrix.from_ids(
                    [tuple(row) for row in self.grid]
                )
                return True
            return False
        i, j = divmod(t, self.q)
        if j == 0 and i >= 1 and not self.row_start_feasible(i):
            return False
        for c in self.candidates(i, j):
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise _BudgetExhausted
            new_pairs = self.place(i, j, c)
            ok = (
                self.uncovered <= self.capacity
                and self.deficit <= self.cells - t - 1
                and self.extend(t + 1)
            )
            self.unplace(i, j, c, new_pairs)
            if ok:
                return True
        return False

    def candidates(self, i: int, j: int) -> list[int]:
        if i == 0:
            return [j]  # first row forced to 0..q-1
        used = self.row_mask[i] | self.col_mask[j]
        lo = self.grid[i - 1][0] + 1 if j == 0 else 0
        options = [c for c in range(lo, self.introduced) if not used >> c & 1]
        if self.introduced < self.n:
            options.append(self.introduced)  # one fresh colour, next id
        return options


def _first_branch_seeds(problem: SearchProblem) -> list[list[int]]:
    """Seeds covering the forced first row plus each option at cell (1, 0)."""
    q, n = problem.q, problem.n
    first_row = list(range(q))
    options = list(range(1, q))
    if q < n:
        options.append(q)
    return [first_row + [c] for c in options]


def exists_matrix(
    problem: SearchProblem,
    jobs: int = 1,
    warm_start: ColourMatrix | None = None,
) -> SearchOutcome:
    """Decide whether the certificate set for (p, q, n) is non-empty.

    SAT comes with a verified witness of palette size exactly n; UNSAT means
    the symmetry-reduced space was exhausted.  An optional warm start (a
    known member of the right shape) short-circuits the search.  With
    jobs > 1 and deterministic=False the top-level branches run on threads;
    the node budget is then split evenly across branches and total node
    counts may differ from a sequential run.
    """
    if warm_start is not None:
        if (
            warm_start.p != problem.p
            or warm_start.q != problem.q
            or len(warm_start.palette) != problem.n
        ):
            raise ValueError("warm start has the wrong shape or palette size")
        if not verify_membership(warm_start).member:
            raise ValueError("warm start is not a member")
        return SearchOutcome(SearchStatus.SAT, warm_start, 0)

    if problem.p == 1 or problem.q == 1 or problem.deterministic or jobs <= 1:
        search = _Search(problem, problem.node_budget)
        status = search.run([])
        return SearchOutcome(status, search.witness, search.nodes, (search.nodes,))

    seeds = _first_branch_seeds(problem)
    jobs = max(1, min(jobs, len(seeds)))
    per_branch_budget = (
        None if problem.node_budget is None else max(1, problem.node_budget // len(seeds))
    )
    stop = threading.Event()
    searches = [_Search(problem, per_branch_budget, stop) for _ in seeds]

    def run_branch(k: int) -> SearchStatus:
        try:
            status = searches[k].run(seeds[k])
        except _Aborted:
            return SearchStatus.UNSAT  # another branch already found a witness
        if status is SearchStatus.SAT:
            stop.set()
        return status

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        statuses = list(pool.map(run_branch, range(len(seeds))))

    branch_nodes = tuple(s.nodes for s in searches)
    total = sum(branch_nodes)
    for k, status in enumerate(statuses):
        if status is SearchStatus.SAT:
            return SearchOutcome(SearchStatus.SAT, searches[k].witness, total, branch_nodes)
    if any(s is SearchStatus.BUDGET_EXHAUSTED for s in statuses):
        return SearchOutcome(SearchStatus.BUDGET_EXHAUSTED, None, total, branch_nodes)
    return SearchOutcome(SearchStatus.UNSAT, None, total, branch_nodes)


@dataclass(frozen=True)
class AchromaticResult:
    value: int
    witness: ColourMatrix
    certified: bool  # True when value+1 was proved UNSAT or hits a formula cap
    nodes_explored: int


def achromatic_exact(
    p: int,
    q: int,
    node_budget: int | None = None,
    jobs: int = 1,
    deterministic: bool = True,
) -> AchromaticResult:
    """Largest n with a non-empty certificate set, by upward interval search.

    Feasible palette sizes form a gap-free interval starting at max(p,q)
    (the cyclic colouring), so scanning upward and stopping at the first
    UNSAT is sound.  On budget exhaustion the best certified lower bound is
    returned with certified=False.
    """
    from .bounds import cyclic_matrix, generic_upper

    start = max(p, q)
    best_witness = cyclic_matrix(p, q)
    best = start
    cap = min(generic_upper(p, q), p * q)
    total_nodes = 0
    n = start + 1
    while n <= cap:
        problem = SearchProblem(
            p, q, n, node_budget=node_budget, deterministic=deterministic
        )
        outcome = exists_matrix(problem, jobs=jobs)
        total_nodes += outcome.nodes_explored
        if outcome.status is SearchStatus.SAT:
            best, best_witness = n, outcome.witness
            n += 1
        elif outcome.status is SearchStatus.UNSAT:
            return AchromaticResult(best, best_witness, True, total_nodes)
        else:
            return AchromaticResult(best, best_witness, False, total_nodes)
    return AchromaticResult(best, best_witness, True, total_nodes)


_NAIVE_CAP = 12


@lru_cache(maxsize=None)
def _feasible_palette_sizes(p: int, q: int) -> frozenset[int]:
    """All n for which a member exists, by unreduced partition enumeration.

    Every proper colouring, up to colour names, is one partition of the cells
    into classes that repeat no row or column; restricted-growth enumeration
    visits each partition exactly once, with no row/column symmetry breaking
    and none of the search prunes.  Each full partition is materialized as a
    matrix and filtered by verify_membership.
    """
    cells = p * q
    assign = [[-1] * q for _ in range(p)]
    class_rows: list[int] = []
    class_cols: list[int] = []
    feasible: set[int] = set()

    def recurse(t: int) -> None:
        if t == cells:
            k = len(class_rows)
            if k not in feasible:
                m = ColourMatrix.from_ids([tuple(row) for row in assign])
                if verify_membership(m).member:
                    feasible.add(k)
            return
        i, j = divmod(t, q)
        bit_r, bit_c = 1 << i, 1 << j
        for c in range(len(class_rows)):
            if not (class_rows[c] & bit_r or class_cols[c] & bit_c):
                class_rows[c] |= bit_r
                class_cols[c] |= bit_c
                assign[i][j] = c
                recurse(t + 1)
                class_rows[c] ^= bit_r
                class_cols[c] ^= bit_c
        class_rows.append(bit_r)
        class_cols.append(bit_c)
        assign[i][j] = len(class_rows) - 1
        recurse(t + 1)
        class_rows.pop()
        class_cols.pop()
        assign[i][j] = -1

    recurse(0)
    return frozenset(feasible)


def naive_oracle(p: int, q: int, n: int) -> bool:
    """Ground truth for exists_matrix on small grids (p*q <= 12)."""
    if p * q > _NAIVE_CAP:
        raise ValueError(f"oracle capped at p*q <= {_NAIVE_CAP}, got {p * q}")
    return n in _feasible_palette_sizes(p, q)
