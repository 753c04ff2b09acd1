"""Exact minimum guard selection.

The pipeline is: classify vertices, compute the visibility relation, build
the permuted cover matrix, then run the standard-greedy-form greedy: scan
rows top to bottom and, whenever a row is still uncovered, pick the highest
index column with a one in it.  On a matrix free of the [[1,1],[1,0]]
pattern that column dominates every alternative for all later rows, so the
scan returns a minimum cover.  A brute-force subset-enumeration oracle is
kept alongside as the independent correctness reference.

Terrains where some convex vertex is seen by no reflex vertex at all have
no cover; those come back as an InfeasibilityReport rather than an error,
optionally with a best-possible solution for the guardable subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .covermatrix import CoverMatrix, Violation, build, find_greedy_form_violation
from .geometry import Terrain
from .visibility import visibility_relation

BRUTE_FORCE_COLUMN_LIMIT = 25


class EmptyRow(ValueError):
    """Row ``row`` (labelled ``label``) has no one: no guard covers it."""

    def __init__(self, row: int, label: int | None = None):
        name = f"row {row}" if label is None else f"row {row} (vertex {label})"
        super().__init__(f"{name} has no covering column")
        self.row = row
        self.label = label


class NotGreedyForm(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(f"matrix contains forbidden pattern at {violation}")
        self.violation = violation


class TooManyColumns(ValueError):
    pass


@dataclass(frozen=True)
class GuardSolution:
    """Minimum guard set with a per-target witness.

    ``guards`` are reflex vertex indices in chain order; ``assignment`` maps
    every covered convex vertex to the guard that first covered it in greedy
    choice order.  ``size`` is the proven-minimum cardinality.
    """

    guards: tuple[int, ...]
    assignment: dict[int, int]

    @property
    def size(self) -> int:
        return len(self.guards)


@dataclass(frozen=True)
class InfeasibilityReport:
    """Convex vertices no reflex vertex sees, in chain order.

    ``partial`` carries the optimum over the guardable subset when solve was
    asked for it, else None.
    """

    unguardable: tuple[int, ...]
    partial: GuardSolution | None = None


def _greedy_scan(m: CoverMatrix, check_form: bool) -> tuple[list[int], dict[int, int]]:
    """Chosen columns in choice order plus row -> first covering chosen column."""

    if check_form:
        violation = find_greedy_form_violation(m)
        if violation is not None:
            raise NotGreedyForm(violation)
    for i, row in enumerate(m.rows):
        if row == 0:
            raise EmptyRow(i, m.row_labels[i])
    chosen: list[int] = []
    chosen_mask = 0
    first_cover: dict[int, int] = {}
    for i, row in enumerate(m.rows):
        if row & chosen_mask:
            for j in chosen:
                if (row >> j) & 1:
                    first_cover[i] = j
                    break
        else:
            j = row.bit_length() - 1
            chosen.append(j)
            chosen_mask |= 1 << j
            first_cover[i] = j
    return chosen, first_cover


def greedy_cover(m: CoverMatrix, check_form: bool = True) -> frozenset[int]:
    """Minimum-cardinality column cover of a standard-greedy-form matrix.

    ``check_form`` runs the defensive pattern check first; turn it off only
    when the matrix is known clean and speed matters.
    """

    chosen, _ = _greedy_scan(m, check_form)
    return frozenset(chosen)


def brute_force_optimum(m: CoverMatrix) -> tuple[int, tuple[int, ...]]:
    """Exact minimum cover by exhaustive search, smallest cardinality first.

    Returns (size, witness) with the lexicographically smallest witness at
    the optimal size.  Independent of the greedy path on purpose: this is
    the oracle the greedy is tested against.
    """

    kp = m.k_prime
    if kp > BRUTE_FORCE_COLUMN_LIMIT:
        raise TooManyColumns(f"{kp} columns exceeds brute-force limit {BRUTE_FORCE_COLUMN_LIMIT}")
    for i, row in enumerate(m.rows):
        if row == 0:
            raise EmptyRow(i, m.row_labels[i])
    if not m.rows:
        return 0, ()
    for size in range(1, kp + 1):
        for cols in combinations(range(kp), size):
            mask = 0
            for j in cols:
                mask |= 1 << j
            if all(row & mask for row in m.rows):
                return size, cols
    raise AssertionError("full column set must cover once empty rows are excluded")


def solve(
    t: Terrain, allow_partial: bool = False, check_form: bool = True
) -> GuardSolution | InfeasibilityReport:
    """Minimum reflex guard set covering every convex vertex of the terrain.

    Infeasible terrains return an InfeasibilityReport; with ``allow_partial``
    it additionally carries the optimum over the guardable convex vertices.
    The result is a pure function of the terrain, deterministic down to
    iteration order.
    """

    m = build(t, visibility_relation(t))
    empties = [i for i, row in enumerate(m.rows) if row == 0]
    if empties:
        unguardable = tuple(sorted(m.row_labels[i] for i in empties))
        partial = None
        if allow_partial:
            keep = [i for i, row in enumerate(m.rows) if row]
            sub = CoverMatrix(
                tuple(m.rows[i] for i in keep),
                tuple(m.row_labels[i] for i in keep),
                m.col_labels,
            )
            partial = _solution_from_matrix(sub, check_form)
        return InfeasibilityReport(unguardable, partial)
    return _solution_from_matrix(m, check_form)


def _solution_from_matrix(m: CoverMatrix, check_form: bool) -> GuardSolution:
    chosen, first_cover = _greedy_scan(m, check_form)
    guards = tuple(sorted(m.col_labels[j] for j in chosen))
    assignment = {
        m.row_labels[i]: m.col_labels[first_cover[i]] for i in range(m.k)
    }
    assignment = dict(sorted(assignment.items()))
    return GuardSolution(guards, assignment)
