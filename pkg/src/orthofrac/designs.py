"""Full factorial designs, fractions, margin counts, strength, J-statistics.

Runs of the full factorial are indexed lexicographically in the index
vector with the last factor varying fastest; every file format and
canonical ordering in the package relies on that convention.
"""

from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence


class ShapeMismatchError(ValueError):
    """Design and ambient (or operation requirement) shapes disagree."""


class NonTwoLevelFactorError(ValueError):
    """A J-statistic was requested for a factor whose levels are not {-1, 1}."""


def default_levels(arity: int) -> tuple[Fraction, ...]:
    """Symmetric integer level sets: 2 -> (-1, 1), 3 -> (-1, 0, 1), 4 -> (-3, -1, 1, 3)."""
    if arity < 2:
        raise ValueError("factors need at least 2 levels")
    if arity % 2:
        return tuple(Fraction(v) for v in range(-(arity // 2), arity // 2 + 1))
    return tuple(Fraction(2 * i - (arity - 1)) for i in range(arity))


@dataclass(frozen=True)
class FactorSpec:
    """Ordered level set of one factor."""

    levels: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.levels) < 2:
            raise ValueError("factors need at least 2 levels")
        if len(set(self.levels)) != len(self.levels):
            raise ValueError("levels must be distinct")
        if not all(isinstance(v, Fraction) for v in self.levels):
            object.__setattr__(self, "levels", tuple(Fraction(v) for v in self.levels))

    @property
    def arity(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class FullFactorial:
    """The ambient design: the product of its factors' level sets."""

    factors: tuple[FactorSpec, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("need at least one factor")

    @property
    def n_factors(self) -> int:
        return len(self.factors)

    @property
    def radices(self) -> tuple[int, ...]:
        return tuple(f.arity for f in self.factors)

    @property
    def run_count(self) -> int:
        return prod(self.radices)

    def decode(self, run: int) -> tuple[int, ...]:
        """Run index -> index vector (last factor fastest)."""
        if not 0 <= run < self.run_count:
            raise IndexError(f"run {run} out of range")
        out = []
        for r in reversed(self.radices):
            run, d = divmod(run, r)
            out.append(d)
        return tuple(reversed(out))

    def encode(self, index_vector: Sequence[int]) -> int:
        run = 0
        for d, r in zip(index_vector, self.radices):
            if not 0 <= d < r:
                raise IndexError(f"index {d} out of range for arity {r}")
            run = run * r + d
        return run


def full_factorial(arities: Iterable[int]) -> FullFactorial:
    """Ambient with default symmetric levels, e.g. full_factorial([2, 2, 2, 2, 3])."""
    return FullFactorial(tuple(FactorSpec(default_levels(r)) for r in arities))


def from_level_sets(level_sets: Iterable[Iterable]) -> FullFactorial:
    return FullFactorial(tuple(FactorSpec(tuple(Fraction(v) for v in ls)) for ls in level_sets))


def run_point(ambient: FullFactorial, run: int) -> tuple[Fraction, ...]:
    """The design point of a run index."""
    iv = ambient.decode(run)
    return tuple(f.levels[d] for f, d in zip(ambient.factors, iv))


@lru_cache(maxsize=None)
def all_points(ambient: FullFactorial) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(run_point(ambient, i) for i in range(ambient.run_count))


@dataclass(frozen=True)
class Design:
    """A fraction of the ambient factorial: a set of runs, kept sorted."""

    ambient: FullFactorial
    runs: tuple[int, ...]

    def __post_init__(self):
        m = self.ambient.run_count
        prev = -1
        for r in self.runs:
            if not 0 <= r < m:
                raise IndexError(f"run {r} out of range")
            if r <= prev:
                raise ValueError("runs must be strictly increasing (no repeats)")
            prev = r

    @classmethod
    def from_runs(cls, ambient: FullFactorial, runs: Iterable[int]) -> "Design":
        runs = list(runs)
        ordered = sorted(runs)
        if len(set(ordered)) != len(runs):
            raise ValueError("repeated runs are not allowed")
        return cls(ambient, tuple(ordered))

    @property
    def size(self) -> int:
        return len(self.runs)

    def points(self) -> list[tuple[Fraction, ...]]:
        pts = all_points(self.ambient)
        return [pts[r] for r in self.runs]

    def membership(self) -> list[int]:
        y = [0] * self.ambient.run_count
        for r in self.runs:
            y[r] = 1
        return y


def full_design(ambient: FullFactorial) -> Design:
    return Design(ambient, tuple(range(ambient.run_count)))


@dataclass
class MarginTable:
    """Occurrence counts of every level combination of a factor subset."""

    factor_subset: tuple[int, ...]
    counts: dict[tuple[Fraction, ...], int]

    def is_uniform(self) -> bool:
        values = set(self.counts.values())
        return len(values) <= 1


def margins(design: Design, factor_subset: Sequence[int]) -> MarginTable:
    """Exact counts of each level combination of the given factors."""
    if not factor_subset:
        raise ValueError("factor subset must be nonempty")
    subset = tuple(factor_subset)
    factors = design.ambient.factors
    counts: dict[tuple[Fraction, ...], int] = {
        combo: 0 for combo in itertools.product(*(factors[j].levels for j in subset))
    }
    for pt in design.points():
        counts[tuple(pt[j] for j in subset)] += 1
    return MarginTable(subset, counts)


def has_strength(design: Design, t: int) -> bool:
    """True iff every t-subset of factors shows all level combinations equally often.

    Balance for size-t subsets implies balance for all smaller subsets by
    marginalization, so only |J| = t is checked.
    """
    n = design.ambient.n_factors
    if not 1 <= t <= n:
        raise ValueError(f"strength must be in 1..{n}")
    for subset in itertools.combinations(range(n), t):
        if not margins(design, subset).is_uniform():
            return False
    return True


def j_statistic(design: Design, factor_subset: Sequence[int]) -> int:
    """Sum over the design's runs of the product of the +-1 coordinates in the subset."""
    subset = tuple(factor_subset)
    factors = design.ambient.factors
    for j in subset:
        if set(factors[j].levels) != {Fraction(-1), Fraction(1)}:
            raise NonTwoLevelFactorError(f"factor {j} does not have levels {{-1, 1}}")
    total = 0
    for pt in design.points():
        sign = 1
        for j in subset:
            sign *= 1 if pt[j] > 0 else -1
        total += sign
    return total


def supports_triple_invariant(ambient: FullFactorial) -> bool:
    """Ambient shaped as four {-1,1} factors followed by one three-level factor."""
    if ambient.n_factors != 5:
        return False
    two = {Fraction(-1), Fraction(1)}
    if any(set(f.levels) != two for f in ambient.factors[:4]):
        return False
    return ambient.factors[4].arity == 3


def invariant_triple(design: Design) -> tuple[int, tuple[int, int, int, int], int]:
    """Symmetry invariants of a 24-run fraction of the 2x2x2x2x3 ambient.

    Returns (T1, J, T2) where T1 is the number of unbalanced triples of
    two-level factors, J the descending absolute J-statistics of those four
    triples, and T2 the number of pairs (x_i, x_j) whose margins together
    with the three-level factor are not all equal.
    """
    if not supports_triple_invariant(design.ambient):
        raise ShapeMismatchError("ambient is not 2x2x2x2x3 shaped")
    if design.size != 24:
        raise ShapeMismatchError("invariants are defined for 24-run fractions")
    t1 = 0
    j_values = []
    for triple in itertools.combinations(range(4), 3):
        if not margins(design, triple).is_uniform():
            t1 += 1
        j_values.append(abs(j_statistic(design, triple)))
    t2 = 0
    for pair in itertools.combinations(range(4), 2):
        if not margins(design, pair + (4,)).is_uniform():
            t2 += 1
    jset = tuple(sorted(j_values, reverse=True))
    return t1, jset, t2


def save_design_csv(design: Design, path) -> None:
    """Write one run per row with exact level values, header x1..xn."""
    n = design.ambient.n_factors
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"x{j + 1}" for j in range(n)])
        for pt in design.points():
            writer.writerow([str(v) for v in pt])


def load_design_csv(path, ambient: FullFactorial) -> Design:
    """Read a design file; rows may be in any order and are canonicalized.

    Duplicate rows are rejected: fractions are sets of runs.
    """
    point_index = {pt: i for i, pt in enumerate(all_points(ambient))}
    n = ambient.n_factors
    runs = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != [f"x{j + 1}" for j in range(n)]:
            raise ValueError(f"expected header x1,...,x{n}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != n:
                raise ValueError(f"line {lineno}: expected {n} values")
            try:
                pt = tuple(Fraction(v.strip()) for v in row)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"line {lineno}: bad level value ({exc})") from None
            run = point_index.get(pt)
            if run is None:
                raise ValueError(f"line {lineno}: point {row} is not in the ambient design")
            runs.append(run)
    return Design.from_runs(ambient, runs)
