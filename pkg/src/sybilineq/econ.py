"""Economy model: wealth distributions, report and aggregation matrices,
manipulations, and deterministic seeded generators.

All types are immutable after construction and safe to share across
threads; generators derive their randomness from an explicit seed so
results do not depend on call order or scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyDistributionError,
    InvalidSplitCountError,
    KTooSmallError,
    NegativeWealthError,
    NotProgressiveError,
)


@dataclass(frozen=True)
class Tolerance:
    """Scale-robust equality: |a - b| <= atol + rtol * max(|a|, |b|)."""

    atol: float = 1e-12
    rtol: float = 1e-9

    def bound(self, a: float, b: float) -> float:
        return self.atol + self.rtol * max(abs(a), abs(b))

    def close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.bound(a, b)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Seed:
    """Master seed plus derived sub-streams.

    ``rng(*path)`` returns an independent generator for the given integer
    path (e.g. ``(checker_tag, trial)``), so parallel trials are
    reproducible regardless of execution order.
    """

    master: int = 42

    def __post_init__(self):
        if not 0 <= int(self.master) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def rng(self, *path: int) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.master, spawn_key=tuple(path))
        return np.random.default_rng(ss)


SeedLike = Union[Seed, int]


def as_seed(seed: SeedLike) -> Seed:
    return seed if isinstance(seed, Seed) else Seed(int(seed))


@dataclass(frozen=True, eq=False)
class WealthDistribution:
    """Non-negative wealth vector of length >= 1."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise EmptyDistributionError("wealth distribution must be a non-empty vector")
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.isfinite(arr))[0])
            raise ValueError(f"non-finite wealth at index {bad}")
        neg = np.flatnonzero(arr < 0)
        if neg.size:
            i = int(neg[0])
            raise NegativeWealthError(i, float(arr[i]))
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def k(self) -> int:
        return int(self.values.shape[0])

    def total(self) -> float:
        return float(self.values.sum())

    def mean(self) -> float:
        return float(self.values.sum() / self.k)

    def __len__(self) -> int:
        return self.k

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])

    def __iter__(self) -> Iterator[float]:
        return iter(self.values.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WealthDistribution):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __repr__(self) -> str:
        return f"WealthDistribution({self.values.tolist()})"


def make_distribution(values: Sequence[float]) -> WealthDistribution:
    """Validate a sequence of wealth amounts into a distribution."""
    if len(values) == 0:
        raise EmptyDistributionError("wealth distribution must be non-empty")
    return WealthDistribution(np.asarray(values, dtype=np.float64))


def concat(x: WealthDistribution, y: WealthDistribution) -> WealthDistribution:
    return WealthDistribution(np.concatenate([x.values, y.values]))


def duplicate(x: WealthDistribution) -> WealthDistribution:
    """x concatenated with itself: length doubles, total doubles."""
    return concat(x, x)


@dataclass(frozen=True, eq=False)
class ReportMatrix:
    """Row-stochastic non-negative matrix: rows are hidden actors, columns
    observable identities, entry (i, j) the fraction of actor i's wealth
    reported under identity j."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.float64)
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("report matrix must be a non-empty 2-d array")
        if np.any(arr < 0):
            raise ValueError("report matrix entries must be non-negative")
        sums = arr.sum(axis=1)
        for i, s in enumerate(sums):
            if not DEFAULT_TOL.close(float(s), 1.0):
                raise ValueError(f"row {i} sums to {s!r}, expected 1")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @property
    def m(self) -> int:
        return int(self.entries.shape[1])


@dataclass(frozen=True, eq=False)
class AggregationMatrix:
    """Column-stochastic non-negative (k-1) x k matrix; left-multiplying a
    length-k distribution condenses it by one index while preserving the
    total (column sums of 1 guarantee this for every input)."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] - 1 or arr.shape[0] < 1:
            raise ValueError("aggregation matrix must have shape (k-1, k) with k >= 2")
        if np.any(arr < 0):
            raise ValueError("aggregation matrix entries must be non-negative")
        for j, s in enumerate(arr.sum(axis=0)):
            if not DEFAULT_TOL.close(float(s), 1.0):
                raise ValueError(f"column {j} sums to {s!r}, expected 1")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def k(self) -> int:
        return int(self.entries.shape[1])


def apply_report(hidden: WealthDistribution, r: ReportMatrix) -> WealthDistribution:
    """Observable distribution induced by a report matrix: v_j = sum_i R_ij w_i."""
    if r.n != hidden.k:
        raise DimensionMismatchError(hidden.k, r.n)
    return WealthDistribution(hidden.values @ r.entries)


def check_conservation(
    hidden: WealthDistribution,
    r,
    observable: WealthDistribution,
    tol: Tolerance = DEFAULT_TOL,
) -> bool:
    """True iff r is row-stochastic and reproduces the observable
    distribution from the hidden one (no wealth created or destroyed).

    Accepts a raw 2-d array for ``r`` so invalid candidate matrices can be
    tested without tripping construction-time validation.
    """
    arr = r.entries if isinstance(r, ReportMatrix) else np.asarray(r, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionMismatchError(2, arr.ndim, what="dimensions")
    if arr.shape[0] != hidden.k:
        raise DimensionMismatchError(hidden.k, int(arr.shape[0]))
    if arr.shape[1] != observable.k:
        raise DimensionMismatchError(observable.k, int(arr.shape[1]), what="columns")
    if np.any(arr < 0):
        return False
    for s in arr.sum(axis=1):
        if not tol.close(float(s), 1.0):
            return False
    induced = hidden.values @ arr
    return all(
        tol.close(float(a), float(b)) for a, b in zip(induced, observable.values)
    )


def is_pure_sybil(r: ReportMatrix) -> bool:
    """True iff no identity is funded by more than one actor (no collusion)."""
    return bool(np.all((r.entries > 0).sum(axis=0) <= 1))


def random_pure_sybil(
    hidden: WealthDistribution,
    identities_per_actor: Sequence[int],
    seed: SeedLike | np.random.Generator,
) -> ReportMatrix:
    """Wealth-conserving pure-sybil report matrix: actor i spreads its row
    mass over its own block of ``identities_per_actor[i]`` columns, with
    fractions drawn flat on the simplex."""
    counts = [int(c) for c in identities_per_actor]
    if len(counts) != hidden.k or any(c < 1 for c in counts):
        raise InvalidSplitCountError(
            f"need one split count >= 1 per actor, got {identities_per_actor!r}"
        )
    rng = seed if isinstance(seed, np.random.Generator) else as_seed(seed).rng()
    m = sum(counts)
    entries = np.zeros((hidden.k, m))
    off = 0
    for i, c in enumerate(counts):
        if c == 1:
            entries[i, off] = 1.0
        else:
            entries[i, off : off + c] = rng.dirichlet(np.ones(c))
        off += c
    return ReportMatrix(entries)


def random_aggregation(k: int, seed: SeedLike | np.random.Generator) -> AggregationMatrix:
    """Random column-stochastic (k-1) x k aggregation matrix."""
    if k < 2:
        raise KTooSmallError(f"aggregation needs k >= 2, got {k}")
    rng = seed if isinstance(seed, np.random.Generator) else as_seed(seed).rng()
    entries = np.empty((k - 1, k))
    for j in range(k):
        entries[:, j] = rng.dirichlet(np.ones(k - 1)) if k > 2 else [1.0]
    return AggregationMatrix(entries)


def aggregate(x: WealthDistribution, a: AggregationMatrix) -> WealthDistribution:
    """Condense x by one index; the total is preserved."""
    if a.k != x.k:
        raise DimensionMismatchError(x.k, a.k, what="columns")
    return WealthDistribution(a.entries @ x.values)


def merge_last_two(k: int) -> AggregationMatrix:
    """Aggregation matrix merging the last two indices of a length-k vector."""
    if k < 2:
        raise KTooSmallError(f"aggregation needs k >= 2, got {k}")
    entries = np.zeros((k - 1, k))
    for i in range(k - 2):
        entries[i, i] = 1.0
    entries[k - 2, k - 2] = 1.0
    entries[k - 2, k - 1] = 1.0
    return AggregationMatrix(entries)


def transfer(
    x: WealthDistribution, frm: int, to: int, delta: float
) -> WealthDistribution:
    """Rank-preserving progressive transfer of ``delta`` from a richer index
    ``frm`` to a poorer index ``to``; requires 0 < delta <= (x[frm] - x[to]) / 2."""
    k = x.k
    if not (0 <= frm < k and 0 <= to < k):
        raise IndexError(f"transfer indices ({frm}, {to}) out of range for length {k}")
    lo, hi = x[to], x[frm]
    if lo >= hi:
        raise NotProgressiveError(
            f"recipient wealth {lo!r} must be strictly below sender wealth {hi!r}"
        )
    if not 0 < delta <= (hi - lo) / 2:
        raise NotProgressiveError(
            f"delta {delta!r} outside (0, {(hi - lo) / 2!r}]"
        )
    vals = x.values.copy()
    vals[frm] -= delta
    vals[to] += delta
    return WealthDistribution(vals)
