"""Brute-force certification of total non-negativity.

Every square minor of order 1..max_order is evaluated exactly.  Minors are
visited in a fixed canonical order (by order, then row set, then column set,
each lexicographically) and the first negative one is the witness, so serial
and parallel runs agree to the last field.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from typing import Sequence

from .exact import ExactMatrix, _int_rows, as_exact, bareiss_det, mat_mul, minor


@dataclass(frozen=True)
class Witness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class TnnVerdict:
    holds: bool
    checked_minors: int
    witness: Witness | None = None

    def to_dict(self) -> dict:
        w = self.witness
        return {
            "holds": self.holds,
            "checked_minors": self.checked_minors,
            "witness": None if w is None else {
                "rows": list(w.rows), "cols": list(w.cols), "value": str(w.value)},
        }


def _scan(table, ncols, order, row_sets):
    """Evaluate minors for a batch of row sets; stop at the first negative one.

    Returns (minors evaluated, witness tuple or None).
    """
    count = 0
    col_sets = list(combinations(range(ncols), order))
    for rows in row_sets:
        sub_rows = [table[i] for i in rows]
        for cols in col_sets:
            count += 1
            det = bareiss_det([[r[j] for j in cols] for r in sub_rows])
            if det < 0:
                return count, (rows, cols, det)
    return count, None


def _batches(nrows: int, order: int, size: int):
    it = combinations(range(nrows), order)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def all_minors_nonnegative(x: ExactMatrix, max_order: int | None = None,
                           workers: int | None = None, batch_size: int = 64) -> TnnVerdict:
    """Exhaustively check that every square minor of ``x`` is >= 0.

    ``checked_minors`` is the number of minors evaluated before stopping: all
    of them when the matrix passes, up to and including the witness when it
    fails.  With ``workers`` > 1 row-set batches are spread over a process
    pool; the result is identical to the serial run.
    """
    top = min(x.rows, x.cols)
    if max_order is not None:
        if max_order < 1:
            raise ValueError("max_order must be at least 1")
        top = min(top, max_order)

    # rows scaled by positive integers to clear denominators; signs are kept
    table, _ = _int_rows([list(x.row(i)) for i in range(x.rows)])

    tasks = [(order, batch) for order in range(1, top + 1)
             for batch in _batches(x.rows, order, batch_size)]

    if workers and workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan, table, x.cols, order, batch)
                       for order, batch in tasks]
            results = [f.result() for f in futures]
    else:
        results = []
        for order, batch in tasks:
            results.append(_scan(table, x.cols, order, batch))
            if results[-1][1] is not None:
                break

    checked = 0
    for (order, batch), (count, hit) in zip(tasks, results):
        checked += count
        if hit is not None:
            rows, cols, _ = hit
            return TnnVerdict(False, checked, Witness(rows, cols, minor(x, rows, cols)))
    return TnnVerdict(True, checked)


def two_by_two_check(x: ExactMatrix, workers: int | None = None) -> TnnVerdict:
    return all_minors_nonnegative(x, max_order=2, workers=workers)


def scale(x: ExactMatrix, row_weights: Sequence, col_weights: Sequence) -> ExactMatrix:
    """Entry (i, j) multiplied by row_weights[i] * col_weights[j]."""
    a = [as_exact(w) for w in row_weights]
    b = [as_exact(w) for w in col_weights]
    if len(a) != x.rows or len(b) != x.cols:
        raise ValueError(f"weights of lengths {len(a)}, {len(b)} do not fit {x.shape}")
    if any(w < 0 for w in a + b):
        raise ValueError("weights must be non-negative")
    return ExactMatrix.from_function(x.rows, x.cols, lambda i, j: a[i] * x[i, j] * b[j])


@dataclass(frozen=True)
class PathSpec:
    """Monotone lattice paths from (-2j, j) to (0, k)."""
    j: int
    k: int


def lattice_path_count(spec: PathSpec) -> int:
    """Count paths with unit steps right or up, by dynamic programming."""
    width = 2 * spec.j
    height = spec.k - spec.j
    if spec.j < 0 or height < 0:
        return 0
    ways = [1] * (width + 1)
    for _ in range(height):
        for col in range(1, width + 1):
            ways[col] += ways[col - 1]
    return ways[width]


@dataclass(frozen=True)
class ProductClosureReport:
    factors: tuple[TnnVerdict, ...]
    product: TnnVerdict

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.factors) and self.product.holds


def product_closure_check(factors: Sequence[ExactMatrix], max_order: int | None = None,
                          workers: int | None = None) -> ProductClosureReport:
    """Certify every factor and then their product by brute force.

    The product verdict is computed directly rather than inferred from
    Cauchy-Binet, so a wrong factor cannot hide a wrong product.
    """
    if not factors:
        raise ValueError("need at least one factor")
    product = factors[0]
    for f in factors[1:]:
        product = mat_mul(product, f)
    verdicts = tuple(all_minors_nonnegative(f, max_order, workers) for f in factors)
    return ProductClosureReport(verdicts, all_minors_nonnegative(product, max_order, workers))


def bidiagonal(n: int, position: int, weight, lower: bool = True) -> ExactMatrix:
    """Identity plus ``weight`` at (position+1, position) or its transpose.

    These elementary matrices are TNN for weight >= 0 and generate TNN
    test matrices by multiplication.
    """
    if not 0 <= position < n - 1:
        raise ValueError(f"position {position} outside 0..{n - 2}")
    at = (position + 1, position) if lower else (position, position + 1)
    w = as_exact(weight)
    return ExactMatrix.from_function(n, n, lambda i, j: w if (i, j) == at else int(i == j))

