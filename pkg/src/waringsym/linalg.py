"""Dense exact matrices with labeled rows and columns.

Rank goes through word-size primes first (each modular rank is a lower
bound on the rational rank, so a full modular rank settles it) and falls
back to fraction-free elimination otherwise.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, List, Optional, Sequence, Tuple

from .kernels import rank_mod_p_array
from .poly import Scalar, normalize_scalar

# Three primes just below 2**31, tried in this order.
PRIMES = (2147483647, 2147483629, 2147483587)


@dataclass(frozen=True)
class ExactMatrix:
    row_labels: Tuple[Hashable, ...]
    col_labels: Tuple[Hashable, ...]
    rows: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != len(self.row_labels):
            raise ValueError(f"{len(rows)} rows but {len(self.row_labels)} row labels")
        for r in rows:
            if len(r) != len(self.col_labels):
                raise ValueError(f"row of length {len(r)}, expected {len(self.col_labels)}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], row_labels=None, col_labels=None) -> "ExactMatrix":
        rows = [[normalize_scalar(v) for v in r] for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(
            tuple(range(len(rows))) if row_labels is None else row_labels,
            tuple(range(ncols)) if col_labels is None else col_labels,
            rows,
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry(self, row_label, col_label) -> Scalar:
        return self.rows[self.row_labels.index(row_label)][self.col_labels.index(col_label)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.col_labels, self.row_labels, tuple(zip(*self.rows)) if self.rows else ())

    def relabel(self, row_fn: Callable = None, col_fn: Callable = None) -> "ExactMatrix":
        row_fn = row_fn or (lambda x: x)
        col_fn = col_fn or (lambda x: x)
        return ExactMatrix(
            tuple(map(row_fn, self.row_labels)), tuple(map(col_fn, self.col_labels)), self.rows
        )

    def reorder(self, row_labels: Sequence, col_labels: Sequence) -> "ExactMatrix":
        """Same matrix with rows/columns permuted to the given label order."""
        ri = {lab: i for i, lab in enumerate(self.row_labels)}
        ci = {lab: j for j, lab in enumerate(self.col_labels)}
        if set(ri) != set(row_labels) or set(ci) != set(col_labels):
            raise ValueError("label sets differ")
        cols = [ci[c] for c in col_labels]
        return ExactMatrix(
            row_labels, col_labels, tuple(tuple(self.rows[ri[r]][j] for j in cols) for r in row_labels)
        )

    def same_as(self, other: "ExactMatrix") -> bool:
        """Equality as labeled matrices, ignoring row/column order."""
        if set(self.row_labels) != set(other.row_labels) or set(self.col_labels) != set(other.col_labels):
            return False
        return self.reorder(other.row_labels, other.col_labels).rows == other.rows

    def zero_rows(self) -> List[int]:
        return [i for i, r in enumerate(self.rows) if not any(r)]

    def zero_cols(self) -> List[int]:
        live = set()
        for r in self.rows:
            if any(r):
                live.update(j for j, v in enumerate(r) if v)
        return [j for j in range(len(self.col_labels)) if j not in live]

    def drop_zero_lines(self) -> "ExactMatrix":
        keep_r = [i for i, r in enumerate(self.rows) if any(r)]
        live = set()
        for i in keep_r:
            live.update(j for j, v in enumerate(self.rows[i]) if v)
        keep_c = sorted(live)
        return ExactMatrix(
            tuple(self.row_labels[i] for i in keep_r),
            tuple(self.col_labels[j] for j in keep_c),
            tuple(tuple(self.rows[i][j] for j in keep_c) for i in keep_r),
        )

    def is_binary(self) -> bool:
        return all(v in (0, 1) for r in self.rows for v in r)

    def to_csv(self, label_fn: Callable = str) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [label_fn(c) for c in self.col_labels])
        for lab, r in zip(self.row_labels, self.rows):
            w.writerow([label_fn(lab)] + [str(v) for v in r])
        return buf.getvalue()

    def to_bitmap(self) -> str:
        """One line per row of ``0``/``1`` characters; binary matrices only."""
        if not self.is_binary():
            raise ValueError("bitmap form needs a 0/1 matrix")
        return "".join("".join("1" if v else "0" for v in r) + "\n" for r in self.rows)

    def to_dict(self, label_fn: Callable = str) -> dict:
        return {
            "row_labels": [label_fn(x) for x in self.row_labels],
            "col_labels": [label_fn(x) for x in self.col_labels],
            "rows": [[str(v) for v in r] for r in self.rows],
        }


# ---------------------------------------------------------------------------
# rank

def integer_rows(rows: Sequence[Sequence[Scalar]]) -> List[List[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for r in rows:
        den = 1
        for v in r:
            if isinstance(v, Fraction):
                den = math.lcm(den, v.denominator)
        if den == 1:
            out.append([int(v) for v in r])
        else:
            out.append([int(v * den) for v in r])
    return out


def _as_rows(M) -> Sequence[Sequence[Scalar]]:
    return M.rows if isinstance(M, ExactMatrix) else M


def rank_mod_p(M, p: int, backend: str | None = None) -> int:
    """Rank of ``M`` (after clearing row denominators) over GF(p)."""
    rows = integer_rows(_as_rows(M))
    if not rows or not rows[0]:
        return 0
    big = any(abs(v) >= 2 ** 62 for r in rows for v in r)
    if big:
        rows = [[v % p for v in r] for r in rows]
    return rank_mod_p_array(rows, p, backend=backend)


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rational rank of an integer matrix by fraction-free elimination."""
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(r + 1, m):
            ri = a[i]
            f = ri[c]
            if f:
                for j in range(c + 1, n):
                    ri[j] = (p * ri[j] - f * pr[j]) // prev
            else:
                for j in range(c + 1, n):
                    ri[j] = (p * ri[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def exact_rank(M, primes: Sequence[int] = PRIMES) -> int:
    """Rank over the rationals.

    Zero rows and columns are stripped, then each prime is tried in turn;
    a modular rank of ``min(rows, cols)`` is already exact.  Otherwise the
    answer comes from :func:`bareiss_rank`.
    """
    if not isinstance(M, ExactMatrix):
        M = ExactMatrix.from_rows(M)
    M = M.drop_zero_lines()
    m, n = M.shape
    if m == 0 or n == 0:
        return 0
    full = min(m, n)
    rows = integer_rows(M.rows)
    for p in primes:
        if rank_mod_p(rows, p) == full:
            return full
    return bareiss_rank(rows)


def fraction_rank(rows: Sequence[Sequence]) -> int:
    """Plain Gaussian elimination over ``Fraction``; slow, used as a cross-check."""
    a = [[Fraction(v) for v in r] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


# ---------------------------------------------------------------------------
# linear systems

def solve_exact(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Scalar]]:
    """A rational solution of ``A x = b`` (free variables set to 0), or ``None``."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if len(rhs) != m:
        raise ValueError(f"right-hand side has length {len(rhs)}, expected {m}")
    a = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if any(a[i][n] for i in range(r, m)):
        return None
    x: List[Scalar] = [0] * n
    for i, c in enumerate(pivots):
        x[c] = normalize_scalar(a[i][n])
    return x


def mat_vec(rows: Sequence[Sequence], x: Sequence) -> List[Scalar]:
    return [normalize_scalar(sum(a * b for a, b in zip(r, x))) for r in rows]


def vec_mat(y: Sequence, rows: Sequence[Sequence]) -> List[Scalar]:
    n = len(rows[0]) if rows else 0
    out = [0] * n
    for yi, r in zip(y, rows):
        if yi:
            for j, v in enumerate(r):
                out[j] += yi * v
    return [normalize_scalar(v) for v in out]
