"""Catalecticant matrices and rank bounds for elementary symmetric polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .decomp import upper_bound
from .linalg import ExactMatrix, exact_rank
from .poly import (
    DomainError,
    Monomial,
    Polynomial,
    _diff_monomial,
    apply_diff,
    elementary_symmetric,
    monomial_subset,
    monomials,
)


def colex_subsets(n: int, r: int) -> List[Tuple[int, ...]]:
    """1-based r-subsets of [n] in colexicographic order."""
    return sorted(combinations(range(1, n + 1), r), key=lambda s: s[::-1])


def catalecticant(F: Polynomial, r: int, degree: int | None = None) -> ExactMatrix:
    """Matrix of ``g -> g(d/dx) F`` from degree-``r`` operators to degree-``(d-r)`` forms.

    Rows are the degree-``(d-r)`` monomials and columns the degree-``r``
    operator monomials, both in graded-lex order; entry ``(m, beta)`` is the
    coefficient of ``m`` in ``d^beta F``.  ``degree`` is only needed for the
    zero polynomial, whose catalecticants are zero matrices.
    """
    d = F.homogeneous_degree()
    if d is None:
        if not F.is_zero():
            raise DomainError("catalecticant needs a homogeneous polynomial")
        if degree is None:
            raise DomainError("pass degree= for the zero polynomial")
        d = degree
    elif degree is not None and degree != d:
        raise DomainError(f"polynomial has degree {d}, not {degree}")
    if not 0 <= r <= d:
        raise DomainError(f"catalecticant index r={r} outside 0..{d}")
    n = F.nvars
    row_labels = monomials(n, d - r)
    col_labels = monomials(n, r)
    index = {m: i for i, m in enumerate(row_labels)}
    rows = [[0] * len(col_labels) for _ in row_labels]
    for j, beta in enumerate(col_labels):
        for m, c in _diff_monomial(beta, F).items():
            if c:
                rows[index[m]][j] += c
    return ExactMatrix(row_labels, col_labels, rows)


def squarefree_refine(M: ExactMatrix) -> ExactMatrix:
    """Delete every all-zero row and column, keeping labels."""
    return M.drop_zero_lines()


def refined_catalecticant(d: int, n: int, r: int) -> ExactMatrix:
    return squarefree_refine(catalecticant(elementary_symmetric(d, n), r))


def disjointness_matrix(r: int, n: int) -> ExactMatrix:
    """0/1 matrix on r-subsets of [n] (colex): 1 iff the two subsets are disjoint."""
    if r < 0 or 2 * r > n:
        raise DomainError(f"disjointness matrix needs 0 <= 2r <= n, got r={r}, n={n}")
    return disjointness_pattern(n, r, r)


def disjointness_pattern(n: int, row_size: int, col_size: int) -> ExactMatrix:
    """Rectangular 0/1 disjointness matrix between subsets of two sizes."""
    R = colex_subsets(n, row_size)
    C = colex_subsets(n, col_size)
    Cs = [frozenset(c) for c in C]
    rows = [tuple(0 if Cj & set(I) else 1 for Cj in Cs) for I in R]
    return ExactMatrix(tuple(R), tuple(C), rows)


def subset_labels(M: ExactMatrix) -> ExactMatrix:
    """Replace square-free monomial labels by their 1-based index subsets."""
    return M.relabel(monomial_subset, monomial_subset)


def row_aggregation(d: int, n: int, r: int) -> Dict[Tuple[int, ...], Tuple[Optional[int], Tuple[int, ...]]]:
    """For each r-subset I, sum the rows J of the refined catalecticant with J containing I.

    Returns ``I -> (c, w_I)`` where ``w_I`` is the aggregated row in the
    column order of :func:`disjointness_matrix`, and ``c`` the integer with
    ``w_I = c * v_I`` (``v_I`` the row of the disjointness matrix); ``c`` is
    ``None`` when no such integer exists.
    """
    if not (2 * r <= n and r <= d - r and d <= n):
        raise DomainError(f"row aggregation needs 2r <= n and r <= d-r, got d={d}, n={n}, r={r}")
    M = subset_labels(refined_catalecticant(d, n, r))
    D = disjointness_matrix(r, n)
    M = M.reorder(M.row_labels, D.col_labels)
    out = {}
    for I, v in zip(D.row_labels, D.rows):
        Iset = set(I)
        w = [0] * len(D.col_labels)
        for J, row in zip(M.row_labels, M.rows):
            if Iset.issubset(J):
                w = [a + b for a, b in zip(w, row)]
        c = None
        nz = [(a, b) for a, b in zip(w, v) if b]
        if nz and nz[0][0] % nz[0][1] == 0:
            cand = nz[0][0] // nz[0][1]
            if all(a == cand * b for a, b in zip(w, v)):
                c = cand
        out[I] = (c, tuple(w))
    return out


def hilbert_closed_form(d: int, n: int, r: int) -> int:
    if r < 0:
        raise DomainError(f"negative degree r={r}")
    if r > d:
        return 0
    return math.comb(n, r) if r <= d // 2 else math.comb(n, d - r)


def hilbert_function(d: int, n: int, r: int, check: bool = False) -> int:
    """Value in degree ``r`` of the Hilbert function of the apolar quotient of sigma_{d,n}.

    With ``check=True`` the closed form is compared against the rank of the
    full catalecticant matrix and an ``AssertionError`` raised on mismatch.
    """
    if not 1 <= d <= n:
        raise DomainError(f"hilbert_function needs 1 <= d <= n, got d={d}, n={n}")
    value = hilbert_closed_form(d, n, r)
    if check and r <= d:
        got = exact_rank(catalecticant(elementary_symmetric(d, n), r))
        if got != value:
            raise AssertionError(f"Hilb({d},{n},{r}): closed form {value} != matrix rank {got}")
    return value


def hilbert_table(d: int, n: int, check: bool = False) -> List[int]:
    return [hilbert_function(d, n, r, check=check) for r in range(d + 1)]


def lower_bound(d: int, n: int) -> int:
    """Length of the apolar quotient of sigma_{d-1,n-1}, a lower bound for the rank of sigma_{d,n}."""
    if not 1 <= d <= n:
        raise DomainError(f"lower_bound needs 1 <= d <= n, got d={d}, n={n}")
    if d == 1:
        return 1
    total = sum(hilbert_function(d - 1, n - 1, r) for r in range(d))
    if d % 2:
        closed = sum(math.comb(n, r) for r in range((d - 1) // 2 + 1))
    else:
        closed = sum(math.comb(n, r) for r in range(d // 2 + 1)) - math.comb(n - 1, d // 2)
    if total != closed:
        raise AssertionError(f"lower bound sum {total} != closed form {closed} for ({d},{n})")
    return total


def perp_member(g, F: Polynomial) -> bool:
    """True iff the operator ``g`` (monomial or polynomial) annihilates ``F``."""
    return apply_diff(g, F).is_zero()


@dataclass(frozen=True)
class BoundsReport:
    d: int
    n: int
    lower: int
    upper: int
    exact: Optional[int]
    real_rank_equal: bool
    notes: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.lower > self.upper:
            raise AssertionError(f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if (self.exact is not None) != (self.lower == self.upper):
            raise AssertionError("exact rank must be present iff the bounds meet")

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "lower": str(self.lower),
            "upper": str(self.upper),
            "exact": None if self.exact is None else str(self.exact),
            "real_rank_equal": self.real_rank_equal,
            "notes": list(self.notes),
        }


def bounds(d: int, n: int) -> BoundsReport:
    """Rank bounds for sigma_{d,n}; the bounds meet for every odd ``d``."""
    if not 1 <= d <= n:
        raise DomainError(f"bounds needs 1 <= d <= n, got d={d}, n={n}")
    lo = lower_bound(d, n)
    notes = [f"lower: length of apolar quotient of sigma({d - 1},{n - 1})" if d > 1
             else "lower: nonzero form has rank >= 1"]
    if d % 2:
        up = upper_bound(d, n)
        notes.append("upper: odd-degree decomposition, sum of C(n,i) for i <= (d-1)/2")
    elif n > d:
        up = upper_bound(d, n)
        notes.append("upper: even-degree decomposition via directional derivative, sum of C(n,i) for i <= d/2")
        notes.append("minimality of the even-degree decomposition is unknown")
    else:
        # sigma_{n,n} is a monomial; the even-degree formula does not apply
        up = 2 ** (n - 1)
        notes.append("upper: monomial decomposition with 2^(n-1) summands (d = n even)")
    exact = lo if lo == up else None
    return BoundsReport(d, n, lo, up, exact, exact is not None, tuple(notes))


def monomial_index_label(m: Monomial) -> str:
    """``(1,1,0,0,0) -> '12'``, ``(2,0,0,0,0) -> '11'``; separated by '.' when n > 9."""
    idx = [str(i + 1) for i, e in enumerate(m) for _ in range(e)]
    sep = "." if len(m) > 9 else ""
    return sep.join(idx) if idx else "1"


def subset_label(s: Tuple[int, ...]) -> str:
    sep = "." if s and max(s) > 9 else ""
    return sep.join(map(str, s)) if s else "{}"


def matrix_text(M: ExactMatrix, label_fn=str, mark_zero: bool = True) -> str:
    """Aligned text table; zero rows/columns get a ``*`` before their label."""
    zr = set(M.zero_rows()) if mark_zero else set()
    zc = set(M.zero_cols()) if mark_zero else set()
    rl = [("*" if i in zr else "") + label_fn(x) for i, x in enumerate(M.row_labels)]
    cl = [("*" if j in zc else "") + label_fn(x) for j, x in enumerate(M.col_labels)]
    body = [[str(v) for v in r] for r in M.rows]
    width = max([len(s) for s in cl] + [len(v) for r in body for v in r] + [1])
    lw = max([len(s) for s in rl] + [1])
    lines = [" " * lw + " " + " ".join(s.rjust(width) for s in cl)]
    for name, r in zip(rl, body):
        lines.append(name.rjust(lw) + " " + " ".join(v.rjust(width) for v in r))
    return "\n".join(lines) + "\n"


__all__ = [
    "BoundsReport",
    "bounds",
    "catalecticant",
    "colex_subsets",
    "disjointness_matrix",
    "disjointness_pattern",
    "hilbert_closed_form",
    "hilbert_function",
    "hilbert_table",
    "lower_bound",
    "matrix_text",
    "monomial_index_label",
    "perp_member",
    "refined_catalecticant",
    "row_aggregation",
    "squarefree_refine",
    "subset_label",
    "subset_labels",
]
