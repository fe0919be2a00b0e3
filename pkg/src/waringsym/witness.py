"""Exact checks on sign-point configurations and the binomial summation identity.

A form ``F`` of degree ``d`` lies in the span of ``{L_p^d : p in X}`` exactly
when the ideal of the point set ``X`` is contained in the apolar ideal of
``F``; the search below decides the former by one exact linear solve per
subset.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

from .linalg import ExactMatrix, exact_rank, mat_vec, solve_exact, vec_mat
from .poly import (
    DomainError,
    Polynomial,
    Scalar,
    elementary_symmetric,
    expand_linear_power,
    monomials,
)


# ---------------------------------------------------------------------------
# summation identity

@dataclass(frozen=True)
class IdentityReport:
    k: int
    n: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "lhs": str(self.lhs), "rhs": str(self.rhs), "ok": self.ok}


def identity_check(k: int, n: int) -> IdentityReport:
    """Both sides of the all-ones evaluation of the odd decomposition, degree 2k+1."""
    if k < 0 or n < 2 * k + 1:
        raise DomainError(f"identity needs k >= 0 and n >= 2k+1, got k={k}, n={n}")
    lhs = sum(
        (-1) ** i * math.comb(n - k - 1 - i, k - i) * math.comb(n, i) * (n - 2 * i) ** (2 * k + 1)
        for i in range(k + 1)
    )
    rhs = 2 ** (2 * k) * math.factorial(n) // math.factorial(n - 2 * k - 1)
    return IdentityReport(k, n, lhs, rhs)


# ---------------------------------------------------------------------------
# sign points

@dataclass(frozen=True)
class SignPointSet:
    """Projective points with every coordinate +-1 and first coordinate +1."""

    nvars: int
    points: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.points)
        for p in pts:
            if len(p) != self.nvars or any(s not in (1, -1) for s in p):
                raise DomainError(f"{p} is not a sign vector of length {self.nvars}")
            if p[0] != 1:
                raise DomainError(f"{p} is not normalized (first coordinate must be +1)")
        if len(set(pts)) != len(pts):
            raise DomainError("duplicate sign points")
        object.__setattr__(self, "points", pts)

    @classmethod
    def full(cls, n: int) -> "SignPointSet":
        """All ``2^(n-1)`` points; point ``j`` has a minus sign at ``x_{i+2}`` iff bit ``i`` of ``j`` is set."""
        if n < 1:
            raise DomainError("need at least one variable")
        pts = []
        for tail in product((1, -1), repeat=n - 1):
            pts.append((1,) + tail[::-1])
        return cls(n, tuple(pts))

    def subset(self, indices: Sequence[int]) -> "SignPointSet":
        return SignPointSet(self.nvars, tuple(self.points[i] for i in indices))

    def __len__(self):
        return len(self.points)


def normalize_signs(signs: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Projective representative of a sign vector and the factor relating them."""
    signs = tuple(signs)
    if signs[0] == 1:
        return signs, 1
    return tuple(-s for s in signs), -1


def power_span_matrix(points: SignPointSet, d: int) -> ExactMatrix:
    """Columns are the coefficient vectors of ``(p . x)^d``, rows the degree-d monomials."""
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    mons = monomials(points.nvars, d)
    cols = [expand_linear_power(p, d) for p in points.points]
    rows = [tuple(c.coefficient(m) for c in cols) for m in mons]
    return ExactMatrix(mons, points.points, rows)


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    points: SignPointSet
    span_rank: int
    augmented_rank: int
    coefficients: Optional[Tuple[Scalar, ...]] = None
    # left kernel vector y with y.A = 0 and y.F = 1, when not a member
    separator: Optional[Tuple[Scalar, ...]] = None

    def to_dict(self) -> dict:
        return {
            "member": self.member,
            "points": [list(p) for p in self.points.points],
            "span_rank": self.span_rank,
            "augmented_rank": self.augmented_rank,
            "coefficients": None if self.coefficients is None else [str(c) for c in self.coefficients],
        }


def span_membership(F: Polynomial, points: SignPointSet, d: int) -> MembershipReport:
    """Decide whether ``F`` is a rational combination of ``(p . x)^d`` over the points.

    A positive answer carries the coefficient vector; a negative one carries
    a vector ``y`` orthogonal to every power but with ``y . F = 1``.
    """
    if F.nvars != points.nvars:
        raise DomainError(f"variable count mismatch: {F.nvars} vs {points.nvars}")
    if not F.is_zero() and F.homogeneous_degree() != d:
        raise DomainError(f"polynomial is not homogeneous of degree {d}")
    A = power_span_matrix(points, d)
    b = [F.coefficient(m) for m in A.row_labels]
    rank_a = exact_rank(A) if len(points) else 0
    x = solve_exact(A.rows, b) if len(points) else ([] if not any(b) else None)
    if x is not None:
        return MembershipReport(True, points, rank_a, rank_a, coefficients=tuple(x))
    # y^T [A | b] = [0 ... 0 | 1]
    At = [list(col) + [bi] for col, bi in zip(A.rows, b)]
    system = [list(r) for r in zip(*At)] if At else []
    target = [0] * len(points) + [1]
    y = solve_exact(system, target)
    if y is None:
        raise AssertionError("inconsistent system without a separating vector")
    return MembershipReport(False, points, rank_a, rank_a + 1, separator=tuple(y))


def check_certificate(F: Polynomial, report: MembershipReport, d: int) -> bool:
    """Re-check a membership report from scratch."""
    A = power_span_matrix(report.points, d)
    b = [F.coefficient(m) for m in A.row_labels]
    if report.member:
        acc = Polynomial(F.nvars, {})
        for c, p in zip(report.coefficients, report.points.points):
            acc = acc + expand_linear_power(p, d).scale(c)
        return acc == F and mat_vec(A.rows, report.coefficients) == b
    y = report.separator
    return all(v == 0 for v in vec_mat(y, A.rows)) and sum(a * c for a, c in zip(y, b)) == 1


# ---------------------------------------------------------------------------
# subset search

@dataclass
class SearchReport:
    d: int
    n: int
    subset_size: int
    total_subsets: int
    members: List[Tuple[int, ...]]
    elapsed_ms: Optional[float] = None
    details: List[Tuple[Tuple[int, ...], MembershipReport]] = field(default_factory=list, repr=False)

    @property
    def summary(self) -> str:
        return f"{len(self.members)} of {self.total_subsets} subsets admit membership"

    def to_dict(self, timing: bool = True, certificates: bool = False) -> dict:
        out = {
            "d": self.d,
            "n": self.n,
            "subset_size": self.subset_size,
            "total_subsets": self.total_subsets,
            "members": [list(s) for s in self.members],
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
            "summary": self.summary,
        }
        if certificates:
            out["certificates"] = [
                {
                    "subset": list(s),
                    "member": rep.member,
                    "coefficients": None if rep.coefficients is None else [str(c) for c in rep.coefficients],
                    "separator": None if rep.separator is None else [str(c) for c in rep.separator],
                }
                for s, rep in self.details
            ]
        return out


def colex_combinations(N: int, size: int) -> List[Tuple[int, ...]]:
    return sorted(combinations(range(N), size), key=lambda s: s[::-1])


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("WARINGSYM_THREADS", "1")))
    except ValueError:
        return 1


def proposition_search(d: int, n: int, subset_size: int, F: Polynomial | None = None,
                       threads: int | None = None) -> SearchReport:
    """Test every ``subset_size``-subset of the full sign-point set for membership of ``F``.

    ``F`` defaults to the elementary symmetric polynomial of degree ``d``.
    Subsets are enumerated in colex order of point indices; the report
    order does not depend on ``threads``.
    """
    full = SignPointSet.full(n)
    if not 0 <= subset_size <= len(full):
        raise DomainError(f"subset size {subset_size} outside 0..{len(full)}")
    if F is None:
        F = elementary_symmetric(d, n)
    start = time.perf_counter()
    subsets = colex_combinations(len(full), subset_size)

    def run(s):
        return span_membership(F, full.subset(s), d)

    threads = threads or _threads()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(run, subsets))
    else:
        results = [run(s) for s in subsets]
    details = list(zip(subsets, results))
    members = [s for s, rep in details if rep.member]
    elapsed = (time.perf_counter() - start) * 1000.0
    return SearchReport(d, n, subset_size, len(subsets), members, elapsed, details)
