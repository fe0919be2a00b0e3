"""Power-sum decompositions of elementary symmetric polynomials.

Every generator here returns a :class:`Decomposition` claiming

    scale * sigma_{d,n} = sum(weight * L^d for weight, L in summands)

where each ``L`` is a linear form with all coefficients +1 or -1.  The
claim is checked by :func:`verify`, which expands everything exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from .poly import (
    DomainError,
    Monomial,
    Polynomial,
    Scalar,
    elementary_symmetric,
    expand_linear_power,
)


def subsets_upto(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """1-based subsets of [n] with at most ``k`` elements, by size then colex."""
    for size in range(min(k, n) + 1):
        for c in sorted(combinations(range(1, n + 1), size), key=lambda s: s[::-1]):
            yield c


@dataclass(frozen=True)
class SignedLinearForm:
    """``sum_i s_i x_i`` with ``s_i = -1`` exactly for ``i`` in ``minus_set``."""

    nvars: int
    minus_set: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.nvars < 1:
            raise DomainError("a linear form needs at least one variable")
        raw = tuple(self.minus_set)
        if any(not isinstance(i, int) or isinstance(i, bool) for i in raw):
            raise DomainError(f"minus_set entries must be integers, got {raw}")
        ms = tuple(sorted(set(raw)))
        if len(ms) != len(raw):
            raise DomainError(f"repeated index in minus_set {raw}")
        if ms and not (1 <= ms[0] and ms[-1] <= self.nvars):
            raise DomainError(f"minus_set {ms} outside 1..{self.nvars}")
        object.__setattr__(self, "minus_set", ms)

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SignedLinearForm":
        if any(s not in (1, -1) for s in signs):
            raise DomainError(f"signs must be +1/-1, got {list(signs)}")
        return cls(len(signs), tuple(i + 1 for i, s in enumerate(signs) if s < 0))

    @property
    def signs(self) -> Tuple[int, ...]:
        ms = set(self.minus_set)
        return tuple(-1 if i in ms else 1 for i in range(1, self.nvars + 1))

    def coefficient_sum(self) -> int:
        return self.nvars - 2 * len(self.minus_set)

    def complement(self) -> "SignedLinearForm":
        ms = set(self.minus_set)
        return SignedLinearForm(self.nvars, tuple(i for i in range(1, self.nvars + 1) if i not in ms))

    def projective(self) -> Tuple["SignedLinearForm", int]:
        """Representative with ``x1`` coefficient +1, and the sign relating them."""
        if 1 in self.minus_set:
            return self.complement(), -1
        return self, 1

    def power(self, d: int) -> Polynomial:
        return expand_linear_power(self.signs, d)

    def to_text(self) -> str:
        out = []
        for i, s in enumerate(self.signs):
            if i == 0:
                out.append("x1" if s > 0 else "-x1")
            else:
                out.append(f"{'+' if s > 0 else '-'}x{i + 1}")
        return "".join(out)


@dataclass(frozen=True)
class Decomposition:
    d: int
    n: int
    scale: int
    summands: Tuple[Tuple[int, SignedLinearForm], ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple((int(w), f) for w, f in self.summands))
        if self.d < 0 or self.n < 1:
            raise DomainError(f"invalid decomposition shape d={self.d}, n={self.n}")

    def __len__(self) -> int:
        return len(self.summands)

    def well_formed_problems(self) -> List[str]:
        problems = []
        seen = set()
        for w, f in self.summands:
            if f.nvars != self.n:
                problems.append(f"form {f.to_text()} has {f.nvars} variables, expected {self.n}")
            if w == 0:
                problems.append(f"zero weight on {f.to_text()}")
            if f.minus_set in seen:
                problems.append(f"duplicate form {f.to_text()}")
            seen.add(f.minus_set)
        if self.scale == 0:
            problems.append("zero scale")
        return problems

    def weights_by_minus_set(self) -> dict:
        return {f.minus_set: w for w, f in self.summands}

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "scale": str(self.scale),
            "summands": [
                {"weight": str(w), "minus_set": list(f.minus_set)} for w, f in self.summands
            ],
        }

    def to_json(self, indent: int | None = 1) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "Decomposition":
        try:
            d = data["d"]
            n = data["n"]
            if not isinstance(d, int) or not isinstance(n, int):
                raise DomainError("'d' and 'n' must be JSON integers")
            scale = int(data["scale"])
            summands = tuple(
                (int(s["weight"]), SignedLinearForm(n, tuple(s["minus_set"])))
                for s in data["summands"]
            )
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed decomposition JSON: {exc}") from exc
        except ValueError as exc:
            raise DomainError(f"malformed decomposition JSON: {exc}") from exc
        return cls(d, n, scale, summands)

    @classmethod
    def from_json(cls, text: str) -> "Decomposition":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise DomainError("decomposition JSON must be an object")
        return cls.from_dict(data)

    def to_text(self) -> str:
        lhs = f"{self.scale}*sigma({self.d},{self.n})"
        parts = []
        for i, (w, f) in enumerate(self.summands):
            a = abs(w)
            coeff = "" if a == 1 else f"{a}*"
            sign = ("-" if w < 0 else "") if i == 0 else ("- " if w < 0 else "+ ")
            parts.append(f"{sign}{coeff}({f.to_text()})^{self.d}")
        return f"{lhs} = " + (" ".join(parts) if parts else "0")


# ---------------------------------------------------------------------------
# generators

def _odd_weight(n: int, k: int, size: int) -> int:
    return (-1) ** size * math.comb(n - k - size - 1, k - size)


def decompose_odd(d: int, n: int) -> Decomposition:
    """Decomposition of ``2^(d-1) d! sigma_{d,n}`` for odd ``d``.

    One summand per subset ``I`` of [n] with ``|I| <= (d-1)/2``.
    """
    if d % 2 == 0:
        raise DomainError(f"d={d} is even; use decompose_even")
    if d < 1 or d > n:
        raise DomainError(f"decompose_odd needs 1 <= d <= n, got d={d}, n={n}")
    k = (d - 1) // 2
    summands = tuple(
        (_odd_weight(n, k, len(I)), SignedLinearForm(n, I)) for I in subsets_upto(n, k)
    )
    return Decomposition(d, n, 2 ** (d - 1) * math.factorial(d), summands, label="odd")


def directional_derivative(dec: Decomposition) -> Decomposition:
    """Apply ``sum_i d/dx_i`` to both sides of an odd decomposition.

    The operator sends ``sigma_{d+1,n}`` to ``(n-d) sigma_{d,n}`` and each
    ``L^(d+1)`` to ``(d+1) * (sum of L's coefficients) * L^d``; the common
    factor ``d+1`` is divided out.
    """
    D, n = dec.d, dec.n
    d = D - 1
    if d < 1 or n <= d:
        raise DomainError(f"derivative of degree {D} in {n} variables gives no decomposition")
    summands = []
    for w, f in dec.summands:
        nw = w * D * f.coefficient_sum()
        if nw:
            summands.append((nw, f))
    scale = dec.scale * (n - d)
    if scale % D or any(w % D for w, _ in summands):
        raise AssertionError("derivative bookkeeping lost the factor d+1")
    return Decomposition(
        d, n, scale // D, tuple((w // D, f) for w, f in summands), label="even/derivative"
    )


def decompose_even(d: int, n: int, method: str = "formula") -> Decomposition:
    """Decomposition of ``2^d (n-d) d! sigma_{d,n}`` for even ``d`` and ``n > d``.

    ``method="derivative"`` builds it from ``decompose_odd(d+1, n)`` instead
    of the closed-form weights; both give identical results.
    """
    if d % 2:
        raise DomainError(f"d={d} is odd; use decompose_odd")
    if d < 2:
        raise DomainError(f"decompose_even needs d >= 2, got d={d}")
    if n <= d:
        raise DomainError(f"decompose_even needs n > d (the factor n-d vanishes), got d={d}, n={n}")
    if method == "derivative":
        return directional_derivative(decompose_odd(d + 1, n))
    if method != "formula":
        raise DomainError(f"unknown method {method!r}")
    k = d // 2
    summands = tuple(
        (_odd_weight(n, k, len(I)) * (n - 2 * len(I)), SignedLinearForm(n, I))
        for I in subsets_upto(n, k)
    )
    scale = 2 ** d * (n - d) * math.factorial(d)
    return Decomposition(d, n, scale, summands, label="even")


def decompose_monomial(n: int) -> Decomposition:
    """Decomposition of the square-free monomial ``x1*...*xn = sigma_{n,n}``.

    Odd ``n`` reuses :func:`decompose_odd`.  For even ``n = 2k`` the
    half-weighted middle layer ``|I| = k`` pairs each subset with its
    complement; the pair is kept once (the member without index 1) and the
    global scale is doubled to ``2^n n!`` so all weights stay integers.
    """
    if n < 1:
        raise DomainError("decompose_monomial needs n >= 1")
    if n % 2:
        return decompose_odd(n, n)
    k = n // 2
    summands = []
    for I in subsets_upto(n, k):
        if len(I) < k:
            summands.append((2 * (-1) ** len(I), SignedLinearForm(n, I)))
        elif 1 not in I:
            summands.append((2 * (-1) ** k, SignedLinearForm(n, I)))
    return Decomposition(n, n, 2 ** n * math.factorial(n), tuple(summands), label="monomial")


def upper_bound(d: int, n: int) -> int:
    """Number of summands of the generated decomposition: sum of C(n, i), i <= d/2."""
    if not 1 <= d <= n:
        raise DomainError(f"upper_bound needs 1 <= d <= n, got d={d}, n={n}")
    return sum(math.comb(n, i) for i in range(d // 2 + 1))


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    d: int
    n: int
    summand_count: int
    real_coefficients: bool = True
    residual_monomial: Optional[Monomial] = None
    residual_coefficient: Scalar = 0
    problems: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "d": self.d,
            "n": self.n,
            "summand_count": self.summand_count,
            "real_coefficients": self.real_coefficients,
            "residual_monomial": list(self.residual_monomial) if self.residual_monomial else None,
            "residual_coefficient": str(self.residual_coefficient),
            "problems": list(self.problems),
        }


def expand_rhs(dec: Decomposition) -> Polynomial:
    """Exact expansion of ``sum weight * L^d``."""
    acc: dict = {}
    for w, f in dec.summands:
        for m, c in expand_linear_power(f.signs, dec.d).terms.items():
            acc[m] = acc.get(m, 0) + w * c
    return Polynomial(dec.n, acc)


def verify(dec: Decomposition) -> VerificationReport:
    """Check ``scale * sigma_{d,n} == sum weight * L^d`` by full expansion.

    A failure reports the first offending monomial in graded-lex order and
    its residual coefficient (right side minus left side).
    """
    problems = tuple(dec.well_formed_problems())
    if not 1 <= dec.d <= dec.n:
        problems += (f"no elementary symmetric polynomial sigma({dec.d},{dec.n})",)
    if problems:
        return VerificationReport(False, dec.d, dec.n, len(dec), problems=problems)
    residual = expand_rhs(dec) - elementary_symmetric(dec.d, dec.n).scale(dec.scale)
    if residual.is_zero():
        return VerificationReport(True, dec.d, dec.n, len(dec))
    m, c = residual.sorted_terms()[0]
    return VerificationReport(
        False, dec.d, dec.n, len(dec), residual_monomial=m, residual_coefficient=c
    )
