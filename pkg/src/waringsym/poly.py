"""Sparse multivariate polynomials over the rationals.

A monomial is a plain tuple of non-negative exponents.  Coefficients are
``int`` whenever they are integral and :class:`fractions.Fraction`
otherwise, so integer-only workloads never touch ``Fraction``.

Differential operators share the monomial representation: the exponent
vector ``beta`` stands for ``d^|beta| / dx_1^beta_1 ... dx_n^beta_n``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""


def normalize_scalar(c) -> Scalar:
    """Return ``c`` as an ``int`` if integral, else as a reduced ``Fraction``."""
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return normalize_scalar(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return normalize_scalar(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


# ---------------------------------------------------------------------------
# monomials

def monomial_degree(m: Monomial) -> int:
    return sum(m)


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def monomial_subset(m: Monomial) -> Tuple[int, ...]:
    """1-based support of a square-free monomial."""
    if not is_squarefree(m):
        raise DomainError(f"monomial {m} is not square-free")
    return tuple(i + 1 for i, e in enumerate(m) if e)


def subset_monomial(n: int, subset: Iterable[int]) -> Monomial:
    """Square-free monomial of the 1-based index set ``subset``."""
    exps = [0] * n
    for i in subset:
        if not 1 <= i <= n:
            raise DomainError(f"index {i} outside 1..{n}")
        if exps[i - 1]:
            raise DomainError(f"repeated index {i}")
        exps[i - 1] = 1
    return tuple(exps)


def grlex_key(m: Monomial):
    """Sort key: higher degree first, then lexicographically larger first.

    Within one degree this lists ``x1^2, x1*x2, ..., x1*xn, x2^2, ...``.
    """
    return (-sum(m), tuple(-e for e in m))


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> Tuple[Monomial, ...]:
    """All degree-``d`` monomials in ``n`` variables, in graded-lex order."""
    if n < 1 or d < 0:
        raise DomainError(f"monomials({n}, {d}) undefined")
    if n == 1:
        return ((d,),)
    out = []
    for e in range(d, -1, -1):
        out.extend((e,) + rest for rest in monomials(n - 1, d - e))
    return tuple(out)


def multinomial(exps: Sequence[int]) -> int:
    """``|exps|! / prod(e!)``, built up one binomial factor at a time."""
    total = 0
    result = 1
    for e in exps:
        total += e
        result *= math.comb(total, e)
    return result


@lru_cache(maxsize=64)
def _power_table(n: int, d: int) -> Tuple[Tuple[Monomial, int], ...]:
    return tuple((m, multinomial(m)) for m in monomials(n, d))


def monomial_text(m: Monomial, names: Sequence[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(m):
        if not e:
            continue
        name = names[i] if names else f"x{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero exact coefficients.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | Iterable = ()):
        if nvars < 1:
            raise DomainError("a polynomial needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != nvars or any(e < 0 for e in m):
                raise DomainError(f"bad exponent vector {m} for {nvars} variables")
            c = normalize_scalar(c)
            if c:
                c = normalize_scalar(clean.get(m, 0) + c)
                if c:
                    clean[m] = c
                else:
                    clean.pop(m, None)
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already normalized and zero-free
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        """The 1-based variable ``x_i``."""
        return cls(nvars, {subset_monomial(nvars, [i]): 1})

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return MappingProxyType(self._terms)

    def coefficient(self, m: Monomial) -> Scalar:
        return self._terms.get(tuple(m), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or ``None`` if mixed or zero."""
        degs = {sum(m) for m in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DomainError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = normalize_scalar(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = normalize_scalar(c)
        if not c:
            return Polynomial._raw(self.nvars, {})
        return Polynomial._raw(
            self.nvars, {m: normalize_scalar(v * c) for m, v in self._terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation / substitution ---------------------------------------

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.nvars:
            raise DomainError(f"point has {len(point)} coordinates, need {self.nvars}")
        pt = [normalize_scalar(v) for v in point]
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in zip(pt, m):
                if e:
                    t *= v ** e
            total += t
        return normalize_scalar(total)

    def eliminate_variable(self, i: int) -> "Polynomial":
        """Set the 1-based variable ``x_i`` to zero and drop it."""
        if not 1 <= i <= self.nvars or self.nvars == 1:
            raise DomainError(f"cannot eliminate x{i} from {self.nvars} variables")
        j = i - 1
        return Polynomial._raw(
            self.nvars - 1,
            {m[:j] + m[j + 1:]: c for m, c in self._terms.items() if not m[j]},
        )

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variable ``x_{i+1}`` to ``x_{perm[i]+1}`` (0-based ``perm``)."""
        out = {}
        for m, c in self._terms.items():
            e = [0] * self.nvars
            for i, a in enumerate(m):
                e[perm[i]] = a
            out[tuple(e)] = c
        return Polynomial._raw(self.nvars, out)

    # -- text ---------------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None) -> str:
        """Canonical form, e.g. ``24*x1*x2*x3 - 3*x4^2``; ``0`` if empty."""
        if not self._terms:
            return "0"
        pieces = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = monomial_text(m, names)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if idx == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.to_text()!r})"


# ---------------------------------------------------------------------------
# constructors and operations

def elementary_symmetric(d: int, n: int) -> Polynomial:
    """Sum of all C(n, d) square-free monomials of degree ``d``."""
    if not 1 <= d <= n:
        raise DomainError(f"elementary_symmetric needs 1 <= d <= n, got d={d}, n={n}")
    terms = {}
    for subset in combinations(range(n), d):
        e = [0] * n
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = 1
    return Polynomial._raw(n, terms)


def expand_linear_power(signs: Sequence[int], d: int) -> Polynomial:
    """Expand ``(s_1 x_1 + ... + s_n x_n)^d`` for a vector of signs ``s``.

    Every degree-``d`` monomial appears, with coefficient the multinomial
    coefficient times the product of the signs raised to the exponents.
    """
    n = len(signs)
    if n == 0:
        raise DomainError("empty sign vector")
    if d < 0:
        raise DomainError("negative degree")
    if any(s not in (1, -1) for s in signs):
        raise DomainError(f"signs must be +1/-1, got {list(signs)}")
    minus = [i for i, s in enumerate(signs) if s < 0]
    terms = {}
    for m, c in _power_table(n, d):
        if sum(m[i] for i in minus) & 1:
            c = -c
        terms[m] = c
    return Polynomial._raw(n, terms)


def _diff_monomial(beta: Monomial, target: Polynomial) -> dict:
    out: dict = {}
    for alpha, c in target._terms.items():
        factor = 1
        for a, b in zip(alpha, beta):
            if a < b:
                break
            if b:
                factor *= math.perm(a, b)
        else:
            m = tuple(a - b for a, b in zip(alpha, beta))
            out[m] = out.get(m, 0) + c * factor
    return out


def apply_diff(op: Monomial | Polynomial, target: Polynomial) -> Polynomial:
    """Act on ``target`` by the constant-coefficient differential operator ``op``.

    A monomial ``beta`` differentiates ``beta_i`` times in ``x_i``; a
    polynomial operator acts linearly through its terms.
    """
    if isinstance(op, Polynomial):
        if op.nvars != target.nvars:
            raise DomainError(f"variable count mismatch: {op.nvars} vs {target.nvars}")
        acc: dict = {}
        for beta, c in op._terms.items():
            for m, v in _diff_monomial(beta, target).items():
                acc[m] = acc.get(m, 0) + c * v
        return Polynomial(target.nvars, acc)
    beta = tuple(op)
    if len(beta) != target.nvars:
        raise DomainError(f"variable count mismatch: {len(beta)} vs {target.nvars}")
    if any(b < 0 for b in beta):
        raise DomainError(f"bad operator exponents {beta}")
    return Polynomial(target.nvars, _diff_monomial(beta, target))


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p + q


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p - q


def poly_scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def poly_eval(p: Polynomial, point: Sequence) -> Scalar:
    return p.evaluate(point)
