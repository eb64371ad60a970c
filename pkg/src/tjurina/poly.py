"""Exact sparse multivariate polynomials over the rationals.

A polynomial lives in Q[x_1,...,x_n] for a fixed number of variables
(2 for affine plane curves, 3 for projective ones) and is stored as a
map from exponent vectors to nonzero rational coefficients.  All
arithmetic is exact; no floating point ever enters.

Monomials are plain tuples of non-negative integers, one entry per
variable.  Coefficients are ``int`` or ``fractions.Fraction`` (an
integer-valued Fraction is normalized back to ``int``; Python hashes
the two consistently, so structural equality and hashing just work).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]
Monomial = tuple[int, ...]

_ORDER_KINDS = ("grlex", "lex", "degrevlex")


def _norm_coeff(c: Scalar) -> Scalar:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return c.numerator
        return c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(m: Monomial, n: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m, n))


def monomial_divides(m: Monomial, n: Monomial) -> bool:
    """True when x^m divides x^n, i.e. componentwise m <= n."""
    return all(a <= b for a, b in zip(m, n))


def monomial_div(n: Monomial, m: Monomial) -> Monomial:
    """Exponent vector of x^n / x^m; caller guarantees divisibility."""
    return tuple(b - a for a, b in zip(m, n))


def monomial_lcm(m: Monomial, n: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m, n))


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All exponent vectors in ``nvars`` variables of total degree exactly d."""
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: grlex, lex or degrevlex plus a variable precedence.

    ``precedence`` lists variable indices from most to least significant;
    ``None`` means the natural order (variable 0 highest).  grlex compares
    total degree first and breaks ties lexicographically by precedence;
    degrevlex breaks degree ties by the smallest exponent on the least
    significant variable.
    """

    kind: str = "grlex"
    precedence: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in _ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.precedence is not None:
            p = tuple(self.precedence)
            if sorted(p) != list(range(len(p))):
                raise ValueError("precedence must be a permutation of variable indices")
            object.__setattr__(self, "precedence", p)

    def _prec(self, nvars: int) -> tuple[int, ...]:
        if self.precedence is None:
            return tuple(range(nvars))
        if len(self.precedence) != nvars:
            raise ValueError("precedence length does not match variable count")
        return self.precedence

    def key(self, m: Monomial):
        """Sort key: larger key = larger monomial in this order."""
        prec = self._prec(len(m))
        if self.kind == "lex":
            return tuple(m[i] for i in prec)
        if self.kind == "grlex":
            return (sum(m),) + tuple(m[i] for i in prec)
        # degrevlex
        return (sum(m),) + tuple(-m[i] for i in reversed(prec))


GRLEX = MonomialOrder("grlex")
LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        if nvars < 1:
            raise ValueError("need at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        table: dict[Monomial, Scalar] = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"exponent vector {mono} does not match {nvars} variables")
            if any(e < 0 or not isinstance(e, int) for e in mono):
                raise ValueError(f"exponents must be non-negative integers: {mono}")
            c = table.get(mono, 0) + coeff
            if c == 0:
                table.pop(mono, None)
            else:
                table[mono] = _norm_coeff(c)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", table)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars: int, expos: Monomial, coeff: Scalar = 1) -> "Polynomial":
        return cls(nvars, {tuple(expos): coeff})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError("variable index out of range")
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self._terms.items())

    def terms_dict(self) -> dict[Monomial, Scalar]:
        """A fresh mutable copy of the term table."""
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(tuple(mono), 0)

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * self.nvars, 0)

    def degree(self) -> int | None:
        """Total degree; None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    def min_degree(self) -> int | None:
        """Degree of the lowest nonzero homogeneous component (the order of
        vanishing at the origin); None for the zero polynomial."""
        if not self._terms:
            return None
        return min(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self._terms}
        return len(degs) <= 1

    def leading_monomial(self, order: MonomialOrder = GRLEX) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GRLEX) -> Scalar:
        return self._terms[self.leading_monomial(order)]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other if other.nvars == self.nvars else None
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        table = dict(self._terms)
        for m, c in o._terms.items():
            s = table.get(m, 0) + c
            if s == 0:
                table.pop(m, None)
            else:
                table[m] = _norm_coeff(s)
        return Polynomial(self.nvars, table)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(self._terms) > len(o._terms):
            self, o = o, self
        table: dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                m = monomial_mul(m1, m2)
                s = table.get(m, 0) + c1 * c2
                if s == 0:
                    table.pop(m, None)
                else:
                    table[m] = s
        return Polynomial(self.nvars, table)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: co * c for m, co in self._terms.items()})

    def monic(self, order: MonomialOrder = GRLEX) -> "Polynomial":
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self.scale(Fraction(1, 1) / lc)

    # -- structure ----------------------------------------------------------

    def homogeneous_component(self, k: int) -> "Polynomial":
        """Sum of the terms of total degree exactly k (zero if none)."""
        if k < 0:
            raise ValueError("degree must be non-negative")
        return Polynomial(self.nvars, {m: c for m, c in self._terms.items() if sum(m) == k})

    def truncate_below(self, r: int) -> "Polynomial":
        """Drop every term of total degree >= r."""
        return Polynomial(self.nvars, {m: c for m, c in self._terms.items() if sum(m) < r})

    def partial_derivative(self, var_index: int) -> "Polynomial":
        if not 0 <= var_index < self.nvars:
            raise ValueError("variable index out of range")
        table: dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            e = m[var_index]
            if e == 0:
                continue
            mm = list(m)
            mm[var_index] = e - 1
            table[tuple(mm)] = c * e
        return Polynomial(self.nvars, table)

    def evaluate(self, point: tuple[Scalar, ...]) -> Scalar:
        if len(point) != self.nvars:
            raise ValueError("point dimension does not match variable count")
        total: Scalar = 0
        for m, c in self._terms.items():
            v = c
            for coord, e in zip(point, m):
                if e:
                    v *= coord ** e
            total += v
        return _norm_coeff(total) if isinstance(total, Fraction) else total

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.nvars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "Polynomial(0)"
        names = ("x", "y") if self.nvars == 2 else tuple(f"x{i}" for i in range(self.nvars))
        bits = []
        for m in sorted(self._terms, key=GRLEX.key, reverse=True):
            c = self._terms[m]
            pows = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e
            )
            if not pows:
                bits.append(str(c))
            elif c == 1:
                bits.append(pows)
            elif c == -1:
                bits.append("-" + pows)
            else:
                bits.append(f"{c}*{pows}")
        s = bits[0]
        for b in bits[1:]:
            s += b if b.startswith("-") else "+" + b
        return f"Polynomial({s})"


# ---------------------------------------------------------------------------
# free-function forms of the core operations


def partial_derivative(f: Polynomial, var_index: int) -> Polynomial:
    """Exact formal partial derivative of f with respect to one variable."""
    return f.partial_derivative(var_index)


def homogeneous_component(f: Polynomial, k: int) -> Polynomial:
    return f.homogeneous_component(k)


def translate_to_origin(f: Polynomial, point: tuple[Scalar, Scalar]) -> Polynomial:
    """Return g(x, y) = f(x + p, y + q), so that g(0,0) = f(p, q).

    Only affine (2-variable) polynomials are translated; the expansion is
    done with exact binomial coefficients.
    """
    if f.nvars != 2:
        raise ValueError("translation is defined for affine 2-variable polynomials")
    p, q = point
    if p == 0 and q == 0:
        return f
    table: dict[Monomial, Scalar] = {}
    for (i, j), c in f.terms():
        for k in range(i + 1):
            ck = c * comb(i, k) * (p ** (i - k) if i != k else 1)
            if ck == 0:
                continue
            for l in range(j + 1):
                ckl = ck * comb(j, l) * (q ** (j - l) if j != l else 1)
                if ckl == 0:
                    continue
                m = (k, l)
                s = table.get(m, 0) + ckl
                if s == 0:
                    table.pop(m, None)
                else:
                    table[m] = s
    return Polynomial(2, table)
