"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a finite map from exponent tuples to nonzero Fractions.
Values are immutable after construction and every operation is a pure
function, so instances can be shared freely between workers.  Floating
point never appears: staircase and flatness verdicts downstream are
discrete and must be exact.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass

from .errors import (
    DimensionMismatchError,
    SingularMatrixError,
    ZeroPolynomialError,
)
from .orders import FORWARD, LocalOrder, degree_order, exp_add


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


class Poly:
    """Polynomial in ``n`` variables, stored as {exponent tuple: Fraction}."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("ambient variable count must be >= 1")
        clean = {}
        if terms:
            for exp, coeff in terms.items() if isinstance(terms, dict) else terms:
                exp = tuple(exp)
                if len(exp) != n:
                    raise DimensionMismatchError(
                        f"exponent {exp} in a polynomial on {n} variables"
                    )
                if any(not isinstance(b, int) or b < 0 for b in exp):
                    raise ValueError(f"exponents must be non-negative ints: {exp}")
                c = _as_fraction(coeff)
                if c:
                    acc = clean.get(exp)
                    if acc is None:
                        clean[exp] = c
                    else:
                        acc = acc + c
                        if acc:
                            clean[exp] = acc
                        else:
                            del clean[exp]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> "Poly":
        return cls(n, {(0,) * n: _as_fraction(c)})

    @classmethod
    def monomial(cls, n: int, exponent, coeff=1) -> "Poly":
        return cls(n, {tuple(exponent): _as_fraction(coeff)})

    @classmethod
    def variable(cls, n: int, i: int) -> "Poly":
        """The variable x_{i+1} (0-based index i)."""
        exp = tuple(1 if j == i else 0 for j in range(n))
        return cls(n, {exp: Fraction(1)})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):
        """Read-only view of (exponent, coefficient) pairs."""
        return self._terms.items()

    def exponents(self):
        return self._terms.keys()

    def coeff(self, exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n, Fraction(0))

    def total_degree(self) -> int:
        """Max total degree of the support; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def min_total_degree(self) -> int:
        if not self._terms:
            return -1
        return min(sum(e) for e in self._terms)

    # -- ring operations ---------------------------------------------------

    def _check_same_n(self, other: "Poly"):
        if self.n != other.n:
            raise DimensionMismatchError(
                f"polynomials on {self.n} and {other.n} variables"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check_same_n(other)
        res = dict(self._terms)
        for exp, c in other._terms.items():
            acc = res.get(exp)
            if acc is None:
                res[exp] = c
            else:
                acc = acc + c
                if acc:
                    res[exp] = acc
                else:
                    del res[exp]
        return _raw(self.n, res)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_same_n(other)
        res = dict(self._terms)
        for exp, c in other._terms.items():
            acc = res.get(exp)
            if acc is None:
                res[exp] = -c
            else:
                acc = acc - c
                if acc:
                    res[exp] = acc
                else:
                    del res[exp]
        return _raw(self.n, res)

    def __neg__(self) -> "Poly":
        return _raw(self.n, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_same_n(other)
        res = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = exp_add(e1, e2)
                acc = res.get(exp)
                if acc is None:
                    res[exp] = c1 * c2
                else:
                    acc = acc + c1 * c2
                    if acc:
                        res[exp] = acc
                    else:
                        del res[exp]
        return _raw(self.n, res)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return Poly.zero(self.n)
        return _raw(self.n, {e: c * v for e, v in self._terms.items()})

    def mul_term(self, coeff, exponent) -> "Poly":
        """Multiply by the single term coeff * x^exponent."""
        c = _as_fraction(coeff)
        if not c:
            return Poly.zero(self.n)
        exponent = tuple(exponent)
        return _raw(self.n, {exp_add(e, exponent): c * v for e, v in self._terms.items()})

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.n}, '{format_poly(self)}')"


def _raw(n: int, terms: dict) -> Poly:
    """Internal constructor for already-normalized term dicts."""
    p = Poly.__new__(Poly)
    object.__setattr__(p, "n", n)
    object.__setattr__(p, "_terms", terms)
    object.__setattr__(p, "_hash", None)
    return p


# -- order-sensitive operations ---------------------------------------------


def initial_exponent(f: Poly, order: LocalOrder):
    """Minimal support exponent of f under the order.

    The zero polynomial has no initial exponent (by convention it sits above
    every exponent) and is rejected.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no initial exponent")
    if f.n != order.n:
        raise DimensionMismatchError(
            f"polynomial on {f.n} variables, order on {order.n}"
        )
    return min(f.exponents(), key=order.key)


def initial_term(f: Poly, order: LocalOrder):
    """(initial exponent, its coefficient)."""
    exp = initial_exponent(f, order)
    return exp, f.coeff(exp)


def initial_form(f: Poly) -> Poly:
    """Homogeneous part of lowest total degree."""
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no initial form")
    d = f.min_total_degree()
    return _raw(f.n, {e: c for e, c in f.items() if sum(e) == d})


@dataclass(frozen=True)
class JetContext:
    """Truncation context: keep exactly the terms of weight <= mu."""

    order: LocalOrder
    mu: int

    def __post_init__(self):
        if self.mu < 0:
            raise ValueError("jet order must be >= 0")


def jet_truncate(f: Poly, ctx: JetContext) -> Poly:
    """Drop every term whose weight is >= mu + 1.  Idempotent."""
    form = ctx.order.form
    if f.n != form.n:
        raise DimensionMismatchError(f"polynomial on {f.n} variables, form on {form.n}")
    return _raw(f.n, {e: c for e, c in f.items() if form.weight(e) <= ctx.mu})


# -- exact matrices and linear coordinate changes ----------------------------


def _matrix_rows(M, n: int):
    rows = [[_as_fraction(x) for x in row] for row in M]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionMismatchError(f"expected a {n}x{n} matrix")
    return rows


def exact_det(M) -> Fraction:
    """Determinant by exact fraction Gaussian elimination."""
    rows = [[_as_fraction(x) for x in row] for row in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def invert_matrix(M):
    """Exact inverse as nested tuples of Fractions."""
    rows = [[_as_fraction(x) for x in row] for row in M]
    n = len(rows)
    aug = [rows[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def apply_linear_change(f: Poly, M) -> Poly:
    """Substitute x_i -> sum_j M[i][j] * x_j and expand.

    M must be invertible (checked by exact determinant), so the total degree
    and the lowest homogeneous degree are preserved.
    """
    n = f.n
    rows = _matrix_rows(M, n)
    if not exact_det(rows):
        raise SingularMatrixError("coordinate change matrix is singular")
    images = [
        Poly(n, {tuple(1 if j == k else 0 for k in range(n)): rows[i][j]
                 for j in range(n) if rows[i][j]})
        for i in range(n)
    ]
    powers = [[Poly.constant(n, 1)] for _ in range(n)]
    result = Poly.zero(n)
    for exp, c in f.items():
        term = Poly.constant(n, c)
        for i, e in enumerate(exp):
            cache = powers[i]
            while len(cache) <= e:
                cache.append(cache[-1] * images[i])
            term = term * cache[e]
        result = result + term
    return result


# -- canonical text form ------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(exp) -> str:
    parts = []
    for i, e in enumerate(exp):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Deterministic text form; terms sorted by the forward degree order."""
    if f.is_zero:
        return "0"
    order = degree_order(f.n, FORWARD)
    pieces = []
    for exp in sorted(f.exponents(), key=order.key):
        c = f.coeff(exp)
        mono = _format_monomial(exp)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)
