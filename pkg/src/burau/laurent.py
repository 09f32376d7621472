"""Exact sparse Laurent polynomials, square matrices over them, and dense
polynomials in an outer variable with Laurent coefficients.

Integer coefficients use Python's arbitrary-precision ints, so products of
matrix entries never overflow.  The complex coefficient domain mirrors the
integer one but prunes small coefficients only through an explicit
``normalize`` call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

INT = "int"
COMPLEX = "complex"

_DOMAINS = (INT, COMPLEX)

Coeff = "int | complex"


def _check_domain(domain: str) -> None:
    if domain not in _DOMAINS:
        raise ValueError(f"unknown coefficient domain {domain!r}")


def _check_same_domain(a: "LaurentPoly", b: "LaurentPoly") -> None:
    if a.domain != b.domain:
        raise ValueError(f"coefficient domain mismatch: {a.domain} vs {b.domain}")


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse polynomial in t and t^-1.

    ``terms`` holds (exponent, coefficient) pairs in strictly ascending
    exponent order with no zero coefficients; the empty tuple is the zero
    polynomial.
    """

    terms: tuple = ()
    domain: str = INT

    def __post_init__(self) -> None:
        _check_domain(self.domain)
        last = None
        for exp, coeff in self.terms:
            if coeff == 0:
                raise ValueError("zero coefficient stored in LaurentPoly")
            if last is not None and exp <= last:
                raise ValueError("terms must be strictly ascending in exponent")
            if self.domain == INT and not isinstance(coeff, int):
                raise ValueError(f"non-integer coefficient {coeff!r} in integer domain")
            last = exp

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_dict(coeffs: dict, domain: str = INT) -> "LaurentPoly":
        _check_domain(domain)
        if domain == COMPLEX:
            items = tuple(sorted((int(e), complex(c)) for e, c in coeffs.items()
                                 if complex(c) != 0))
        else:
            items = tuple(sorted((int(e), c) for e, c in coeffs.items() if c != 0))
        return LaurentPoly(items, domain)

    @staticmethod
    def zero(domain: str = INT) -> "LaurentPoly":
        return LaurentPoly((), domain)

    @staticmethod
    def constant(c, domain: str = INT) -> "LaurentPoly":
        return LaurentPoly.from_dict({0: c}, domain)

    @staticmethod
    def one(domain: str = INT) -> "LaurentPoly":
        return LaurentPoly.constant(1, domain)

    @staticmethod
    def t_power(exp: int, coeff=1, domain: str = INT) -> "LaurentPoly":
        return LaurentPoly.from_dict({exp: coeff}, domain)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        _check_same_domain(self, other)
        acc = dict(self.terms)
        for exp, coeff in other.terms:
            acc[exp] = acc.get(exp, 0) + coeff
        return LaurentPoly.from_dict(acc, self.domain)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms), self.domain)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        _check_same_domain(self, other)
        acc: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(acc, self.domain)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: int):
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def coefficient_sum(self):
        """Sum of all coefficients, i.e. the exact value at t = 1."""
        return sum(c for _, c in self.terms)

    def min_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return self.terms[0][0]

    def max_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return self.terms[-1][0]

    # -- morphisms ---------------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """Exchange t and t^-1; complex coefficients are also conjugated."""
        if self.domain == COMPLEX:
            items = tuple((-e, c.conjugate()) for e, c in reversed(self.terms))
        else:
            items = tuple((-e, c) for e, c in reversed(self.terms))
        return LaurentPoly(items, self.domain)

    def to_complex(self) -> "LaurentPoly":
        if self.domain == COMPLEX:
            return self
        return LaurentPoly(tuple((e, complex(c)) for e, c in self.terms), COMPLEX)

    def normalize(self, eps: float = 1e-12) -> "LaurentPoly":
        """Prune complex coefficients of magnitude below eps (explicit only)."""
        if self.domain != COMPLEX:
            return self
        return LaurentPoly(tuple((e, c) for e, c in self.terms if abs(c) >= eps),
                           COMPLEX)

    def evaluate(self, t: complex) -> complex:
        """Value at a nonzero complex t, by exponent-sorted Horner accumulation."""
        if t == 0:
            raise ValueError("Laurent polynomials cannot be evaluated at t = 0")
        if not self.terms:
            return 0j
        t = complex(t)
        acc = complex(self.terms[-1][1])
        for i in range(len(self.terms) - 2, -1, -1):
            gap = self.terms[i + 1][0] - self.terms[i][0]
            acc = acc * t ** gap + self.terms[i][1]
        return acc * t ** self.terms[0][0]

    # -- text and JSON -----------------------------------------------------

    def render(self) -> str:
        """Canonical text form, terms in ascending exponent: "-t^-2 + t^-1 - 1"."""
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.terms:
            if self.domain == COMPLEX:
                sign, body = "+", f"({_fmt_complex(coeff)})" + _t_suffix(exp)
            else:
                sign = "-" if coeff < 0 else "+"
                mag = abs(coeff)
                if exp == 0:
                    body = str(mag)
                elif mag == 1:
                    body = _t_name(exp)
                else:
                    body = f"{mag}*{_t_name(exp)}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        """Map from exponent strings to coefficient strings (exact) or [re, im]."""
        if self.domain == COMPLEX:
            return {str(e): [c.real, c.imag] for e, c in self.terms}
        return {str(e): str(c) for e, c in self.terms}

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        coeffs: dict = {}
        domain = INT
        for key, value in obj.items():
            if isinstance(value, str):
                coeffs[int(key)] = int(value)
            else:
                re, im = value
                coeffs[int(key)] = complex(re, im)
                domain = COMPLEX
        return LaurentPoly.from_dict(coeffs, domain)


def _t_name(exp: int) -> str:
    return "t" if exp == 1 else f"t^{exp}"


def _t_suffix(exp: int) -> str:
    return "" if exp == 0 else "*" + _t_name(exp)


def _fmt_complex(z: complex) -> str:
    re = f"{z.real:.12g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{abs(z.imag):.12g}j"


@dataclass(frozen=True)
class LaurentMatrix:
    """Square matrix over a single Laurent coefficient domain."""

    rows: tuple

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("LaurentMatrix must have positive dimension")
        domain = self.rows[0][0].domain
        for row in self.rows:
            if len(row) != n:
                raise ValueError("LaurentMatrix must be square")
            for entry in row:
                if entry.domain != domain:
                    raise ValueError("mixed coefficient domains in LaurentMatrix")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def domain(self) -> str:
        return self.rows[0][0].domain

    @staticmethod
    def from_lists(rows: Iterable[Iterable[LaurentPoly]]) -> "LaurentMatrix":
        return LaurentMatrix(tuple(tuple(row) for row in rows))

    @staticmethod
    def identity(n: int, domain: str = INT) -> "LaurentMatrix":
        one = LaurentPoly.one(domain)
        zero = LaurentPoly.zero(domain)
        return LaurentMatrix(tuple(tuple(one if i == j else zero for j in range(n))
                                   for i in range(n)))

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.rows[i][j]

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch in matrix product")
        n = self.dim
        zero = LaurentPoly.zero(self.domain)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    left = self.rows[i][k]
                    if left.is_zero:
                        continue
                    acc = acc + left * other.rows[k][j]
                row.append(acc)
            out.append(tuple(row))
        return LaurentMatrix(tuple(out))


@dataclass(frozen=True)
class BivariatePoly:
    """Dense polynomial in an outer variable X with LaurentPoly coefficients.

    ``coeffs[k]`` is the coefficient of X^k; the highest entry is nonzero.
    The empty tuple is the zero polynomial.
    """

    coeffs: tuple = ()

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1].is_zero:
            raise ValueError("leading coefficient of BivariatePoly must be nonzero")
        domains = {c.domain for c in self.coeffs}
        if len(domains) > 1:
            raise ValueError("mixed coefficient domains in BivariatePoly")

    @staticmethod
    def make(coeffs: Iterable[LaurentPoly]) -> "BivariatePoly":
        items = list(coeffs)
        while items and items[-1].is_zero:
            items.pop()
        return BivariatePoly(tuple(items))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> LaurentPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return LaurentPoly.zero(self.coeffs[0].domain if self.coeffs else INT)

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        n = max(len(self.coeffs), len(other.coeffs))
        zero = LaurentPoly.zero(self.coeffs[0].domain)
        out = []
        for k in range(n):
            a = self.coeffs[k] if k < len(self.coeffs) else zero
            b = other.coeffs[k] if k < len(other.coeffs) else zero
            out.append(a + b)
        return BivariatePoly.make(out)

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return self + (-other)

    def __mul__(self, other: "BivariatePoly") -> "BivariatePoly":
        if self.is_zero or other.is_zero:
            return BivariatePoly()
        zero = LaurentPoly.zero(self.coeffs[0].domain)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return BivariatePoly.make(out)

    def coefficients_at(self, t: complex) -> tuple:
        """Evaluate every Laurent coefficient at t; ascending X powers."""
        return tuple(c.evaluate(t) for c in self.coeffs)

    def render(self, var: str = "x") -> str:
        """Canonical text form in ascending powers of the outer variable."""
        if not self.coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            pieces.append(_bivariate_piece(c, k, var))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self, var: str = "x") -> dict:
        return {"variable": var, "coefficients": [c.to_json() for c in self.coeffs]}


def _var_name(var: str, k: int) -> str:
    return var if k == 1 else f"{var}^{k}"


def _bivariate_piece(c: LaurentPoly, k: int, var: str):
    xpart = "" if k == 0 else _var_name(var, k)
    if len(c.terms) == 1 and c.domain == INT:
        exp, coeff = c.terms[0]
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        factors = []
        if mag != 1 or (exp == 0 and k == 0):
            factors.append(str(mag))
        if exp != 0:
            factors.append(_t_name(exp))
        if xpart:
            factors.append(xpart)
        return sign, "*".join(factors)
    body = f"({c.render()})"
    if xpart:
        body += f"*{xpart}"
    return "+", body


def bivariate_det(entries) -> BivariatePoly:
    """Exact determinant of a square grid of BivariatePoly entries.

    First-row cofactor expansion, memoized on the surviving-column bitmask;
    no division, so it is valid over the Laurent coefficient ring.
    """
    n = len(entries)
    if n == 0:
        return BivariatePoly.make([LaurentPoly.one()])
    one = BivariatePoly.make([LaurentPoly.one(_grid_domain(entries))])
    memo: dict = {}

    def det(cols: int) -> BivariatePoly:
        if cols == 0:
            return one
        cached = memo.get(cols)
        if cached is not None:
            return cached
        i = n - bin(cols).count("1")
        acc = BivariatePoly()
        sign = 1
        rest = cols
        while rest:
            bit = rest & -rest
            j = bit.bit_length() - 1
            entry = entries[i][j]
            if not entry.is_zero:
                minor = det(cols ^ bit)
                term = entry * minor
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
            rest ^= bit
        memo[cols] = acc
        return acc

    return det((1 << n) - 1)


def _grid_domain(entries) -> str:
    for row in entries:
        for entry in row:
            if entry.coeffs:
                return entry.coeffs[0].domain
    return INT


MAX_CHARPOLY_DIM = 12


def charpoly(m: LaurentMatrix) -> BivariatePoly:
    """Exact characteristic polynomial det(X*I - m) over the Laurent ring."""
    n = m.dim
    if n > MAX_CHARPOLY_DIM:
        raise ValueError(
            f"characteristic polynomial limited to dimension {MAX_CHARPOLY_DIM}, got {n}")
    one = LaurentPoly.one(m.domain)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            b = m.entry(i, j)
            if i == j:
                row.append(BivariatePoly.make([-b, one]))
            else:
                row.append(BivariatePoly.make([-b]))
        entries.append(row)
    return bivariate_det(entries)
