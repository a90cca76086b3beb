"""Exact Laurent polynomials with integer coefficients.

A polynomial is a finite map from exponent vectors (negative entries allowed)
to nonzero Python integers. Values are immutable and canonical: two
polynomials are equal iff their term maps are equal.
"""

from __future__ import annotations

from operator import add
from types import MappingProxyType
from typing import Iterable, Mapping

Exponent = tuple[int, ...]


class NonExactDivision(ArithmeticError):
    """Raised when a Laurent quotient does not exist."""


def _grlex_key(e: Exponent) -> tuple[int, Exponent]:
    return (sum(e), e)


class LaurentPolynomial:
    __slots__ = ("_nvars", "_terms", "_hash", "_text")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, int] = {}
        for exp, coeff in items:
            exp = tuple(int(a) for a in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            c = clean.get(exp, 0) + int(coeff)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self._nvars = nvars
        self._terms = clean
        self._hash: int | None = None
        self._text: str | None = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, int]) -> "LaurentPolynomial":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._nvars = nvars
        obj._terms = terms
        obj._hash = None
        obj._text = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "LaurentPolynomial":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: int = 1) -> "LaurentPolynomial":
        exp = tuple(int(a) for a in exponent)
        return cls._raw(len(exp), {exp: coeff} if coeff else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPolynomial":
        """The generator ``x_{i+1}`` (0-based index ``i``)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): 1})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def _check(self, other: "LaurentPolynomial") -> None:
        if self._nvars != other._nvars:
            raise ValueError(f"variable count mismatch: {self._nvars} vs {other._nvars}")

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self._nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPolynomial._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            self, other = other, self
        out: dict[Exponent, int] = {}
        get = out.get
        right = list(other._terms.items())
        for e1, c1 in self._terms.items():
            for e2, c2 in right:
                e = tuple(map(add, e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return LaurentPolynomial._raw(self._nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            if not self.is_monomial():
                raise NonExactDivision("negative power of a non-monomial")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NonExactDivision("negative power of a monomial with non-unit coefficient")
            return LaurentPolynomial._raw(self._nvars, {tuple(a * k for a in e): c ** (-k)})
        result = LaurentPolynomial.constant(self._nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, int):
            return self == LaurentPolynomial.constant(self._nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def min_exponents(self) -> Exponent:
        """Componentwise minimum of the exponent vectors (zero vector for 0)."""
        if not self._terms:
            return (0,) * self._nvars
        return tuple(min(col) for col in zip(*self._terms))

    def shift(self, exponent: Exponent) -> "LaurentPolynomial":
        """Multiply by the monomial ``x^exponent``."""
        return LaurentPolynomial._raw(
            self._nvars,
            {tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()},
        )

    def leading_term(self) -> tuple[Exponent, int]:
        """Leading term under graded lexicographic order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    def exact_div(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return laurent_exact_div(self, other)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return laurent_exact_div(self, other)

    def serialize(self) -> str:
        """Canonical text: terms sorted by exponent vector, ``e1,e2,..:coeff`` joined by ``;``."""
        if self._text is None:
            self._text = ";".join(
                ",".join(map(str, e)) + ":" + str(self._terms[e]) for e in sorted(self._terms)
            )
        return self._text

    def to_term_list(self) -> list[dict]:
        return [{"exp": list(e), "coeff": self._terms[e]} for e in sorted(self._terms)]

    @classmethod
    def from_term_list(cls, nvars: int, terms: Iterable[Mapping]) -> "LaurentPolynomial":
        return cls(nvars, [(tuple(t["exp"]), t["coeff"]) for t in terms])

    def evaluate(self, point) -> object:
        """Evaluate at a point whose entries support ``**`` with negative powers (e.g. Fractions)."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, a in zip(point, e):
                if a:
                    term = term * v**a
            total = total + term
        return total

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=_grlex_key, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def laurent_add(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a + b


def laurent_mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a * b


def _poly_divide(num: dict[Exponent, int], den: dict[Exponent, int], nvars: int) -> dict[Exponent, int]:
    # Long division of polynomials (nonnegative exponents); raises if a remainder would remain.
    lead_e = max(den, key=_grlex_key)
    lead_c = den[lead_e]
    rest = [(e, c) for e, c in den.items() if e != lead_e]
    rem = dict(num)
    quot: dict[Exponent, int] = {}
    while rem:
        e = max(rem, key=_grlex_key)
        c = rem[e]
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if any(s < 0 for s in shift) or c % lead_c:
            raise NonExactDivision("remainder is nonzero")
        q = c // lead_c
        quot[shift] = q
        del rem[e]
        for e2, c2 in rest:
            t = tuple(a + b for a, b in zip(e2, shift))
            s = rem.get(t, 0) - q * c2
            if s:
                rem[t] = s
            else:
                del rem[t]
    return quot


def laurent_exact_div(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Return ``q`` with ``q * b == a`` in the Laurent ring.

    Both operands are first written as a monomial times a polynomial with no
    monomial factor; the polynomial parts are divided by grlex long division
    and the monomials are recombined.

    Raises
    ------
    ZeroDivisionError
        If ``b`` is zero.
    NonExactDivision
        If no Laurent quotient exists.
    """
    a._check(b)
    if not b:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    n = a.nvars
    if not a:
        return LaurentPolynomial.zero(n)
    ma, mb = a.min_exponents(), b.min_exponents()
    a0 = a.shift(tuple(-x for x in ma))._terms
    b0 = b.shift(tuple(-x for x in mb))._terms
    if len(b0) == 1:
        (e, c), = b0.items()
        # b0 is a constant once its monomial factor is cleared
        if any(v % c for v in a0.values()):
            raise NonExactDivision(f"coefficients not divisible by {c}")
        q0 = {k: v // c for k, v in a0.items()}
    else:
        q0 = _poly_divide(a0, b0, n)
    shift = tuple(x - y for x, y in zip(ma, mb))
    return LaurentPolynomial._raw(n, q0).shift(shift)
