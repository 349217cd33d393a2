"""Sparse integer-coefficient polynomials in the three parameters
``alpha``, ``beta``, ``r``.

Triangle entries are polynomials in these parameters with integer
coefficients; :class:`ParamPoly` is the exact carrier for the symbolic
triangle mode.  Representation: a dict mapping exponent triples
``(i, j, k)`` (for ``alpha^i beta^j r^k``) to nonzero ``int`` coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Tuple

Monomial = Tuple[int, int, int]

_VAR_NAMES = ("alpha", "beta", "r")


class ParamPoly:
    """Exact polynomial in Z[alpha, beta, r].

    Supports ``+``, ``-``, ``*`` and ``**`` with other ParamPoly values and
    with ints; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Monomial, int] | None = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
                i, j, k = mono
                if i < 0 or j < 0 or k < 0:
                    raise ValueError(f"negative exponent in monomial {mono}")
                if coeff:
                    clean[(i, j, k)] = coeff
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "ParamPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def variable(cls, name: str) -> "ParamPoly":
        if name not in _VAR_NAMES:
            raise ValueError(f"unknown parameter {name!r}; expected one of {_VAR_NAMES}")
        mono = [0, 0, 0]
        mono[_VAR_NAMES.index(name)] = 1
        return cls({tuple(mono): 1})

    @classmethod
    def alpha(cls) -> "ParamPoly":
        return cls.variable("alpha")

    @classmethod
    def beta(cls) -> "ParamPoly":
        return cls.variable("beta")

    @classmethod
    def r(cls) -> "ParamPoly":
        return cls.variable("r")

    # -- inspection ---------------------------------------------------

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degrees(self) -> set[int]:
        """Set of total degrees i+j+k present (for homogeneity checks)."""
        return {i + j + k for (i, j, k) in self._terms}

    def evaluate(self, alpha: Fraction, beta: Fraction, r: Fraction) -> Fraction:
        """Exact evaluation at a rational parameter point."""
        total = Fraction(0)
        for (i, j, k), coeff in self._terms.items():
            total += coeff * alpha**i * beta**j * r**k
        return total

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "ParamPoly | None":
        if isinstance(other, ParamPoly):
            return other
        if isinstance(other, int):
            return ParamPoly({(0, 0, 0): other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in o._terms.items():
            new = terms.get(mono, 0) + coeff
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        out = ParamPoly.__new__(ParamPoly)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = ParamPoly.__new__(ParamPoly)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

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
        terms: Dict[Monomial, int] = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in o._terms.items():
                mono = (i1 + i2, j1 + j2, k1 + k2)
                new = terms.get(mono, 0) + c1 * c2
                if new:
                    terms[mono] = new
                else:
                    terms.pop(mono, None)
        out = ParamPoly.__new__(ParamPoly)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only natural powers are defined")
        result = ParamPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- equality / display --------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"ParamPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        # highest total degree first, then lexicographic, for stable output
        for mono, coeff in sorted(
            self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1] + t[0][2]), t[0])
        ):
            factors = []
            for name, exp in zip(_VAR_NAMES, mono):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ALPHA = ParamPoly.alpha()
BETA = ParamPoly.beta()
R = ParamPoly.r()
