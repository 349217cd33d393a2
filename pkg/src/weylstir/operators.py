"""Formal words in x and D and their exact action on monomials.

A :class:`Word` is the single-annihilator pattern ``x^L D x^R`` with rational
exponents; its *excess* ``L + R - 1`` is the net amount it raises a monomial
degree.  An :class:`OperatorExpr` is a finite sum of terms, each a rational
coefficient times an ordered product of factors; a factor is either a pure
power ``x^p`` or a word power ``(x^L D x^R)^m``.  Factors are written in
operator order: the leftmost factor acts last.

The whole point of this representation is that every expression acts on a
formal monomial ``x^s`` exactly:

    (x^L D x^R)^m : x^s  |->  prod_{j=0}^{m-1} (s + R + j e) * x^{s + m e}

with ``e`` the excess, so identities between expressions can be certified by
probing finitely many rational ``s`` (the action coefficients are polynomials
in ``s`` of degree bounded by the word powers involved).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .kernels import as_rational

__all__ = [
    "Word",
    "XPower",
    "WordPower",
    "Factor",
    "OperatorExpr",
    "MixedExcessError",
    "act_on_monomial",
    "excess",
    "adjoint",
]


class MixedExcessError(ValueError):
    """Raised when an expression mixes terms of different excess."""


@dataclass(frozen=True)
class Word:
    """The pattern ``x^L D x^R``."""

    L: Fraction
    R: Fraction

    def __post_init__(self):
        object.__setattr__(self, "L", as_rational(self.L))
        object.__setattr__(self, "R", as_rational(self.R))

    @property
    def excess(self) -> Fraction:
        return self.L + self.R - 1

    def reversed(self) -> "Word":
        return Word(self.R, self.L)

    def is_natural(self) -> bool:
        return (
            self.L.denominator == 1
            and self.R.denominator == 1
            and self.L >= 0
            and self.R >= 0
        )


@dataclass(frozen=True)
class XPower:
    """Pure power factor ``x^exp``."""

    exp: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exp", as_rational(self.exp))


@dataclass(frozen=True)
class WordPower:
    """Word power factor ``(x^L D x^R)^power``."""

    word: Word
    power: int

    def __post_init__(self):
        if not isinstance(self.power, int) or self.power < 0:
            raise ValueError(f"word power must be a natural number, got {self.power}")


Factor = Union[XPower, WordPower]
Term = Tuple[Fraction, Tuple[Factor, ...]]


class OperatorExpr:
    """Finite sum of coefficient-weighted factor products."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Tuple[object, Sequence[Factor]]] = ()):
        clean: List[Term] = []
        for coeff, factors in terms:
            c = as_rational(coeff)
            if c:
                clean.append((c, tuple(factors)))
        self.terms: Tuple[Term, ...] = tuple(clean)

    # -- constructors ---------------------------------------------------

    @classmethod
    def single(cls, coeff, *factors: Factor) -> "OperatorExpr":
        return cls([(coeff, factors)])

    @classmethod
    def zero(cls) -> "OperatorExpr":
        return cls()

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        return OperatorExpr(list(self.terms) + list(other.terms))

    def scaled(self, c) -> "OperatorExpr":
        c = as_rational(c)
        return OperatorExpr([(c * coeff, factors) for coeff, factors in self.terms])

    # -- semantics ------------------------------------------------------

    def act_on_monomial(self, s) -> Dict[Fraction, Fraction]:
        """Apply to ``x^s``; returns {exponent: coefficient}, zeros dropped.

        Factors apply right to left (the rightmost factor hits ``x^s``
        first), matching operator composition.
        """
        s = as_rational(s)
        collected: Dict[Fraction, Fraction] = {}
        for coeff, factors in self.terms:
            exp = s
            c = coeff
            for factor in reversed(factors):
                if isinstance(factor, XPower):
                    exp = exp + factor.exp
                else:
                    e = factor.word.excess
                    base = exp + factor.word.R
                    for j in range(factor.power):
                        c = c * (base + j * e)
                    exp = exp + factor.power * e
                if not c:
                    break
            if c:
                collected[exp] = collected.get(exp, Fraction(0)) + c
        return {e: v for e, v in collected.items() if v}

    def excess(self) -> Optional[Fraction]:
        """Common excess of all terms (None for the zero expression);
        raises MixedExcessError if terms disagree."""
        value: Optional[Fraction] = None
        for _, factors in self.terms:
            total = Fraction(0)
            for factor in factors:
                if isinstance(factor, XPower):
                    total += factor.exp
                else:
                    total += factor.power * factor.word.excess
            if value is None:
                value = total
            elif value != total:
                raise MixedExcessError(
                    f"terms of mixed excess: {value} vs {total}"
                )
        return value

    def adjoint(self) -> "OperatorExpr":
        """Formal adjoint: reverses factor order, fixes pure powers, and
        maps ``(x^L D x^R)^m`` to ``(-1)^m (x^R D x^L)^m``."""
        out = []
        for coeff, factors in self.terms:
            sign = 1
            new_factors: List[Factor] = []
            for factor in reversed(factors):
                if isinstance(factor, WordPower):
                    if factor.power % 2:
                        sign = -sign
                    new_factors.append(WordPower(factor.word.reversed(), factor.power))
                else:
                    new_factors.append(factor)
            out.append((sign * coeff, tuple(new_factors)))
        return OperatorExpr(out)

    def is_wc_admissible(self) -> bool:
        """True if every exponent in sight is a nonnegative integer, i.e.
        the expression lives in the creation/annihilation dialect."""
        for _, factors in self.terms:
            for factor in factors:
                if isinstance(factor, XPower):
                    if factor.exp.denominator != 1 or factor.exp < 0:
                        return False
                else:
                    if not factor.word.is_natural():
                        return False
        return True

    def max_string_length(self) -> Optional[int]:
        """Letters in the longest term once spelled as a creation /
        annihilation string; None if not admissible."""
        if not self.is_wc_admissible():
            return None
        best = 0
        for _, factors in self.terms:
            length = 0
            for factor in factors:
                if isinstance(factor, XPower):
                    length += int(factor.exp)
                else:
                    length += factor.power * (int(factor.word.L) + int(factor.word.R) + 1)
            best = max(best, length)
        return best

    def to_boson_strings(self) -> List[Tuple[Fraction, str]]:
        """Spell each term as a string over '+', '-' ('+' the creation
        letter); requires admissibility."""
        if not self.is_wc_admissible():
            raise ValueError("expression has non-natural exponents")
        out = []
        for coeff, factors in self.terms:
            chunks = []
            for factor in factors:
                if isinstance(factor, XPower):
                    chunks.append("+" * int(factor.exp))
                else:
                    unit = "+" * int(factor.word.L) + "-" + "+" * int(factor.word.R)
                    chunks.append(unit * factor.power)
            out.append((coeff, "".join(chunks)))
        return out

    # -- display ----------------------------------------------------------

    def render(self, style: str = "x") -> str:
        """Human-readable form; ``style`` is ``"x"`` (x and D) or ``"adag"``
        (creation/annihilation, suitable for admissible expressions)."""
        if not self.terms:
            return "0"
        parts = []
        for coeff, factors in self.terms:
            body = " ".join(_render_factor(f, style) for f in factors if not _is_unit(f))
            if not body:
                body = "1"
            if coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"- {body}" if not parts else f"-{body}")
            else:
                parts.append(f"{coeff} {body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"OperatorExpr({self.render()})"

    def __eq__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self.terms == other.terms


def _is_unit(factor: Factor) -> bool:
    if isinstance(factor, XPower):
        return factor.exp == 0
    return factor.power == 0


def _sup(value) -> str:
    return str(value)


def _render_factor(factor: Factor, style: str) -> str:
    if style == "adag":
        if isinstance(factor, XPower):
            return "a†" if factor.exp == 1 else f"a†^{_sup(factor.exp)}"
        w = factor.word
        inner = []
        if w.L:
            inner.append("a†" if w.L == 1 else f"a†^{_sup(w.L)}")
        inner.append("a")
        if w.R:
            inner.append("a†" if w.R == 1 else f"a†^{_sup(w.R)}")
        body = " ".join(inner)
        if factor.power == 1:
            return f"({body})"
        return f"({body})^{factor.power}"
    if isinstance(factor, XPower):
        return "x" if factor.exp == 1 else f"x^{factor.exp}"
    w = factor.word
    return f"(x^{w.L} D x^{w.R})^{factor.power}"


# -- module-level wrappers matching the operation names ----------------------


def act_on_monomial(expr: OperatorExpr, s) -> Dict[Fraction, Fraction]:
    return expr.act_on_monomial(s)


def excess(expr: OperatorExpr) -> Optional[Fraction]:
    return expr.excess()


def adjoint(expr: OperatorExpr) -> OperatorExpr:
    return expr.adjoint()
