"""Exact scalar kernels: strided factorial powers, generalized binomials,
and a desingularized terminating Gauss sum.

Everything here is pure and exact.  "Scalar" means a :class:`fractions.Fraction`
or any commutative-ring element supporting ``+``, ``-`` and ``*`` with itself
and with ``int`` (in particular :class:`weylstir.poly.ParamPoly`).  No floats,
ever.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Union

__all__ = [
    "as_rational",
    "binomial",
    "binomial_general",
    "factorial",
    "strided_falling",
    "strided_rising",
    "falling",
    "rising",
    "hyp2f1_hat",
]

Rational = Fraction


def as_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions, and strings of the form ``"p"`` or ``"p/q"``
    (no decimals)::

        as_rational("3/4")  -> Fraction(3, 4)
        as_rational(-2)     -> Fraction(-2, 1)
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted; use 'p/q' strings or Fraction")
    if isinstance(value, str) and ("." in value or "e" in value.lower()):
        raise ValueError(f"not an exact rational literal: {value!r}")
    return Fraction(value)


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient ``C(n, k)`` for integer arguments,
    defined as ``falling(n, k) / k!``.

    Works for negative ``n`` (e.g. ``binomial(-2, 3) == -4``); for natural
    ``n`` it is zero when ``k > n``, and it is zero for ``k < 0``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k) for n < 0
    return (-1) ** k * comb(k - n - 1, k)


def binomial_general(c, m: int):
    """``C(c, m) = falling(c, m) / m!`` for scalar ``c`` and natural ``m``.

    Used by generalized binomial series expansions where the upper index is a
    non-integer rational.
    """
    if m < 0:
        raise ValueError(f"binomial lower index must be a natural number, got {m}")
    num = falling(c, m)
    if isinstance(num, int):
        q, rem = divmod(num, factorial(m))
        if rem:
            return Fraction(num, factorial(m))
        return q
    return num / factorial(m)


def strided_falling(r, m: int, alpha):
    """Falling factorial power with stride ``alpha``:

    ``r (r - alpha) (r - 2 alpha) ... (r - (m-1) alpha)``, with the empty
    product (``m == 0``) equal to ``1``.
    """
    if m < 0:
        raise ValueError(f"power must be a natural number, got {m}")
    out = 1
    for j in range(m):
        out = out * (r - j * alpha)
    return out


def strided_rising(r, m: int, alpha):
    """Rising factorial power with stride ``alpha``:

    ``r (r + alpha) (r + 2 alpha) ... (r + (m-1) alpha)``, empty product 1.

    Related to the falling power by
    ``strided_rising(r, m, a) == strided_falling(r + (m-1) a, m, a)``.
    """
    if m < 0:
        raise ValueError(f"power must be a natural number, got {m}")
    out = 1
    for j in range(m):
        out = out * (r + j * alpha)
    return out


def falling(r, m: int):
    """Ordinary falling factorial ``r (r-1) ... (r-m+1)`` (stride 1)."""
    return strided_falling(r, m, 1)


def rising(r, m: int):
    """Ordinary rising factorial ``r (r+1) ... (r+m-1)`` (stride 1)."""
    return strided_rising(r, m, 1)


def hyp2f1_hat(N: int, b, c, z):
    """Desingularized terminating Gauss sum.

    For natural ``N`` and scalars ``b``, ``c``, ``z``::

        sum_{k=0}^{N} (-1)^k C(N, k) rising(b, k) rising(c + k, N - k) z^k

    This equals ``rising(c, N) * 2F1(-N, b; c; z)`` whenever the Gauss series
    is defined, but remains a polynomial in ``b`` and ``c`` for *all* ``c``,
    including the nonpositive integers where 2F1 itself is singular.  The
    ``k``-th numerator ``rising(-N, k) / k!`` has been folded into the signed
    binomial, so no division occurs and the result stays in the scalar ring.
    """
    if N < 0:
        raise ValueError(f"series order must be a natural number, got {N}")
    total = 0
    zk = 1
    for k in range(N + 1):
        term = ((-1) ** k * binomial(N, k)) * rising(b, k)
        term = term * rising(c + k, N - k)
        total = total + term * zk
        zk = zk * z
    return total
