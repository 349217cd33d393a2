"""Catalog of operator ordering identities and their exact verification.

Each :class:`IdentityTemplate` knows how to construct both sides of a family
of operator identities as :class:`OperatorExpr` values, given rational word
parameters and a power ``n``.  Verification is semantic and exact, through
two independent channels:

1. *monomial action*: both sides are applied to ``x^s`` for enough rational
   probe values ``s`` to certify polynomial equality of the actions;
2. *string rewriting*: whenever a side lives in the creation/annihilation
   dialect (all exponents natural) and is short enough, both sides are
   spelled as boson strings and normally ordered by the independent
   rewriting oracle, and the normal forms are compared.

Identity coefficients come from the triangle module (recurrence scheme), so
a verification failure would implicate either the triangles, the operator
engine, or the identity itself; their mutual agreement is the point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .boson import normal_order_oracle
from .kernels import as_rational, binomial, rising
from .operators import OperatorExpr, Word, WordPower, XPower
from .triangles import build_recurrence, closed_form

F = Fraction

__all__ = [
    "IdentityTemplate",
    "TemplateInstance",
    "TEMPLATES",
    "TEMPLATE_ORDER",
    "templates_matching",
    "VerifyReport",
    "verify_identity",
    "normal_form",
    "wc_admissibility_check",
    "AdmissibilityReport",
    "hermite_identity_check",
    "ttv_check",
    "adjoint_pairing_check",
    "WC_PROBES",
    "WTC_PROBES",
]


# ---------------------------------------------------------------------------
# small construction helpers
# ---------------------------------------------------------------------------


def _xp(e) -> XPower:
    return XPower(as_rational(e))


def _wp(L, R, m: int) -> WordPower:
    return WordPower(Word(as_rational(L), as_rational(R)), m)


def _one(*factors) -> OperatorExpr:
    return OperatorExpr.single(1, *factors)


def _poly_in_word(word: Word, shifts: Sequence[Fraction]) -> OperatorExpr:
    """Expand ``prod_j (w + shifts[j])`` into powers of the word ``w``."""
    coeffs: List[Fraction] = [F(1)]
    for c in shifts:
        nxt = [F(0)] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i + 1] += a
            nxt[i] += c * a
        coeffs = nxt
    return OperatorExpr(
        [(coeffs[m], (WordPower(word, m),)) for m in range(len(coeffs)) if coeffs[m]]
    )


def _s_entry(alpha, beta, r, n: int, k: int) -> Fraction:
    return build_recurrence("S", alpha, beta, r, n).entry(n, k)


def _e_entry(alpha, beta, r, n: int, k: int) -> Fraction:
    return build_recurrence("E", alpha, beta, r, n).entry(n, k)


# ---------------------------------------------------------------------------
# template plumbing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TemplateInstance:
    lhs: OperatorExpr
    rhs: OperatorExpr
    coeffs: Optional[Tuple[Fraction, ...]] = None
    label: str = ""


Builder = Callable[[Dict[str, Fraction], int], List[TemplateInstance]]


@dataclass(frozen=True)
class IdentityTemplate:
    id: str
    domain: str  # "WC" (natural parameters) or "WTC" (rational parameters)
    params: Tuple[str, ...]
    build: Builder
    grid: Callable[[], List[Dict[str, Fraction]]]
    uses_n: bool = True
    n_default: int = 6
    n_min: int = 0
    description: str = ""


WC_PROBES: Tuple[Fraction, ...] = tuple(F(i) for i in range(9))
WTC_PROBES: Tuple[Fraction, ...] = (
    F(0),
    F(1, 3),
    F(1),
    F(2),
    F(7, 2),
    F(-1, 2),
    F(5),
    F(-3),
    F(10, 3),
)

_Q7 = (F(-2), F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(2))
_Q3 = (F(-1), F(1, 2), F(2))
_NAT4 = (F(0), F(1), F(2), F(3))


def _grid(names: Sequence[str], *valuelists) -> Callable[[], List[Dict[str, Fraction]]]:
    def make():
        return [dict(zip(names, combo)) for combo in product(*valuelists)]

    return make


def _grid_wtc4(names: Sequence[str]) -> Callable[[], List[Dict[str, Fraction]]]:
    """Cross product of a 3-value core plus a seeded sample of the full
    7-value rational set, deduplicated, in deterministic order."""

    def make():
        cells = list(product(_Q3, repeat=4))
        rng = random.Random(97531)
        pool = list(product(_Q7, repeat=4))
        for combo in rng.sample(pool, 48):
            if combo not in cells:
                cells.append(combo)
        return [dict(zip(names, combo)) for combo in cells]

    return make


def _no_params() -> List[Dict[str, Fraction]]:
    return [{}]


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def _b_major_1a(p, n):
    a = p["alpha"]
    lhs = _poly_in_word(Word(F(1), F(0)), [-j * a for j in range(n)])
    rhs = _one(_xp(n * a), _wp(1 - a, 0, n))
    return [TemplateInstance(lhs, rhs)]


def _b_major_1b(p, n):
    a = p["alpha"]
    lhs = _poly_in_word(Word(F(1), F(0)), [-j * a for j in range(n)])
    rhs = _one(_wp(1, a, n), _xp(-n * a))
    return [TemplateInstance(lhs, rhs)]


def _b_major_2a(p, n):
    a, r = p["alpha"], p["r"]
    lhs = _poly_in_word(Word(F(1), F(0)), [r - j * a for j in range(n)])
    conj = _one(_xp(-r), _xp(n * a), _wp(1 - a, 0, n), _xp(r))
    direct = _one(_xp(n * a), _wp(1 - a - r, r, n))
    return [
        TemplateInstance(lhs, conj, label="conjugated"),
        TemplateInstance(lhs, direct, label="direct"),
    ]


def _b_major_2b(p, n):
    a, r = p["alpha"], p["r"]
    lhs = _poly_in_word(Word(F(1), F(0)), [r - j * a for j in range(n)])
    conj = _one(_xp(-r), _wp(1, a, n), _xp(-n * a), _xp(r))
    direct = _one(_wp(1 - r, a + r, n), _xp(-n * a))
    return [
        TemplateInstance(lhs, conj, label="conjugated"),
        TemplateInstance(lhs, direct, label="direct"),
    ]


def _b_major_lemma(p, n):
    L, R = p["L"], p["R"]
    lhs = _one(_xp(n * (1 - L - R)), _wp(L, R, n))
    rhs = _one(_wp(1 - R, 1 - L, n), _xp(n * (L + R - 1)))
    return [TemplateInstance(lhs, rhs)]


def _b_otherpair(p, n):
    L, R = p["L"], p["R"]
    mid = (L + R) / 2
    lhs = OperatorExpr([(1, (_wp(L, R, 1),)), (1, (_wp(R, L, 1),))])
    rhs = OperatorExpr.single(2, _wp(mid, mid, 1))
    return [TemplateInstance(lhs, rhs)]


def _b_ttv(p, n):
    lhs = _one(_wp(1, 1, n))
    rhs = _one(_xp(n), _wp(0, 0, n), _xp(n))
    return [TemplateInstance(lhs, rhs)]


def _b_difflr(p, n):
    m = int(p["m"])
    lhs = _one(_wp(0, 0, m), _xp(n))
    terms = []
    for ell in range(min(m, n) + 1):
        c = factorial(ell) * binomial(m, ell) * binomial(n, ell)
        terms.append((c, (_xp(n - ell), _wp(0, 0, m - ell))))
    return [TemplateInstance(lhs, OperatorExpr(terms))]


def _normal_sum(coeffs: Sequence[Fraction], prefactors: Sequence) -> OperatorExpr:
    """sum_k coeffs[k] * prefactors... a†^k a^k (the usual normal RHS)."""
    terms = []
    for k, c in enumerate(coeffs):
        if c:
            terms.append((c, tuple(prefactors) + (_xp(k), _wp(0, 0, k))))
    return OperatorExpr(terms)


def _b_katriel_norm(p, n):
    coeffs = [_s_entry(0, 1, 0, n, k) for k in range(n + 1)]
    lhs = _one(_wp(1, 0, n))
    return [TemplateInstance(lhs, _normal_sum(coeffs, ()), coeffs=tuple(coeffs))]


def _b_katriel_anti(p, n):
    coeffs = [_s_entry(0, 1, 1, n, k) for k in range(n + 1)]
    lhs = _one(_wp(0, 1, n))
    return [TemplateInstance(lhs, _normal_sum(coeffs, ()), coeffs=tuple(coeffs))]


def _b_katrielplus_norm(p, n):
    a = p["alpha"]
    coeffs = [_s_entry(a, 1, 0, n, k) for k in range(n + 1)]
    lhs = _poly_in_word(Word(F(1), F(0)), [-j * a for j in range(n)])
    return [TemplateInstance(lhs, _normal_sum(coeffs, ()), coeffs=tuple(coeffs))]


def _b_katrielplus_anti(p, n):
    a = p["alpha"]
    coeffs = [_s_entry(a, 1, 1, n, k) for k in range(n + 1)]
    lhs = _poly_in_word(Word(F(0), F(1)), [-j * a for j in range(n)])
    return [TemplateInstance(lhs, _normal_sum(coeffs, ()), coeffs=tuple(coeffs))]


def _b_normord(p, n):
    L, R = p["L"], p["R"]
    e = L + R - 1
    coeffs = [_s_entry(-e, 1, R, n, k) for k in range(n + 1)]
    lhs = _one(_xp(-e * n), _wp(L, R, n))
    return [TemplateInstance(lhs, _normal_sum(coeffs, ()), coeffs=tuple(coeffs))]


def _b_cor1(p, n):
    L, R = p["L"], p["R"]
    e = L + R - 1
    coeffs = [_s_entry(-e, 1, R, n, k) for k in range(n + 1)]
    lhs = _one(_wp(L, R, n))
    rhs = _normal_sum(coeffs, (_xp(e * n),))
    return [TemplateInstance(lhs, rhs, coeffs=tuple(coeffs))]


def _b_special_corollary(p, n):
    L, R = p["L"], p["R"]
    wa, wb = Word(L, R), Word(R, L)
    lhs_terms = []
    for combo in product((wa, wb), repeat=n):
        lhs_terms.append((1, tuple(WordPower(w, 1) for w in combo)))
    lhs = OperatorExpr(lhs_terms)
    e = L + R - 1
    coeffs = [
        2**k * _s_entry(2 - 2 * (L + R), 2, L + R, n, k) for k in range(n + 1)
    ]
    rhs = _normal_sum(coeffs, (_xp(e * n),))
    return [TemplateInstance(lhs, rhs, coeffs=tuple(coeffs))]


def _b_firstmain(variant: str):
    def build(p, n):
        L, R, Lp, Rp = p["L"], p["R"], p["Lp"], p["Rp"]
        e = L + R - 1
        ep = Lp + Rp - 1
        if variant in ("2a", "2b"):
            lhs = _one(_xp(-e * n), _wp(L, R, n))
        else:
            lhs = _one(_wp(L, R, n), _xp(-e * n))
        coeffs = []
        terms = []
        for k in range(n + 1):
            if variant == "2a":
                c = _s_entry(-e, -ep, R - Rp, n, k)
                factors = (_xp(-ep * k), _wp(Lp, Rp, k))
            elif variant == "2b":
                c = _s_entry(-e, ep, R + Lp - 1, n, k)
                factors = (_wp(Lp, Rp, k), _xp(-ep * k))
            elif variant == "2c":
                c = _s_entry(e, -ep, 1 - L - Rp, n, k)
                factors = (_xp(-ep * k), _wp(Lp, Rp, k))
            else:  # 2d
                c = _s_entry(e, ep, Lp - L, n, k)
                factors = (_wp(Lp, Rp, k), _xp(-ep * k))
            coeffs.append(c)
            if c:
                terms.append((c, factors))
        return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]

    return build


_POWERFUL_TABLES = {
    "powerful.main1a": lambda e, ep: (max(e, ep, 0), F(0)),
    "powerful.main1b": lambda e, ep: (max(e, F(0)), max(ep, F(0))),
    "powerful.main2a": lambda e, ep: (max(ep, F(0)), max(e, F(0))),
    "powerful.main2b": lambda e, ep: (F(0), max(e, ep, 0)),
    "powerful2.2main1a": lambda e, ep: (max(e, ep, 0), max(ep, F(0))),
    "powerful2.2main1b": lambda e, ep: (max(e, ep, 0), max(ep, F(0))),
    "powerful2.2main2a": lambda e, ep: (max(ep, F(0)), max(e, ep, 0)),
    "powerful2.2main2b": lambda e, ep: (max(ep, F(0)), max(e, ep, 0)),
}


def _powerful_sides(tid: str, p, n, EL=None, ER=None) -> TemplateInstance:
    """Construct both sides of one of the prefactored (all-natural) identity
    variants; EL/ER may be overridden for the admissibility probes."""
    L, R, Lp, Rp = p["L"], p["R"], p["Lp"], p["Rp"]
    e = L + R - 1
    ep = Lp + Rp - 1
    tEL, tER = _POWERFUL_TABLES[tid](e, ep)
    EL = tEL if EL is None else as_rational(EL)
    ER = tER if ER is None else as_rational(ER)
    variant = tid.split(".")[1]
    coeffs = []
    terms = []
    if variant == "main1a":
        lhs = _one(_xp((EL - e) * n), _wp(L, R, n))
        for k in range(n + 1):
            c = _s_entry(-e, -ep, R - Rp, n, k)
            coeffs.append(c)
            if c:
                terms.append((c, (_xp(EL * (n - k)), _xp((EL - ep) * k), _wp(Lp, Rp, k))))
    elif variant == "main1b":
        lhs = _one(_xp((EL - e) * n), _wp(L, R, n), _xp(ER * n))
        for k in range(n + 1):
            c = _s_entry(-e, ep, R + Lp - 1, n, k)
            coeffs.append(c)
            if c:
                terms.append(
                    (c, (_xp(EL * n), _wp(Lp, Rp, k), _xp((ER - ep) * k), _xp(ER * (n - k))))
                )
    elif variant == "main2a":
        lhs = _one(_xp(EL * n), _wp(L, R, n), _xp((ER - e) * n))
        for k in range(n + 1):
            c = _s_entry(e, -ep, 1 - L - Rp, n, k)
            coeffs.append(c)
            if c:
                terms.append(
                    (c, (_xp(EL * (n - k)), _xp((EL - ep) * k), _wp(Lp, Rp, k), _xp(ER * n)))
                )
    elif variant == "main2b":
        lhs = _one(_wp(L, R, n), _xp((ER - e) * n))
        for k in range(n + 1):
            c = _s_entry(e, ep, Lp - L, n, k)
            coeffs.append(c)
            if c:
                terms.append((c, (_wp(Lp, Rp, k), _xp((ER - ep) * k), _xp(ER * (n - k)))))
    elif variant in ("2main1a", "2main2a"):
        if variant == "2main1a":
            lhs = OperatorExpr.single(
                factorial(n) * (-ep) ** n, _xp((EL - e) * n), _wp(L, R, n), _xp(ER * n)
            )
            cfun = lambda k: _e_entry(-e, -ep, R - Rp, n, k)
        else:
            lhs = OperatorExpr.single(
                factorial(n) * (-ep) ** n, _xp(EL * n), _wp(L, R, n), _xp((ER - e) * n)
            )
            cfun = lambda k: _e_entry(e, -ep, 1 - L - Rp, n, k)
        for k in range(n + 1):
            c = cfun(k)
            coeffs.append(c)
            if c:
                terms.append(
                    (
                        c,
                        (
                            _xp(EL * (n - k)),
                            _xp((EL - ep) * k),
                            _wp(Lp, Rp, n),
                            _xp((ER - ep) * (n - k)),
                            _xp(ER * k),
                        ),
                    )
                )
    else:  # 2main1b / 2main2b
        if variant == "2main1b":
            lhs = OperatorExpr.single(
                factorial(n) * ep**n, _xp((EL - e) * n), _wp(L, R, n), _xp(ER * n)
            )
            cfun = lambda k: _e_entry(-e, ep, R + Lp - 1, n, k)
        else:
            lhs = OperatorExpr.single(
                factorial(n) * ep**n, _xp(EL * n), _wp(L, R, n), _xp((ER - e) * n)
            )
            cfun = lambda k: _e_entry(e, ep, Lp - L, n, k)
        for k in range(n + 1):
            c = cfun(k)
            coeffs.append(c)
            if c:
                terms.append(
                    (
                        c,
                        (
                            _xp(EL * k),
                            _xp((EL - ep) * (n - k)),
                            _wp(Lp, Rp, n),
                            _xp((ER - ep) * k),
                            _xp(ER * (n - k)),
                        ),
                    )
                )
    return TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))


def _b_powerful(tid: str):
    def build(p, n):
        return [_powerful_sides(tid, p, n)]

    return build


def _b_proposition(p, n):
    lhs = _one(_wp(3, 0, n))
    coeffs = [closed_form("S_4F_vi", n, k, r=0) for k in range(n + 1)]
    rhs = _normal_sum(coeffs, (_xp(2 * n),))
    return [TemplateInstance(lhs, rhs, coeffs=tuple(coeffs))]


def _b_sampleappl(p, n):
    if n == 0:
        return []
    lhs = _one(_wp(3, 0, n))
    coeffs = []
    terms = []
    for k in range(n + 1):
        c = F(k * binomial(n, k) * factorial(2 * n - k - 1), factorial(n) * 2 ** (n - k))
        coeffs.append(c)
        if c:
            terms.append((c, (_xp(n), _xp(n - k), _wp(2, 0, k))))
    return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]


def _b_viewedas(p, n):
    lhs = _one(_xp(n), _wp(2, 0, n))
    coeffs = []
    terms = []
    for k in range(n + 1):
        c = F(factorial(n) * binomial(k, n - k), factorial(k)) * F(1, (-2) ** (n - k))
        coeffs.append(c)
        if c:
            terms.append((c, (_xp(2 * (n - k)), _wp(3, 0, k))))
    return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]


def _b_companion(p, n):
    lhs = _one(_wp(2, 1, n))
    coeffs = []
    terms = []
    for k in range(n + 1):
        c = F(factorial(2 * n - k), factorial(k) * factorial(n - k) * 2 ** (n - k))
        coeffs.append(c)
        terms.append((c, (_xp(n), _xp(n - k), _wp(2, 0, k))))
    return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]


_LAH_CASES = ((F(0), F(2)), (F(1), F(1)), (F(2), F(0)))


def _b_lah_triple(p, n):
    L, R = _LAH_CASES[int(p["case"])]
    lhs = _one(_wp(L, R, n))
    coeffs = [F(binomial(n, k) * rising(k + R, n - k)) for k in range(n + 1)]
    rhs = _normal_sum(coeffs, (_xp(n),))
    return [TemplateInstance(lhs, rhs, coeffs=tuple(coeffs))]


_S211_CASES = (
    (F(1), F(2), F(0), F(2)),
    (F(2), F(1), F(1), F(1)),
    (F(3), F(0), F(2), F(0)),
)


def _b_s211_triple(p, n):
    L, R, Lp, Rp = _S211_CASES[int(p["case"])]
    lhs = _one(_wp(L, R, n), _xp(n))
    coeffs = []
    terms = []
    for k in range(n + 1):
        c = _s_entry(-2, 1, 1, n, k)
        coeffs.append(c)
        if c:
            terms.append((c, (_xp(2 * n), _wp(Lp, Rp, k), _xp(n - k))))
    return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]


def _b_euleriank(which: int):
    def build(p, n):
        if which == 1:
            lhs = OperatorExpr.single(factorial(n), _wp(1, 0, n))
            r = 0
        else:
            lhs = OperatorExpr.single(factorial(n), _wp(0, 1, n))
            r = 1
        coeffs = []
        terms = []
        for k in range(n + 1):
            c = _e_entry(0, 1, r, n, k)
            coeffs.append(c)
            if c:
                terms.append((c, (_xp(k), _wp(0, 0, n), _xp(n - k))))
        return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]

    return build


def _b_secondmain(variant: str):
    def build(p, n):
        L, R, Lp, Rp = p["L"], p["R"], p["Lp"], p["Rp"]
        e = L + R - 1
        ep = Lp + Rp - 1
        sign_factor = (-ep) ** n if variant in ("2a", "2c") else ep**n
        if variant in ("2a", "2b"):
            lhs = OperatorExpr.single(factorial(n) * sign_factor, _xp(-e * n), _wp(L, R, n))
        else:
            lhs = OperatorExpr.single(factorial(n) * sign_factor, _wp(L, R, n), _xp(-e * n))
        coeffs = []
        terms = []
        for k in range(n + 1):
            if variant == "2a":
                c = _e_entry(-e, -ep, R - Rp, n, k)
                factors = (_xp(-ep * k), _wp(Lp, Rp, n), _xp(-ep * (n - k)))
            elif variant == "2b":
                c = _e_entry(-e, ep, R + Lp - 1, n, k)
                factors = (_xp(-ep * (n - k)), _wp(Lp, Rp, n), _xp(-ep * k))
            elif variant == "2c":
                c = _e_entry(e, -ep, 1 - L - Rp, n, k)
                factors = (_xp(-ep * k), _wp(Lp, Rp, n), _xp(-ep * (n - k)))
            else:
                c = _e_entry(e, ep, Lp - L, n, k)
                factors = (_xp(-ep * (n - k)), _wp(Lp, Rp, n), _xp(-ep * k))
            coeffs.append(c)
            if c:
                terms.append((c, factors))
        return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]

    return build


def _b_sampleeulerian(p, n):
    lhs = OperatorExpr.single(2**n, _xp(n), _wp(2, 0, n), _xp(2 * n))
    coeffs = []
    terms = []
    for k in range(n + 1):
        c = F(binomial(n + 1, 2 * k + 1))
        coeffs.append(c)
        if c:
            terms.append((c, (_xp(2 * k), _wp(3, 0, n), _xp(2 * (n - k)))))
    return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]


def _b_last(p, n):
    lhs = _one(_wp(1, 1, n), _xp(n))
    coeffs = []
    terms = []
    for k in range(n + 1):
        c = F((-1) ** (n - k) * binomial(n + 1, k))
        coeffs.append(c)
        if c:
            terms.append((c, (_xp(n - k), _wp(2, 0, n), _xp(k))))
    return [TemplateInstance(lhs, OperatorExpr(terms), coeffs=tuple(coeffs))]


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------


def _make_catalog() -> Dict[str, IdentityTemplate]:
    t: List[IdentityTemplate] = []
    add = t.append

    add(IdentityTemplate("major.1a", "WTC", ("alpha",), _b_major_1a, _grid(("alpha",), _Q7),
                         description="strided diagonal power split, powers left"))
    add(IdentityTemplate("major.1b", "WTC", ("alpha",), _b_major_1b, _grid(("alpha",), _Q7),
                         description="strided diagonal power split, powers right"))
    add(IdentityTemplate("major.2a", "WTC", ("alpha", "r"), _b_major_2a,
                         _grid(("alpha", "r"), _Q7, _Q7),
                         description="shifted strided diagonal split, powers left"))
    add(IdentityTemplate("major.2b", "WTC", ("alpha", "r"), _b_major_2b,
                         _grid(("alpha", "r"), _Q7, _Q7),
                         description="shifted strided diagonal split, powers right"))
    add(IdentityTemplate("major.lemma", "WTC", ("L", "R"), _b_major_lemma,
                         _grid(("L", "R"), _Q7, _Q7),
                         description="word-power transposition lemma"))
    add(IdentityTemplate("otherpair.a", "WC", ("L", "R"), _b_otherpair,
                         _grid(("L", "R"), tuple(F(i) for i in range(5)),
                               tuple(F(i) for i in range(5))),
                         uses_n=False,
                         description="symmetrized word pair, natural exponents"))
    add(IdentityTemplate("otherpair.b", "WTC", ("L", "R"), _b_otherpair,
                         _grid(("L", "R"), _Q7, _Q7), uses_n=False,
                         description="symmetrized word pair, rational exponents"))
    add(IdentityTemplate("ttv", "WC", (), _b_ttv, _no_params,
                         description="triple product power identity"))
    add(IdentityTemplate("difflr", "WC", ("m",), _b_difflr,
                         _grid(("m",), tuple(F(i) for i in range(7))),
                         description="two-index normal ordering of D^m x^n"))
    add(IdentityTemplate("katriel.norm", "WC", (), _b_katriel_norm, _no_params,
                         description="normal ordering of (x D)^n"))
    add(IdentityTemplate("katriel.anti", "WC", (), _b_katriel_anti, _no_params,
                         description="normal ordering of (D x)^n"))
    add(IdentityTemplate("katrielplus.norm", "WTC", ("alpha",), _b_katrielplus_norm,
                         _grid(("alpha",), _Q7),
                         description="normal ordering of the strided (x D) power"))
    add(IdentityTemplate("katrielplus.anti", "WTC", ("alpha",), _b_katrielplus_anti,
                         _grid(("alpha",), _Q7),
                         description="normal ordering of the strided (D x) power"))
    add(IdentityTemplate("normord", "WTC", ("L", "R"), _b_normord,
                         _grid(("L", "R"), _Q7, _Q7),
                         description="normal ordering of a general word power"))
    add(IdentityTemplate("cor1", "WC", ("L", "R"), _b_cor1,
                         _grid(("L", "R"), _NAT4, _NAT4),
                         description="prefactored normal ordering, natural word"))
    add(IdentityTemplate("special_corollary", "WC", ("L", "R"), _b_special_corollary,
                         _grid(("L", "R"), _NAT4, _NAT4),
                         description="normal ordering of the symmetrized word power"))
    for v in ("2a", "2b", "2c", "2d"):
        add(IdentityTemplate(f"firstmain.{v}", "WTC", ("L", "R", "Lp", "Rp"),
                             _b_firstmain(v), _grid_wtc4(("L", "R", "Lp", "Rp")),
                             description=f"word power re-expansion, variant {v}"))
    for v in ("main1a", "main1b", "main2a", "main2b"):
        tid = f"powerful.{v}"
        add(IdentityTemplate(tid, "WC", ("L", "R", "Lp", "Rp"), _b_powerful(tid),
                             _grid(("L", "R", "Lp", "Rp"), _NAT4, _NAT4, _NAT4, _NAT4),
                             description=f"prefactored word re-expansion, variant {v}"))
    add(IdentityTemplate("proposition", "WC", (), _b_proposition, _no_params,
                         description="cubic word normal ordering via the Gauss sum"))
    add(IdentityTemplate("sampleappl", "WC", (), _b_sampleappl, _no_params, n_min=1,
                         description="cubic word through the quadratic word"))
    add(IdentityTemplate("viewedas", "WC", (), _b_viewedas, _no_params,
                         description="quadratic word through the cubic word"))
    add(IdentityTemplate("companion", "WC", (), _b_companion, _no_params,
                         description="balanced cubic word through the quadratic word"))
    add(IdentityTemplate("lah_triple", "WC", ("case",), _b_lah_triple,
                         _grid(("case",), (F(0), F(1), F(2))),
                         description="excess-one triple with binomial coefficients"))
    add(IdentityTemplate("s211_triple", "WC", ("case",), _b_s211_triple,
                         _grid(("case",), (F(0), F(1), F(2))),
                         description="excess-two triple sharing one triangle"))
    add(IdentityTemplate("euleriank.1", "WC", (), _b_euleriank(1), _no_params,
                         description="Eulerian twisted ordering of (x D)^n"))
    add(IdentityTemplate("euleriank.2", "WC", (), _b_euleriank(2), _no_params,
                         description="Eulerian twisted ordering of (D x)^n"))
    for v in ("2a", "2b", "2c", "2d"):
        add(IdentityTemplate(f"secondmain.{v}", "WTC", ("L", "R", "Lp", "Rp"),
                             _b_secondmain(v), _grid_wtc4(("L", "R", "Lp", "Rp")),
                             description=f"Eulerian word re-expansion, variant {v}"))
    for v in ("2main1a", "2main1b", "2main2a", "2main2b"):
        tid = f"powerful2.{v}"
        add(IdentityTemplate(tid, "WC", ("L", "R", "Lp", "Rp"), _b_powerful(tid),
                             _grid(("L", "R", "Lp", "Rp"), _NAT4, _NAT4, _NAT4, _NAT4),
                             description=f"prefactored Eulerian re-expansion, variant {v}"))
    add(IdentityTemplate("sampleeulerian", "WC", (), _b_sampleeulerian, _no_params,
                         description="Eulerian twisted quadratic/cubic word pair"))
    add(IdentityTemplate("last", "WC", (), _b_last, _no_params,
                         description="balanced word with signed binomial twisting"))

    return {tmpl.id: tmpl for tmpl in t}


TEMPLATES: Dict[str, IdentityTemplate] = _make_catalog()
TEMPLATE_ORDER: Tuple[str, ...] = tuple(TEMPLATES)


def templates_matching(prefix: str) -> List[IdentityTemplate]:
    """Templates whose id equals or starts with the given prefix."""
    if prefix in TEMPLATES:
        return [TEMPLATES[prefix]]
    hits = [TEMPLATES[tid] for tid in TEMPLATE_ORDER if tid.startswith(prefix)]
    return hits


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def normal_form(expr: OperatorExpr) -> Dict[Tuple[int, int], Fraction]:
    """Normal form of an admissible expression via the string oracle."""
    out: Dict[Tuple[int, int], Fraction] = {}
    for coeff, string in expr.to_boson_strings():
        for key, count in normal_order_oracle(string).items():
            val = out.get(key, F(0)) + coeff * count
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


@dataclass
class VerifyReport:
    template_id: str
    cells: int = 0
    instances: int = 0
    action_probes: int = 0
    string_probes: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerifyReport") -> None:
        self.cells += other.cells
        self.instances += other.instances
        self.action_probes += other.action_probes
        self.string_probes += other.string_probes
        self.failures.extend(other.failures)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = (
            f"{self.template_id}: {status} "
            f"(cells={self.cells}, instances={self.instances}, "
            f"action probes={self.action_probes}, string probes={self.string_probes})"
        )
        if self.failures:
            line += "\n  " + "\n  ".join(self.failures[:10])
            if len(self.failures) > 10:
                line += f"\n  ... and {len(self.failures) - 10} more"
        return line


def _cell_label(cell: Dict[str, Fraction]) -> str:
    return "(" + ", ".join(f"{k}={v}" for k, v in cell.items()) + ")"


def verify_identity(
    template: IdentityTemplate,
    cells: Optional[Sequence[Dict[str, Fraction]]] = None,
    n_max: Optional[int] = None,
    s_values: Optional[Sequence[Fraction]] = None,
    use_strings: bool = True,
    string_cap: int = 20,
) -> VerifyReport:
    """Exactly verify a template over a parameter grid.

    Checks, per instance: uniform excess on both sides, equal monomial
    action at every probe, and (for admissible sides short enough) equal
    normal forms under the independent string-rewriting oracle.
    """
    report = VerifyReport(template_id=template.id)
    if cells is None:
        cells = template.grid()
    if s_values is None:
        s_values = WC_PROBES if template.domain == "WC" else WTC_PROBES
    top = template.n_default if n_max is None else n_max
    n_values = range(template.n_min, top + 1) if template.uses_n else [template.n_default]

    for cell in cells:
        report.cells += 1
        for n in n_values:
            for inst in template.build(cell, n):
                report.instances += 1
                where = f"{template.id}{_cell_label(cell)} n={n}"
                if inst.label:
                    where += f" [{inst.label}]"
                try:
                    el = inst.lhs.excess()
                    er = inst.rhs.excess()
                except Exception as exc:  # mixed excess is a real failure
                    report.failures.append(f"{where}: excess error: {exc}")
                    continue
                if el is not None and er is not None and el != er:
                    report.failures.append(
                        f"{where}: excess mismatch {el} vs {er}"
                    )
                    continue
                for s in s_values:
                    report.action_probes += 1
                    if inst.lhs.act_on_monomial(s) != inst.rhs.act_on_monomial(s):
                        report.failures.append(f"{where}: action differs at s={s}")
                        break
                if use_strings:
                    llen = inst.lhs.max_string_length()
                    rlen = inst.rhs.max_string_length()
                    if llen is not None and rlen is not None and max(llen, rlen) <= string_cap:
                        report.string_probes += 1
                        if normal_form(inst.lhs) != normal_form(inst.rhs):
                            report.failures.append(f"{where}: normal forms differ")
    return report


# ---------------------------------------------------------------------------
# admissibility of the prefactor tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibilityReport:
    template_id: str
    cell: Tuple[Tuple[str, Fraction], ...]
    EL: Fraction
    ER: Fraction
    admissible: bool
    EL_decrement_breaks: bool
    ER_decrement_breaks: bool


def wc_admissibility_check(
    template_id: str, cell: Dict[str, Fraction], n_probe: Sequence[int] = (1, 2, 3)
) -> AdmissibilityReport:
    """Structurally check that the prefactor table yields natural exponents
    for a prefactored template at the given natural word parameters, and
    probe whether decrementing either prefactor exponent breaks it
    (sufficiency versus minimality; informational)."""
    if template_id not in _POWERFUL_TABLES:
        raise ValueError(f"{template_id!r} has no prefactor table")
    L, R, Lp, Rp = cell["L"], cell["R"], cell["Lp"], cell["Rp"]
    e = L + R - 1
    ep = Lp + Rp - 1
    EL, ER = _POWERFUL_TABLES[template_id](e, ep)

    def admissible(EL_v, ER_v) -> bool:
        for n in n_probe:
            inst = _powerful_sides(template_id, cell, n, EL=EL_v, ER=ER_v)
            if not (inst.lhs.is_wc_admissible() and inst.rhs.is_wc_admissible()):
                return False
        return True

    ok = admissible(EL, ER)
    return AdmissibilityReport(
        template_id=template_id,
        cell=tuple(sorted(cell.items())),
        EL=EL,
        ER=ER,
        admissible=ok,
        EL_decrement_breaks=not admissible(EL - 1, ER),
        ER_decrement_breaks=not admissible(EL, ER - 1),
    )


# ---------------------------------------------------------------------------
# named checks
# ---------------------------------------------------------------------------


def ttv_check(n_max: int = 8, s_values: Optional[Sequence[Fraction]] = None) -> bool:
    """Exact check of the triple product power identity up to n_max."""
    report = verify_identity(
        TEMPLATES["ttv"], n_max=n_max, s_values=s_values or WTC_PROBES
    )
    return report.ok


def _he_polynomials(top: int) -> List[List[Fraction]]:
    """Probabilists' Hermite polynomials as exact coefficient lists."""
    polys = [[F(1)], [F(0), F(1)]]
    for m in range(1, top):
        prev, cur = polys[m - 1], polys[m]
        nxt = [F(0)] + cur  # z * He_m
        for i, c in enumerate(prev):  # minus m He_{m-1}
            nxt[i] -= m * c
        while len(nxt) < m + 2:
            nxt.append(F(0))
        polys.append(nxt)
    return polys[: top + 1]


def hermite_identity_check(n_max: int = 12) -> bool:
    """Exactly verify the two Hermite expansion identities up to n_max."""
    if n_max > 12:
        raise ValueError("hermite_identity_check is capped at n_max = 12")
    he = _he_polynomials(2 * n_max + 1)

    def padded(poly, size):
        return poly + [F(0)] * (size - len(poly))

    for n in range(n_max + 1):
        tri1 = build_recurrence("S", -1, 2, 1, n)
        tri2 = build_recurrence("S", -2, 1, 1, n)
        size = 2 * n + 1
        # z^n He_n(z) as a coefficient list
        lhs1 = padded([F(0)] * n + he[n], size)
        rhs1 = [F(0)] * size
        for k in range(n + 1):
            c = tri1.entry(n, k)
            for i, v in enumerate(he[2 * k]):
                rhs1[i] += c * v
        if lhs1 != rhs1:
            return False
        lhs2 = padded(list(he[2 * n]), size)
        rhs2 = [F(0)] * size
        for k in range(n + 1):
            c = tri2.entry(n, k) * (-1) ** (n - k)
            for i, v in enumerate(he[k]):  # z^k He_k
                rhs2[i + k] += c * v
        if lhs2 != rhs2:
            return False
    return True


def adjoint_pairing_check(
    cell: Dict[str, Fraction],
    n_max: int = 4,
    s_values: Optional[Sequence[Fraction]] = None,
) -> bool:
    """The adjoint of both sides of the first re-expansion variant, at
    word parameters renamed by the swap L<->R, L'<->R', acts exactly like
    the fourth variant (up to the global sign (-1)^n)."""
    probes = s_values or WTC_PROBES
    swapped = {"L": cell["R"], "R": cell["L"], "Lp": cell["Rp"], "Rp": cell["Lp"]}
    for n in range(n_max + 1):
        (inst_a,) = TEMPLATES["firstmain.2a"].build(cell, n)
        (inst_d,) = TEMPLATES["firstmain.2d"].build(swapped, n)
        sign = F((-1) ** n)
        pairs = (
            (inst_a.lhs.adjoint(), inst_d.lhs.scaled(sign)),
            (inst_a.rhs.adjoint(), inst_d.rhs.scaled(sign)),
        )
        for left, right in pairs:
            for s in probes:
                if left.act_on_monomial(s) != right.act_on_monomial(s):
                    return False
    return True
