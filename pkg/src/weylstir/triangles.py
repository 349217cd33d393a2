"""Two-parameter Stirling and Eulerian triangles with exact entries.

Three triangle kinds are supported, all indexed by row ``n`` and column
``0 <= k <= n`` and depending on three parameters ``(alpha, beta, r)``:

``S``
    the connection coefficients between the strided falling-factorial bases
    ``(x)^{falling n, alpha}`` and ``(x - r)^{falling k, beta}``;
``Shat``
    the modified entries ``Shat[n][k] = beta^k k! S[n][k]``, i.e. the
    coefficients of ``(beta x + r)^{falling n, alpha}`` on the binomial basis
    ``C(x, k)``;
``E``
    the Eulerian companion, the coefficients on the shifted binomial basis
    ``C(x + n - k, n)``.

Several independent construction schemes are provided (triangular recurrence,
explicit alternating sums, binomial transforms between ``Shat`` and ``E``
rows, and a decomposition through the classical Stirling triangles) so they
can be cross-checked against each other exactly.  All arithmetic is exact:
entries are ``fractions.Fraction`` values, or ``ParamPoly`` in symbolic mode.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Any, Iterable, List, Sequence, Tuple, Union

from .kernels import (
    as_rational,
    binomial,
    hyp2f1_hat,
    rising,
    strided_falling,
    strided_rising,
)
from .poly import ParamPoly

Scalar = Union[Fraction, ParamPoly]

KINDS = ("S", "Shat", "E")

__all__ = [
    "KINDS",
    "Triangle",
    "build_recurrence",
    "symbolic_triangle",
    "entry_by_sum",
    "triangle_by_sum",
    "binomial_transform",
    "triangle_by_transform",
    "triangle_product",
    "identity_triangle",
    "stirling_subset",
    "stirling_cycle",
    "decompose_classical",
    "triangle_by_decomposition",
    "CLOSED_FORM_FAMILIES",
    "closed_form",
    "closed_form_params",
    "row_polynomial_euler",
    "shift_r",
    "vandermonde_ldu_check",
    "reflection_check",
    "ConjectureCell",
    "ConjectureReport",
    "conjecture_check",
    "shat_from_s_row",
]


# ---------------------------------------------------------------------------
# the Triangle container
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Triangle:
    """A lower-triangular section with jagged rows ``rows[n][0..n]``."""

    kind: str
    alpha: Scalar
    beta: Scalar
    r: Scalar
    rows: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown triangle kind {self.kind!r}")
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.alpha, ParamPoly)

    def entry(self, n: int, k: int) -> Scalar:
        """Entry at (n, k); zero outside ``0 <= k <= n <= N``."""
        if 0 <= k <= n <= self.N:
            return self.rows[n][k]
        if n > self.N:
            raise IndexError(f"row {n} not built (N = {self.N})")
        return ParamPoly() if self.is_symbolic else Fraction(0)

    def row(self, n: int) -> List[Scalar]:
        return list(self.rows[n])

    def validate(self) -> None:
        """Check the structural edge invariants; raises AssertionError."""
        assert self.rows[0][0] == 1, "apex must be 1"
        a, b, r = self.alpha, self.beta, self.r
        for n in range(self.N + 1):
            if self.kind == "S":
                assert self.rows[n][n] == 1
            elif self.kind == "Shat":
                assert self.rows[n][n] == b**n * factorial(n)
            else:
                assert self.rows[n][n] == strided_rising(b - r, n, a)
            assert self.rows[n][0] == strided_falling(r, n, a)

    # -- serialization --------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "kind": self.kind,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "r": str(self.r),
            "rows": [[str(v) for v in row] for row in self.rows],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "Triangle":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid triangle JSON: {exc}") from exc
        for key in ("kind", "alpha", "beta", "r", "rows"):
            if key not in payload:
                raise ValueError(f"triangle JSON missing key {key!r}")
        rows = tuple(
            tuple(as_rational(v) for v in row) for row in payload["rows"]
        )
        return cls(
            kind=payload["kind"],
            alpha=as_rational(payload["alpha"]),
            beta=as_rational(payload["beta"]),
            r=as_rational(payload["r"]),
            rows=rows,
        )

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.rows)

    def to_latex(self) -> str:
        lines = [" & ".join(str(v) for v in row) + r" \\" for row in self.rows]
        cols = "r" * (self.N + 1)
        return "\n".join([rf"\begin{{array}}{{{cols}}}"] + lines + [r"\end{array}"])

    def to_text(self) -> str:
        return "\n".join(", ".join(str(v) for v in row) for row in self.rows)


def _freeze(rows: Iterable[Iterable[Scalar]]) -> Tuple[Tuple[Scalar, ...], ...]:
    return tuple(tuple(row) for row in rows)


# ---------------------------------------------------------------------------
# scheme 1: triangular recurrence
# ---------------------------------------------------------------------------


def _recurrence_rows(kind: str, a, b, r, N: int, one) -> List[List[Scalar]]:
    rows: List[List[Scalar]] = [[one]]
    for n in range(N):
        prev = rows[-1]

        def prev_at(k: int):
            return prev[k] if 0 <= k <= n else 0

        row = []
        for k in range(n + 2):
            val = (b * k + r - a * n) * prev_at(k)
            if kind == "S":
                val = val + prev_at(k - 1)
            elif kind == "Shat":
                val = val + (b * k) * prev_at(k - 1)
            else:  # E
                val = val + ((a + b) * n - b * (k - 1) + (b - r)) * prev_at(k - 1)
            row.append(val)
        rows.append(row)
    return rows


@lru_cache(maxsize=4096)
def _recurrence_rows_cached(kind: str, a: Fraction, b: Fraction, r: Fraction, N: int):
    return _freeze(_recurrence_rows(kind, a, b, r, N, Fraction(1)))


def build_recurrence(kind: str, alpha, beta, r, N: int) -> Triangle:
    """Build rows 0..N by the one-step triangular recurrence.

    Parameters may be rationals (ints, ``"p/q"`` strings, Fractions) or
    :class:`ParamPoly` values for the symbolic mode.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown triangle kind {kind!r}")
    if N < 0:
        raise ValueError("N must be a natural number")
    if any(isinstance(p, ParamPoly) for p in (alpha, beta, r)):
        rows = _freeze(
            _recurrence_rows(kind, alpha, beta, r, N, ParamPoly.constant(1))
        )
        return Triangle(kind, alpha, beta, r, rows)
    a, b, rr = as_rational(alpha), as_rational(beta), as_rational(r)
    return Triangle(kind, a, b, rr, _recurrence_rows_cached(kind, a, b, rr, N))


def symbolic_triangle(kind: str, N: int) -> Triangle:
    """Triangle with fully symbolic parameters; entries are ParamPoly."""
    return build_recurrence(kind, ParamPoly.alpha(), ParamPoly.beta(), ParamPoly.r(), N)


# ---------------------------------------------------------------------------
# scheme 2: explicit alternating sums over the falling-power table
# ---------------------------------------------------------------------------


def _falling_power_table(alpha, beta, r, X: int, N: int):
    """table[x][n] = (beta x + r)^{falling n, alpha} for 0<=x<=X, 0<=n<=N."""
    table = []
    for x in range(X + 1):
        base = beta * x + r
        row = [1]
        for n in range(N):
            row.append(row[-1] * (base - n * alpha))
        table.append(row)
    return table


def entry_by_sum(kind: str, n: int, k: int, alpha, beta, r) -> Scalar:
    """Single entry from the explicit alternating sum.

    ``kind`` must be ``"Shat"`` or ``"E"`` (the unmodified ``S`` entries
    follow from ``Shat`` by dividing out ``beta^k k!`` when ``beta != 0``).
    """
    if kind not in ("Shat", "E"):
        raise ValueError("entry_by_sum supports kinds 'Shat' and 'E'")
    if k < 0 or k > n:
        raise ValueError(f"index (n, k) = ({n}, {k}) outside 0 <= k <= n")
    table = _falling_power_table(alpha, beta, r, k, n)
    total = 0
    for x in range(k + 1):
        sign = -1 if (k - x) % 2 else 1
        weight = binomial(k, x) if kind == "Shat" else binomial(n + 1, k - x)
        total = total + (sign * weight) * table[x][n]
    return total


def triangle_by_sum(kind: str, alpha, beta, r, N: int) -> Triangle:
    """All rows 0..N from the explicit sums, sharing one falling-power table."""
    if kind not in ("Shat", "E"):
        raise ValueError("triangle_by_sum supports kinds 'Shat' and 'E'")
    a, b, rr = as_rational(alpha), as_rational(beta), as_rational(r)
    table = _falling_power_table(a, b, rr, N, N)
    rows = []
    for n in range(N + 1):
        row = []
        for k in range(n + 1):
            total = Fraction(0)
            for x in range(k + 1):
                sign = -1 if (k - x) % 2 else 1
                weight = binomial(k, x) if kind == "Shat" else binomial(n + 1, k - x)
                total += (sign * weight) * table[x][n]
            row.append(total)
        rows.append(row)
    return Triangle(kind, a, b, rr, _freeze(rows))


def shat_from_s_row(row: Sequence[Scalar], beta) -> List[Scalar]:
    """Rescale an S row to the modified row: entry k times ``beta^k k!``."""
    return [row[k] * beta**k * factorial(k) for k in range(len(row))]


# ---------------------------------------------------------------------------
# scheme 3: binomial transforms between Shat and E rows
# ---------------------------------------------------------------------------


def binomial_transform(row: Sequence[Scalar], direction: str) -> List[Scalar]:
    """Transform a full row (length n+1) between the Shat and E conventions.

    ``direction`` is ``"EToShat"`` (plain binomial sum) or ``"ShatToE"``
    (the alternating inverse).  The two are mutually inverse.
    """
    n = len(row) - 1
    out: List[Scalar] = []
    if direction == "EToShat":
        for k in range(n + 1):
            total = 0
            for j in range(k + 1):
                total = total + binomial(n - j, n - k) * row[j]
            out.append(total)
    elif direction == "ShatToE":
        for k in range(n + 1):
            total = 0
            for j in range(k + 1):
                sign = -1 if (k - j) % 2 else 1
                total = total + (sign * binomial(n - j, n - k)) * row[j]
            out.append(total)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return out


def triangle_by_transform(kind: str, alpha, beta, r, N: int) -> Triangle:
    """Build ``Shat`` (or ``E``) rows by transforming the dual kind's rows,
    where the dual rows come from the explicit sum scheme."""
    if kind not in ("Shat", "E"):
        raise ValueError("triangle_by_transform supports kinds 'Shat' and 'E'")
    dual_kind = "E" if kind == "Shat" else "Shat"
    direction = "EToShat" if kind == "Shat" else "ShatToE"
    dual = triangle_by_sum(dual_kind, alpha, beta, r, N)
    rows = [binomial_transform(dual.rows[n], direction) for n in range(N + 1)]
    return Triangle(kind, dual.alpha, dual.beta, dual.r, _freeze(rows))


# ---------------------------------------------------------------------------
# matrix algebra: products, identity, LDU, reflection
# ---------------------------------------------------------------------------


def triangle_product(left: Triangle, right: Triangle) -> Triangle:
    """Matrix product of two S-kind sections sharing the inner parameter.

    ``left`` carries ``(alpha, beta; r1)`` and ``right`` ``(beta, gamma; r2)``;
    the result carries ``(alpha, gamma; r1 + r2)``.
    """
    if left.kind != "S" or right.kind != "S":
        raise ValueError("triangle_product is defined for S-kind triangles")
    if left.beta != right.alpha:
        raise ValueError(
            f"inner parameters disagree: {left.beta} (left beta) vs "
            f"{right.alpha} (right alpha)"
        )
    if left.N != right.N:
        raise ValueError("triangle sections must have matching size")
    N = left.N
    rows = []
    for n in range(N + 1):
        row = []
        for k in range(n + 1):
            total = 0
            for j in range(k, n + 1):
                total = total + left.rows[n][j] * right.rows[j][k]
            row.append(total)
        rows.append(row)
    return Triangle("S", left.alpha, right.beta, left.r + right.r, _freeze(rows))


def identity_triangle(alpha, N: int) -> Triangle:
    """The S-kind identity section, parameters ``(alpha, alpha; 0)``."""
    a = as_rational(alpha)
    rows = [
        [Fraction(1) if k == n else Fraction(0) for k in range(n + 1)]
        for n in range(N + 1)
    ]
    return Triangle("S", a, a, Fraction(0), _freeze(rows))


def vandermonde_ldu_check(alpha, beta, r, N: int) -> bool:
    """Check the factorization of the generalized Vandermonde square section
    ``V[n][x] = (beta x + r)^{falling n, alpha}`` as L * D * U with
    L the S triangle, D = diag(beta^k k!) and U the transposed Pascal matrix.
    """
    a, b, rr = as_rational(alpha), as_rational(beta), as_rational(r)
    tri = build_recurrence("S", a, b, rr, N)
    table = _falling_power_table(a, b, rr, N, N)
    for n in range(N + 1):
        for x in range(N + 1):
            lhs = table[x][n]
            rhs = Fraction(0)
            for k in range(min(n, x) + 1):
                rhs += tri.rows[n][k] * b**k * factorial(k) * binomial(x, k)
            if lhs != rhs:
                return False
    return True


def reflection_check(alpha, beta, r, N: int) -> bool:
    """Check the row-reversal symmetry of the Eulerian kind:
    E[n][n-k](alpha, beta; r) == E[n][k](-alpha, beta; beta - r)."""
    a, b, rr = as_rational(alpha), as_rational(beta), as_rational(r)
    t1 = build_recurrence("E", a, b, rr, N)
    t2 = build_recurrence("E", -a, b, b - rr, N)
    for n in range(N + 1):
        for k in range(n + 1):
            if t1.rows[n][n - k] != t2.rows[n][k]:
                return False
    return True


# ---------------------------------------------------------------------------
# scheme 4: decomposition through the classical triangles
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _subset_rows(N: int):
    rows = [[1]]
    for n in range(N):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(n + 2):
            row[k] = (prev[k - 1] if 1 <= k else 0) + k * (prev[k] if k <= n else 0)
        rows.append(row)
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def _cycle_rows(N: int):
    rows = [[1]]
    for n in range(N):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(n + 2):
            row[k] = (prev[k - 1] if 1 <= k else 0) + n * (prev[k] if k <= n else 0)
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def stirling_subset(n: int, k: int) -> int:
    """Classical subset-partition Stirling number (second kind)."""
    if k < 0 or k > n:
        return 0
    return _subset_rows(n)[n][k]


def stirling_cycle(n: int, k: int) -> int:
    """Classical unsigned cycle Stirling number (first kind)."""
    if k < 0 or k > n:
        return 0
    return _cycle_rows(n)[n][k]


def decompose_classical(n: int, k: int, alpha, beta, r) -> Scalar:
    """Single S entry through the classical cycle/subset triangles:

    ``sum_{j=k}^{n} sum_{p=k}^{j} (-alpha)^{n-j} c(n,j) r^{j-p} C(j,p)
    beta^{p-k} S(p,k)``

    with ``c``/``S`` the classical cycle/subset numbers.  Zero-to-the-zero
    powers count as 1, so every parameter (including 0) is legal.
    """
    if k < 0 or k > n:
        raise ValueError(f"index (n, k) = ({n}, {k}) outside 0 <= k <= n")
    total = 0
    for j in range(k, n + 1):
        cyc = stirling_cycle(n, j)
        if not cyc:
            continue
        apow = (-alpha) ** (n - j) if n - j else 1
        for p in range(k, j + 1):
            sub = stirling_subset(p, k)
            if not sub:
                continue
            rpow = r ** (j - p) if j - p else 1
            bpow = beta ** (p - k) if p - k else 1
            total = total + (cyc * binomial(j, p) * sub) * apow * rpow * bpow
    return total


def triangle_by_decomposition(alpha, beta, r, N: int) -> Triangle:
    """All S rows 0..N via the classical decomposition, with power caches."""
    a, b, rr = as_rational(alpha), as_rational(beta), as_rational(r)
    apow = [Fraction(1)]
    bpow = [Fraction(1)]
    rpow = [Fraction(1)]
    for _ in range(N):
        apow.append(apow[-1] * -a)
        bpow.append(bpow[-1] * b)
        rpow.append(rpow[-1] * rr)
    cyc = _cycle_rows(N)
    sub = _subset_rows(N)
    rows = []
    for n in range(N + 1):
        row = []
        for k in range(n + 1):
            total = Fraction(0)
            for j in range(k, n + 1):
                c = cyc[n][j]
                if not c:
                    continue
                for p in range(k, j + 1):
                    s = sub[p][k]
                    if not s:
                        continue
                    total += (c * binomial(j, p) * s) * apow[n - j] * rpow[j - p] * bpow[p - k]
            row.append(total)
        rows.append(row)
    return Triangle("S", a, b, rr, _freeze(rows))


# ---------------------------------------------------------------------------
# closed-form families
# ---------------------------------------------------------------------------

CLOSED_FORM_FAMILIES = (
    "S_8F_i",
    "S_8F_ii",
    "S_8F_iii",
    "S_8F_iv",
    "S_8F_iprime",
    "S_8F_iiprime",
    "S_8F_iiiprime",
    "S_8F_ivprime",
    "S_4F_v",
    "S_4F_vi",
    "E_i",
    "E_ii",
    "E_iii",
    "E_iv",
    "E_v",
    "E_vi",
)

# families where the free rational r (and possibly the stride beta) matters
_R_FREE = {
    "S_8F_iprime",
    "S_8F_iiprime",
    "S_8F_iiiprime",
    "S_8F_ivprime",
    "S_4F_v",
    "S_4F_vi",
    "E_i",
    "E_ii",
    "E_vi",
}
_BETA_FREE = {"S_8F_iprime", "S_8F_iiprime", "E_i", "E_ii"}


def closed_form_params(family: str, r=0, beta=1):
    """The (kind, alpha, beta, r) tuple a family's closed form evaluates."""
    rr = as_rational(r)
    b = as_rational(beta)
    fixed = {
        "S_8F_i": ("S", Fraction(1), Fraction(1), Fraction(0)),
        "S_8F_ii": ("S", Fraction(-1), Fraction(1), Fraction(0)),
        "S_8F_iii": ("S", Fraction(1), Fraction(2), Fraction(0)),
        "S_8F_iv": ("S", Fraction(-2), Fraction(-1), Fraction(0)),
        "S_8F_iprime": ("S", b, b, rr),
        "S_8F_iiprime": ("S", -b, b, rr),
        "S_8F_iiiprime": ("S", Fraction(1), Fraction(2), rr),
        "S_8F_ivprime": ("S", Fraction(-2), Fraction(-1), rr),
        "S_4F_v": ("S", Fraction(-1), Fraction(2), rr),
        "S_4F_vi": ("S", Fraction(-2), Fraction(1), rr),
        "E_i": ("E", b, b, rr),
        "E_ii": ("E", -b, b, rr),
        "E_iii": ("E", Fraction(-1), Fraction(2), Fraction(0)),
        "E_iv": ("E", Fraction(-1), Fraction(2), Fraction(1)),
        "E_v": ("E", Fraction(-1), Fraction(2), Fraction(2)),
        "E_vi": ("E", Fraction(-1), Fraction(2), rr),
    }
    if family not in fixed:
        raise ValueError(f"unknown closed-form family {family!r}")
    if family == "E_vi" and (rr.denominator != 1 or rr < 1):
        raise ValueError("the (zeta, p) Eulerian family needs an integer r >= 1")
    return fixed[family]


def closed_form(family: str, n: int, k: int, r=0, beta=1) -> Fraction:
    """Evaluate one of the sixteen closed-form families exactly.

    ``r`` is honored by the primed/Eulerian families and ignored by the
    fixed-parameter ones; ``beta`` is honored only by the four families with
    a free stride (S_8F_iprime, S_8F_iiprime, E_i, E_ii).  The (zeta, p)
    Eulerian family ``E_vi`` requires an integer ``r >= 1``.
    """
    if family not in CLOSED_FORM_FAMILIES:
        raise ValueError(f"unknown closed-form family {family!r}")
    if k < 0 or k > n:
        return Fraction(0)
    rr = as_rational(r)
    b = as_rational(beta)
    d = n - k

    if family == "S_8F_i":
        return Fraction(1 if n == k else 0)
    if family == "S_8F_ii":
        return Fraction(binomial(n, k) * rising(k, d))
    if family == "S_8F_iii":
        return Fraction(factorial(n) * binomial(k, d), factorial(k) * 2**d)
    if family == "S_8F_iv":
        return Fraction(rising(n, d) * rising(k, d), factorial(d) * 2**d)
    if family == "S_8F_iprime":
        return binomial(n, k) * strided_falling(rr, d, b)
    if family == "S_8F_iiprime":
        return binomial(n, k) * strided_rising(b * k + rr, d, b)
    if family == "S_8F_iiiprime":
        return Fraction(binomial(n, k), 2**d) * hyp2f1_hat(d, -rr, -n + 2 * k + 1, 2)
    if family == "S_8F_ivprime":
        return Fraction(binomial(n, k), (-2) ** d) * hyp2f1_hat(d, rr - 1, -2 * n + k, 2)
    if family == "S_4F_v":
        return Fraction(binomial(n, k), 2**d) * hyp2f1_hat(d, -n - rr + 1, -n + 2 * k + 1, 2)
    if family == "S_4F_vi":
        return Fraction(binomial(n, k), 2**d) * hyp2f1_hat(d, -2 * n - rr + 1, -2 * n + k, 2)
    if family == "E_i":
        return binomial(n, k) * strided_falling(rr, d, b) * strided_falling(b * n - rr, k, b)
    if family == "E_ii":
        return binomial(n, k) * strided_rising(b * k + rr, d, b) * strided_falling(b - rr, k, b)
    if family == "E_iii":
        if k == 0:
            return Fraction(1 if n == 0 else 0)
        return Fraction(factorial(n) * binomial(n + 1, 2 * k - 1))
    if family == "E_iv":
        return Fraction(factorial(n) * binomial(n + 1, 2 * k))
    if family == "E_v":
        return Fraction(factorial(n) * binomial(n + 1, 2 * k + 1))
    # E_vi: r = 2 - zeta + 2 p with zeta in {0, 1}, p natural, i.e. integer r >= 1
    if rr.denominator != 1 or rr < 1:
        raise ValueError("the (zeta, p) Eulerian family needs an integer r >= 1")
    rint = int(rr)
    zeta = 1 if rint % 2 else 0
    p = (rint - 2 + zeta) // 2
    value = Fraction(factorial(n) * binomial(n + 1, 2 * k + 2 * p + 1 - zeta))
    corr = Fraction(0)
    for ell in range(p):
        sign = -1 if ell % 2 else 1
        corr += sign * rising(2 - zeta + 2 * ell, n) * binomial(n + 1, k + p - ell)
    if (k + p) % 2:
        corr = -corr
    return value - corr


# ---------------------------------------------------------------------------
# Eulerian row polynomial via the geometric tail
# ---------------------------------------------------------------------------


def row_polynomial_euler(n: int, alpha, beta, r, extra_order: int = 5) -> List[Fraction]:
    """Row ``n`` of the Eulerian kind, read off from

    ``(1 - t)^{n+1} * sum_{j >= 0} (beta j + r)^{falling n, alpha} t^j``.

    The product is a polynomial of degree ``n``; the coefficients of
    ``t^{n+1} .. t^{n+extra_order}`` are computed and must vanish, otherwise
    an ArithmeticError is raised.
    """
    a, b, rr = as_rational(alpha), as_rational(beta), as_rational(r)
    top = n + extra_order
    table = _falling_power_table(a, b, rr, top, n)
    coeffs = []
    for m in range(top + 1):
        total = Fraction(0)
        for j in range(m + 1):
            if m - j > n + 1:
                continue
            sign = -1 if (m - j) % 2 else 1
            total += sign * binomial(n + 1, m - j) * table[j][n]
        coeffs.append(total)
    tail = coeffs[n + 1 :]
    if any(tail):
        raise ArithmeticError(
            f"geometric tail failed to cancel beyond degree {n}: {tail}"
        )
    return coeffs[: n + 1]


# ---------------------------------------------------------------------------
# Newton-series shifts in r
# ---------------------------------------------------------------------------


def shift_r(base: Triangle, target_r, scheme: str) -> Triangle:
    """Shift a numeric S or Shat triangle from ``r = 0`` to ``target_r``.

    ``scheme`` selects the finite Newton series used:

    - ``"NewtonAlpha"``: stride alpha (requires ``alpha != 0``), mixing
      entries down the rows;
    - ``"NewtonBeta"``: stride beta (requires ``beta != 0``), mixing entries
      along each row.
    """
    if base.kind not in ("S", "Shat"):
        raise ValueError("shift_r supports kinds 'S' and 'Shat'")
    if base.is_symbolic:
        raise ValueError("shift_r is defined for numeric triangles")
    if base.r != 0:
        raise ValueError("base triangle must sit at r = 0")
    rho = as_rational(target_r)
    a, b = base.alpha, base.beta
    N = base.N
    rows: List[List[Fraction]] = []
    if scheme == "NewtonAlpha":
        if a == 0:
            raise ValueError("NewtonAlpha requires alpha != 0")
        fall = [Fraction(1)]
        for m in range(N):
            fall.append(fall[-1] * (rho - m * a))
        for n in range(N + 1):
            row = []
            for k in range(n + 1):
                total = Fraction(0)
                for m in range(n - k + 1):
                    total += binomial(n, m) * base.rows[n - m][k] * fall[m]
                row.append(total)
            rows.append(row)
    elif scheme == "NewtonBeta":
        if b == 0:
            raise ValueError("NewtonBeta requires beta != 0")
        fall = [Fraction(1)]
        for m in range(N):
            fall.append(fall[-1] * (rho - m * b))
        for n in range(N + 1):
            row = []
            for k in range(n + 1):
                total = Fraction(0)
                for m in range(n - k + 1):
                    if base.kind == "S":
                        total += binomial(k + m, m) * base.rows[n][k + m] * fall[m]
                    else:
                        total += base.rows[n][k + m] * fall[m] / (b**m * factorial(m))
                row.append(total)
            rows.append(row)
    else:
        raise ValueError(f"unknown shift scheme {scheme!r}")
    return Triangle(base.kind, a, b, rho, _freeze(rows))


# ---------------------------------------------------------------------------
# the integer-r summation conjecture checker (reports, never asserts)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureCell:
    n: int
    k: int
    r: int
    recurrence: Fraction
    sum_stated: Fraction
    sum_truncated: Fraction
    match_stated: bool
    match_truncated: bool

    @property
    def conventions_differ(self) -> bool:
        return self.sum_stated != self.sum_truncated


@dataclass
class ConjectureReport:
    n_max: int
    r_min: int
    r_max: int
    cells: List[ConjectureCell] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.cells)

    @property
    def mismatches_stated(self) -> List[ConjectureCell]:
        return [c for c in self.cells if not c.match_stated]

    @property
    def mismatches_truncated(self) -> List[ConjectureCell]:
        return [c for c in self.cells if not c.match_truncated]

    @property
    def convention_sensitive(self) -> List[ConjectureCell]:
        return [c for c in self.cells if c.conventions_differ]


def conjecture_check(n_max: int = 10, r_min: int = -4, r_max: int = 6) -> ConjectureReport:
    """Compare the conjectured binomial summation for the modified
    (-1, 2; r) triangle against the recurrence, for integer r.

    The stated summation range dips below ``j = 0`` once ``r >= 3``; since
    the intent there is ambiguous, both the stated range and its truncation
    to ``j >= 0`` are evaluated and reported.  This function never raises on
    a mismatch; it reports.
    """
    report = ConjectureReport(n_max=n_max, r_min=r_min, r_max=r_max)
    for r in range(r_min, r_max + 1):
        tri = build_recurrence("Shat", -1, 2, r, n_max)
        for n in range(n_max + 1):
            nfact = factorial(n)
            for k in range(n + 1):
                lo = (2 - r) // 2  # floor division, may be negative
                hi = (n + 2 - r) // 2
                total_stated = Fraction(0)
                total_trunc = Fraction(0)
                for j in range(lo, hi + 1):
                    term = binomial(n - j, n - k) * nfact * binomial(n + 1, 2 * j + r - 1)
                    total_stated += term
                    if j >= 0:
                        total_trunc += term
                rec = tri.rows[n][k]
                report.cells.append(
                    ConjectureCell(
                        n=n,
                        k=k,
                        r=r,
                        recurrence=rec,
                        sum_stated=total_stated,
                        sum_truncated=total_trunc,
                        match_stated=total_stated == rec,
                        match_truncated=total_trunc == rec,
                    )
                )
    return report
