"""Hermitian forms attached to a polynomial, built through bivariate division.

Every circle form here is the windowed quotient of a bivariate numerator by
1 - xy.  Tables are nested lists indexed [i][k], entry = coefficient of
x^i y^k, and a form's value on a vector v is sum A[i][k] v_i conj(v_k).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import DomainError, InconsistencyError
from .poly import Poly, adjoint, classify_symmetry, delta, power_sums, SymmetryKind
from .scalars import Scalar, abs2, conj, is_exact, to_complex, zero

KREIN_DIVISIBILITY_RTOL = 1e-8


class Divisor(Enum):
    ONE_MINUS_XY = "1-xy"
    X_MINUS_Y = "x-y"


class FormKind(Enum):
    SCHUR_COHN = "SchurCohn"
    POWER_SUM = "PowerSum"
    KREIN = "Krein"
    PAIR = "Pair"
    GRAM = "Gram"
    HANKEL_BORCHARDT = "HankelBorchardt"
    BEZOUT = "BezoutK"
    HERMITE_K1 = "HermiteK1"
    HURWITZ_PAIR = "HurwitzPair"
    HALF_PLANE = "HalfPlane"


Table = list


def table_zero(size: int, exact: bool) -> Table:
    return [[zero(exact) for _ in range(size)] for _ in range(size)]


def table_max_abs(table: Sequence[Sequence[Scalar]]) -> float:
    best = 0.0
    for row in table:
        for c in row:
            v = math.sqrt(abs2(c))
            if v > best:
                best = v
    return best


def outer_table(p: Sequence[Scalar], q: Sequence[Scalar], exact: bool) -> Table:
    """Table of p(x) * qbar(y): entry [i][k] = p_i * conj(q_k)."""
    size = max(len(p), len(q))
    t = table_zero(size, exact)
    for i, a in enumerate(p):
        for k, b in enumerate(q):
            t[i][k] = a * conj(b)
    return t


def divide_bivariate(num: Sequence[Sequence[Scalar]], divisor: Divisor,
                     dim: int | None = None) -> tuple[Table, float]:
    """Divide a square bivariate table by 1-xy or x-y.

    Returns the quotient windowed to dim x dim (default: one less than the
    table size) together with the max-abs norm of N - divisor * Q_window.
    A zero norm certifies exact divisibility with the quotient inside the
    window.
    """
    size = len(num)
    for row in num:
        if len(row) != size:
            raise DomainError("bivariate table must be square")
    if size == 0:
        return [], 0.0
    exact = is_exact(num[0][0])
    if dim is None:
        dim = size - 1
    if dim < 0 or dim > size:
        raise DomainError("window dimension out of range")

    if divisor is Divisor.ONE_MINUS_XY:
        full = table_zero(size, exact)
        for i in range(size):
            for k in range(size):
                acc = num[i][k]
                if i > 0 and k > 0:
                    acc = acc + full[i - 1][k - 1]
                full[i][k] = acc
        window = [[full[i][k] if i < size and k < size else zero(exact)
                   for k in range(dim)] for i in range(dim)]
        prod_size = max(size, dim + 1)
        prod = table_zero(prod_size, exact)
        for i in range(dim):
            for k in range(dim):
                q = window[i][k]
                prod[i][k] = prod[i][k] + q
                prod[i + 1][k + 1] = prod[i + 1][k + 1] - q
    else:
        ywidth = 2 * size
        rows: list[list[Scalar]] = [[zero(exact)] * ywidth for _ in range(size)]
        for i in range(size - 2, -1, -1):
            above = rows[i + 1]
            row = rows[i]
            for k in range(size):
                row[k] = num[i + 1][k]
            for k in range(ywidth - 1):
                if _nz(above[k]):
                    row[k + 1] = row[k + 1] + above[k]
        window = [[rows[i][k] if i < size and k < ywidth else zero(exact)
                   for k in range(dim)] for i in range(dim)]
        prod_size = max(size, dim + 1)
        prod = table_zero(prod_size, exact)
        for i in range(dim):
            for k in range(dim):
                q = window[i][k]
                prod[i + 1][k] = prod[i + 1][k] + q
                prod[i][k + 1] = prod[i][k + 1] - q

    rnorm = 0.0
    for i in range(prod_size):
        for k in range(prod_size):
            n_ik = num[i][k] if i < size and k < size else zero(exact)
            r = n_ik - prod[i][k]
            v = math.sqrt(abs2(r))
            if v > rnorm:
                rnorm = v
    return window, rnorm


def _nz(c: Scalar) -> bool:
    from .scalars import GaussianRational

    if isinstance(c, GaussianRational):
        return bool(c)
    return c != 0


@dataclass(frozen=True)
class HermitianForm:
    """A finished n x n hermitian form plus how cleanly it divided out."""

    kind: FormKind
    n: int
    entries: tuple
    exact: bool
    remainder_norm: float = 0.0

    def entry(self, i: int, k: int) -> Scalar:
        return self.entries[i][k]

    def matrix(self) -> np.ndarray:
        return np.array([[to_complex(c) for c in row] for row in self.entries],
                        dtype=complex).reshape(self.n, self.n)

    def max_abs(self) -> float:
        return table_max_abs(self.entries)

    def value(self, v: Sequence[Scalar]) -> Scalar:
        if len(v) != self.n:
            raise DomainError("vector length does not match form dimension")
        acc = zero(self.exact)
        for i in range(self.n):
            for k in range(self.n):
                acc = acc + self.entries[i][k] * v[i] * conj(v[k])
        return acc

    def transpose(self) -> "HermitianForm":
        t = tuple(tuple(self.entries[k][i] for k in range(self.n)) for i in range(self.n))
        return HermitianForm(self.kind, self.n, t, self.exact, self.remainder_norm)


def _freeze(table: Sequence[Sequence[Scalar]]) -> tuple:
    return tuple(tuple(row) for row in table)


def schur_cohn_form(g: Poly, adjoint_degree: int | None = None,
                    dim: int | None = None) -> HermitianForm:
    """Quotient of g*(x) conj(g*)(y) - g(x) conj(g)(y) by 1 - xy.

    Positive index counts roots inside the unit circle, negative outside.
    adjoint_degree fixes the reversal degree (needed for pencil members
    that drop degree); dim pads or trims the window.
    """
    if g.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    m = g.degree if adjoint_degree is None else adjoint_degree
    gstar = adjoint(g, m)
    size = m + 1
    num = table_zero(size, g.exact)
    for i in range(size):
        for k in range(size):
            num[i][k] = gstar.coeff(i) * conj(gstar.coeff(k)) \
                - g.coeff(i) * conj(g.coeff(k))
    if dim is None:
        dim = m
    window, rnorm = divide_bivariate(num, Divisor.ONE_MINUS_XY, dim)
    return HermitianForm(FormKind.SCHUR_COHN, dim, _freeze(window), g.exact, rnorm)


def power_sum_form(g: Poly) -> HermitianForm:
    """Toeplitz form S[i][k] = s_{i-k} from the root power sums of g.

    Negative-index sums come from conjugation, which is valid only when the
    root set is closed under reflection in the circle, so g must be
    Symmetric.
    """
    if g.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    if g.degree >= 1 and classify_symmetry(g).kind is not SymmetryKind.SYMMETRIC:
        raise DomainError("this form requires a Symmetric polynomial")
    n = g.degree
    s = power_sums(g, n) if n >= 1 else []
    t = table_zero(n, g.exact)
    for i in range(n):
        for k in range(n):
            t[i][k] = s[i - k] if i >= k else conj(s[k - i])
    return HermitianForm(FormKind.POWER_SUM, n, _freeze(t), g.exact, 0.0)


def krein_form(g: Poly, rtol: float = KREIN_DIVISIBILITY_RTOL) -> HermitianForm:
    """Quotient of g(x) conj(g_d)(y) + g_d(x) conj(g)(y) by 1 - xy.

    g must be Symmetric; g_d is its delta polynomial.  The numerator is then
    exactly divisible, so a remainder above rtol * |N| means the input or
    the arithmetic is inconsistent and raises.
    """
    if g.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    if classify_symmetry(g).kind is not SymmetryKind.SYMMETRIC:
        raise DomainError("this form requires a Symmetric polynomial")
    n = g.degree
    gd = delta(g)
    size = n + 1
    num = table_zero(size, g.exact)
    for i in range(size):
        for k in range(size):
            num[i][k] = g.coeff(i) * conj(gd.coeff(k)) + gd.coeff(i) * conj(g.coeff(k))
    window, rnorm = divide_bivariate(num, Divisor.ONE_MINUS_XY, n)
    nnorm = table_max_abs(num)
    if g.exact:
        if rnorm != 0.0:
            raise InconsistencyError("exact numerator failed to divide by 1 - xy")
    elif rnorm > rtol * nnorm:
        raise InconsistencyError(
            f"division remainder {rnorm:.3e} exceeds {rtol:.1e} * |N| = {rtol * nnorm:.3e}")
    return HermitianForm(FormKind.KREIN, n, _freeze(window), g.exact, rnorm)


def pair_form(g: Poly, h: Poly) -> HermitianForm:
    """Quotient of i (g(x) conj(h)(y) - h(x) conj(g)(y)) by 1 - xy.

    Defined for any pair; for a symmetric pair of equal degree the division
    is exact and the form is the pairing whose definiteness detects
    interlacing.  The remainder norm is recorded, not gated.
    """
    if g.is_zero or h.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    if g.exact != h.exact:
        raise DomainError("mixed scalar modes between polynomials")
    if g.degree != h.degree:
        raise DomainError("pair form requires equal degrees")
    if classify_symmetry(g).kind is not SymmetryKind.SYMMETRIC \
            or classify_symmetry(h).kind is not SymmetryKind.SYMMETRIC:
        raise DomainError("pair form requires Symmetric polynomials")
    n = max(g.degree, h.degree)
    size = n + 1
    i_unit: Scalar
    if g.exact:
        from .scalars import EXACT_I

        i_unit = EXACT_I
    else:
        i_unit = 1j
    num = table_zero(size, g.exact)
    for i in range(size):
        for k in range(size):
            num[i][k] = i_unit * (g.coeff(i) * conj(h.coeff(k))
                                  - h.coeff(i) * conj(g.coeff(k)))
    window, rnorm = divide_bivariate(num, Divisor.ONE_MINUS_XY, n)
    return HermitianForm(FormKind.PAIR, n, _freeze(window), g.exact, rnorm)


def gram_form(p: Poly, dim: int) -> HermitianForm:
    """Rank-one table p_i conj(p_k) on a dim x dim window."""
    t = table_zero(dim, p.exact)
    for i in range(dim):
        for k in range(dim):
            t[i][k] = p.coeff(i) * conj(p.coeff(k))
    return HermitianForm(FormKind.GRAM, dim, _freeze(t), p.exact, 0.0)


def build_circle_form(g: Poly, kind: FormKind) -> HermitianForm:
    """Uniform entry point for the three named circle forms of one g."""
    if kind is FormKind.SCHUR_COHN:
        if g.is_zero:
            raise DomainError("form of the zero polynomial is undefined")
        if g.degree >= 1 and not _nz(g.coeff(0)):
            raise DomainError("this form requires a nonzero constant term")
        return schur_cohn_form(g)
    if kind is FormKind.POWER_SUM:
        return power_sum_form(g)
    if kind is FormKind.KREIN:
        return krein_form(g)
    raise DomainError(f"no single-polynomial circle form of kind {kind.value}")


def coefficient_transform(g: Poly):
    """Upper-triangular matrix Z[i][k] = a_{k-i} linking the Toeplitz form to
    the quotient form: conj-transpose(Z) S Z equals the transpose of the
    delta-pairing form."""
    if g.is_zero:
        raise DomainError("transform of the zero polynomial is undefined")
    if g.degree >= 1 and not _nz(g.coeff(0)):
        raise DomainError("transform requires a nonzero constant term")
    n = g.degree
    return [[g.coeff(k - i) if k >= i else zero(g.exact) for k in range(n)]
            for i in range(n)]


def substitute(form: HermitianForm, c: Sequence[Sequence[Scalar]]) -> HermitianForm:
    """Congruence by the substitution v = C w: returns C^T A conj(C).

    The result is the form whose value at w equals the original value at
    C w.
    """
    n = form.n
    if len(c) != n or any(len(row) != n for row in c):
        raise DomainError("substitution matrix dimension mismatch")
    a = form.entries
    mid = [[zero(form.exact) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for q in range(n):
            acc = zero(form.exact)
            for k in range(n):
                acc = acc + a[i][k] * conj(c[k][q])
            mid[i][q] = acc
    out = [[zero(form.exact) for _ in range(n)] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            acc = zero(form.exact)
            for i in range(n):
                acc = acc + c[i][p] * mid[i][q]
            out[p][q] = acc
    return HermitianForm(form.kind, n, _freeze(out), form.exact, form.remainder_norm)


def schur_cohn_toeplitz(g: Poly) -> HermitianForm:
    """Independent Toeplitz-factor route to the same matrix as schur_cohn_form.

    A = T1^H T1 - T2^H T2 with T1[r][r+j] = conj(a_{n-j}) and
    T2[r][r+j] = a_j.  Used as a cross-check; entries agree with the
    bivariate-division route exactly in both modes.
    """
    if g.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    n = g.degree
    t1 = table_zero(n, g.exact)
    t2 = table_zero(n, g.exact)
    for r in range(n):
        for j in range(n - r):
            t1[r][r + j] = conj(g.coeff(n - j))
            t2[r][r + j] = g.coeff(j)
    out = table_zero(n, g.exact)
    for i in range(n):
        for k in range(n):
            acc = zero(g.exact)
            for r in range(n):
                acc = acc + t1[r][i] * conj(t1[r][k]) - t2[r][i] * conj(t2[r][k])
            out[i][k] = acc
    return HermitianForm(FormKind.SCHUR_COHN, n, _freeze(out), g.exact, 0.0)
