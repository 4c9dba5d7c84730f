"""Inertia (pi, nu, zeta) of a hermitian form, float and exact routes.

Float mode diagonalizes with numpy and thresholds eigenvalues at
n * eps * max(1, |A|); the threshold can be overridden per call or through
the KREIN_TOL environment variable.  Exact mode runs a congruence
reduction over the Gaussian rationals, so zeta is structural, not a
tolerance call.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import DomainError, NumericError
from .forms import HermitianForm
from .scalars import GaussianRational

HERMITICITY_RTOL = 1e-12
_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class Inertia:
    pi: int
    nu: int
    zeta: int

    @property
    def rank(self) -> int:
        return self.pi + self.nu

    @property
    def signature(self) -> int:
        return self.pi - self.nu

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.pi, self.nu, self.zeta)


class Definiteness(Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    NEGATIVE_DEFINITE = "NegativeDefinite"
    INDEFINITE = "Indefinite"
    DEGENERATE = "Degenerate"


def default_float_tol(form: HermitianForm) -> float:
    """Zero threshold for float eigenvalues, KREIN_TOL env override included."""
    env = os.environ.get("KREIN_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise DomainError(f"KREIN_TOL is not a float: {env!r}") from exc
    return max(1, form.n) * _EPS * max(1.0, form.max_abs())


def check_hermitian(form: HermitianForm) -> None:
    if form.exact:
        for i in range(form.n):
            for k in range(form.n):
                a = form.entries[i][k]
                b = form.entries[k][i]
                if not isinstance(a, GaussianRational):
                    raise DomainError("exact form holds non-rational entries")
                if a.re != b.re or a.im != -b.im:
                    raise DomainError("form is not hermitian")
        return
    m = form.matrix()
    scale = max(1.0, form.max_abs())
    skew = np.max(np.abs(m - m.conj().T)) if form.n else 0.0
    if skew > HERMITICITY_RTOL * scale:
        raise DomainError(f"form is not hermitian: asymmetry {skew:.3e}")


def inertia(form: HermitianForm, tol: float | None = None) -> Inertia:
    """Signature triple of the form; tol applies to the float route only."""
    check_hermitian(form)
    if form.n == 0:
        return Inertia(0, 0, 0)
    if form.exact:
        return _inertia_exact(form)
    if tol is None:
        tol = default_float_tol(form)
    m = form.matrix()
    m = (m + m.conj().T) / 2.0
    try:
        eigs = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericError("eigenvalue computation failed") from exc
    pi = int(np.sum(eigs > tol))
    nu = int(np.sum(eigs < -tol))
    return Inertia(pi, nu, form.n - pi - nu)


def _inertia_exact(form: HermitianForm) -> Inertia:
    work = [[form.entries[i][k] for k in range(form.n)] for i in range(form.n)]
    active = list(range(form.n))
    pi = nu = zeta = 0
    while active:
        diag_best = None
        diag_val = Fraction(0)
        for p in active:
            d = work[p][p].re
            if abs(d) > abs(diag_val):
                diag_val = d
                diag_best = p
        if diag_best is not None:
            p = diag_best
            d = diag_val
            if d > 0:
                pi += 1
            else:
                nu += 1
            rest = [u for u in active if u != p]
            col = {u: work[u][p] for u in rest}
            row = {v: work[p][v] for v in rest}
            for u in rest:
                for v in rest:
                    work[u][v] = work[u][v] - col[u] * row[v] / d
            active = rest
            continue
        best = None
        best_norm = Fraction(0)
        for ai in range(len(active)):
            for ak in range(ai + 1, len(active)):
                i, k = active[ai], active[ak]
                n2 = work[i][k].norm2()
                if n2 > best_norm:
                    best_norm = n2
                    best = (i, k)
        if best is None:
            zeta += len(active)
            break
        i, j = best
        a = work[i][j]
        abar = a.conjugate()
        pi += 1
        nu += 1
        rest = [u for u in active if u not in (i, j)]
        ci = {u: work[u][i] for u in rest}
        cj = {u: work[u][j] for u in rest}
        ri = {v: work[i][v] for v in rest}
        rj = {v: work[j][v] for v in rest}
        for u in rest:
            for v in rest:
                work[u][v] = work[u][v] - ci[u] * rj[v] / abar - cj[u] * ri[v] / a
        active = rest
    return Inertia(pi, nu, zeta)


def definiteness(form: HermitianForm, tol: float | None = None) -> Definiteness:
    """Four-way classification; any kernel at all reads as Degenerate."""
    ine = inertia(form, tol)
    if ine.zeta > 0:
        return Definiteness.DEGENERATE
    if ine.nu == 0:
        return Definiteness.POSITIVE_DEFINITE
    if ine.pi == 0:
        return Definiteness.NEGATIVE_DEFINITE
    return Definiteness.INDEFINITE
