"""Interlacing on the unit circle, decided by the definiteness of the pair form.

A symmetric pair interlaces exactly when its pair form is sign-definite.
The module also carries the derivative transfer, the root-tracking pencil
sweep, and the half-plane mapping identity that ties the pair form to the
quotient form of a pencil member.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import DomainError, InconsistencyError
from .forms import pair_form, schur_cohn_form, table_max_abs
from .inertia import Definiteness, definiteness
from .oracle import find_roots
from .poly import Poly, classify_symmetry, delta, symmetrize, SymmetryKind
from .scalars import EXACT_I, GaussianRational

TRACK_MAX_STEP = math.pi / 8
TRACK_MAX_DEPTH = 40
MONOTONE_SLACK = 1e-7

REASON_INDEFINITE = "Indefinite"
REASON_DEGENERATE = "Degenerate"
REASON_DEGREE_MISMATCH = "DegreeMismatch"


class Sign(Enum):
    POSITIVE = "pos"
    NEGATIVE = "neg"


@dataclass(frozen=True)
class InterlaceVerdict:
    interlacing: bool
    sign: Sign | None = None
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "interlacing": self.interlacing,
            "sign": self.sign.value if self.sign else None,
            "reason": self.reason,
        }


def _to_symmetric(g: Poly, who: str) -> Poly:
    cls = classify_symmetry(g)
    if cls.kind is SymmetryKind.NONE:
        raise DomainError(f"{who} admits no symmetric rotation")
    if cls.kind is SymmetryKind.SYMMETRIC:
        return g
    return symmetrize(g)


def interlace_test(g: Poly, h: Poly, tol: float | None = None) -> InterlaceVerdict:
    """Verdict on whether the circle roots of g and h strictly alternate."""
    g = _to_symmetric(g, "g")
    h = _to_symmetric(h, "h")
    if g.degree != h.degree:
        return InterlaceVerdict(False, None, REASON_DEGREE_MISMATCH)
    d = definiteness(pair_form(g, h), tol)
    if d is Definiteness.POSITIVE_DEFINITE:
        return InterlaceVerdict(True, Sign.POSITIVE)
    if d is Definiteness.NEGATIVE_DEFINITE:
        return InterlaceVerdict(True, Sign.NEGATIVE)
    if d is Definiteness.DEGENERATE:
        return InterlaceVerdict(False, None, REASON_DEGENERATE)
    return InterlaceVerdict(False, None, REASON_INDEFINITE)


def derivative_interlace(g: Poly, h: Poly, tol: float | None = None) -> InterlaceVerdict:
    """Interlacing transfers to the delta polynomials of an interlacing pair.

    The deltas of symmetric polynomials are skew, so both are rotated by i
    before testing; rotation moves no roots.
    """
    g = _to_symmetric(g, "g")
    h = _to_symmetric(h, "h")
    pre = interlace_test(g, h, tol)
    if not pre.interlacing:
        raise DomainError("inputs must interlace before the derivative transfer")
    unit = EXACT_I if g.exact else 1j
    return interlace_test(delta(g).scale(unit), delta(h).scale(unit), tol)


def _as_float(g: Poly) -> Poly:
    if g.exact:
        return Poly(g.to_complex_list(), exact=False)
    return g


def _pencil_args(g: Poly, h: Poly, t: float, tol: float) -> list[float]:
    f = g + h.scale(complex(t))
    if f.degree != g.degree:
        raise InconsistencyError(f"pencil member at t={t} dropped degree")
    rs = find_roots(f)
    args = []
    for r in rs.roots:
        if abs(abs(r.value) - 1.0) > tol:
            raise InconsistencyError(
                f"pencil root {r.value} at t={t} left the unit circle")
        args.extend([cmath.phase(r.value) % (2 * math.pi)] * r.multiplicity)
    return args


def _match_args(prev: list[float], new: list[float]) -> list[float] | None:
    """Continue each tracked argument to its nearest new value mod 2 pi.

    Returns None when two tracks claim the same root, which signals the
    step was too large.
    """
    chosen: list[int] = []
    out: list[float] = []
    two_pi = 2 * math.pi
    for p in prev:
        best_j = -1
        best_d = math.inf
        for j, a in enumerate(new):
            d = (a - p + math.pi) % two_pi - math.pi
            if abs(d) < abs(best_d):
                best_d = d
                best_j = j
        if best_j in chosen:
            return None
        chosen.append(best_j)
        out.append(p + best_d)
    return out


def _track_step(g: Poly, h: Poly, t0: float, args0: list[float], t1: float,
                tol: float, depth: int) -> list[float]:
    new = _pencil_args(g, h, t1, tol)
    matched = _match_args(args0, new)
    if matched is not None and \
            max(abs(a - b) for a, b in zip(matched, args0)) <= TRACK_MAX_STEP:
        return matched
    if depth >= TRACK_MAX_DEPTH:
        raise InconsistencyError("argument tracking failed to converge")
    mid = 0.5 * (t0 + t1)
    args_mid = _track_step(g, h, t0, args0, mid, tol, depth + 1)
    return _track_step(g, h, mid, args_mid, t1, tol, depth + 1)


def pencil_trace(g: Poly, h: Poly, t_samples, tol: float = 1e-8
                 ) -> list[tuple[float, tuple[float, ...]]]:
    """Root arguments of g + t h across t_samples, tracked continuously.

    Checks on the way out: every root stays on the circle within tol, each
    sampled member interlaces both endpoints (the member equals g at t = 0,
    where the comparison is skipped), and every tracked argument is
    monotone in t.  Violations raise InconsistencyError.
    """
    ts = [float(t) for t in t_samples]
    if not ts:
        raise DomainError("need at least one sample")
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise DomainError("t_samples must be strictly increasing")
    g0 = _as_float(_to_symmetric(g, "g"))
    h0 = _as_float(_to_symmetric(h, "h"))
    if not interlace_test(g0, h0).interlacing:
        raise DomainError("pencil endpoints must interlace")

    out: list[tuple[float, tuple[float, ...]]] = []
    prev_t: float | None = None
    prev_args: list[float] | None = None
    for t in ts:
        if prev_args is None:
            args = sorted(_pencil_args(g0, h0, t, tol))
        else:
            args = _track_step(g0, h0, prev_t, prev_args, t, tol, 0)
        f = g0 + h0.scale(complex(t))
        if not interlace_test(f, h0).interlacing:
            raise InconsistencyError(f"pencil member at t={t} fails to interlace h")
        if t != 0.0 and not interlace_test(f, g0).interlacing:
            raise InconsistencyError(f"pencil member at t={t} fails to interlace g")
        out.append((t, tuple(args)))
        prev_t, prev_args = t, args

    for j in range(len(out[0][1])):
        seq = [args[j] for _, args in out]
        diffs = [b - a for a, b in zip(seq, seq[1:])]
        up = all(d >= -MONOTONE_SLACK for d in diffs)
        down = all(d <= MONOTONE_SLACK for d in diffs)
        if not (up or down):
            raise InconsistencyError(f"tracked argument {j} is not monotone in t")
    return out


def mapping_form_identity(g: Poly, h: Poly, z) -> float:
    """Relative defect of the pencil identity tying both forms together.

    For symmetric g, h of equal degree and non-real z, the quotient form of
    f = h - z g equals 2 Im(z) times the pair form of (g, h).  Returns
    max-abs(lhs - rhs) / max-abs(pair form); expected at roundoff level.
    """
    if classify_symmetry(g).kind is not SymmetryKind.SYMMETRIC \
            or classify_symmetry(h).kind is not SymmetryKind.SYMMETRIC:
        raise DomainError("mapping identity requires Symmetric polynomials")
    if g.degree != h.degree:
        raise DomainError("mapping identity requires equal degrees")
    zc = complex(z)
    eta = zc.imag
    if eta == 0.0:
        raise DomainError("z must have nonzero imaginary part")
    n = g.degree
    exact_z = isinstance(z, (int, Fraction, GaussianRational))
    if g.exact and not exact_z:
        g, h = _as_float(g), _as_float(h)
    if g.exact:
        zs = z if isinstance(z, GaussianRational) else GaussianRational.of(Fraction(z))
        f = h - g.scale(zs)
    else:
        f = h - g.scale(zc)
    if f.is_zero:
        raise DomainError("degenerate pencil member")
    lhs = schur_cohn_form(f, adjoint_degree=n, dim=n).matrix()
    pair = pair_form(g, h)
    rhs = 2.0 * eta * pair.matrix()
    denom = table_max_abs(pair.entries)
    if denom == 0.0:
        raise DomainError("pair form vanishes; defect undefined")
    return float(np.max(np.abs(lhs - rhs)) / denom)


def pair_value_on_powers(g: Poly, h: Poly, alpha: complex) -> complex:
    """The pair form evaluated on the power vector (1, alpha, ..., alpha^{n-1})."""
    g = _as_float(_to_symmetric(g, "g"))
    h = _as_float(_to_symmetric(h, "h"))
    form = pair_form(g, h)
    v = np.array([alpha ** k for k in range(form.n)], dtype=complex)
    return complex(v @ form.matrix() @ np.conj(v))


def pair_value_direct(g: Poly, h: Poly, alpha: complex) -> complex:
    """Closed-form value of the pair form on the same power vector.

    On the circle this is i (g(a) conj(h_d(a)) - h(a) conj(g_d(a))); off it,
    i (g(a) conj(h(a)) - h(a) conj(g(a))) / (1 - |a|^2).
    """
    g = _as_float(_to_symmetric(g, "g"))
    h = _as_float(_to_symmetric(h, "h"))
    ga, ha = g(alpha), h(alpha)
    r2 = abs(alpha) ** 2
    if abs(r2 - 1.0) <= 1e-9:
        gd, hd = delta(g)(alpha), delta(h)(alpha)
        return 1j * (ga * hd.conjugate() - ha * gd.conjugate())
    return 1j * (ga * ha.conjugate() - ha * ga.conjugate()) / (1.0 - r2)


def diagonalize_on_roots(g: Poly, h: Poly) -> tuple[np.ndarray, float]:
    """Diagonalize the pair form on the root-power vectors of an interlacing g.

    With V[i][j] = a_j^i over the roots a_j of g, the bilinear transform
    V^T A conj(V) is diagonal: the bivariate quotient vanishes at every
    mixed pair of g's roots, so the form splits into one weighted square
    per root.  Returns the (real) diagonal weights and the relative
    off-diagonal defect.
    """
    g0 = _as_float(_to_symmetric(g, "g"))
    h0 = _as_float(_to_symmetric(h, "h"))
    if not interlace_test(g0, h0).interlacing:
        raise DomainError("diagonalization requires an interlacing pair")
    n = g0.degree
    roots = []
    for r in find_roots(g0).roots:
        roots.extend([r.value] * r.multiplicity)
    v = np.array([[rt ** i for rt in roots] for i in range(n)], dtype=complex)
    a = pair_form(g0, h0).matrix()
    m = v.T @ a @ np.conj(v)
    diag = np.diag(m).copy()
    off = m - np.diag(diag)
    scale = float(np.max(np.abs(m)))
    defect = float(np.max(np.abs(off)) / scale) if scale > 0 else 0.0
    return diag, defect
