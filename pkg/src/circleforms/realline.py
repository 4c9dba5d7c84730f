"""Real-line and half-plane counterparts built on the divisor x - y.

The same Hermitian container and inertia engine serve here; real forms
simply carry zero imaginary parts.  Numerators are antisymmetric in (x, y),
so their quotients are symmetric; float quotients are reprojected onto
symmetry to absorb division roundoff.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .circle import Exactness
from .errors import DomainError, InconsistencyError
from .forms import Divisor, FormKind, HermitianForm, divide_bivariate, gram_form, \
    table_max_abs, table_zero
from .inertia import Definiteness, definiteness, inertia
from .interlacing import InterlaceVerdict, Sign, REASON_DEGENERATE, \
    REASON_DEGREE_MISMATCH, REASON_INDEFINITE
from .oracle import classify_line, find_roots, TAG_REAL, TAG_UPPER
from .poly import Poly, poly_divmod, poly_gcd, power_sums
from .scalars import GaussianRational, Scalar, conj, zero

REAL_COEFF_RTOL = 1e-12
DIVISIBILITY_RTOL = 1e-8


class LineMethod:
    BORCHARDT = "Borchardt"
    BEZOUT = "BezoutK"
    HERMITE = "HermiteK1"
    ORACLE = "Oracle"

    ALL = (BORCHARDT, BEZOUT, HERMITE, ORACLE)


@dataclass(frozen=True)
class LineCount:
    """Distinct-root tallies on the line, or multiplicity tallies by half-plane."""

    distinct_real: int | None
    distinct_conjugate_pairs: int | None
    upper: int | None
    lower: int | None
    kernel: int
    exactness: Exactness

    def to_json_dict(self) -> dict:
        return {
            "distinct_real": self.distinct_real,
            "distinct_conjugate_pairs": self.distinct_conjugate_pairs,
            "upper": self.upper,
            "lower": self.lower,
            "kernel": self.kernel,
            "exactness": self.exactness.value,
        }


def require_real(f: Poly, who: str = "input") -> Poly:
    """Validate real coefficients; tiny float imaginary dust is projected out."""
    if f.is_zero:
        return f
    if f.exact:
        if any(c.im != 0 for c in f.coeffs):
            raise DomainError(f"{who} must have real coefficients")
        return f
    scale = f.norm_inf()
    if any(abs(c.imag) > REAL_COEFF_RTOL * scale for c in f.coeffs):
        raise DomainError(f"{who} must have real coefficients")
    if any(c.imag != 0.0 for c in f.coeffs):
        return Poly([complex(c.real, 0.0) for c in f.coeffs], exact=False)
    return f


def _gate_remainder(num, rnorm: float, exact: bool) -> None:
    if exact:
        if rnorm != 0.0:
            raise InconsistencyError("exact numerator failed to divide by x - y")
        return
    nnorm = table_max_abs(num)
    if rnorm > DIVISIBILITY_RTOL * max(nnorm, 1e-300):
        raise InconsistencyError(
            f"division remainder {rnorm:.3e} exceeds "
            f"{DIVISIBILITY_RTOL:.1e} * |N| = {DIVISIBILITY_RTOL * nnorm:.3e}")


def _symmetrize_float(window) -> list:
    out = []
    for i in range(len(window)):
        row = []
        for k in range(len(window)):
            row.append((window[i][k] + window[k][i].conjugate()) / 2)
        out.append(row)
    return out


def _quotient_form(kind: FormKind, num, dim: int, exact: bool) -> HermitianForm:
    window, rnorm = divide_bivariate(num, Divisor.X_MINUS_Y, dim)
    _gate_remainder(num, rnorm, exact)
    if not exact:
        window = _symmetrize_float(window)
    frozen = tuple(tuple(row) for row in window)
    return HermitianForm(kind, dim, frozen, exact, rnorm)


def hankel_borchardt_form(f: Poly) -> HermitianForm:
    """Hankel matrix of root power sums: entry (i, k) = s_{i+k}.

    Signature pi - nu counts distinct real roots; nu counts distinct
    conjugate pairs; the kernel is the multiplicity excess.
    """
    f = require_real(f)
    if f.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    n = f.degree
    s = power_sums(f, 2 * n - 1) if n >= 1 else []
    t = table_zero(n, f.exact)
    for i in range(n):
        for k in range(n):
            t[i][k] = s[i + k]
    return HermitianForm(FormKind.HANKEL_BORCHARDT, n, tuple(tuple(r) for r in t),
                         f.exact, 0.0)


def bezout_form(p: Poly, q: Poly, kind: FormKind = FormKind.BEZOUT,
                dim: int | None = None) -> HermitianForm:
    """Quotient of p(x) q(y) - q(x) p(y) by x - y on a dim x dim window."""
    if p.is_zero or q.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    if p.exact != q.exact:
        raise DomainError("mixed scalar modes between polynomials")
    size = max(p.degree, q.degree) + 1
    if dim is None:
        dim = size - 1
    num = table_zero(max(size, dim + 1), p.exact)
    for i in range(len(num)):
        for k in range(len(num)):
            num[i][k] = p.coeff(i) * q.coeff(k) - q.coeff(i) * p.coeff(k)
    return _quotient_form(kind, num, dim, p.exact)


def bezout_k_form(f: Poly) -> HermitianForm:
    """The derivative Bezoutian [f(x) f'(y) - f'(x) f(y)] / (x - y)."""
    f = require_real(f)
    if f.is_zero or f.degree < 1:
        raise DomainError("derivative form needs degree >= 1")
    return bezout_form(f, f.derivative(), FormKind.BEZOUT, f.degree)


def hermite_k1_form(f: Poly) -> HermitianForm:
    """The reduced form built from f-check = n f - x f' in place of f."""
    f = require_real(f)
    if f.is_zero or f.degree < 1:
        raise DomainError("derivative form needs degree >= 1")
    n = f.degree
    check = Poly([f.coeffs[k] * (n - k) for k in range(n + 1)], f.exact)
    return bezout_form(check, f.derivative(), FormKind.HERMITE_K1, n)


def hermite_k_from_k1(f: Poly) -> HermitianForm:
    """Reconstruct the derivative Bezoutian through the reduced form.

    K = (K1 + Gram(f')) / n; agrees entrywise with bezout_k_form, which the
    regression suite pins down.
    """
    f = require_real(f)
    if f.is_zero or f.degree < 1:
        raise DomainError("derivative form needs degree >= 1")
    n = f.degree
    k1 = hermite_k1_form(f)
    gram = gram_form(f.derivative(), n)
    inv: Scalar
    inv = GaussianRational.of(Fraction(1, n)) if f.exact else 1.0 / n
    entries = tuple(
        tuple((k1.entry(i, k) + gram.entry(i, k)) * inv for k in range(n))
        for i in range(n))
    return HermitianForm(FormKind.HERMITE_K1, n, entries, f.exact, k1.remainder_norm)


def hurwitz_pair_form(f: Poly, big_f: Poly) -> HermitianForm:
    """Quotient of F(x) f(y) - F(y) f(x) by x - y for real f, F of equal degree."""
    f = require_real(f, "f")
    big_f = require_real(big_f, "F")
    if f.is_zero or big_f.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    if f.degree != big_f.degree:
        raise DomainError("pair form requires equal degrees")
    return bezout_form(big_f, f, FormKind.HURWITZ_PAIR, f.degree)


def half_plane_form(big_f: Poly, formal_degree: int | None = None) -> HermitianForm:
    """Quotient of -i (F(x) conj-F(y) - conj-F(x) F(y)) by x - y.

    Entries are real even for complex F.  Positive index counts roots above
    the real axis, negative below.  formal_degree pads the table for pencil
    members that drop degree.
    """
    if big_f.is_zero:
        raise DomainError("form of the zero polynomial is undefined")
    n = big_f.degree if formal_degree is None else formal_degree
    if n < big_f.degree:
        raise DomainError("formal degree below actual degree")
    size = n + 1
    num = table_zero(size, big_f.exact)
    for i in range(size):
        for k in range(size):
            a, b = big_f.coeff(i), big_f.coeff(k)
            prod = a * conj(b)
            if big_f.exact:
                num[i][k] = GaussianRational(2 * prod.im, Fraction(0))
            else:
                num[i][k] = complex(2 * prod.imag, 0.0)
    return _quotient_form(FormKind.HALF_PLANE, num, n, big_f.exact)


def build_real_form(kind: FormKind, f: Poly, big_f: Poly | None = None) -> HermitianForm:
    """Uniform entry point mirroring the circle-form builder."""
    if kind is FormKind.HANKEL_BORCHARDT:
        return hankel_borchardt_form(f)
    if kind is FormKind.BEZOUT:
        return bezout_k_form(f)
    if kind is FormKind.HERMITE_K1:
        return hermite_k1_form(f)
    if kind is FormKind.HURWITZ_PAIR:
        if big_f is None:
            raise DomainError("pair form needs two polynomials")
        return hurwitz_pair_form(f, big_f)
    if kind is FormKind.HALF_PLANE:
        return half_plane_form(f)
    raise DomainError(f"no real-line form of kind {kind.value}")


def _real_mult_count(f: Poly) -> int:
    """Real roots with multiplicity, by gcd recursion.  Exact real f."""
    if f.degree <= 0:
        return 0
    ine = inertia(hankel_borchardt_form(f))
    distinct = ine.pi - ine.nu
    d = poly_gcd(f, f.derivative())
    if d.degree == 0:
        return distinct
    return distinct + _real_mult_count(d)


def pair_mult_count(f: Poly, tol: float | None = None) -> int:
    """Conjugate-pair count of a real polynomial, with multiplicity."""
    f = require_real(f)
    if f.is_zero:
        raise DomainError("cannot count roots of the zero polynomial")
    n = f.degree
    if n == 0:
        return 0
    if f.exact:
        real = _real_mult_count(f)
        if (n - real) % 2:
            raise InconsistencyError("odd number of non-real roots of a real polynomial")
        return (n - real) // 2
    ine = inertia(hankel_borchardt_form(f), tol)
    if ine.zeta == 0:
        return ine.nu
    total = 0
    for r in classify_line(find_roots(f)).roots:
        if r.tag == TAG_UPPER:
            total += r.multiplicity
    return total


def count_real_line(f: Poly, method: str = LineMethod.BORCHARDT,
                    tol: float | None = None) -> LineCount:
    """Distinct real roots and conjugate pairs of a real polynomial."""
    f = require_real(f)
    if f.is_zero:
        raise DomainError("cannot count roots of the zero polynomial")
    if method not in LineMethod.ALL:
        raise DomainError(f"unknown line method {method!r}")
    if f.degree == 0:
        exactness = Exactness.EXACT if f.exact else Exactness.FLOAT_CERTIFIED
        return LineCount(0, 0, None, None, 0, exactness)
    if method == LineMethod.ORACLE:
        return _count_line_oracle(f)
    if method == LineMethod.BORCHARDT:
        form = hankel_borchardt_form(f)
    elif method == LineMethod.BEZOUT:
        form = bezout_k_form(f)
    else:
        form = hermite_k_from_k1(f)
    ine = inertia(form, tol)
    if ine.pi < ine.nu:
        raise InconsistencyError("real form with pi < nu")
    if f.exact:
        exactness = Exactness.EXACT
    elif ine.zeta == 0:
        exactness = Exactness.FLOAT_CERTIFIED
    else:
        exactness = Exactness.FLOAT_HEURISTIC
    return LineCount(ine.pi - ine.nu, ine.nu, None, None, ine.zeta, exactness)


def _count_line_oracle(f: Poly) -> LineCount:
    rs = classify_line(find_roots(f))
    distinct_real = sum(1 for r in rs.roots if r.tag == TAG_REAL)
    pairs = sum(1 for r in rs.roots if r.tag == TAG_UPPER)
    kernel = sum(r.multiplicity - 1 for r in rs.roots)
    if f.exact:
        exactness = Exactness.EXACT
    elif all(r.multiplicity == 1 for r in rs.roots):
        exactness = Exactness.FLOAT_CERTIFIED
    else:
        exactness = Exactness.FLOAT_HEURISTIC
    return LineCount(distinct_real, pairs, None, None, kernel, exactness)


def count_halfplane(big_f: Poly, tol: float | None = None) -> LineCount:
    """Roots above and below the real axis, with multiplicity.

    A degenerate form means some roots are real or mirror each other; exact
    mode splits off gcd(F, conj-F), which has real coefficients, and counts
    its pairs through the real-line machinery.  Float mode reports the
    degenerate case as heuristic.
    """
    if big_f.is_zero:
        raise DomainError("cannot count roots of the zero polynomial")
    n = big_f.degree
    if n == 0:
        exactness = Exactness.EXACT if big_f.exact else Exactness.FLOAT_CERTIFIED
        return LineCount(None, None, 0, 0, 0, exactness)
    form = half_plane_form(big_f)
    ine = inertia(form, tol)
    if ine.zeta == 0:
        exactness = Exactness.EXACT if big_f.exact else Exactness.FLOAT_CERTIFIED
        return LineCount(None, None, ine.pi, ine.nu, 0, exactness)
    if not big_f.exact:
        return LineCount(None, None, None, None, ine.zeta, Exactness.FLOAT_HEURISTIC)
    d = poly_gcd(big_f, big_f.conj_coeffs())
    if d.degree != ine.zeta:
        raise InconsistencyError(
            f"kernel dimension {ine.zeta} disagrees with gcd degree {d.degree}")
    mirror = pair_mult_count(d, tol)
    return LineCount(None, None, ine.pi + mirror, ine.nu + mirror, ine.zeta,
                     Exactness.EXACT)


def real_interlace_test(f: Poly, big_f: Poly, tol: float | None = None) -> InterlaceVerdict:
    """Verdict on whether the real roots of f and F strictly alternate."""
    f = require_real(f, "f")
    big_f = require_real(big_f, "F")
    if f.is_zero or big_f.is_zero:
        raise DomainError("cannot test the zero polynomial")
    if f.degree != big_f.degree:
        return InterlaceVerdict(False, None, REASON_DEGREE_MISMATCH)
    d = definiteness(hurwitz_pair_form(f, big_f), tol)
    if d is Definiteness.POSITIVE_DEFINITE:
        return InterlaceVerdict(True, Sign.POSITIVE)
    if d is Definiteness.NEGATIVE_DEFINITE:
        return InterlaceVerdict(True, Sign.NEGATIVE)
    if d is Definiteness.DEGENERATE:
        return InterlaceVerdict(False, None, REASON_DEGENERATE)
    return InterlaceVerdict(False, None, REASON_INDEFINITE)


def derivative_interlace_real(f: Poly, big_f: Poly,
                              tol: float | None = None) -> InterlaceVerdict:
    """Interlacing of real pairs transfers to their derivatives."""
    f = require_real(f, "f")
    big_f = require_real(big_f, "F")
    pre = real_interlace_test(f, big_f, tol)
    if not pre.interlacing:
        raise DomainError("inputs must interlace before the derivative transfer")
    return real_interlace_test(f.derivative(), big_f.derivative(), tol)


def halfplane_count_for(f: Poly, z, tol: float | None = None) -> tuple[int, int]:
    """Side-count of f' - z f against the conjugate-pair count of real f.

    Returns (count of roots on the Im z side of the axis, pair count of f);
    the two agree for every real f and non-real z.
    """
    f = require_real(f)
    if f.is_zero or f.degree < 1:
        raise DomainError("need a nonconstant real polynomial")
    exact_z = isinstance(z, (int, Fraction, GaussianRational))
    if f.exact and not exact_z:
        f = Poly(f.to_complex_list(), exact=False)
    if f.exact:
        zs = z if isinstance(z, GaussianRational) else GaussianRational.of(Fraction(z))
        im = float(zs.im)
        p = f.derivative() - f.scale(zs)
    else:
        zc = complex(z)
        im = zc.imag
        p = f.derivative() - f.scale(zc)
    if im == 0.0:
        raise DomainError("z must have nonzero imaginary part")
    side = count_halfplane(p, tol)
    got = side.upper if im > 0 else side.lower
    if got is None:
        raise InconsistencyError("half-plane count could not be certified")
    return got, pair_mult_count(f, tol)


def halfplane_pair_identity(f: Poly, big_f: Poly, z) -> float:
    """Relative defect of the half-plane pencil identity.

    For real f, F of equal degree and non-real z, the half-plane form of
    f - z F equals -2 Im(z) times the Hurwitz pair form of (f, F).
    """
    f = require_real(f, "f")
    big_f = require_real(big_f, "F")
    if f.degree != big_f.degree:
        raise DomainError("identity requires equal degrees")
    if f.degree < 1:
        raise DomainError("identity needs degree >= 1")
    zc = complex(z)
    if zc.imag == 0.0:
        raise DomainError("z must have nonzero imaginary part")
    n = f.degree
    exact_z = isinstance(z, (int, Fraction, GaussianRational))
    if f.exact and exact_z:
        zs = z if isinstance(z, GaussianRational) else GaussianRational.of(Fraction(z))
        member = f - big_f.scale(zs)
    else:
        if f.exact:
            f = Poly(f.to_complex_list(), exact=False)
            big_f = Poly(big_f.to_complex_list(), exact=False)
        member = f - big_f.scale(zc)
    lhs = half_plane_form(member, formal_degree=n).matrix()
    pair = hurwitz_pair_form(f, big_f)
    rhs = -2.0 * zc.imag * pair.matrix()
    denom = table_max_abs(pair.entries)
    if denom == 0.0:
        raise DomainError("pair form vanishes; defect undefined")
    return float(np.max(np.abs(lhs - rhs)) / denom)
