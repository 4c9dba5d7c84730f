"""Polynomial core: one representation, two scalar modes.

A ``Poly`` stores coefficients ascending by power.  Coefficients are either
all ``complex`` (float mode) or all ``GaussianRational`` (exact mode); the
mode travels with the polynomial and mixed-mode arithmetic is refused.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, UnsupportedModeError
from .scalars import (
    EXACT_I,
    EXACT_ONE,
    GaussianRational,
    Scalar,
    abs2,
    conj,
    from_int,
    is_exact,
    to_complex,
    zero,
)

SYMMETRY_TOL = 1e-10


@dataclass(frozen=True, init=False)
class Poly:
    """Dense univariate polynomial, coefficients ascending, trailing zeros trimmed.

    The zero polynomial is the empty tuple and reports degree -1.
    """

    coeffs: tuple[Scalar, ...]
    exact: bool

    def __init__(self, coeffs: Iterable[Scalar], exact: bool | None = None):
        cs = list(coeffs)
        if exact is None:
            if not cs:
                raise DomainError("cannot infer mode for empty coefficient list")
            exact = is_exact(cs[0])
        for c in cs:
            if is_exact(c) != exact:
                raise DomainError("mixed scalar modes in one polynomial")
        while cs and not _nonzero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "exact", exact)

    @staticmethod
    def from_floats(coeffs: Sequence[complex | float | int]) -> "Poly":
        return Poly([complex(c) for c in coeffs], exact=False)

    @staticmethod
    def from_rationals(coeffs: Sequence) -> "Poly":
        out = []
        for c in coeffs:
            if isinstance(c, GaussianRational):
                out.append(c)
            else:
                out.append(GaussianRational.of(Fraction(c)))
        return Poly(out, exact=True)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Scalar:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return zero(self.exact)

    def __add__(self, other: "Poly") -> "Poly":
        self._check_mode(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(n)], self.exact)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_mode(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(k) - other.coeff(k) for k in range(n)], self.exact)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.exact)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_mode(other)
        if self.is_zero or other.is_zero:
            return Poly([], self.exact)
        out = [zero(self.exact)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not _nonzero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.exact)

    def scale(self, c: Scalar) -> "Poly":
        return Poly([a * c for a in self.coeffs], self.exact)

    def derivative(self) -> "Poly":
        return Poly([self.coeffs[k] * k for k in range(1, len(self.coeffs))], self.exact)

    def conj_coeffs(self) -> "Poly":
        return Poly([conj(c) for c in self.coeffs], self.exact)

    def monic(self) -> "Poly":
        if self.is_zero:
            raise DomainError("cannot normalize the zero polynomial")
        return Poly([c / self.lc for c in self.coeffs], self.exact)

    def shift_down(self, m: int) -> "Poly":
        """Divide by x^m; requires the low m coefficients to be zero."""
        if any(_nonzero(c) for c in self.coeffs[:m]):
            raise DomainError("polynomial not divisible by x^m")
        return Poly(self.coeffs[m:], self.exact)

    def low_zero_count(self) -> int:
        m = 0
        while m < len(self.coeffs) and not _nonzero(self.coeffs[m]):
            m += 1
        return m

    def __call__(self, x):
        if self.is_zero:
            return zero(self.exact) if self.exact and not isinstance(x, complex) else 0j
        if self.exact and isinstance(x, complex):
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * x + to_complex(c)
            return acc
        acc = zero(self.exact)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_complex_list(self) -> list[complex]:
        return [to_complex(c) for c in self.coeffs]

    def norm_inf(self) -> float:
        if self.is_zero:
            return 0.0
        return max(math.sqrt(abs2(c)) for c in self.coeffs)

    def _check_mode(self, other: "Poly") -> None:
        if self.exact != other.exact:
            raise DomainError("mixed scalar modes between polynomials")

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        from .scalars import format_scalar

        parts = []
        for k, c in enumerate(self.coeffs):
            if not _nonzero(c):
                continue
            term = format_scalar(c)
            if k == 1:
                term = f"({term})*x"
            elif k > 1:
                term = f"({term})*x^{k}"
            parts.append(term)
        return " + ".join(parts)


def _nonzero(c: Scalar) -> bool:
    if isinstance(c, GaussianRational):
        return bool(c)
    return c != 0


class SymmetryKind(Enum):
    SYMMETRIC = "Symmetric"
    SKEW_SYMMETRIC = "SkewSymmetric"
    UNIMODULAR_SYMMETRIC = "UnimodularSymmetric"
    NONE = "None"


@dataclass(frozen=True)
class SymmetryClass:
    kind: SymmetryKind
    theta: float | None = None


def adjoint(g: Poly, formal_degree: int | None = None) -> Poly:
    """Reverse-conjugate g: coefficient k becomes conj(a_{m-k}).

    m defaults to the degree of g.  Passing a larger formal degree pads the
    reversal with zeros at the low end, which the section-identity checks
    need when a pencil member drops degree.
    """
    if g.is_zero:
        raise DomainError("adjoint of the zero polynomial is undefined")
    m = g.degree if formal_degree is None else formal_degree
    if m < g.degree:
        raise DomainError("formal degree below actual degree")
    return Poly([conj(g.coeff(m - k)) for k in range(m + 1)], g.exact)


def classify_symmetry(g: Poly, tol: float = SYMMETRY_TOL) -> SymmetryClass:
    """Decide whether g equals, or can be rotated into, its own adjoint.

    Float mode compares coefficientwise against tol * max|a_k|; exact mode
    compares exactly and ignores tol.  The rotation angle theta (reported
    only for UnimodularSymmetric) is the principal half-argument of
    conj(a_n)/a_0.
    """
    if g.is_zero:
        raise DomainError("cannot classify the zero polynomial")
    n = g.degree
    a = g.coeffs
    if g.exact:
        if all(a[k] == conj(a[n - k]) for k in range(n + 1)):
            return SymmetryClass(SymmetryKind.SYMMETRIC)
        if all(a[k] == -conj(a[n - k]) for k in range(n + 1)):
            return SymmetryClass(SymmetryKind.SKEW_SYMMETRIC)
        if not a[0]:
            return SymmetryClass(SymmetryKind.NONE)
        u = conj(a[n]) / a[0]
        if u * conj(u) != EXACT_ONE or any(u * a[k] != conj(a[n - k]) for k in range(n + 1)):
            return SymmetryClass(SymmetryKind.NONE)
        theta = math.atan2(float(u.im), float(u.re)) / 2.0
        return SymmetryClass(SymmetryKind.UNIMODULAR_SYMMETRIC, theta)
    scale = max(abs(c) for c in a)
    bound = tol * scale
    if all(abs(a[k] - conj(a[n - k])) <= bound for k in range(n + 1)):
        return SymmetryClass(SymmetryKind.SYMMETRIC)
    if all(abs(a[k] + conj(a[n - k])) <= bound for k in range(n + 1)):
        return SymmetryClass(SymmetryKind.SKEW_SYMMETRIC)
    if abs(a[0]) <= bound:
        return SymmetryClass(SymmetryKind.NONE)
    u = conj(a[n]) / a[0]
    if abs(abs(u) - 1.0) > tol:
        return SymmetryClass(SymmetryKind.NONE)
    if any(abs(u * a[k] - conj(a[n - k])) > bound for k in range(n + 1)):
        return SymmetryClass(SymmetryKind.NONE)
    theta = cmath.phase(u) / 2.0
    return SymmetryClass(SymmetryKind.UNIMODULAR_SYMMETRIC, theta)


def symmetrize(g: Poly, tol: float = SYMMETRY_TOL) -> Poly:
    """Rotate g onto the symmetric subspace (roots unchanged).

    SkewSymmetric inputs are multiplied by i.  UnimodularSymmetric inputs
    are rotated by e^{i theta} in float mode; exact mode multiplies by
    1 + u (or by i when u = -1), a Gaussian-rational constant whose phase
    is the same half-argument.  Float outputs are projected onto exact
    coefficient symmetry to absorb rotation roundoff.
    """
    cls = classify_symmetry(g, tol)
    if cls.kind is SymmetryKind.SYMMETRIC:
        return g
    if cls.kind is SymmetryKind.NONE:
        raise DomainError("polynomial admits no symmetric rotation")
    if g.exact:
        if cls.kind is SymmetryKind.SKEW_SYMMETRIC:
            return g.scale(EXACT_I)
        u = conj(g.coeffs[-1]) / g.coeffs[0]
        c = EXACT_I if u == GaussianRational.of(-1) else EXACT_ONE + u
        return g.scale(c)
    if cls.kind is SymmetryKind.SKEW_SYMMETRIC:
        rotated = g.scale(1j)
    else:
        rotated = g.scale(cmath.exp(1j * (cls.theta or 0.0)))
    n = rotated.degree
    b = rotated.coeffs
    projected = [(b[k] + conj(b[n - k])) / 2 for k in range(n + 1)]
    return Poly(projected, exact=False)


def delta(g: Poly) -> Poly:
    """The circle companion of the derivative: (n/2) g - x g'.

    Coefficient k is simply (n/2 - k) a_k.  For Symmetric g the result is
    SkewSymmetric and keeps degree n (its leading coefficient is
    -(n/2) a_n).
    """
    if g.is_zero:
        return g
    n = g.degree
    if g.exact:
        half = Fraction(n, 2)
        return Poly([g.coeffs[k] * (half - k) for k in range(n + 1)], True)
    half_f = n / 2.0
    return Poly([g.coeffs[k] * (half_f - k) for k in range(n + 1)], False)


def power_sums(g: Poly, count: int):
    """First `count` power sums s_0..s_{count-1} of the roots of g.

    Newton's identities on the monic normalization; s_0 = n.  No root
    extraction happens here, so exact mode stays exact.
    """
    if g.is_zero:
        raise DomainError("power sums of the zero polynomial are undefined")
    if count < 1:
        raise DomainError("count must be >= 1")
    n = g.degree
    c = [ck / g.lc for ck in g.coeffs]
    s: list[Scalar] = [from_int(n, g.exact)]
    for k in range(1, count):
        acc = zero(g.exact)
        for i in range(1, min(k - 1, n) + 1):
            acc = acc + c[n - i] * s[k - i]
        if k <= n:
            acc = acc + c[n - k] * k
        s.append(-acc)
    return s


def circle_trace(g: Poly, phi: float, derivative: bool = False):
    """Evaluate G(phi) = e^{-n i phi / 2} g(e^{i phi}); real for Symmetric g.

    With derivative=True, also return G'(phi), computed through the delta
    polynomial as -i e^{-n i phi / 2} g_delta(e^{i phi}).
    """
    if g.is_zero:
        raise DomainError("trace of the zero polynomial is undefined")
    n = g.degree
    w = cmath.exp(1j * phi)
    pref = cmath.exp(-1j * n * phi / 2.0)
    val = pref * g(w)
    if not derivative:
        return val
    dval = -1j * pref * delta(g)(w)
    return val, dval


def mobius_to_real(g: Poly, tol: float = SYMMETRY_TOL) -> Poly:
    """Pull a Symmetric circle polynomial back to the real line.

    Returns f(x) = (x - i)^n g((x + i)/(x - i)), which has real
    coefficients; its real roots correspond to the unit-circle roots of g
    and its conjugate pairs to the inversion-symmetric pairs.  Requires
    g(1) != 0 so the degree does not drop.
    """
    cls = classify_symmetry(g, tol)
    if cls.kind is not SymmetryKind.SYMMETRIC:
        raise DomainError("mobius bridge requires a Symmetric polynomial")
    n = g.degree
    one_ = from_int(1, g.exact)
    i_ = EXACT_I if g.exact else 1j
    plus = Poly([i_, one_], g.exact)
    minus = Poly([-i_, one_], g.exact)
    plus_pow = [Poly([one_], g.exact)]
    minus_pow = [Poly([one_], g.exact)]
    for _ in range(n):
        plus_pow.append(plus_pow[-1] * plus)
        minus_pow.append(minus_pow[-1] * minus)
    acc = Poly([], g.exact)
    for k in range(n + 1):
        acc = acc + (plus_pow[k] * minus_pow[n - k]).scale(g.coeffs[k])
    if acc.degree < n:
        raise DomainError("g(1) = 0: bridge image would drop degree")
    if g.exact:
        if any(c.im != 0 for c in acc.coeffs):
            raise DomainError("bridge image unexpectedly non-real")
        return Poly([GaussianRational(c.re, Fraction(0)) for c in acc.coeffs], True)
    scale = acc.norm_inf()
    if any(abs(c.imag) > tol * scale for c in acc.coeffs):
        raise DomainError("bridge image unexpectedly non-real")
    return Poly([complex(c.real, 0.0) for c in acc.coeffs], False)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Exact-mode euclidean division; float division is refused."""
    if not (a.exact and b.exact):
        raise UnsupportedModeError("polynomial division requires exact coefficients")
    if b.is_zero:
        raise DomainError("division by the zero polynomial")
    rem = list(a.coeffs)
    db, lcb = b.degree, b.lc
    if a.degree < db:
        return Poly([], True), a
    q = [zero(True)] * (a.degree - db + 1)
    for k in range(a.degree - db, -1, -1):
        factor = rem[k + db] / lcb
        q[k] = factor
        if factor:
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - factor * b.coeffs[j]
    return Poly(q, True), Poly(rem[:db], True)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the Gaussian rationals."""
    if not (a.exact and b.exact):
        raise UnsupportedModeError("gcd requires exact coefficients")
    if a.is_zero and b.is_zero:
        raise DomainError("gcd(0, 0) is undefined")
    x, y = a, b
    while not y.is_zero:
        x, y = y, poly_divmod(x, y)[1]
    return x.monic()


def squarefree_decomposition(g: Poly) -> list[tuple[Poly, int]]:
    """Yun decomposition g = lc * prod f_i^i with monic squarefree f_i.

    Exact mode only.  Factors are pairwise coprime and returned with their
    multiplicities ascending.
    """
    if not g.exact:
        raise UnsupportedModeError("squarefree decomposition requires exact coefficients")
    if g.is_zero:
        raise DomainError("cannot decompose the zero polynomial")
    f = g.monic()
    if f.degree == 0:
        return []
    d = poly_gcd(f, f.derivative())
    if d.degree == 0:
        return [(f, 1)]
    u = poly_divmod(f, d)[0]
    v = poly_divmod(f.derivative(), d)[0]
    out: list[tuple[Poly, int]] = []
    k = 1
    while u.degree > 0:
        w = v - u.derivative()
        h = poly_gcd(u, w)
        if h.degree > 0:
            out.append((h, k))
        u = poly_divmod(u, h)[0]
        v = poly_divmod(w, h)[0]
        k += 1
    return out
