"""Root tallies relative to the unit circle.

Five routes to the same answer: the recursive quotient-form route for
arbitrary polynomials, two symmetric-only forms whose inertia counts
distinct roots, the derivative route, and the numeric oracle.  Exact mode
resolves multiplicities by gcd recursion; float mode refuses to guess and
labels anything it cannot certify.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError, InconsistencyError, NumericError, UnsupportedModeError
from .forms import krein_form, power_sum_form, schur_cohn_form
from .inertia import inertia
from .oracle import classify_circle, find_roots, tally, tally_distinct, \
    TAG_INSIDE, TAG_ON, TAG_OUTSIDE
from .poly import Poly, adjoint, classify_symmetry, delta, poly_divmod, poly_gcd, \
    symmetrize, SymmetryKind
from .scalars import GaussianRational


class Exactness(Enum):
    EXACT = "Exact"
    FLOAT_CERTIFIED = "FloatCertified"
    FLOAT_HEURISTIC = "FloatHeuristic"


class CountMethod(Enum):
    SCHUR_COHN_RECURSIVE = "SchurCohnRecursive"
    POWER_SUM = "PowerSum"
    KREIN = "Krein"
    COHN_DERIVATIVE = "CohnDerivative"
    ORACLE = "Oracle"


@dataclass(frozen=True)
class CircleCount:
    """Tallies with multiplicity (inside/on/outside) plus the distinct-root
    pair structure when a symmetric method computed it.  None marks a count
    the chosen route could not certify."""

    inside: int | None
    on: int | None
    outside: int | None
    distinct_on: int | None
    distinct_pairs: int | None
    exactness: Exactness
    multiplicities_resolved: bool = True

    def to_json_dict(self) -> dict:
        return {
            "inside": self.inside,
            "on": self.on,
            "outside": self.outside,
            "distinct_on": self.distinct_on,
            "distinct_pairs": self.distinct_pairs,
            "exactness": self.exactness.value,
        }


@dataclass(frozen=True)
class GcdChain:
    chain: tuple[Poly, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(p.degree for p in self.chain)


def _zero_count(exact: bool) -> CircleCount:
    return CircleCount(0, 0, 0, 0, 0,
                       Exactness.EXACT if exact else Exactness.FLOAT_CERTIFIED)


def count_circle(g: Poly, method: CountMethod, tol: float | None = None) -> CircleCount:
    """Classify the roots of g against |x| = 1 by the chosen route."""
    if g.is_zero:
        raise DomainError("cannot count roots of the zero polynomial")
    if g.degree == 0:
        return _zero_count(g.exact)
    if method is CountMethod.ORACLE:
        return _count_oracle(g)
    if method is CountMethod.SCHUR_COHN_RECURSIVE:
        return _count_schur_cohn(g, tol)

    cls = classify_symmetry(g)
    if cls.kind is SymmetryKind.NONE:
        raise DomainError(f"{method.value} requires a symmetric polynomial")
    if cls.kind is not SymmetryKind.SYMMETRIC:
        g = symmetrize(g)
    if method is CountMethod.COHN_DERIVATIVE:
        return _count_cohn(g, tol)
    if method is CountMethod.POWER_SUM:
        form = power_sum_form(g)
    elif method is CountMethod.KREIN:
        form = krein_form(g)
    else:
        raise DomainError(f"unknown counting method {method}")
    return _count_symmetric(g, method, form, tol)


def _count_symmetric(g: Poly, method: CountMethod, form, tol) -> CircleCount:
    n = g.degree
    ine = inertia(form, tol)
    p = ine.pi - ine.nu
    q = ine.nu
    if p < 0:
        raise InconsistencyError("symmetric form with pi < nu")
    if ine.zeta == 0:
        exactness = Exactness.EXACT if g.exact else Exactness.FLOAT_CERTIFIED
        return CircleCount(q, p, q, p, q, exactness)
    if not g.exact:
        return CircleCount(None, None, None, p, q, Exactness.FLOAT_HEURISTIC,
                           multiplicities_resolved=False)
    d = poly_gcd(g, g.derivative())
    if d.degree != ine.zeta:
        raise InconsistencyError(
            f"kernel dimension {ine.zeta} disagrees with gcd degree {d.degree}")
    sub = count_circle(symmetrize(d), method, tol)
    assert sub.inside is not None and sub.on is not None and sub.outside is not None
    total = CircleCount(q + sub.inside, p + sub.on, q + sub.outside, p, q,
                        Exactness.EXACT)
    if total.inside + total.on + total.outside != n:
        raise InconsistencyError("multiplicity recursion lost roots")
    return total


def _count_schur_cohn(g: Poly, tol) -> CircleCount:
    stripped = g.low_zero_count()
    if stripped:
        g = g.shift_down(stripped)
    n = g.degree
    if n == 0:
        exactness = Exactness.EXACT if g.exact else Exactness.FLOAT_CERTIFIED
        return CircleCount(stripped, 0, 0, None, None, exactness)
    form = schur_cohn_form(g)
    ine = inertia(form, tol)
    if ine.zeta == 0:
        exactness = Exactness.EXACT if g.exact else Exactness.FLOAT_CERTIFIED
        return CircleCount(ine.pi + stripped, 0, ine.nu, None, None, exactness)
    if g.exact:
        d = poly_gcd(g, adjoint(g))
        if d.degree != ine.zeta:
            raise InconsistencyError(
                f"kernel dimension {ine.zeta} disagrees with gcd degree {d.degree}")
        sub = count_circle(symmetrize(d), CountMethod.KREIN, tol)
        assert sub.inside is not None and sub.on is not None and sub.outside is not None
        return CircleCount(ine.pi + sub.inside + stripped, sub.on,
                           ine.nu + sub.outside, None, None, Exactness.EXACT)
    cls = classify_symmetry(g)
    if ine.zeta == n and cls.kind is not SymmetryKind.NONE:
        sub = count_circle(g, CountMethod.KREIN, tol)
        if sub.inside is None:
            return CircleCount(None, None, None, sub.distinct_on, sub.distinct_pairs,
                               Exactness.FLOAT_HEURISTIC, multiplicities_resolved=False)
        return CircleCount(sub.inside + stripped, sub.on, sub.outside,
                           sub.distinct_on, sub.distinct_pairs, sub.exactness)
    return CircleCount(None, None, None, None, None, Exactness.FLOAT_HEURISTIC,
                       multiplicities_resolved=False)


def _count_cohn(g: Poly, tol) -> CircleCount:
    """Inside-count of symmetric g from the outside-count of its derivative."""
    n = g.degree
    if g.exact:
        d = poly_gcd(g, g.derivative())
        if d.degree > 0:
            radical = poly_divmod(g, d)[0]
            part_d = _count_cohn(symmetrize(d), tol)
            part_r = _count_cohn(symmetrize(radical), tol)
            assert part_d.inside is not None and part_r.inside is not None
            assert part_d.on is not None and part_r.on is not None
            assert part_d.outside is not None and part_r.outside is not None
            return CircleCount(part_r.inside + part_d.inside,
                               part_r.on + part_d.on,
                               part_r.outside + part_d.outside,
                               None, None, Exactness.EXACT)
    if n == 0:
        exactness = Exactness.EXACT if g.exact else Exactness.FLOAT_CERTIFIED
        return CircleCount(0, 0, 0, None, None, exactness)
    sub = _count_schur_cohn(g.derivative(), tol)
    if sub.outside is None:
        return CircleCount(None, None, None, None, None, Exactness.FLOAT_HEURISTIC,
                           multiplicities_resolved=False)
    inside = sub.outside
    on = n - 2 * inside
    if on < 0:
        raise InconsistencyError("derivative route produced impossible counts")
    return CircleCount(inside, on, inside, None, None, sub.exactness)


def _count_oracle(g: Poly) -> CircleCount:
    rs = classify_circle(find_roots(g))
    full = tally(rs.roots)
    dist = tally_distinct(rs.roots)
    inside = full.get(TAG_INSIDE, 0)
    on = full.get(TAG_ON, 0)
    outside = full.get(TAG_OUTSIDE, 0)
    distinct_on = dist.get(TAG_ON, 0)
    symmetric = classify_symmetry(g).kind is not SymmetryKind.NONE
    distinct_pairs = dist.get(TAG_INSIDE, 0) if symmetric else None
    if g.exact:
        exactness = Exactness.EXACT
    elif all(r.multiplicity == 1 for r in rs.roots):
        exactness = Exactness.FLOAT_CERTIFIED
    else:
        exactness = Exactness.FLOAT_HEURISTIC
    return CircleCount(inside, on, outside, distinct_on, distinct_pairs, exactness)


def _coerce_scale(z, exact: bool) -> Scalar:
    if exact:
        if isinstance(z, GaussianRational):
            return z
        if isinstance(z, (int, Fraction)):
            return GaussianRational.of(Fraction(z))
        raise DomainError("exact mode needs a rational z")
    if isinstance(z, GaussianRational):
        from .scalars import to_complex
        return to_complex(z)
    return complex(z)


def theorem3_count(g: Poly, z, tol: float | None = None) -> tuple[int, int]:
    """Pencil count vs. claim: (count of g_d - z g on the z-side, inside of g).

    For Re z > 0 the first entry counts roots outside the circle; for
    Re z < 0, inside.  The two entries agreeing is the checkable content.
    """
    zc = _coerce_scale(z, g.exact)
    re = float(zc.re) if isinstance(zc, GaussianRational) else zc.real
    if re == 0.0:
        raise DomainError("z must have nonzero real part")
    cls = classify_symmetry(g)
    if cls.kind is SymmetryKind.NONE:
        raise DomainError("theorem-3 counting requires a symmetric polynomial")
    if cls.kind is not SymmetryKind.SYMMETRIC:
        g = symmetrize(g)
    f = delta(g) - g.scale(zc)
    if f.is_zero:
        raise DomainError("degenerate pencil member")
    cf = count_circle(f, CountMethod.SCHUR_COHN_RECURSIVE, tol) if f.degree >= 1 \
        else _zero_count(f.exact)
    cg = count_circle(g, CountMethod.KREIN, tol)
    first = cf.outside if re > 0 else cf.inside
    if first is None or cg.inside is None:
        raise NumericError("pencil count could not be certified in float mode")
    return first, cg.inside


def gcd_chain(g: Poly) -> GcdChain:
    """Repeated gcd-with-derivative, ending at a constant.  Exact mode only."""
    if not g.exact:
        raise UnsupportedModeError("gcd chain requires exact coefficients")
    if g.is_zero:
        raise DomainError("gcd chain of the zero polynomial is undefined")
    chain = [g]
    while chain[-1].degree > 0:
        chain.append(poly_gcd(chain[-1], chain[-1].derivative()))
    return GcdChain(tuple(chain))
