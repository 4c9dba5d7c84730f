"""Ground truth for tests: numeric roots, classification, and generators.

Everything here is deliberately independent of the form machinery, so the
two can disagree only when one of them is wrong.  Roots come from the
companion matrix; multiplicities from clustering (float) or from exact
squarefree decomposition; generators plant roots with known locations and
derive every polynomial from a seed.
"""
from __future__ import annotations

import cmath
import hashlib
import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, NumericError
from .poly import Poly, classify_symmetry, symmetrize, squarefree_decomposition, SymmetryKind
from .scalars import GaussianRational, Scalar, one, to_complex

CIRCLE_RHO = 1e-8
LINE_RHO = 1e-8
RECONSTRUCT_RTOL = 1e-7
CLUSTER_BASE_RADIUS = 1e-6

TAG_INSIDE = "Inside"
TAG_ON = "OnCircle"
TAG_OUTSIDE = "Outside"
TAG_REAL = "Real"
TAG_UPPER = "Upper"
TAG_LOWER = "Lower"


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int
    tag: str | None = None


@dataclass(frozen=True)
class RootSet:
    roots: tuple[Root, ...]
    tolerance: float
    residual: float = 0.0

    @property
    def total(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def retag(self, tags: Sequence[str]) -> "RootSet":
        if len(tags) != len(self.roots):
            raise DomainError("tag count mismatch")
        new = tuple(Root(r.value, r.multiplicity, t) for r, t in zip(self.roots, tags))
        return RootSet(new, self.tolerance, self.residual)


def find_roots(g: Poly) -> RootSet:
    """All roots with multiplicities; reconstruction-residual checked.

    Float mode clusters the companion-matrix roots with a radius that
    escalates tenfold until the clustered root set rebuilds the input
    within 1e-7 relative.  Exact mode gets multiplicities structurally
    from the squarefree decomposition and only the root values are
    numeric.
    """
    if g.is_zero or g.degree < 1:
        raise DomainError("root finding needs degree >= 1")
    if g.exact:
        return _find_roots_exact(g)
    return _find_roots_float(g)


def _find_roots_exact(g: Poly) -> RootSet:
    pieces: list[Root] = []
    for factor, mult in squarefree_decomposition(g):
        fl = Poly(factor.to_complex_list(), exact=False)
        for r in _simple_roots(fl):
            pieces.append(Root(r, mult))
    pieces.sort(key=lambda r: (r.value.real, r.value.imag))
    residual = _reconstruction_residual(Poly(g.to_complex_list(), exact=False), pieces)
    return RootSet(tuple(pieces), tolerance=0.0, residual=residual)


def _find_roots_float(g: Poly) -> RootSet:
    raw = _simple_roots(g)
    best: tuple[float, list[Root]] | None = None
    radius = CLUSTER_BASE_RADIUS
    for _ in range(5):
        clustered = _cluster(raw, radius)
        refined = _refine(g, clustered)
        residual = _reconstruction_residual(g, refined)
        if best is None or residual < best[0]:
            best = (residual, refined)
        if residual <= RECONSTRUCT_RTOL:
            return RootSet(tuple(refined), tolerance=radius, residual=residual)
        radius *= 10.0
    assert best is not None
    residual, refined = best
    if residual > RECONSTRUCT_RTOL:
        raise NumericError(
            f"root recovery residual {residual:.3e} exceeds {RECONSTRUCT_RTOL:.1e}")
    return RootSet(tuple(refined), tolerance=radius, residual=residual)


def _simple_roots(g: Poly) -> list[complex]:
    coeffs = list(reversed(g.to_complex_list()))
    values = [complex(r) for r in np.roots(coeffs)]
    polished = [_newton_polish(g, r, iterations=2) for r in values]
    polished.sort(key=lambda z: (z.real, z.imag))
    return polished


def _newton_polish(p: Poly, x: complex, iterations: int) -> complex:
    dp = p.derivative()
    for _ in range(iterations):
        d = dp(x)
        if abs(d) < 1e-300:
            break
        step = p(x) / d
        nxt = x - step
        if abs(p(nxt)) <= abs(p(x)):
            x = nxt
        else:
            break
    return x


def _cluster(values: list[complex], base_radius: float) -> list[tuple[complex, int]]:
    centers: list[complex] = []
    members: list[list[complex]] = []
    for v in values:
        placed = False
        for idx, c in enumerate(centers):
            if abs(v - c) <= base_radius * (1.0 + abs(v)):
                members[idx].append(v)
                centers[idx] = sum(members[idx]) / len(members[idx])
                placed = True
                break
        if not placed:
            centers.append(v)
            members.append([v])
    return [(centers[idx], len(members[idx])) for idx in range(len(centers))]


def _refine(g: Poly, clustered: list[tuple[complex, int]]) -> list[Root]:
    out = []
    derivs = [g]
    for center, mult in clustered:
        x = center
        if mult > 1:
            while len(derivs) < mult:
                derivs.append(derivs[-1].derivative())
            q = derivs[mult - 1]
            x = _newton_polish(q, x, iterations=30)
        out.append(Root(x, mult))
    out.sort(key=lambda r: (r.value.real, r.value.imag))
    return out


def _reconstruction_residual(g: Poly, roots: Sequence[Root]) -> float:
    acc = Poly([complex(1.0)], exact=False)
    for r in roots:
        factor = Poly([-r.value, complex(1.0)], exact=False)
        for _ in range(r.multiplicity):
            acc = acc * factor
    acc = acc.scale(to_complex(g.lc))
    scale = g.norm_inf()
    worst = 0.0
    for k in range(max(len(acc.coeffs), len(g.coeffs))):
        worst = max(worst, abs(complex(acc.coeff(k)) - to_complex(g.coeff(k))))
    return worst / scale if scale > 0 else worst


def circle_tag(value: complex, rho: float = CIRCLE_RHO) -> str:
    r = abs(value)
    if abs(r - 1.0) <= rho:
        return TAG_ON
    return TAG_INSIDE if r < 1.0 else TAG_OUTSIDE


def line_tag(value: complex, rho: float = LINE_RHO) -> str:
    if abs(value.imag) <= rho * (1.0 + abs(value)):
        return TAG_REAL
    return TAG_UPPER if value.imag > 0 else TAG_LOWER


def classify_circle(rs: RootSet, rho: float = CIRCLE_RHO) -> RootSet:
    return rs.retag([circle_tag(r.value, rho) for r in rs.roots])


def classify_line(rs: RootSet, rho: float = LINE_RHO) -> RootSet:
    return rs.retag([line_tag(r.value, rho) for r in rs.roots])


def tally(roots: Iterable[Root]) -> dict[str, int]:
    """Multiplicity-weighted count per tag."""
    out: dict[str, int] = {}
    for r in roots:
        if r.tag is None:
            raise DomainError("untagged root in tally")
        out[r.tag] = out.get(r.tag, 0) + r.multiplicity
    return out


def tally_distinct(roots: Iterable[Root]) -> dict[str, int]:
    out: dict[str, int] = {}
    for r in roots:
        if r.tag is None:
            raise DomainError("untagged root in tally")
        out[r.tag] = out.get(r.tag, 0) + 1
    return out


@dataclass(frozen=True)
class OracleInterlace:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def oracle_interlace(g: Poly, h: Poly, rho: float = CIRCLE_RHO) -> OracleInterlace:
    """Sorted-angle alternation check; precondition failures come back as
    a reasoned False rather than an exception."""
    if g.degree != h.degree:
        return OracleInterlace(False, "degree mismatch")
    marked = []
    for poly, mark in ((g, "g"), (h, "h")):
        rs = find_roots(poly)
        for r in rs.roots:
            if r.multiplicity != 1:
                return OracleInterlace(False, "multiple root")
            if circle_tag(r.value, rho) != TAG_ON:
                return OracleInterlace(False, "off-circle root")
            marked.append((cmath.phase(r.value) % (2.0 * math.pi), mark))
    marked.sort()
    m = len(marked)
    for idx in range(m):
        if marked[idx][1] == marked[(idx + 1) % m][1]:
            return OracleInterlace(False, "adjacent roots of one polynomial")
    return OracleInterlace(True)


def oracle_interlace_line(f: Poly, big_f: Poly, rho: float = LINE_RHO) -> OracleInterlace:
    if f.degree != big_f.degree:
        return OracleInterlace(False, "degree mismatch")
    marked = []
    for poly, mark in ((f, "f"), (big_f, "F")):
        rs = find_roots(poly)
        for r in rs.roots:
            if r.multiplicity != 1:
                return OracleInterlace(False, "multiple root")
            if line_tag(r.value, rho) != TAG_REAL:
                return OracleInterlace(False, "non-real root")
            marked.append((r.value.real, mark))
    marked.sort()
    for idx in range(len(marked) - 1):
        if marked[idx][1] == marked[idx + 1][1]:
            return OracleInterlace(False, "adjacent roots of one polynomial")
    return OracleInterlace(True)


def child_seed(seed: int, index) -> int:
    """Counter-mode split: independent stream per (seed, index), stable
    across platforms and schedules."""
    digest = hashlib.sha256(f"{seed}/{index}".encode()).hexdigest()
    return int(digest[:16], 16)


class GenKind(Enum):
    SYMMETRIC_BY_STRUCTURE = "SymmetricByStructure"
    INTERLACING_PAIR = "InterlacingPair"
    NON_INTERLACING_PAIR = "NonInterlacingPair"
    REAL_BY_STRUCTURE = "RealByStructure"
    REAL_INTERLACING_PAIR = "RealInterlacingPair"


@dataclass(frozen=True)
class CircleGenParams:
    on_count: int
    pair_count: int
    max_multiplicity: int = 1
    exact: bool = False
    separation: float | None = None
    modulus_low: float = 0.3
    modulus_high: float = 0.9


@dataclass(frozen=True)
class PairGenParams:
    degree: int
    exact: bool = False
    separation: float | None = None


@dataclass(frozen=True)
class RealGenParams:
    real_count: int
    pair_count: int
    max_multiplicity: int = 1
    exact: bool = False
    separation: float | None = None


@dataclass(frozen=True)
class GeneratedCase:
    kind: GenKind
    seed: int
    g: Poly
    h: Poly | None
    roots_g: tuple[Root, ...]
    roots_h: tuple[Root, ...] | None


def generate(kind: GenKind, params, seed: int) -> GeneratedCase:
    rng = random.Random(seed)
    if kind is GenKind.SYMMETRIC_BY_STRUCTURE:
        return _gen_symmetric(params, rng, seed)
    if kind is GenKind.INTERLACING_PAIR:
        return _gen_interlacing_pair(params, rng, seed)
    if kind is GenKind.NON_INTERLACING_PAIR:
        return _gen_non_interlacing_pair(params, rng, seed)
    if kind is GenKind.REAL_BY_STRUCTURE:
        return _gen_real(params, rng, seed)
    if kind is GenKind.REAL_INTERLACING_PAIR:
        return _gen_real_pair(params, rng, seed)
    raise DomainError(f"unknown generator kind {kind}")


def _draw_separated_angles(rng: random.Random, count: int, sep: float,
                           exact: bool) -> list[tuple[float, Scalar]]:
    """Angles with pairwise cyclic gaps >= sep, each paired with its root
    scalar.  Angle 0 counts as occupied, which keeps every draw clear of the
    point 1 and the line bridge nondegenerate.  Exact mode snaps to rational
    circle points first and re-checks the separation on the snapped angles."""
    if count == 0:
        return []
    if (count + 1) * sep > 2.0 * math.pi * 0.8:
        raise DomainError("separation constraint infeasible for this count")

    def _gap_ok(sorted_angles: list[float], bound: float) -> bool:
        padded = [0.0] + sorted_angles
        gaps = [padded[i + 1] - padded[i] for i in range(len(padded) - 1)]
        gaps.append(2.0 * math.pi - padded[-1])
        return min(gaps) >= bound

    for _ in range(500):
        angles = sorted(rng.uniform(0.0, 2.0 * math.pi) for _ in range(count))
        if not _gap_ok(angles, sep):
            continue
        out: list[tuple[float, Scalar]] = []
        for phi in angles:
            if exact:
                pt = _exact_circle_point(phi)
                out.append((cmath.phase(to_complex(pt)) % (2.0 * math.pi), pt))
            else:
                out.append((phi, cmath.exp(1j * phi)))
        if exact and not _gap_ok(sorted(a for a, _ in out), 0.9 * sep):
            continue
        return out
    raise DomainError("could not satisfy angle separation constraints")


def _exact_circle_point(phi: float) -> GaussianRational:
    t = Fraction(math.tan(phi / 2.0)).limit_denominator(10 ** 6)
    den = 1 + t * t
    return GaussianRational((1 - t * t) / den, 2 * t / den)


def _exact_point(z: complex, max_den: int = 10 ** 4) -> GaussianRational:
    return GaussianRational(Fraction(z.real).limit_denominator(max_den),
                            Fraction(z.imag).limit_denominator(max_den))


def _monic_from_roots(root_list: Sequence[tuple[Scalar, int]], exact: bool) -> Poly:
    acc = Poly([one(exact)], exact)
    for value, mult in root_list:
        factor = Poly([-value, one(exact)], exact)
        for _ in range(mult):
            acc = acc * factor
    return acc


def _gen_symmetric(params: CircleGenParams, rng: random.Random, seed: int) -> GeneratedCase:
    mults_on = [rng.randint(1, params.max_multiplicity) for _ in range(params.on_count)]
    mults_pair = [rng.randint(1, params.max_multiplicity) for _ in range(params.pair_count)]
    degree = sum(mults_on) + 2 * sum(mults_pair)
    if degree < 1:
        raise DomainError("empty structure")
    sep = params.separation if params.separation is not None \
        else 2.0 * math.pi / (8.0 * degree)
    on_points = _draw_separated_angles(rng, params.on_count, sep, params.exact)

    roots: list[tuple[Scalar, int]] = []
    planted: list[Root] = []
    for (phi, pt), m in zip(on_points, mults_on):
        roots.append((pt, m))
        planted.append(Root(to_complex(pt), m, TAG_ON))
    for m in mults_pair:
        for _ in range(200):
            modulus = rng.uniform(params.modulus_low, params.modulus_high)
            psi = rng.uniform(0.0, 2.0 * math.pi)
            beta_f = modulus * cmath.exp(1j * psi)
            if params.exact:
                beta = _exact_point(beta_f)
                bf = to_complex(beta)
                if not (0.25 <= abs(bf) <= 0.95):
                    continue
                partner = one(True) / beta.conjugate()
            else:
                beta = beta_f
                partner = 1.0 / beta_f.conjugate()
            break
        else:
            raise DomainError("could not place an off-circle pair")
        roots.append((beta, m))
        roots.append((partner, m))
        planted.append(Root(to_complex(beta), m, TAG_INSIDE))
        planted.append(Root(to_complex(partner), m, TAG_OUTSIDE))

    g = symmetrize(_monic_from_roots(roots, params.exact), tol=1e-8)
    return GeneratedCase(GenKind.SYMMETRIC_BY_STRUCTURE, seed, g, None,
                         tuple(planted), None)


def _on_circle_poly(points: Sequence[tuple[float, Scalar]], exact: bool) -> Poly:
    return symmetrize(_monic_from_roots([(pt, 1) for _, pt in points], exact), tol=1e-8)


def _gen_interlacing_pair(params: PairGenParams, rng: random.Random,
                          seed: int) -> GeneratedCase:
    n = params.degree
    if n < 1:
        raise DomainError("degree must be >= 1")
    sep = params.separation if params.separation is not None \
        else math.pi / (8.0 * n)
    pts = sorted(_draw_separated_angles(rng, 2 * n, sep, params.exact))
    g_pts = pts[0::2]
    h_pts = pts[1::2]
    g = _on_circle_poly(g_pts, params.exact)
    h = _on_circle_poly(h_pts, params.exact)
    rg = tuple(Root(to_complex(pt), 1, TAG_ON) for _, pt in g_pts)
    rh = tuple(Root(to_complex(pt), 1, TAG_ON) for _, pt in h_pts)
    return GeneratedCase(GenKind.INTERLACING_PAIR, seed, g, h, rg, rh)


def _gen_non_interlacing_pair(params: PairGenParams, rng: random.Random,
                              seed: int) -> GeneratedCase:
    n = params.degree
    if n < 2:
        raise DomainError("non-interlacing pairs need degree >= 2")
    mode = rng.choice(("blocked", "off-circle"))
    if mode == "blocked":
        sep = params.separation if params.separation is not None \
            else math.pi / (8.0 * n)
        pts = sorted(_draw_separated_angles(rng, 2 * n, sep, params.exact))
        marks = ["g" if i % 2 == 0 else "h" for i in range(2 * n)]
        marks[1], marks[2] = marks[2], marks[1]
        g_pts = [p for p, m in zip(pts, marks) if m == "g"]
        h_pts = [p for p, m in zip(pts, marks) if m == "h"]
        g = _on_circle_poly(g_pts, params.exact)
        h = _on_circle_poly(h_pts, params.exact)
        rg = tuple(Root(to_complex(pt), 1, TAG_ON) for _, pt in g_pts)
        rh = tuple(Root(to_complex(pt), 1, TAG_ON) for _, pt in h_pts)
        return GeneratedCase(GenKind.NON_INTERLACING_PAIR, seed, g, h, rg, rh)
    inner = _gen_symmetric(CircleGenParams(on_count=n - 2, pair_count=1,
                                           exact=params.exact),
                           rng, seed)
    h_case = _gen_symmetric(CircleGenParams(on_count=n, pair_count=0,
                                            exact=params.exact),
                            rng, seed)
    return GeneratedCase(GenKind.NON_INTERLACING_PAIR, seed, inner.g, h_case.g,
                         inner.roots_g, h_case.roots_g)


def _gen_real(params: RealGenParams, rng: random.Random, seed: int) -> GeneratedCase:
    mults_real = [rng.randint(1, params.max_multiplicity) for _ in range(params.real_count)]
    mults_pair = [rng.randint(1, params.max_multiplicity) for _ in range(params.pair_count)]
    degree = sum(mults_real) + 2 * sum(mults_pair)
    if degree < 1:
        raise DomainError("empty structure")
    sep = params.separation if params.separation is not None else 0.5 / degree
    reals = _draw_separated_reals(rng, params.real_count, sep, params.exact)

    roots: list[tuple[Scalar, int]] = []
    planted: list[Root] = []
    for value, m in zip(reals, mults_real):
        roots.append((value, m))
        planted.append(Root(to_complex(value), m, TAG_REAL))
    exact = params.exact
    for m in mults_pair:
        a = rng.uniform(-2.0, 2.0)
        b = rng.uniform(0.3, 1.5)
        if exact:
            ga = Fraction(a).limit_denominator(10 ** 4)
            gb = Fraction(b).limit_denominator(10 ** 4)
            up = GaussianRational(ga, gb)
            lo = GaussianRational(ga, -gb)
        else:
            up = complex(a, b)
            lo = complex(a, -b)
        roots.append((up, m))
        roots.append((lo, m))
        planted.append(Root(to_complex(up), m, TAG_UPPER))
        planted.append(Root(to_complex(lo), m, TAG_LOWER))

    f = _monic_from_roots(roots, exact)
    f = _force_real_coeffs(f)
    return GeneratedCase(GenKind.REAL_BY_STRUCTURE, seed, f, None, tuple(planted), None)


def _draw_separated_reals(rng: random.Random, count: int, sep: float,
                          exact: bool) -> list[Scalar]:
    if count == 0:
        return []
    if count * sep > 3.5:
        raise DomainError("separation constraint infeasible for this count")
    for _ in range(500):
        values = sorted(rng.uniform(-2.0, 2.0) for _ in range(count))
        if count > 1 and min(values[i + 1] - values[i] for i in range(count - 1)) < sep:
            continue
        if exact:
            snapped = [GaussianRational(Fraction(v).limit_denominator(10 ** 5),
                                        Fraction(0)) for v in values]
            floats = sorted(float(s.re) for s in snapped)
            if count > 1 and min(floats[i + 1] - floats[i]
                                 for i in range(count - 1)) < 0.9 * sep:
                continue
            return list(snapped)
        return [complex(v, 0.0) for v in values]
    raise DomainError("could not satisfy real separation constraints")


def _force_real_coeffs(f: Poly) -> Poly:
    """Strip the imaginary dust left by building a conjugate-closed product."""
    if f.exact:
        assert all(isinstance(c, GaussianRational) and c.im == 0 for c in f.coeffs)
        return f
    return Poly([complex(c.real, 0.0) for c in f.coeffs], exact=False)


def _gen_real_pair(params: PairGenParams, rng: random.Random, seed: int) -> GeneratedCase:
    n = params.degree
    if n < 1:
        raise DomainError("degree must be >= 1")
    sep = params.separation if params.separation is not None else 0.25 / n
    values = _draw_separated_reals(rng, 2 * n, sep, params.exact)
    f_vals = values[0::2]
    big_vals = values[1::2]
    f = _force_real_coeffs(_monic_from_roots([(v, 1) for v in f_vals], params.exact))
    big = _force_real_coeffs(_monic_from_roots([(v, 1) for v in big_vals], params.exact))
    rf = tuple(Root(to_complex(v), 1, TAG_REAL) for v in f_vals)
    rb = tuple(Root(to_complex(v), 1, TAG_REAL) for v in big_vals)
    return GeneratedCase(GenKind.REAL_INTERLACING_PAIR, seed, f, big, rf, rb)
