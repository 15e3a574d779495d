"""Real inflection points and the projective map to Hesse normal form.

For a non-singular real cubic with two components the three real
inflection points lie on one line; that line and the three inflectional
tangents are four lines in general position, so there is a unique
projective map sending them to ``x + y + z = 0`` and the Hesse tangents
``kx + y + z``, ``x + ky + z``, ``x + y + kz``. Its pullback of the cubic is
a multiple of ``x^3 + y^3 + z^3 - 3k xyz``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from .cubic import CubicError, TernaryCubic, det_of_linear_forms

ROOT_TOL = 1e-12
VERIFY_TOL = 1e-8

# Hesse-frame inflection points and the tangent lines there, in matching order
HESSE_POINTS = ((0.0, 1.0, -1.0), (-1.0, 0.0, 1.0), (1.0, -1.0, 0.0))


def hesse_tangents(k: float) -> np.ndarray:
    return np.array([[k, 1.0, 1.0], [1.0, k, 1.0], [1.0, 1.0, k]])


def _normalized(v) -> tuple[float, float, float]:
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("all homogeneous coordinates are zero")
    v = v / norm
    # coordinates at round-off level count as zero for the sign convention
    first = next(c for c in v if abs(c) > 1e-12)
    if first < 0:
        v = -v
    return tuple(float(c) for c in v)


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[float, float, float]

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalized(self.coords))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.coords, dtype=dtype)

    def same_as(self, other, tol: float = 1e-9) -> bool:
        """Projective equality (sign-blind, so robust to the sign convention)."""
        o = np.asarray(_normalized(other))
        a = np.asarray(self.coords)
        return min(np.linalg.norm(a - o), np.linalg.norm(a + o)) <= tol


class ProjectiveLine(ProjectivePoint):
    """Line {p : coords . p = 0}; same normalisation as points."""


@dataclass(frozen=True)
class ProjectiveTransform:
    """X = L x, from Hesse-frame coordinates x to pencil coordinates X."""

    matrix: np.ndarray
    k: float
    verify_deviation: float

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    @property
    def condition(self) -> float:
        return float(np.linalg.cond(self.matrix))


def hessian_cubic(c: TernaryCubic) -> TernaryCubic:
    """det of the matrix of second partials (entries are linear forms)."""
    F = c.tensor()
    forms = [[tuple(6 * F[i][j][k] for k in range(3)) for j in range(3)] for i in range(3)]
    return det_of_linear_forms(forms)


def _exact(c: TernaryCubic) -> TernaryCubic:
    return TernaryCubic(tuple(Fraction(v) for v in c.coeffs))


def _scaled_residual(c: TernaryCubic, p) -> float:
    scale = max(abs(float(v)) for v in c.coeffs) * np.linalg.norm(p) ** 3
    return abs(float(c(*p))) / scale if scale else 0.0


def _newton_2d(f: TernaryCubic, h: TernaryCubic, x: float, y: float, iters: int = 30):
    for _ in range(iters):
        p = (x, y, 1.0)
        fv, hv = f(*p), h(*p)
        gf, gh = f.gradient(p), h.gradient(p)
        jac = np.array([[gf[0], gf[1]], [gh[0], gh[1]]])
        try:
            dx, dy = np.linalg.solve(jac, [-fv, -hv])
        except np.linalg.LinAlgError:
            break
        x, y = x + dx, y + dy
        if abs(dx) + abs(dy) <= 1e-16 * (1 + abs(x) + abs(y)):
            break
    return x, y


def _candidates_in_chart(g: TernaryCubic, hg: TernaryCubic):
    """Real common zeros of g and its Hessian in the affine chart z = 1."""
    X, Y = sympy.symbols("x y")
    gx = sympy.expand(g(X, Y, sympy.Integer(1)))
    hx = sympy.expand(hg(X, Y, sympy.Integer(1)))
    if sympy.Poly(gx, Y).degree() != 3 or sympy.Poly(hx, Y).degree() != 3:
        return None
    res = sympy.Poly(sympy.resultant(gx, hx, Y), X)
    if res.degree() != 9:
        return None
    sqf = res.sqf_part()
    if sqf.degree() != 9:
        # repeated x-coordinates: chart is not generic enough
        return None
    gf, hf = g.to_float(), hg.to_float()
    out = []
    for (lo, hi), _ in sqf.intervals(eps=Fraction(1, 10**15)):
        x0 = float((Fraction(lo) + Fraction(hi)) / 2)
        # coefficients of g(x0, y, 1) as a cubic in y
        ypoly = sympy.Poly(gx.subs(X, sympy.Float(x0, 30)), Y).all_coeffs()
        ycoef = [float(v) for v in ypoly]
        best = None
        for yr in np.roots(ycoef):
            if abs(yr.imag) > 1e-6 * max(1.0, abs(yr)):
                continue
            val = abs(hf(x0, yr.real, 1.0))
            if best is None or val < best[0]:
                best = (val, yr.real)
        if best is None:
            continue
        x1, y1 = _newton_2d(gf, hf, x0, best[1])
        out.append((x1, y1, 1.0))
    return out


def real_inflections(c: TernaryCubic, seed: int = 0, tol: float = ROOT_TOL) -> list[ProjectivePoint]:
    """The three real inflection points of a non-singular real cubic.

    The cubic is first moved by a random unimodular-ish integer change of
    coordinates so that no inflection point sits at infinity and x-projections
    are distinct, then f = 0 and Hess f = 0 are intersected via a resultant.
    """
    ce = _exact(c)
    cf = c.to_float()
    hf = hessian_cubic(cf)
    rng = random.Random(seed)
    for _ in range(12):
        G = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if abs(np.linalg.det(np.array(G, dtype=float))) < 0.5:
            continue
        g = ce.pullback(G)
        pts = _candidates_in_chart(g, hessian_cubic(g))
        if pts is None:
            continue
        good = []
        for p in pts:
            q = np.array(G, dtype=float) @ np.array(p)
            if _scaled_residual(cf, q) < tol and _scaled_residual(hf, q) < tol:
                good.append(ProjectivePoint(q))
        if len(good) == 3:
            m = np.array([pt.coords for pt in good])
            if abs(np.linalg.det(m)) > 1e-10:
                raise CubicError("INFLECTION_FAILURE", "real inflection points are not collinear")
            return good
    raise CubicError("INFLECTION_FAILURE", "could not isolate three real inflection points")


def tangent_at(c: TernaryCubic, p) -> ProjectiveLine:
    p = np.asarray(p, dtype=float)
    cf = c.to_float()
    if _scaled_residual(cf, p) > 1e-9:
        raise CubicError("NOT_ON_CURVE", f"point {tuple(p)} is not on the cubic")
    g = np.array(cf.gradient(tuple(p)), dtype=float)
    scale = max(abs(v) for v in cf.coeffs) * np.linalg.norm(p) ** 2
    if np.linalg.norm(g) <= 1e-12 * scale:
        raise CubicError("SINGULAR_POINT", f"gradient vanishes at {tuple(p)}")
    return ProjectiveLine(g)


def inflection_line(points) -> ProjectiveLine:
    m = np.array([np.asarray(p, dtype=float) for p in points])
    _, _, vt = np.linalg.svd(m)
    return ProjectiveLine(vt[-1])


def _four_line_map(src, dst) -> np.ndarray:
    """P with P src[i] ~ dst[i] (i = 1..3) and P src[0] = dst[0] exactly."""
    A = np.column_stack(src[1:])
    B = np.column_stack(dst[1:])
    ca = np.linalg.solve(A, src[0])
    db = np.linalg.solve(B, dst[0])
    return B @ np.diag(db / ca) @ np.linalg.inv(A)


def to_hesse(c: TernaryCubic, k: float, inflections, tangents,
             tol: float = VERIFY_TOL) -> ProjectiveTransform:
    """Matrix L with c(L x) equal to x^3 + y^3 + z^3 - 3k xyz.

    ``tangents[i]`` must be the tangent at ``inflections[i]``; the i-th pair is
    sent to the i-th Hesse inflection point.
    """
    if not k > 1:
        raise CubicError("SINGULAR", f"Hesse parameter k={k} does not describe a two-component curve")
    src = [np.asarray(inflection_line(inflections).coords)] + \
          [np.asarray(t, dtype=float) for t in tangents]
    dst = [np.ones(3)] + list(hesse_tangents(k))
    # a line a.X = 0 pulls back to (L^T a).x = 0
    L = _four_line_map(src, dst).T
    target = np.array(TernaryCubic.hesse(float(k)).coeffs)
    pulled = np.array(c.to_float().pullback(L).coeffs)
    lam = float(pulled @ target / (target @ target))
    if lam == 0:
        raise CubicError("VERIFY_FAILED", "pullback vanishes")
    L = L / np.cbrt(lam)
    pulled = np.array(c.to_float().pullback(L).coeffs)
    deviation = float(np.max(np.abs(pulled - target)) / np.max(np.abs(target)))
    if deviation > tol:
        raise CubicError("VERIFY_FAILED",
                         f"pullback deviates from Hesse form by {deviation:.3e} (tolerance {tol:g})")
    return ProjectiveTransform(L, float(k), deviation)


def preimage_unit(L) -> tuple[float, float, float]:
    """Pencil coordinates of the Hesse-frame point (1:1:1), unit norm."""
    m = L.matrix if isinstance(L, ProjectiveTransform) else np.asarray(L, dtype=float)
    v = m @ np.ones(3)
    return tuple(float(a) for a in v / np.linalg.norm(v))


def normalize_to_hesse(c: TernaryCubic, k: float, seed: int = 0):
    """Inflections, tangents and transform in one call."""
    pts = real_inflections(c, seed=seed)
    tans = [tangent_at(c, p.coords) for p in pts]
    return pts, tans, to_hesse(c, k, [p.coords for p in pts], [t.coords for t in tans])
