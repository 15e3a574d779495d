"""Ternary cubic forms and their classical invariants.

Coefficients are stored against the monomials in ``MONOMIALS`` order::

    x^3, y^3, z^3, x^2y, x^2z, xy^2, y^2z, xz^2, yz^2, xyz

S and T are the Aronhold invariants normalised so that on the Hesse cubic
``x^3 + y^3 + z^3 - 3k xyz``::

    S = -k/2 - k^4/16,   T = 1 + 5k^3/2 - k^6/8.

The discriminant is reported with the sign that makes it positive exactly
when the real curve has two connected components::

    delta = -((4S)^3 + T^2)            (= (k^3 - 1)^3 on the Hesse family)

and the modulus is ``J = (4S)^3 / ((4S)^3 + T^2)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

import numpy as np

from ._aronhold import S_TERMS, T_TERMS

MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1),
    (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1),
)
_MONO_INDEX = {e: i for i, e in enumerate(MONOMIALS)}
_MULTINOMIAL = tuple(factorial(3) // (factorial(a) * factorial(b) * factorial(c))
                     for a, b, c in MONOMIALS)

_S_TABLE = tuple((Fraction(p, q), idx) for p, q, idx in S_TERMS)
_T_TABLE = tuple((Fraction(p, q), idx) for p, q, idx in T_TERMS)
_S_TABLE_F = tuple((p / q, idx) for p, q, idx in S_TERMS)
_T_TABLE_F = tuple((p / q, idx) for p, q, idx in T_TERMS)


class CubicError(ValueError):
    """Raised with a short machine-readable ``code`` (ZERO_CUBIC, SINGULAR, ...)."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


def _is_exact(values) -> bool:
    return all(isinstance(v, (Fraction, int)) for v in values)


@dataclass(frozen=True)
class TernaryCubic:
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 10:
            raise ValueError("a ternary cubic has ten coefficients")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_dict(cls, terms: dict[tuple[int, int, int], object]) -> "TernaryCubic":
        zero = Fraction(0) if _is_exact(terms.values()) else 0.0
        c = [zero] * 10
        for e, v in terms.items():
            c[_MONO_INDEX[tuple(e)]] += v
        return cls(tuple(c))

    @classmethod
    def hesse(cls, k) -> "TernaryCubic":
        one = Fraction(1) if isinstance(k, (Fraction, int)) else 1.0
        zero = one * 0
        return cls((one, one, one) + (zero,) * 6 + (-3 * k,))

    @property
    def exact(self) -> bool:
        return _is_exact(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_float(self) -> "TernaryCubic":
        return TernaryCubic(tuple(float(c) for c in self.coeffs))

    def __call__(self, x, y, z):
        return sum(c * x**a * y**b * z**d for c, (a, b, d) in zip(self.coeffs, MONOMIALS))

    def gradient(self, p: Sequence) -> tuple:
        x, y, z = p
        g = [0, 0, 0]
        for c, (a, b, d) in zip(self.coeffs, MONOMIALS):
            if a:
                g[0] += c * a * x**(a - 1) * y**b * z**d
            if b:
                g[1] += c * b * x**a * y**(b - 1) * z**d
            if d:
                g[2] += c * d * x**a * y**b * z**(d - 1)
        return tuple(g)

    def tensor(self) -> list:
        """Symmetric 3x3x3 array F with f = sum F[i][j][k] x_i x_j x_k."""
        t = [[[None] * 3 for _ in range(3)] for _ in range(3)]
        exact = self.exact
        for i, j, k in itertools.product(range(3), repeat=3):
            e = [0, 0, 0]
            for a in (i, j, k):
                e[a] += 1
            idx = _MONO_INDEX[tuple(e)]
            c = Fraction(self.coeffs[idx]) if exact else float(self.coeffs[idx])
            t[i][j][k] = c / _MULTINOMIAL[idx]
        return t

    def pullback(self, L) -> "TernaryCubic":
        """The cubic x -> f(L x) for a 3x3 matrix L (nested sequence or array)."""
        L = [[L[a][b] for b in range(3)] for a in range(3)]
        F = self.tensor()
        out = []
        for idx, e in enumerate(MONOMIALS):
            abc = [a for a in range(3) for _ in range(e[a])]
            total = 0
            for i, j, k in itertools.product(range(3), repeat=3):
                f = F[i][j][k]
                if f:
                    total += f * L[i][abc[0]] * L[j][abc[1]] * L[k][abc[2]]
            out.append(total * _MULTINOMIAL[idx])
        return TernaryCubic(tuple(out))


def linear_form_product(*forms) -> TernaryCubic:
    """Product of three linear forms given as coefficient triples."""
    exact = _is_exact([c for f in forms for c in f])
    c = [Fraction(0) if exact else 0.0] * 10
    for i, j, k in itertools.product(range(3), repeat=3):
        v = forms[0][i] * forms[1][j] * forms[2][k]
        if v:
            e = [0, 0, 0]
            for a in (i, j, k):
                e[a] += 1
            c[_MONO_INDEX[tuple(e)]] += v
    return TernaryCubic(tuple(c))


def det_of_linear_forms(m) -> TernaryCubic:
    """Determinant of a 3x3 matrix whose entries are linear forms."""
    exact = _is_exact([c for row in m for f in row for c in f])
    acc = [Fraction(0) if exact else 0.0] * 10
    for perm in itertools.permutations(range(3)):
        inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b])
        sign = -1 if inversions % 2 else 1
        term = linear_form_product(*(m[a][perm[a]] for a in range(3)))
        acc = [x + sign * y for x, y in zip(acc, term.coeffs)]
    return TernaryCubic(tuple(acc))


def determinant_cubic(pencil) -> TernaryCubic:
    """det of the Gram-velocity pencil as a cubic in its free variables."""
    cubic = det_of_linear_forms(pencil.matrix_forms())
    if cubic.is_zero:
        raise CubicError("ZERO_CUBIC", "determinant of the pencil vanishes identically")
    return cubic


def _evaluate(table_exact, table_float, cubic: TernaryCubic):
    if cubic.exact:
        c = [Fraction(v) for v in cubic.coeffs]
        table = table_exact
        total = Fraction(0)
    else:
        c = [float(v) for v in cubic.coeffs]
        table = table_float
        total = 0.0
    for coef, idx in table:
        term = coef
        for i in idx:
            term = term * c[i]
            if not term:
                break
        total += term
    return total


def aronhold_S(cubic: TernaryCubic):
    return _evaluate(_S_TABLE, _S_TABLE_F, cubic)


def aronhold_T(cubic: TernaryCubic):
    return _evaluate(_T_TABLE, _T_TABLE_F, cubic)


def discriminant(S, T):
    """-((4S)^3 + T^2); positive iff the real curve has two components."""
    return -((4 * S) ** 3 + T**2)


def discriminant_sign(delta, S=None, T=None, rtol: float = 1e-12) -> int:
    if isinstance(delta, (Fraction, int)):
        return (delta > 0) - (delta < 0)
    scale = abs(64 * S**3) + T**2 if S is not None else 1.0
    if abs(delta) <= rtol * scale:
        return 0
    return 1 if delta > 0 else -1


def modulus_J(S, T):
    denom = (4 * S) ** 3 + T**2
    if denom == 0:
        raise CubicError("SINGULAR", "discriminant vanishes, modulus undefined")
    return (4 * S) ** 3 / denom


def hesse_S(k):
    return -k / 2 - k**4 / 16


def hesse_T(k):
    return 1 + Fraction(5, 2) * k**3 - k**6 / 8 if isinstance(k, (Fraction, int)) \
        else 1 + 2.5 * k**3 - k**6 / 8


def hesse_J(k):
    return k**3 * (k**3 + 8) ** 3 / (64 * (k**3 - 1) ** 3)


def modulus_quartic(J) -> list:
    """Coefficients (highest first) of u(u+8)^3 - 64 J (u-1)^3 in u = k^3."""
    return [1, 24 - 64 * J, 192 + 192 * J, 512 - 192 * J, 64 * J]


def _polyval(coeffs, u):
    acc = 0
    for c in coeffs:
        acc = acc * u + c
    return acc


@dataclass(frozen=True)
class HesseParameter:
    k: float
    candidates: tuple[float, float]
    interval: tuple[float, float] | None = None
    merged_roots: bool = False


def _real_quartic_roots(J: float, merge_tol: float = 1e-8) -> tuple[list[float], bool]:
    coeffs = [float(c) for c in modulus_quartic(J)]
    dcoeffs = [4 * coeffs[0], 3 * coeffs[1], 2 * coeffs[2], coeffs[3]]
    roots = []
    for r in np.roots(coeffs):
        if abs(r.imag) > 1e-6 * max(1.0, abs(r)):
            continue
        u = r.real
        for _ in range(50):
            d = _polyval(dcoeffs, u)
            if d == 0:
                break
            step = _polyval(coeffs, u) / d
            u -= step
            if abs(step) <= 1e-15 * max(1.0, abs(u)):
                break
        roots.append(u)
    roots.sort()
    merged: list[float] = []
    flagged = False
    for u in roots:
        if merged and abs(u - merged[-1]) <= merge_tol * max(1.0, abs(u)):
            flagged = True
            continue
        merged.append(u)
    return merged, flagged


def _certify(J, u: float) -> tuple[float, float] | None:
    """Exact sign-change bracket of the modulus quartic around u, if J is rational."""
    if not isinstance(J, (Fraction, int)):
        return None
    coeffs = modulus_quartic(Fraction(J))
    delta = 1e-10 * max(1.0, abs(u))
    for _ in range(8):
        lo, hi = Fraction(u - delta), Fraction(u + delta)
        if _polyval(coeffs, lo) * _polyval(coeffs, hi) < 0:
            return float(np.cbrt(float(lo))), float(np.cbrt(float(hi)))
        delta *= 10
    return None


def _sign(v, tol=0.0) -> int:
    if abs(v) <= tol:
        return 0
    return 1 if v > 0 else -1


def hesse_parameter(S, T, J=None) -> HesseParameter:
    """The real Hesse parameter k of a non-singular cubic with invariants S, T.

    The modulus equation has two real solutions k1, k2 (related by
    k -> (k+2)/(k-1)); the one whose T(k) has the sign of T is the real
    normal form (sign of S when T = 0).
    """
    denom = (4 * S) ** 3 + T**2
    if denom == 0:
        raise CubicError("SINGULAR", "discriminant vanishes")
    if J is None:
        J = modulus_J(S, T)
    merged = False
    if T == 0:
        cands = [1 - math.sqrt(3), 1 + math.sqrt(3)]
    else:
        us, merged = _real_quartic_roots(float(J))
        cands = [float(np.cbrt(u)) for u in us]
    if len(cands) != 2:
        raise CubicError("NO_REAL_SELECTION",
                         f"modulus equation has {len(cands)} distinct real roots, expected 2")
    if T != 0:
        target = _sign(T)
        signs = [_sign(hesse_T(k)) for k in cands]
    else:
        target = _sign(S)
        signs = [_sign(hesse_S(k)) for k in cands]
    matches = [k for k, s in zip(cands, signs) if s == target]
    if len(matches) != 1:
        raise CubicError("NO_REAL_SELECTION",
                         f"candidates {cands} have invariant signs {signs}, target {target}")
    k = matches[0]
    if discriminant(S, T) > 0 and not k > 1:
        raise CubicError("NO_REAL_SELECTION", f"two-component curve but k={k} <= 1")
    interval = _certify(J, k**3) if T != 0 else None
    return HesseParameter(k, tuple(cands), interval, merged)


@dataclass(frozen=True)
class InvariantRecord:
    S: object
    T: object
    delta: object
    J: object | None  # None when the cubic is singular (J infinite)
    k: float | None = None
    k_interval: tuple[float, float] | None = None

    @property
    def sign(self) -> int:
        return discriminant_sign(self.delta, self.S, self.T)

    @property
    def singular(self) -> bool:
        return self.sign == 0


def invariants(cubic: TernaryCubic, with_k: bool = True) -> InvariantRecord:
    S, T = aronhold_S(cubic), aronhold_T(cubic)
    delta = discriminant(S, T)
    if discriminant_sign(delta, S, T) == 0:
        return InvariantRecord(S, T, delta, None)
    J = modulus_J(S, T)
    if not with_k:
        return InvariantRecord(S, T, delta, J)
    hp = hesse_parameter(S, T, J)
    return InvariantRecord(S, T, delta, J, hp.k, hp.interval)
