"""Independent reference computations used only by the tests.

Each oracle reaches the same quantity by a different route than the
package: dense einsum contractions instead of generated term tables,
numpy determinants at sample points instead of expanded linear-form
products, sympy expansion instead of tensor pullbacks, finite differences
instead of the linearized edge system.
"""
from __future__ import annotations

import itertools

import numpy as np
import sympy

from auxetica.cubic import MONOMIALS, TernaryCubic
from auxetica.framework import PeriodicFramework


def levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for p in itertools.permutations(range(3)):
        inv = sum(1 for a in range(3) for b in range(a + 1, 3) if p[a] > p[b])
        eps[p] = -1.0 if inv % 2 else 1.0
    return eps


def coefficient_tensor(coeffs) -> np.ndarray:
    F = np.zeros((3, 3, 3))
    for (a, b, c), v in zip(MONOMIALS, coeffs):
        idx = [0] * a + [1] * b + [2] * c
        perms = set(itertools.permutations(idx))
        for p in perms:
            F[p] = float(v) / len(perms)
    return F


def _raw_S(coeffs) -> float:
    F, e = coefficient_tensor(coeffs), levi_civita()
    # (abc)(abd)(acd)(bcd)
    ab = np.einsum("ijk,lmn,ilo,jmr->knor", F, F, e, e)
    return float(np.einsum("knor,opq,rst,kps,nqt->", ab, F, F, e, e))


def _raw_T(coeffs) -> float:
    F, e = coefficient_tensor(coeffs), levi_civita()
    # letters a..f with brackets (abc)(abd)(ace)(bcf)(def)(def), contracted stepwise
    ab = np.einsum("ABC,DEF,ADG,BEJ->CFGJ", F, F, e, e)
    abc = np.einsum("CFGJ,GHI,CHM,FIP->JMP", ab, F, e, e)
    full = np.einsum("JMP,JKL,MNO,PQR->KLNOQR", abc, F, F, F)
    return float(np.einsum("KLNOQR,KNQ,LOR->", full, e, e))


def _hesse_coeffs(k: float):
    return [1.0, 1.0, 1.0, 0, 0, 0, 0, 0, 0, -3.0 * k]


_S_NORM = (-2 / 2 - 2**4 / 16) / _raw_S(_hesse_coeffs(2.0))
_T_NORM = (1 + 2.5 * 8 - 64 / 8) / _raw_T(_hesse_coeffs(2.0))


def oracle_S(cubic: TernaryCubic) -> float:
    return _S_NORM * _raw_S(cubic.coeffs)


def oracle_T(cubic: TernaryCubic) -> float:
    return _T_NORM * _raw_T(cubic.coeffs)


def oracle_det_cubic_values(pencil, points) -> np.ndarray:
    """det of the pencil matrix at each sample point, with numpy."""
    forms = np.array(pencil.to_float().matrix_forms(), dtype=float)  # (3, 3, 3)
    return np.array([np.linalg.det(forms @ np.asarray(p, dtype=float)) for p in points])


def sympy_cubic(cubic: TernaryCubic, x, y, z):
    return sum(sympy.Rational(c) * x**a * y**b * z**d
               for c, (a, b, d) in zip(cubic.coeffs, MONOMIALS))


def oracle_pullback(cubic: TernaryCubic, L) -> TernaryCubic:
    x, y, z = sympy.symbols("x y z")
    X = [sum(sympy.Rational(L[a][b]) * v for b, v in enumerate((x, y, z))) for a in range(3)]
    poly = sympy.Poly(sympy.expand(sympy_cubic(cubic, *X)), x, y, z)
    return TernaryCubic(tuple(sympy.Rational(poly.coeff_monomial(x**a * y**b * z**d))
                              for a, b, d in MONOMIALS))


def oracle_hessian(cubic: TernaryCubic) -> TernaryCubic:
    x, y, z = sympy.symbols("x y z")
    f = sympy_cubic(cubic, x, y, z)
    H = sympy.hessian(f, (x, y, z)).det()
    poly = sympy.Poly(sympy.expand(H), x, y, z)
    return TernaryCubic(tuple(sympy.Rational(poly.coeff_monomial(x**a * y**b * z**d))
                              for a, b, d in MONOMIALS))


def squared_lengths(fw: PeriodicFramework, q: np.ndarray, omega: np.ndarray) -> np.ndarray:
    """Edge squared lengths for free coordinates q (n-1, 3) and Gram matrix omega."""
    pos = np.vstack([np.zeros(3), q])
    out = []
    for e in fw.edges:
        v = pos[e.head] + np.asarray(e.shift, dtype=float) - pos[e.tail]
        out.append(v @ omega @ v)
    return np.array(out)


def finite_difference_rates(fw: PeriodicFramework, qdot, omega_dot, h: float = 1e-6) -> np.ndarray:
    """Central difference of squared edge lengths along (qdot, omega_dot)."""
    q0 = np.array([[float(c) for c in v] for v in fw.vertices[1:]]).reshape(-1, 3)
    w0 = fw.gram.to_numpy()
    dq = np.array(qdot, dtype=float).reshape(-1, 3)
    dw = np.asarray(omega_dot, dtype=float)
    plus = squared_lengths(fw, q0 + h * dq, w0 + h * dw)
    minus = squared_lengths(fw, q0 - h * dq, w0 - h * dw)
    return (plus - minus) / (2 * h)
