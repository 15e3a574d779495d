"""Regenerate src/auxetica/_aronhold.py.

S and T are obtained by contracting the symmetric coefficient tensor of a
generic ternary cubic with Levi-Civita symbols following the bracket
monomials

    S ~ (abc)(abd)(acd)(bcd)
    T ~ (abc)(abd)(ace)(bcf)(def)^2

and then rescaled so that on x^3 + y^3 + z^3 - 3k xyz

    S = -k/2 - k^4/16,    T = 1 + 5k^3/2 - k^6/8.

Usage: python scripts/derive_aronhold.py > src/auxetica/_aronhold.py
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from math import factorial

MONOMIALS = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (2, 0, 1),
             (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1)]

PERMS = []
for p in itertools.permutations(range(3)):
    inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if p[a] > p[b])
    PERMS.append((p, -1 if inversions % 2 else 1))


def tensor_entry(i, j, k):
    """(monomial index, weight) with f = sum F_ijk x_i x_j x_k."""
    e = [0, 0, 0]
    for t in (i, j, k):
        e[t] += 1
    mult = factorial(3) // (factorial(e[0]) * factorial(e[1]) * factorial(e[2]))
    return MONOMIALS.index(tuple(e)), Fraction(1, mult)


def accumulate(poly, sign, entries):
    coef = Fraction(sign)
    idx = []
    for ijk in entries:
        m, w = tensor_entry(*ijk)
        coef *= w
        idx.append(m)
    poly[tuple(sorted(idx))] += coef


def bracket_S():
    poly = defaultdict(Fraction)
    for (p1, s1), (p2, s2), (p3, s3), (p4, s4) in itertools.product(PERMS, repeat=4):
        a = (p1[0], p2[0], p3[0])
        b = (p1[1], p2[1], p4[0])
        c = (p1[2], p3[1], p4[1])
        d = (p2[2], p3[2], p4[2])
        accumulate(poly, s1 * s2 * s3 * s4, (a, b, c, d))
    return {k: v for k, v in poly.items() if v}


def bracket_T():
    poly = defaultdict(Fraction)
    for combo in itertools.product(PERMS, repeat=6):
        (p1, _), (p2, _), (p3, _), (p4, _), (p5, _), (p6, _) = combo
        sign = 1
        for _, s in combo:
            sign *= s
        a = (p1[0], p2[0], p3[0])
        b = (p1[1], p2[1], p4[0])
        c = (p1[2], p3[1], p4[1])
        d = (p2[2], p5[0], p6[0])
        e = (p3[2], p5[1], p6[1])
        f = (p4[2], p5[2], p6[2])
        accumulate(poly, sign, (a, b, c, d, e, f))
    return {k: v for k, v in poly.items() if v}


def evaluate(poly, coeffs):
    total = Fraction(0)
    for idx, c in poly.items():
        term = c
        for i in idx:
            term *= coeffs[i]
        total += term
    return total


def hesse(k):
    c = [Fraction(0)] * 10
    c[0] = c[1] = c[2] = Fraction(1)
    c[9] = -3 * Fraction(k)
    return c


def main():
    S, T = bracket_S(), bracket_T()
    k = Fraction(2)
    s_scale = (-k / 2 - k**4 / 16) / evaluate(S, hesse(k))
    t_scale = (1 + Fraction(5, 2) * k**3 - k**6 / 8) / evaluate(T, hesse(k))
    S = {i: c * s_scale for i, c in S.items()}
    T = {i: c * t_scale for i, c in T.items()}
    for k in (Fraction(0), Fraction(-3), Fraction(7, 5)):
        assert evaluate(S, hesse(k)) == -k / 2 - k**4 / 16
        assert evaluate(T, hesse(k)) == 1 + Fraction(5, 2) * k**3 - k**6 / 8

    print('"""Frozen Aronhold invariant tables (generated by scripts/derive_aronhold.py).')
    print()
    print("Each entry is (numerator, denominator, monomial indices); indices refer to")
    print("the coefficient order of TernaryCubic.")
    print('"""')
    print()
    print(f"S_SCALE = ({s_scale.numerator}, {s_scale.denominator})")
    print(f"T_SCALE = ({t_scale.numerator}, {t_scale.denominator})")
    for name, poly in (("S_TERMS", S), ("T_TERMS", T)):
        print()
        print(f"{name} = (")
        for idx in sorted(poly):
            c = poly[idx]
            print(f"    ({c.numerator}, {c.denominator}, {idx}),")
        print(")")


if __name__ == "__main__":
    main()
