import random
from fractions import Fraction as F

import numpy as np
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from auxetica.linalg import bareiss_echelon, det3, exact_kernel, exact_rank, float_kernel, float_rank, inv3

small = st.integers(-4, 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 7), st.data())
def test_rank_matches_sympy(r, c, data):
    m = [[F(data.draw(small), data.draw(st.sampled_from([1, 2, 3]))) for _ in range(c)] for _ in range(r)]
    assert exact_rank(m) == sympy.Matrix(m).rank()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(2, 7), st.data())
def test_kernel_vectors_annihilate(r, c, data):
    m = [[F(data.draw(small)) for _ in range(c)] for _ in range(r)]
    basis = exact_kernel(m)
    assert len(basis) == c - exact_rank(m)
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


def test_float_rank_and_kernel_agree_with_exact():
    rng = random.Random(5)
    m = [[F(rng.randint(-3, 3)) for _ in range(6)] for _ in range(3)]
    m.append([m[0][j] + m[1][j] for j in range(6)])
    a = np.array(m, dtype=float)
    assert float_rank(a) == exact_rank(m) == 3
    k = float_kernel(a, dim=3)
    assert np.allclose(a @ k, 0, atol=1e-12)


def test_det_inv():
    m = [[F(2), F(1), F(0)], [F(1), F(3), F(1)], [F(0), F(1), F(4)]]
    assert det3(m) == 18
    inv = inv3(m)
    prod = [[sum(m[i][k] * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_bareiss_counts_ops():
    ech = bareiss_echelon([[F(1), F(2)], [F(3), F(4)]])
    assert ech.rank == 2 and ech.ops > 0
