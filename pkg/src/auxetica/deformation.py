"""Linear system for infinitesimal periodic deformations.

Differentiating ``e^T omega e = const`` for every edge orbit gives one linear
equation per edge in the unknowns ``(qdot_1, ..., qdot_{n-1}, omegadot)``::

    <omegadot e, e> + 2 <omega e, qdot_head - qdot_tail> = 0

``qdot_0`` is pinned to zero (vertex 0 is the origin of lattice
coordinates). Columns are the 3(n-1) vertex-velocity coordinates followed by
the six Gram-velocity entries in ``SYM_ORDER``.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .framework import SYM_LABELS, SYM_ORDER, PeriodicFramework, SymmetricMatrix3, edge_vector
from .linalg import FLOAT_RANK_RTOL, det3, exact_kernel, exact_rank, float_kernel, float_rank, inv3


class Condition(enum.Enum):
    COUNT = "COUNT"
    INDEPENDENCE = "INDEPENDENCE"
    PROJECTION = "PROJECTION"
    SMOOTH_CUBIC = "SMOOTH_CUBIC"


@dataclass(frozen=True)
class RegularityDiagnosis:
    condition: Condition
    detail: str


@dataclass(frozen=True)
class InfinitesimalSystem:
    matrix: tuple[tuple, ...]
    n: int
    exact: bool

    @property
    def m(self) -> int:
        return len(self.matrix)

    @property
    def ncols(self) -> int:
        return 3 * (self.n - 1) + 6

    @property
    def labels(self) -> list[str]:
        q = [f"qdot{i}_{a}" for i in range(1, self.n) for a in "xyz"]
        return q + [f"omegadot{lab}" for lab in SYM_LABELS]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.matrix], dtype=float)


def _gram_row(e):
    # coefficients of <omegadot e, e> against the entries in SYM_ORDER
    return [e[a] * e[b] * (1 if a == b else 2) for a, b in SYM_ORDER]


def build_system(fw: PeriodicFramework, exact: bool | None = None) -> InfinitesimalSystem:
    if exact is None:
        exact = fw.is_exact
    if not exact and fw.is_exact:
        fw = fw.to_float()
    zero = Fraction(0) if exact else 0.0
    ncols = 3 * (fw.n - 1) + 6
    rows = []
    for edge in fw.edges:
        e = edge_vector(fw, edge)
        row = [zero] * ncols
        if edge.tail != edge.head:
            w = fw.gram.apply(e)
            for idx, sign in ((edge.head, 1), (edge.tail, -1)):
                if idx == 0:
                    continue
                for a in range(3):
                    row[3 * (idx - 1) + a] += sign * 2 * w[a]
        row[3 * (fw.n - 1):] = _gram_row(e)
        rows.append(tuple(row))
    return InfinitesimalSystem(tuple(rows), fw.n, exact)


def check_independence(system: InfinitesimalSystem) -> tuple[int, RegularityDiagnosis | None]:
    """Rank of the system plus the first failed regularity condition, if any."""
    rank = exact_rank(system.matrix) if system.exact else float_rank(system.to_numpy())
    if system.m != 3 * system.n:
        return rank, RegularityDiagnosis(
            Condition.COUNT, f"m={system.m} edge orbits but 3n={3 * system.n}")
    if rank < system.m:
        return rank, RegularityDiagnosis(
            Condition.INDEPENDENCE, f"edge constraints have rank {rank} < m={system.m}")
    return rank, None


@dataclass(frozen=True)
class GramVelocityPencil:
    """Gram velocities realised by infinitesimal flexes, as linear forms in (X, Y, Z).

    ``forms[s]`` holds the coefficients (a, b, c) of ``aX + bY + cZ`` for the
    Gram-velocity entry ``SYM_ORDER[s]``; ``back_map[t]`` likewise for the
    vertex-velocity coordinate ``t``.
    """

    forms: tuple[tuple, ...]
    free_variables: tuple[int, int, int]
    back_map: tuple[tuple, ...]

    @property
    def free_labels(self) -> tuple[str, ...]:
        return tuple(SYM_LABELS[s] for s in self.free_variables)

    def matrix_forms(self) -> list[list[tuple]]:
        """3x3 nested list of linear forms."""
        return [[self.forms[SYM_ORDER.index((min(a, b), max(a, b)))] for b in range(3)]
                for a in range(3)]

    def gram_velocity(self, xyz) -> SymmetricMatrix3:
        return SymmetricMatrix3(tuple(sum(c * v for c, v in zip(f, xyz)) for f in self.forms))

    def vertex_velocities(self, xyz) -> list[tuple]:
        flat = [sum(c * v for c, v in zip(f, xyz)) for f in self.back_map]
        return [tuple(flat[3 * i:3 * i + 3]) for i in range(len(flat) // 3)]

    def to_float(self) -> "GramVelocityPencil":
        return GramVelocityPencil(
            tuple(tuple(float(c) for c in f) for f in self.forms),
            self.free_variables,
            tuple(tuple(float(c) for c in f) for f in self.back_map),
        )

    @classmethod
    def from_matrix_forms(cls, forms) -> "GramVelocityPencil":
        """Pencil supplied directly as six linear forms (no framework behind it)."""
        forms = tuple(tuple(f) for f in forms)
        if len(forms) != 6 or any(len(f) != 3 for f in forms):
            raise ValueError("a pencil is six linear forms in three variables")
        return cls(forms, (0, 1, 2), ())


def _select_free(rows, exact: bool) -> tuple[int, int, int] | None:
    best, best_det = None, 0.0
    for triple in itertools.combinations(range(6), 3):
        d = det3([rows[s] for s in triple])
        if exact:
            if d != 0:
                return triple
        elif abs(d) > best_det:
            best, best_det = triple, abs(d)
    return best


def parametrize(system: InfinitesimalSystem,
                rtol: float = FLOAT_RANK_RTOL) -> GramVelocityPencil | RegularityDiagnosis:
    """Express the flex space in three free Gram-velocity entries."""
    nq = 3 * (system.n - 1)
    if system.exact:
        basis = exact_kernel(system.matrix)
        if len(basis) != 3:
            return RegularityDiagnosis(
                Condition.INDEPENDENCE, f"kernel has dimension {len(basis)}, expected 3")
        k = [[basis[j][i] for j in range(3)] for i in range(system.ncols)]
    else:
        a = system.to_numpy()
        if float_rank(a, rtol) != system.ncols - 3:
            return RegularityDiagnosis(Condition.INDEPENDENCE, "kernel dimension is not 3")
        k = float_kernel(a, dim=3).tolist()
    omega_rows = k[nq:]
    if system.exact:
        proj_rank = exact_rank(omega_rows)
    else:
        proj_rank = float_rank(omega_rows, rtol) if np.any(omega_rows) else 0
    if proj_rank < 3:
        return RegularityDiagnosis(
            Condition.PROJECTION,
            f"flex space projects onto Gram velocities with rank {proj_rank} < 3")
    free = _select_free(omega_rows, system.exact)
    kinv = inv3([omega_rows[s] for s in free])

    def reparam(row):
        return tuple(sum(row[j] * kinv[j][c] for j in range(3)) for c in range(3))

    forms = tuple(reparam(r) for r in omega_rows)
    if system.exact:
        # the free entries are X, Y, Z by construction; pin them against round-off anyway
        one, zero = Fraction(1), Fraction(0)
    else:
        one, zero = 1.0, 0.0
    forms = list(forms)
    for c, s in enumerate(free):
        forms[s] = tuple(one if j == c else zero for j in range(3))
    back = tuple(reparam(r) for r in k[:nq])
    return GramVelocityPencil(tuple(forms), free, back)


def residuals(system: InfinitesimalSystem, pencil: GramVelocityPencil, xyz) -> list:
    """Row values of the system at the flex determined by ``xyz``."""
    omega = pencil.gram_velocity(xyz)
    q = [c for v in pencil.vertex_velocities(xyz) for c in v]
    vec = q + list(omega.entries)
    return [sum(a * b for a, b in zip(row, vec)) for row in system.matrix]
