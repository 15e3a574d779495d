"""Periodic frameworks in lattice coordinates.

A framework is stored as its quotient data: one representative ``q_i`` per
vertex orbit (lattice coordinates, ``q_0 = 0``), one ``(tail, head, shift)``
triple per edge orbit and the Gram matrix ``omega`` of the period basis.
The edge from ``v_i`` to the copy of ``v_j`` translated by ``shift`` has
lattice vector ``q_j + shift - q_i`` and squared length
``e^T omega e``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

Number = Fraction | float

# fixed storage order of the six independent entries of a symmetric 3x3 matrix
SYM_ORDER: tuple[tuple[int, int], ...] = ((0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1))
SYM_LABELS: tuple[str, ...] = ("11", "22", "33", "23", "13", "12")


@dataclass(frozen=True)
class SymmetricMatrix3:
    """Symmetric 3x3 matrix stored as (m11, m22, m33, m23, m13, m12)."""

    entries: tuple

    def __post_init__(self):
        if len(self.entries) != 6:
            raise ValueError("SymmetricMatrix3 needs exactly six entries")
        object.__setattr__(self, "entries", tuple(self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "SymmetricMatrix3":
        for a in range(3):
            for b in range(a + 1, 3):
                if rows[a][b] != rows[b][a]:
                    raise ValueError(f"matrix is not symmetric at ({a + 1},{b + 1})")
        return cls(tuple(rows[a][b] for a, b in SYM_ORDER))

    @classmethod
    def identity(cls, scale: Number = Fraction(1)) -> "SymmetricMatrix3":
        zero = scale * 0
        return cls((scale, scale, scale, zero, zero, zero))

    def __getitem__(self, ab: tuple[int, int]):
        a, b = ab
        if a > b:
            a, b = b, a
        return self.entries[SYM_ORDER.index((a, b))]

    def rows(self) -> list[list]:
        return [[self[a, b] for b in range(3)] for a in range(3)]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.rows()])

    def quadratic(self, v: Sequence[Number]):
        """v^T M v."""
        m11, m22, m33, m23, m13, m12 = self.entries
        x, y, z = v
        return (m11 * x * x + m22 * y * y + m33 * z * z
                + 2 * (m23 * y * z + m13 * x * z + m12 * x * y))

    def apply(self, v: Sequence[Number]) -> tuple:
        rows = self.rows()
        return tuple(sum(rows[a][b] * v[b] for b in range(3)) for a in range(3))

    def scaled(self, c: Number) -> "SymmetricMatrix3":
        return SymmetricMatrix3(tuple(c * v for v in self.entries))

    def __add__(self, other: "SymmetricMatrix3") -> "SymmetricMatrix3":
        return SymmetricMatrix3(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "SymmetricMatrix3":
        return self.scaled(-1)


@dataclass(frozen=True)
class EdgeOrbit:
    tail: int
    head: int
    shift: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        shift = tuple(self.shift)
        if len(shift) != 3 or any(int(s) != s for s in shift):
            raise ValueError(f"edge shift must be an integer triple, got {self.shift!r}")
        object.__setattr__(self, "shift", tuple(int(s) for s in shift))
        if self.tail == self.head and self.shift == (0, 0, 0):
            raise ValueError("a loop edge needs a nonzero shift")


@dataclass(frozen=True)
class PeriodicFramework:
    """Quotient description of a 3-periodic bar-and-joint framework.

    Vertex coordinates are reduced into [0, 1) on construction, with the
    integer parts absorbed into the shifts of incident edges, so two
    frameworks that differ only by that gauge compare equal.
    """

    vertices: tuple[tuple, ...]
    edges: tuple[EdgeOrbit, ...]
    gram: SymmetricMatrix3
    normalize: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        vertices = [tuple(v) for v in self.vertices]
        edges = [e if isinstance(e, EdgeOrbit) else EdgeOrbit(*e) for e in self.edges]
        if not vertices:
            raise ValueError("framework needs at least one vertex orbit")
        n = len(vertices)
        for e in edges:
            if not (0 <= e.tail < n and 0 <= e.head < n):
                raise IndexError(f"edge {e} references a vertex outside 0..{n - 1}")
        if self.normalize:
            vertices, edges = _normalize(vertices, edges)
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "edges", tuple(edges))
        if not isinstance(self.gram, SymmetricMatrix3):
            object.__setattr__(self, "gram", SymmetricMatrix3(tuple(self.gram)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def is_exact(self) -> bool:
        values = [c for v in self.vertices for c in v] + list(self.gram.entries)
        return all(isinstance(c, (Fraction, int)) for c in values)

    def to_float(self) -> "PeriodicFramework":
        return PeriodicFramework(
            tuple(tuple(float(c) for c in v) for v in self.vertices),
            self.edges,
            SymmetricMatrix3(tuple(float(c) for c in self.gram.entries)),
            normalize=False,
        )

    def with_state(self, vertices, gram: SymmetricMatrix3) -> "PeriodicFramework":
        """Same graph, new placement; no re-normalization (keeps shifts fixed)."""
        return PeriodicFramework(tuple(tuple(v) for v in vertices), self.edges, gram,
                                 normalize=False)


def _normalize(vertices, edges):
    offsets = []
    new_vertices = []
    for i, v in enumerate(vertices):
        # q_0 is the origin by convention; validate() reports otherwise
        t = (0, 0, 0) if i == 0 else tuple(math.floor(c) for c in v)
        offsets.append(t)
        new_vertices.append(tuple(c - s for c, s in zip(v, t)))
    new_edges = []
    for e in edges:
        ti, tj = offsets[e.tail], offsets[e.head]
        shift = tuple(s + a - b for s, a, b in zip(e.shift, tj, ti))
        new_edges.append(EdgeOrbit(e.tail, e.head, shift))
    return new_vertices, new_edges


def edge_vector(fw: PeriodicFramework, e: EdgeOrbit | int) -> tuple:
    """Lattice vector q_head + shift - q_tail."""
    if isinstance(e, int):
        e = fw.edges[e]
    if not (0 <= e.tail < fw.n and 0 <= e.head < fw.n):
        raise IndexError(f"edge {e} out of range for n={fw.n}")
    qi, qj = fw.vertices[e.tail], fw.vertices[e.head]
    return tuple(qj[a] + e.shift[a] - qi[a] for a in range(3))


def edge_length_sq(fw: PeriodicFramework, e: EdgeOrbit | int):
    return fw.gram.quadratic(edge_vector(fw, e))


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_positive_definite(g: SymmetricMatrix3) -> bool:
    rows = g.rows()
    d1 = rows[0][0]
    d2 = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    d3 = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
          - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
          + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
    return d1 > 0 and d2 > 0 and d3 > 0


def validate(fw: PeriodicFramework) -> ValidationReport:
    report = ValidationReport()
    if any(c != 0 for c in fw.vertices[0]):
        report.violations.append("q_0 is not the zero triple")
    for i, v in enumerate(fw.vertices):
        if len(v) != 3:
            report.violations.append(f"vertex {i} does not have three coordinates")
        elif any(not (0 <= c < 1) for c in v):
            report.violations.append(f"vertex {i} coordinates outside [0,1)")
    if not _is_positive_definite(fw.gram):
        report.violations.append("gram not positive definite")
    for idx, e in enumerate(fw.edges):
        if all(c == 0 for c in edge_vector(fw, e)):
            report.violations.append(f"edge {idx} has zero edge vector")
    if fw.m != 3 * fw.n:
        report.warnings.append(f"m ≠ 3n (m={fw.m}, n={fw.n})")
    return report
