"""End-to-end auxetic decision, certificates and trajectory simulation."""
from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cubic import CubicError, InvariantRecord, TernaryCubic, determinant_cubic, hesse_parameter, invariants
from .deformation import (
    Condition,
    GramVelocityPencil,
    InfinitesimalSystem,
    RegularityDiagnosis,
    build_system,
    check_independence,
    parametrize,
    residuals,
)
from .framework import PeriodicFramework, SymmetricMatrix3, edge_length_sq, validate
from .hesse import ProjectiveTransform, normalize_to_hesse, preimage_unit
from .linalg import det3

log = logging.getLogger(__name__)

EXACT_MAX_N = 50


class Verdict(str, enum.Enum):
    AUXETIC = "AUXETIC"
    NOT_AUXETIC = "NOT_AUXETIC"
    NOT_REGULAR = "NOT_REGULAR"


class Definiteness(str, enum.Enum):
    POS_DEF = "POS_DEF"
    NEG_DEF = "NEG_DEF"
    INDEFINITE = "INDEFINITE"
    DEGENERATE = "DEGENERATE"


class DecisionError(RuntimeError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass
class DecideOptions:
    exact: bool | None = None  # None: exact for rational input with n <= EXACT_MAX_N
    tolerance: float = 1e-10  # definiteness / degeneracy threshold (relative)
    seed: int = 0  # seeds the generic chart used for inflection points
    strict: bool = False  # raise on numerical failures instead of reporting NOT_REGULAR


@dataclass(frozen=True)
class InfinitesimalDeformation:
    gram_velocity: SymmetricMatrix3
    vertex_velocities: tuple[tuple, ...]
    residual: object
    xyz: tuple

    def scaled(self, c) -> "InfinitesimalDeformation":
        return InfinitesimalDeformation(
            self.gram_velocity.scaled(c),
            tuple(tuple(c * v for v in q) for q in self.vertex_velocities),
            self.residual * abs(c),
            tuple(c * v for v in self.xyz),
        )


@dataclass
class DecisionReport:
    verdict: Verdict
    mode: str
    invariants: InvariantRecord | None = None
    cubic: TernaryCubic | None = None
    pencil: GramVelocityPencil | None = None
    diagnosis: RegularityDiagnosis | None = None
    certificate: InfinitesimalDeformation | None = None
    transform: ProjectiveTransform | None = None
    preimage: tuple | None = None
    definiteness: Definiteness | None = None
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def auxetic(self) -> bool:
        return self.verdict is Verdict.AUXETIC


def _minors(rows):
    d1 = rows[0][0]
    d2 = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    return d1, d2, det3(rows)


def classify_definiteness(M: SymmetricMatrix3, tol: float = 1e-10) -> Definiteness:
    """Sylvester minors for exact entries, eigenvalues for floats."""
    rows = M.rows()
    if all(isinstance(v, (Fraction, int)) for v in M.entries):
        d1, d2, d3 = _minors(rows)
        if d3 == 0:
            return Definiteness.DEGENERATE
        if d1 > 0 and d2 > 0 and d3 > 0:
            return Definiteness.POS_DEF
        if d1 < 0 and d2 > 0 and d3 < 0:
            return Definiteness.NEG_DEF
        return Definiteness.INDEFINITE
    ev = np.linalg.eigvalsh(M.to_numpy())
    scale = max(np.max(np.abs(ev)), np.finfo(float).tiny)
    if np.min(np.abs(ev)) <= tol * scale:
        return Definiteness.DEGENERATE
    if np.all(ev > 0):
        return Definiteness.POS_DEF
    if np.all(ev < 0):
        return Definiteness.NEG_DEF
    return Definiteness.INDEFINITE


def _rationalize(xyz) -> tuple[Fraction, ...]:
    top = max(abs(v) for v in xyz)
    return tuple(Fraction(v / top).limit_denominator(10**9) for v in xyz)


def certificate(fw: PeriodicFramework, pencil: GramVelocityPencil, xyz,
                system: InfinitesimalSystem | None = None,
                rtol: float = 1e-10) -> InfinitesimalDeformation:
    """Flex obtained by evaluating the pencil and back map at ``xyz``."""
    if system is None:
        exact = all(isinstance(c, (Fraction, int)) for f in pencil.forms for c in f)
        system = build_system(fw, exact=exact)
    omega = pencil.gram_velocity(xyz)
    qdot = pencil.vertex_velocities(xyz)
    res = residuals(system, pencil, xyz)
    residual = max((abs(r) for r in res), default=0)
    if not system.exact:
        scale = max(float(np.linalg.norm(row)) for row in system.to_numpy()) * \
            max(1.0, float(np.max(np.abs(np.asarray(xyz, dtype=float)))))
        if residual > rtol * scale:
            raise DecisionError("RESIDUAL_EXCEEDED", f"flex residual {residual:.3e}")
    elif residual != 0:
        raise DecisionError("RESIDUAL_EXCEEDED", f"exact flex residual {residual}")
    return InfinitesimalDeformation(omega, tuple(qdot), residual, tuple(xyz))


def _not_regular(report: DecisionReport, condition: Condition, detail: str) -> DecisionReport:
    report.verdict = Verdict.NOT_REGULAR
    report.diagnosis = RegularityDiagnosis(condition, detail)
    return report


def decide(fw: PeriodicFramework, opts: DecideOptions | None = None) -> DecisionReport:
    opts = opts or DecideOptions()
    check = validate(fw)
    if not check.ok:
        raise ValueError("invalid framework: " + "; ".join(check.violations))
    exact = opts.exact
    if exact is None:
        exact = fw.is_exact and fw.n <= EXACT_MAX_N
    if exact and not fw.is_exact:
        raise ValueError("exact mode needs rational coordinates and Gram matrix")
    report = DecisionReport(Verdict.NOT_REGULAR, "exact" if exact else "float")
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        report.timings[name] = now - clock
        clock = now

    # step 1: flexes in three free Gram-velocity variables
    system = build_system(fw, exact=exact)
    _, diag = check_independence(system)
    if diag is not None:
        report.diagnosis = diag
        lap("elimination")
        return report
    pencil = parametrize(system)
    lap("elimination")
    if isinstance(pencil, RegularityDiagnosis):
        report.diagnosis = pencil
        return report
    report.pencil = pencil

    # steps 2-3: determinant cubic and its invariants
    try:
        cubic = determinant_cubic(pencil)
    except CubicError as exc:
        return _not_regular(report, Condition.SMOOTH_CUBIC, str(exc))
    report.cubic = cubic
    inv = invariants(cubic, with_k=False)
    report.invariants = inv
    lap("invariants")
    if inv.singular:
        return _not_regular(report, Condition.SMOOTH_CUBIC, "cubic is singular (discriminant = 0)")
    try:
        hp = hesse_parameter(inv.S, inv.T, inv.J)
        inv = InvariantRecord(inv.S, inv.T, inv.delta, inv.J, hp.k, hp.interval)
        report.invariants = inv
    except CubicError as exc:
        if opts.strict:
            raise
        return _not_regular(report, Condition.SMOOTH_CUBIC, str(exc))
    if inv.sign < 0:
        # connected real curve: the pencil misses the open positive definite cone
        report.verdict = Verdict.NOT_AUXETIC
        lap("hesse")
        return report

    # step 4: Hesse frame, preimage of (1:1:1), definiteness there
    try:
        _, _, transform = normalize_to_hesse(cubic, inv.k, seed=opts.seed)
    except CubicError as exc:
        if opts.strict:
            raise
        return _not_regular(report, Condition.SMOOTH_CUBIC, f"Hesse normalization failed: {exc}")
    report.transform = transform
    xyz = preimage_unit(transform)
    report.preimage = xyz
    lap("hesse")
    cls = classify_definiteness(pencil.to_float().gram_velocity(xyz), opts.tolerance)
    if exact and cls is not Definiteness.DEGENERATE:
        rxyz = _rationalize(xyz)
        exact_cls = classify_definiteness(pencil.gram_velocity(rxyz))
        if exact_cls is cls:
            xyz = rxyz
        else:
            log.warning("rationalized preimage changed definiteness; keeping float point")
            xyz = tuple(Fraction(v) for v in xyz)
            cls = classify_definiteness(pencil.gram_velocity(xyz))
    report.definiteness = cls
    if cls is Definiteness.DEGENERATE:
        return _not_regular(report, Condition.SMOOTH_CUBIC,
                            "preimage of (1:1:1) gives a singular Gram velocity")
    if cls is Definiteness.INDEFINITE:
        report.verdict = Verdict.NOT_AUXETIC
        lap("certificate")
        return report
    if cls is Definiteness.NEG_DEF:
        xyz = tuple(-v for v in xyz)
    report.certificate = certificate(fw, pencil, xyz, system=system)
    report.verdict = Verdict.AUXETIC
    lap("certificate")
    return report


# trajectory simulation ---------------------------------------------------


@dataclass(frozen=True)
class TrajectoryPoint:
    tau: float
    framework: PeriodicFramework
    gram_velocity: SymmetricMatrix3 | None
    drift: float  # max |l_e^2 - l_e0^2| after projection
    predictor_drift: float  # same quantity before projection


@dataclass
class Trajectory:
    points: list[TrajectoryPoint]
    step: float
    stop_reason: str | None = None

    def __len__(self) -> int:
        return len(self.points)

    @property
    def max_drift(self) -> float:
        return max(p.drift for p in self.points)


def _state_vector(fw: PeriodicFramework) -> np.ndarray:
    q = [float(c) for v in fw.vertices[1:] for c in v]
    return np.array(q + [float(c) for c in fw.gram.entries])


def _from_state(fw: PeriodicFramework, x: np.ndarray) -> PeriodicFramework:
    nq = 3 * (fw.n - 1)
    verts = [(0.0, 0.0, 0.0)] + [tuple(x[3 * i:3 * i + 3]) for i in range(fw.n - 1)]
    return fw.with_state(verts, SymmetricMatrix3(tuple(float(v) for v in x[nq:])))


def _constraints(fw: PeriodicFramework, target: np.ndarray) -> np.ndarray:
    return np.array([float(edge_length_sq(fw, e)) for e in fw.edges]) - target


def _project(fw: PeriodicFramework, target: np.ndarray, tol: float, max_iter: int):
    """Minimum-norm Newton correction back onto the edge-length constraints."""
    x = _state_vector(fw)
    for _ in range(max_iter):
        g = _constraints(fw, target)
        if np.max(np.abs(g)) < tol:
            return fw, float(np.max(np.abs(g)))
        jac = build_system(fw, exact=False).to_numpy()
        dx, *_ = np.linalg.lstsq(jac, -g, rcond=None)
        x = x + dx
        fw = _from_state(fw, x)
    g = _constraints(fw, target)
    if np.max(np.abs(g)) < tol:
        return fw, float(np.max(np.abs(g)))
    return None, float(np.max(np.abs(g)))


def simulate_path(fw: PeriodicFramework, step: float = 1e-3, steps: int = 50,
                  opts: DecideOptions | None = None, projection_tol: float = 1e-10,
                  max_newton: int = 20, max_halvings: int = 10) -> Trajectory:
    """Follow auxetic certificates with an Euler predictor and Newton corrector.

    Each step re-runs the decision at the current placement, moves along the
    certificate (Gram velocity scaled to unit Frobenius norm) and projects
    back so every edge keeps its initial length. Stops early, with a reason,
    as soon as the placement is no longer regular or auxetic.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    opts = opts or DecideOptions()
    float_opts = DecideOptions(exact=False, tolerance=opts.tolerance, seed=opts.seed,
                               strict=opts.strict)
    current = fw.to_float()
    target = np.array([float(edge_length_sq(fw, e)) for e in fw.edges])
    traj = Trajectory([TrajectoryPoint(0.0, current, None, 0.0, 0.0)], step)
    tau = 0.0
    for i in range(steps):
        report = decide(current, float_opts)
        if report.verdict is not Verdict.AUXETIC:
            if i == 0:
                raise DecisionError("NOT_AUXETIC_AT_START",
                                    f"initial framework is {report.verdict.value}")
            traj.stop_reason = f"step {i}: framework became {report.verdict.value}"
            break
        cert = report.certificate
        omega_dot = cert.gram_velocity.to_numpy()
        cert = cert.scaled(1.0 / float(np.linalg.norm(omega_dot)))
        direction = np.array([float(c) for q in cert.vertex_velocities for c in q]
                             + [float(c) for c in cert.gram_velocity.entries])
        x0 = _state_vector(current)
        h = step
        for _ in range(max_halvings + 1):
            predicted = _from_state(current, x0 + h * direction)
            pred_drift = float(np.max(np.abs(_constraints(predicted, target))))
            projected, drift = _project(predicted, target, projection_tol, max_newton)
            if projected is not None:
                break
            h /= 2
        else:
            raise DecisionError("PROJECTION_DIVERGED",
                                f"Newton projection failed at step {i} (residual {drift:.3e})")
        if classify_definiteness(projected.gram) is not Definiteness.POS_DEF:
            traj.stop_reason = f"step {i}: Gram matrix left the positive definite cone"
            break
        tau += h
        current = projected
        traj.points.append(TrajectoryPoint(tau, current, cert.gram_velocity, drift, pred_drift))
    return traj
