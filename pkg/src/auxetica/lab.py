"""Test families with closed-form answers and a brute-force cone oracle."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .decision import Verdict
from .deformation import GramVelocityPencil, build_system, check_independence, parametrize
from .framework import EdgeOrbit, PeriodicFramework, SymmetricMatrix3, validate

FAMILY_SHIFTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1))
FAMILY_SINGULAR = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))


def family_framework(lam) -> PeriodicFramework:
    """Two vertex orbits: the origin and lam*(1,1,1), joined to the origin copies
    at e1, e2, e3, e1+e2, e2+e3, e3+e1; Gram matrix the identity."""
    lam = Fraction(lam) if not isinstance(lam, float) else lam
    one = Fraction(1) if isinstance(lam, Fraction) else 1.0
    zero = one * 0
    edges = tuple(EdgeOrbit(1, 0, s) for s in FAMILY_SHIFTS)
    return PeriodicFramework(((zero, zero, zero), (lam, lam, lam)), edges,
                             SymmetricMatrix3.identity(one))


def family_matrix(mu) -> SymmetricMatrix3:
    """Gram velocity at X = Y = Z = 1: ones on the diagonal, 3*mu elsewhere."""
    o = 3 * mu
    return SymmetricMatrix3((mu * 0 + 1, mu * 0 + 1, mu * 0 + 1, o, o, o))


@dataclass(frozen=True)
class FamilyGroundTruth:
    lam: Fraction
    ell: Fraction
    mu: Fraction
    rho: Fraction
    verdict: Verdict
    matrix: SymmetricMatrix3


def family_ground_truth(lam) -> FamilyGroundTruth:
    lam = Fraction(lam)
    ell = lam * (1 - lam)
    mu = ell / (2 - 6 * ell)
    rho = mu**2 * (2 * mu - 1)
    if lam in FAMILY_SINGULAR:
        verdict = Verdict.NOT_REGULAR
    elif Fraction(-1, 6) < mu < Fraction(1, 3):
        verdict = Verdict.AUXETIC
    else:
        verdict = Verdict.NOT_AUXETIC
    return FamilyGroundTruth(lam, ell, mu, rho, verdict, family_matrix(mu))


def random_family_parameters(count: int, seed: int = 0, max_den: int = 60,
                             low: Fraction = Fraction(-3, 2), high: Fraction = Fraction(5, 2)):
    """Distinct rationals p/q (q <= max_den) in (low, high), skipping the singular set."""
    rng = random.Random(seed)
    seen: set[Fraction] = set()
    out = []
    while len(out) < count:
        q = rng.randint(2, max_den)
        p = rng.randint(int(low * q) - 1, int(high * q) + 1)
        lam = Fraction(p, q)
        if not (low < lam < high) or lam in FAMILY_SINGULAR or lam in seen:
            continue
        seen.add(lam)
        out.append(lam)
    return out


# brute-force search for a positive definite point of a pencil ------------


@dataclass(frozen=True)
class OracleResult:
    found: bool
    point: tuple[float, float, float] | None = None
    min_eigenvalue: float | None = None
    evaluated: int = 0

    @property
    def label(self) -> str:
        return "FOUND_PD" if self.found else "NONE_FOUND"


def fibonacci_sphere(count: int) -> np.ndarray:
    i = np.arange(count) + 0.5
    phi = np.arccos(1 - 2 * i / count)
    theta = np.pi * (1 + 5**0.5) * i
    return np.column_stack([np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)])


def _pencil_tensor(pencil: GramVelocityPencil) -> np.ndarray:
    """A[c] is the symmetric matrix multiplying the c-th free variable."""
    forms = pencil.to_float().matrix_forms()
    return np.array([[[forms[a][b][c] for b in range(3)] for a in range(3)] for c in range(3)])


def _scores(A: np.ndarray, dirs: np.ndarray) -> np.ndarray:
    mats = np.einsum("nc,cab->nab", dirs, A)
    ev = np.linalg.eigvalsh(mats)
    norm = np.max(np.abs(ev), axis=1)
    norm[norm == 0] = 1.0
    return ev[:, 0] / norm


def sampling_oracle(pencil: GramVelocityPencil, grid: int = 4096, refine: int = 10_000,
                    seed: int = 0, rtol: float = 1e-12) -> OracleResult:
    """Search unit directions for a positive definite evaluation of the pencil.

    Enumeration order is fixed: the symmetric direction (1,1,1)/sqrt(3), then a
    Fibonacci sphere grid, then a seeded random local search around the best
    grid directions. A hit proves strict auxeticity; a miss is only evidence.
    """
    A = _pencil_tensor(pencil)
    dirs = np.vstack([np.ones((1, 3)) / np.sqrt(3), fibonacci_sphere(grid)])
    scores = _scores(A, dirs)
    hits = np.nonzero(scores > rtol)[0]
    if hits.size:
        j = int(hits[0])
        return OracleResult(True, tuple(dirs[j]), float(scores[j]), j + 1)
    rng = np.random.default_rng(seed)
    evaluated = len(dirs)
    order = np.argsort(scores)[::-1][:8]
    seeds = dirs[order]
    spacing = np.sqrt(4 * np.pi / max(grid, 1))
    per_seed = max(refine // len(seeds), 1)
    for start in seeds:
        best, best_score = start, _scores(A, start[None, :])[0]
        radius = 2 * spacing
        batch = 50
        for _ in range(max(per_seed // batch, 1)):
            cand = best + radius * rng.standard_normal((batch, 3))
            cand /= np.linalg.norm(cand, axis=1, keepdims=True)
            sc = _scores(A, cand)
            evaluated += batch
            hit = np.nonzero(sc > rtol)[0]
            if hit.size:
                j = int(hit[0])
                return OracleResult(True, tuple(cand[j]), float(sc[j]), evaluated)
            j = int(np.argmax(sc))
            if sc[j] > best_score:
                best, best_score = cand[j], sc[j]
            else:
                radius *= 0.7
    return OracleResult(False, None, None, evaluated)


# random frameworks for scaling runs ------------------------------------------


def random_framework(n: int, rng: random.Random, den: int = 16) -> PeriodicFramework:
    """Three edges out of every vertex orbit, heads drawn from the other orbits.

    Loop edges are avoided on purpose: a loop with shift s pins the Gram
    velocity along s, and axis-aligned loops zero out diagonal entries, which
    makes the determinant cubic reducible far more often than generically.
    """
    if n < 2:
        raise ValueError("need at least two vertex orbits")

    def coord():
        return Fraction(rng.randrange(den), den)

    verts = [(Fraction(0),) * 3] + [(coord(), coord(), coord()) for _ in range(n - 1)]
    edges = []
    for i in range(n):
        for _ in range(3):
            j = rng.randrange(n - 1)
            j = j if j < i else j + 1
            shift = tuple(rng.randint(-1, 1) for _ in range(3))
            edges.append(EdgeOrbit(i, j, shift))
    off = [Fraction(rng.randint(-den // 4, den // 4), 2 * den) for _ in range(3)]
    gram = SymmetricMatrix3((Fraction(1), Fraction(1), Fraction(1), *off))
    return PeriodicFramework(tuple(verts), tuple(edges), gram)


def random_regular_framework(n: int, seed: int = 0, den: int = 16,
                             max_tries: int = 200) -> PeriodicFramework:
    """Random framework with m = 3n that passes every regularity check (float mode)."""
    from .decision import DecideOptions, decide

    rng = random.Random(seed)
    for _ in range(max_tries):
        fw = random_framework(n, rng, den)
        if not validate(fw).ok:
            continue
        system = build_system(fw, exact=False)
        _, diag = check_independence(system)
        if diag is not None or not isinstance(parametrize(system), GramVelocityPencil):
            continue
        if decide(fw, DecideOptions(exact=False)).verdict is not Verdict.NOT_REGULAR:
            return fw
    raise RuntimeError(f"no regular framework found for n={n} after {max_tries} tries")
