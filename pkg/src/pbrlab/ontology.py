"""Finite hidden-variable models: lambda spaces, epistemic states,
response tables, the product-form prediction rule, support overlap,
and seeded Monte Carlo sampling.

Two arithmetic modes exist. "exact" keeps every number a Fraction and is
the only mode the no-go machinery accepts; "float" trades exactness for
speed with a fixed 1e-9 validation tolerance. The mode is part of the
model, never inferred.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .hilbert import CONTEXTS, context_index

FLOAT_TOL = 1e-9

# Recorded in sample reports so third parties can reproduce counts.
PRNG_NAME = "mersenne-twister (python random.Random)"


class ModelError(ValueError):
    """Raised when an operation receives an invalid model."""


@dataclass(frozen=True)
class LambdaSpace:
    size: int


@dataclass(frozen=True)
class EpistemicState:
    weights: tuple  # Fractions in exact mode, floats in float mode

    @property
    def size(self) -> int:
        return len(self.weights)

    def support(self, tol=0):
        return tuple(i for i, w in enumerate(self.weights) if w > tol)

    @classmethod
    def uniform(cls, size: int) -> "EpistemicState":
        return cls(tuple(Fraction(1, size) for _ in range(size)))

    @classmethod
    def point_mass(cls, size: int, index: int) -> "EpistemicState":
        return cls(tuple(Fraction(1) if i == index else Fraction(0)
                         for i in range(size)))

    @classmethod
    def from_weights(cls, weights) -> "EpistemicState":
        return cls(tuple(weights))


@dataclass(frozen=True)
class ResponseTable:
    """p[i][lam][lamp]: probability of outcome i given the hidden pair."""
    p: tuple  # 4 x L x L

    @property
    def lambda_size(self) -> int:
        return len(self.p[0])


@dataclass(frozen=True)
class OntologicalModel:
    mode: str  # "exact" | "float"
    lambda_space: LambdaSpace
    rho1: EpistemicState
    rho2: EpistemicState
    response: ResponseTable
    born_targets: tuple  # 4x4, rows by context in CONTEXTS order, cols by outcome

    def target(self, outcome: int, context) -> Fraction:
        """Born target for 1-based outcome in the given (j, k) context."""
        return self.born_targets[context_index(context)][outcome - 1]


@dataclass(frozen=True)
class SupportOverlap:
    disjoint: bool
    overlap_mass: Fraction


@dataclass(frozen=True)
class OutcomeCounts:
    counts: tuple  # 4 nonnegative ints
    n: int
    seed: int


def _tol(mode: str) -> float:
    return FLOAT_TOL if mode == "float" else 0


def _check_distribution(name, weights, size, tol, report):
    if len(weights) != size:
        report.append(f"{name} has {len(weights)} weights, lambda space has {size}")
        return
    for i, w in enumerate(weights):
        if w < -tol:
            report.append(f"{name}[{i}] is negative: {w}")
    total = sum(weights)
    if abs(total - 1) > tol:
        report.append(f"{name} sums to {total}, not 1")


def validate_model(m: OntologicalModel) -> list:
    """Every violated invariant, with indices; empty list iff the model is valid."""
    report = []
    if m.mode not in ("exact", "float"):
        report.append(f"unknown mode {m.mode!r}")
        return report
    tol = _tol(m.mode)
    L = m.lambda_space.size
    if L < 1:
        report.append(f"lambda space size must be >= 1, got {L}")
        return report
    _check_distribution("rho1", m.rho1.weights, L, tol, report)
    _check_distribution("rho2", m.rho2.weights, L, tol, report)

    p = m.response.p
    if len(p) != 4 or any(len(p[i]) != L or any(len(row) != L for row in p[i])
                          for i in range(len(p))):
        report.append("response table is not shaped 4 x L x L")
        return report
    for lam in range(L):
        for lamp in range(L):
            row_sum = 0
            for i in range(4):
                v = p[i][lam][lamp]
                if v < -tol or v > 1 + tol:
                    report.append(
                        f"response[{i + 1}][{lam}][{lamp}] = {v} outside [0, 1]")
                row_sum += p[i][lam][lamp]
            if abs(row_sum - 1) > tol:
                report.append(
                    f"response rows at (lambda={lam}, lambda'={lamp}) "
                    f"sum to {row_sum}, deficit {1 - row_sum}")

    if len(m.born_targets) != 4 or any(len(r) != 4 for r in m.born_targets):
        report.append("born_targets is not 4 x 4")
    else:
        for c, row in enumerate(m.born_targets):
            for i, q in enumerate(row):
                if q < -tol or q > 1 + tol:
                    report.append(
                        f"born_targets[{CONTEXTS[c]}][outcome {i + 1}] = {q} "
                        "outside [0, 1]")
            total = sum(row)
            if abs(total - 1) > tol:
                report.append(
                    f"born_targets row for context {CONTEXTS[c]} sums to {total}")
    return report


def _require_valid(m):
    report = validate_model(m)
    if report:
        raise ModelError("invalid model: " + "; ".join(report))


def predict(m: OntologicalModel, context) -> tuple:
    """Outcome distribution for the (j, k) preparation: the response table
    averaged against the product weighting rho_j(lambda) * rho_k(lambda')."""
    _require_valid(m)
    j, k = context
    rj = m.rho1 if j == 1 else m.rho2
    rk = m.rho1 if k == 1 else m.rho2
    L = m.lambda_space.size
    out = []
    for i in range(4):
        total = 0
        for lam in range(L):
            wj = rj.weights[lam]
            if not wj:
                continue
            for lamp in range(L):
                total += wj * rk.weights[lamp] * m.response.p[i][lam][lamp]
        out.append(total)
    return tuple(out)


def support_overlap(r1: EpistemicState, r2: EpistemicState) -> SupportOverlap:
    if r1.size != r2.size:
        raise ModelError(f"length mismatch: {r1.size} vs {r2.size}")
    disjoint = all(w1 * w2 == 0 for w1, w2 in zip(r1.weights, r2.weights))
    mass = sum(min(w1, w2) for w1, w2 in zip(r1.weights, r2.weights))
    return SupportOverlap(disjoint=disjoint, overlap_mass=mass)


def _draw(rng: random.Random, weights) -> int:
    r = rng.random()
    if weights and isinstance(weights[0], Fraction):
        r = Fraction(r)  # exact, keeps the comparison exact too
    acc = 0
    for i, w in enumerate(weights):
        acc = acc + w
        if r < acc:
            return i
    return len(weights) - 1  # float round-off fallthrough


def sample(m: OntologicalModel, context, n: int, seed: int) -> OutcomeCounts:
    """Monte Carlo: lambda ~ rho_j, lambda' ~ rho_k, outcome ~ response.
    Deterministic for a fixed seed."""
    _require_valid(m)
    if n < 0:
        raise ModelError(f"trial count must be >= 0, got {n}")
    j, k = context
    context_index(context)
    rj = m.rho1 if j == 1 else m.rho2
    rk = m.rho1 if k == 1 else m.rho2
    rng = random.Random(seed)
    counts = [0, 0, 0, 0]
    for _ in range(n):
        lam = _draw(rng, rj.weights)
        lamp = _draw(rng, rk.weights)
        row = tuple(m.response.p[i][lam][lamp] for i in range(4))
        counts[_draw(rng, row)] += 1
    return OutcomeCounts(counts=tuple(counts), n=n, seed=seed)


def chi_square_statistic(counts: OutcomeCounts, probs) -> float:
    """Pearson statistic of observed counts against predicted probabilities.
    Zero-probability cells are skipped; a count landing there is impossible
    for a valid model and flagged as infinity."""
    stat = 0.0
    for obs, p in zip(counts.counts, probs):
        expected = float(p) * counts.n
        if expected == 0.0:
            if obs:
                return float("inf")
            continue
        stat += (obs - expected) ** 2 / expected
    return stat
