"""Mechanical verification of the two-state no-go argument.

Encodes "does a preparation-independent, non-contextual response table
reproduce the Born targets for these epistemic states?" as an exact LP
feasibility problem, solves it, audits infeasibility via Farkas
certificates, and derives the direct normalization contradiction for
overlapping supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hilbert import CONTEXTS
from .ontology import (EpistemicState, ModelError, OntologicalModel,
                       ResponseTable, support_overlap)
from .simplex import solve_equalities

# Row order: the L^2 normalization rows (lambda-major), then the 16 Born
# rows (outcome-major, context-minor). Column order: variable x[i][lam][lamp]
# at ((i-1)*L + lam)*L + lamp. Fixed so certificates compare across runs.
ROW_ORDER_NOTE = ("normalization rows (lambda-major), then Born rows "
                  "(outcome-major, context-minor in order 11,12,21,22); "
                  "columns x[i][lambda][lambda'] outcome-major")


@dataclass(frozen=True)
class FeasibilityProblem:
    lambda_size: int
    rho1: EpistemicState
    rho2: EpistemicState
    targets: tuple          # 4x4, rows by context, cols by outcome
    A: tuple                # (L^2 + 16) x 4L^2 exact coefficients
    b: tuple
    row_labels: tuple

    @property
    def num_vars(self) -> int:
        return 4 * self.lambda_size ** 2


@dataclass(frozen=True)
class FeasibilityOutcome:
    feasible: bool
    witness: ResponseTable | None
    certificate: tuple | None


@dataclass(frozen=True)
class ForcingStep:
    outcome: int     # 1-based
    context: tuple   # (j, k) whose Born target vanishes
    weight: Fraction  # rho_j(l*) * rho_k(l*), strictly positive


@dataclass(frozen=True)
class ContradictionProof:
    lambda_star: int
    steps: tuple  # one ForcingStep per outcome
    total: Fraction  # forced sum of response probabilities at (l*, l*)

    @property
    def conclusion(self) -> str:
        return (f"sum of outcome probabilities at (lambda*={self.lambda_star}, "
                f"lambda*={self.lambda_star}) is forced to {self.total}, "
                "but normalization requires 1")


@dataclass(frozen=True)
class NoOverlap:
    """Returned when the supports are disjoint and the argument does not bite."""


def _check_inputs(r1, r2, targets):
    if r1.size != r2.size:
        raise ModelError(f"epistemic states disagree on L: {r1.size} vs {r2.size}")
    for rho, name in ((r1, "rho1"), (r2, "rho2")):
        if any(w < 0 for w in rho.weights) or sum(rho.weights) != 1:
            raise ModelError(f"{name} is not a probability distribution")
    if len(targets) != 4 or any(len(row) != 4 for row in targets):
        raise ModelError("targets must be 4x4")
    for c, row in enumerate(targets):
        if sum(row) != 1:
            raise ModelError(f"targets row for context {CONTEXTS[c]} sums to {sum(row)}")


def _var(i: int, lam: int, lamp: int, L: int) -> int:
    return (i * L + lam) * L + lamp


def build_feasibility(r1: EpistemicState, r2: EpistemicState,
                      targets) -> FeasibilityProblem:
    _check_inputs(r1, r2, targets)
    L = r1.size
    nvars = 4 * L * L
    A, b, labels = [], [], []

    for lam in range(L):
        for lamp in range(L):
            row = [Fraction(0)] * nvars
            for i in range(4):
                row[_var(i, lam, lamp, L)] = Fraction(1)
            A.append(tuple(row))
            b.append(Fraction(1))
            labels.append(f"norm lambda={lam} lambda'={lamp}")

    rho = {1: r1, 2: r2}
    for i in range(4):
        for c, (j, k) in enumerate(CONTEXTS):
            row = [Fraction(0)] * nvars
            for lam in range(L):
                for lamp in range(L):
                    row[_var(i, lam, lamp, L)] = rho[j].weights[lam] * rho[k].weights[lamp]
            A.append(tuple(row))
            b.append(Fraction(targets[c][i]))
            labels.append(f"born outcome={i + 1} context={j}{k}")

    return FeasibilityProblem(lambda_size=L, rho1=r1, rho2=r2,
                              targets=tuple(tuple(r) for r in targets),
                              A=tuple(A), b=tuple(b), row_labels=tuple(labels))


def solve_feasibility(p: FeasibilityProblem) -> FeasibilityOutcome:
    result = solve_equalities([list(r) for r in p.A], list(p.b))
    if not result.feasible:
        return FeasibilityOutcome(feasible=False, witness=None,
                                  certificate=result.certificate)
    L = p.lambda_size
    x = result.witness
    table = tuple(tuple(tuple(x[_var(i, lam, lamp, L)] for lamp in range(L))
                        for lam in range(L))
                  for i in range(4))
    return FeasibilityOutcome(feasible=True, witness=ResponseTable(table),
                              certificate=None)


def verify_certificate(p: FeasibilityProblem, y) -> bool:
    """Independent Farkas audit: y^T A <= 0 columnwise and y^T b > 0,
    all exact. True iff y proves {Ax = b, x >= 0} unsolvable."""
    if len(y) != len(p.A):
        raise ModelError(f"certificate has {len(y)} entries for {len(p.A)} rows")
    for col in range(p.num_vars):
        if sum(y[r] * p.A[r][col] for r in range(len(p.A))) > 0:
            return False
    return sum(yr * br for yr, br in zip(y, p.b)) > 0


def witness_model(p: FeasibilityProblem, outcome: FeasibilityOutcome,
                  mode: str = "exact") -> OntologicalModel:
    """Package a feasible witness for validation and prediction checks."""
    if not outcome.feasible:
        raise ModelError("no witness: the problem is infeasible")
    from .ontology import LambdaSpace
    return OntologicalModel(mode=mode, lambda_space=LambdaSpace(p.lambda_size),
                            rho1=p.rho1, rho2=p.rho2, response=outcome.witness,
                            born_targets=p.targets)


def derive_contradiction(m: OntologicalModel):
    """The direct argument: at any lambda* carried by both epistemic states,
    each outcome's zero-target context forces its response probability to
    vanish, so the four probabilities cannot sum to 1.

    Returns a ContradictionProof, or NoOverlap() when the supports are
    disjoint. Exact mode only; "probability is zero" is not tolerance-robust.
    """
    if m.mode != "exact":
        raise ModelError("contradiction derivation requires an exact-mode model")

    zero_contexts = []
    for i in range(1, 5):
        ctx = next((c for c in CONTEXTS if m.target(i, c) == 0), None)
        if ctx is None:
            raise ModelError(
                f"outcome {i} has no context with Born target exactly 0; "
                "the forcing argument does not apply")
        zero_contexts.append(ctx)

    overlap = support_overlap(m.rho1, m.rho2)
    if overlap.disjoint:
        return NoOverlap()

    rho = {1: m.rho1, 2: m.rho2}
    lam_star = next(i for i, (w1, w2) in
                    enumerate(zip(m.rho1.weights, m.rho2.weights)) if w1 * w2 > 0)
    steps = []
    for i, (j, k) in enumerate(zero_contexts, start=1):
        weight = rho[j].weights[lam_star] * rho[k].weights[lam_star]
        steps.append(ForcingStep(outcome=i, context=(j, k), weight=weight))
    return ContradictionProof(lambda_star=lam_star, steps=tuple(steps),
                              total=Fraction(0))


def theorem_expected_verdict(r1: EpistemicState, r2: EpistemicState) -> bool:
    """The verdict the no-go theorem predicts: feasible iff supports are
    disjoint (for targets carrying one zero per outcome, as here)."""
    return support_overlap(r1, r2).disjoint
