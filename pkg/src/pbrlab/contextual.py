"""Preparation-dependent response tables: the constructive counterexample.

A contextual model lets the response probabilities depend on which quantum
states were prepared. The interval builder below makes the strongest
possible witness: identical (maximally overlapping) epistemic states that
still reproduce every Born target exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .hilbert import CONTEXTS, context_index
from .ontology import (EpistemicState, LambdaSpace, ModelError,
                       OntologicalModel, ResponseTable, support_overlap,
                       validate_model)


@dataclass(frozen=True)
class ContextualResponseTable:
    """One full response table per preparation context, in CONTEXTS order."""
    slices: tuple  # 4 ResponseTables

    def slice(self, context) -> ResponseTable:
        return self.slices[context_index(context)]


@dataclass(frozen=True)
class ContextualModel:
    mode: str
    lambda_space: LambdaSpace
    rho1: EpistemicState
    rho2: EpistemicState
    response: ContextualResponseTable
    born_targets: tuple  # as in OntologicalModel


@dataclass(frozen=True)
class RefutationReport:
    born_reproduced: bool
    overlap_mass: Fraction
    eq2_violated: bool
    verdict: str

    @property
    def collapse(self) -> bool:
        return self.born_reproduced and self.eq2_violated


def slice_model(m: ContextualModel, context) -> OntologicalModel:
    """The non-contextual model seen by a fixed preparation pair; used for
    validation, prediction and sampling of one context."""
    return OntologicalModel(mode=m.mode, lambda_space=m.lambda_space,
                            rho1=m.rho1, rho2=m.rho2,
                            response=m.response.slice(context),
                            born_targets=m.born_targets)


def validate_contextual(m: ContextualModel) -> list:
    report = []
    if len(m.response.slices) != 4:
        return ["contextual response needs one slice per context"]
    for context in CONTEXTS:
        for line in validate_model(slice_model(m, context)):
            report.append(f"context {context[0]}{context[1]}: {line}")
    # slices share rho/targets, so deduplicate the non-response complaints
    seen = set()
    out = []
    for line in report:
        key = line.split(": ", 1)[1]
        if "response" not in key and key in seen:
            continue
        seen.add(key)
        out.append(line)
    return out


def predict_contextual(m: ContextualModel, context) -> tuple:
    from .ontology import predict
    return predict(slice_model(m, context), context)


def _interval_slice(targets_row, widths) -> ResponseTable:
    """Inverse-CDF assignment: cells of the given widths tile [0, 1);
    outcome i owns the subinterval of length targets_row[i]. A cell's row
    is its overlap with each outcome interval, renormalized by its width."""
    L = math.isqrt(len(widths))
    bounds = [Fraction(0)]
    for q in targets_row:
        bounds.append(bounds[-1] + Fraction(q))

    rows = []  # per cell, the 4 outcome probabilities
    pos = Fraction(0)
    for w in widths:
        if w == 0:
            rows.append((Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
            continue
        lo, hi = pos, pos + w
        row = []
        for i in range(4):
            cut_lo = max(lo, bounds[i])
            cut_hi = min(hi, bounds[i + 1])
            row.append(max(Fraction(0), cut_hi - cut_lo) / w)
        rows.append(tuple(row))
        pos = hi

    table = tuple(tuple(tuple(rows[lam * L + lamp][i] for lamp in range(L))
                        for lam in range(L))
                  for i in range(4))
    return ResponseTable(table)


def build_interval_model(L: int, targets, rho1: EpistemicState = None,
                         rho2: EpistemicState = None) -> ContextualModel:
    """Contextual model reproducing the targets exactly despite full overlap.

    Defaults to uniform epistemic states (overlap mass 1). Supplying rho1
    and rho2 generalizes the construction: each context's cells are widened
    by rho_j(lambda) * rho_k(lambda') before the interval assignment.
    """
    if L < 1:
        raise ModelError(f"lambda space size must be >= 1, got {L}")
    if len(targets) != 4 or any(len(row) != 4 for row in targets):
        raise ModelError("targets must be 4x4")
    targets = tuple(tuple(Fraction(q) for q in row) for row in targets)
    for c, row in enumerate(targets):
        if any(q < 0 for q in row) or sum(row) != 1:
            raise ModelError(f"targets row for context {CONTEXTS[c]} is not a distribution")

    if rho1 is None:
        rho1 = EpistemicState.uniform(L)
    if rho2 is None:
        rho2 = EpistemicState.uniform(L)
    if rho1.size != L or rho2.size != L:
        raise ModelError("epistemic states must live on the requested lambda space")

    rho = {1: rho1, 2: rho2}
    slices = []
    for c, (j, k) in enumerate(CONTEXTS):
        widths = [rho[j].weights[lam] * rho[k].weights[lamp]
                  for lam in range(L) for lamp in range(L)]
        slices.append(_interval_slice(targets[c], widths))

    return ContextualModel(mode="exact", lambda_space=LambdaSpace(L),
                           rho1=rho1, rho2=rho2,
                           response=ContextualResponseTable(tuple(slices)),
                           born_targets=targets)


def refutation_report(m: ContextualModel) -> RefutationReport:
    report = validate_contextual(m)
    if report:
        raise ModelError("invalid model: " + "; ".join(report))
    reproduced = all(predict_contextual(m, context) == m.born_targets[c]
                     for c, context in enumerate(CONTEXTS))
    overlap = support_overlap(m.rho1, m.rho2)
    eq2_violated = not overlap.disjoint
    if reproduced and eq2_violated:
        verdict = ("collapse: overlapping epistemic states reproduce every "
                   "Born target exactly once the response may depend on the "
                   "prepared states")
    elif not reproduced:
        verdict = "no collapse claim: the model does not reproduce the Born targets"
    else:
        verdict = "no collapse claim: the supports are disjoint"
    return RefutationReport(born_reproduced=reproduced,
                            overlap_mass=overlap.overlap_mass,
                            eq2_violated=eq2_violated, verdict=verdict)
