"""JSON schema for models, problems and reports.

Exact numbers cross every boundary as "num/den" strings ("3/4", "1", "0")
so reports stay re-verifiable by third parties; floats appear only in
float-mode models and sampling statistics. Canonical dumps sort keys so
golden-file comparisons are byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .contextual import (ContextualModel, ContextualResponseTable)
from .hilbert import CONTEXTS
from .ontology import (EpistemicState, LambdaSpace, ModelError,
                       OntologicalModel, ResponseTable)


def fmt_frac(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, str):
        return Fraction(s)
    if isinstance(s, int):
        return Fraction(s)
    raise ModelError(f"expected an exact 'num/den' string, got {s!r}")


def fmt_number(x, mode: str):
    return float(x) if mode == "float" else fmt_frac(x)


def parse_number(x, mode: str):
    if mode == "float":
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ModelError(f"float-mode numbers must be JSON numbers, got {x!r}")
        return float(x)
    return parse_frac(x)


def _targets_to_json(targets):
    return [[fmt_frac(q) for q in row] for row in targets]


def _targets_from_json(rows):
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ModelError("born_targets must be 4x4")
    return tuple(tuple(parse_frac(q) for q in row) for row in rows)


def _table_to_json(t: ResponseTable, mode):
    return [[[fmt_number(v, mode) for v in row] for row in plane] for plane in t.p]


def _table_from_json(p, mode) -> ResponseTable:
    return ResponseTable(tuple(tuple(tuple(parse_number(v, mode) for v in row)
                                     for row in plane) for plane in p))


def model_to_json(m) -> dict:
    d = {
        "mode": m.mode,
        "lambda_size": m.lambda_space.size,
        "rho1": [fmt_number(w, m.mode) for w in m.rho1.weights],
        "rho2": [fmt_number(w, m.mode) for w in m.rho2.weights],
        "born_targets": _targets_to_json(m.born_targets),
    }
    if isinstance(m, ContextualModel):
        d["response"] = {"kind": "contextual",
                         "p": {f"{j}{k}": _table_to_json(m.response.slice((j, k)), m.mode)
                               for (j, k) in CONTEXTS}}
    else:
        d["response"] = {"kind": "noncontextual", "p": _table_to_json(m.response, m.mode)}
    return d


def model_from_json(d: dict):
    try:
        mode = d["mode"]
        if mode not in ("exact", "float"):
            raise ModelError(f"unknown mode {mode!r}")
        L = int(d["lambda_size"])
        rho1 = EpistemicState(tuple(parse_number(w, mode) for w in d["rho1"]))
        rho2 = EpistemicState(tuple(parse_number(w, mode) for w in d["rho2"]))
        targets = _targets_from_json(d["born_targets"])
        resp = d["response"]
        kind = resp["kind"]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ModelError(f"malformed model: {e}") from e

    if kind == "noncontextual":
        table = _table_from_json(resp["p"], mode)
        return OntologicalModel(mode=mode, lambda_space=LambdaSpace(L),
                                rho1=rho1, rho2=rho2, response=table,
                                born_targets=targets)
    if kind == "contextual":
        slices = tuple(_table_from_json(resp["p"][f"{j}{k}"], mode)
                       for (j, k) in CONTEXTS)
        return ContextualModel(mode=mode, lambda_space=LambdaSpace(L),
                               rho1=rho1, rho2=rho2,
                               response=ContextualResponseTable(slices),
                               born_targets=targets)
    raise ModelError(f"unknown response kind {kind!r}")


def rho_pair_from_json(d: dict):
    """Side file for the no-go command: two exact distributions."""
    try:
        L = int(d["lambda_size"])
        r1 = EpistemicState(tuple(parse_frac(w) for w in d["rho1"]))
        r2 = EpistemicState(tuple(parse_frac(w) for w in d["rho2"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ModelError(f"malformed rho file: {e}") from e
    if r1.size != L or r2.size != L:
        raise ModelError("rho lengths disagree with lambda_size")
    return r1, r2


def dumps_canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def digest(obj) -> str:
    return hashlib.sha256(dumps_canonical(obj).encode()).hexdigest()
