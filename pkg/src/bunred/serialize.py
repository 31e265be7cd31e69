"""Lossless JSON serialization of reduction traces.

Document schema (version 1):

    { "version": 1, "genus": g, "input": {"rank": r, "degree": d}, "h": h,
      "total_affine_dim": n, "composite_det": {"sign": s, "shift": c},
      "root": node }

    node = { "kind": "base", "rank": r, "degree": d, "twist_degree": e }
         | { "kind": "composite", "rF": .., "dF": .., "r1": .., "d1": ..,
             "h1": .., "rkV": .., "rho_affine": .., "hecke_affine": ..,
             "det_maps": [ {"sign": s, "shift": c}, ... ],
             "mu1": node, "mu2": node }

Composite nodes do not store their own (rank, degree); it is derived
top-down (the root's type is the input, a mu1 child has type (r1, d1), a mu2
child has type (h1, -hcf(parent))).  Parsing is purely syntactic: a document
with tampered numbers parses fine and is rejected later by verify_trace.
Output is deterministic (sorted keys, two-space indent, trailing newline), so
re-serialization is byte-stable.  Emitted integers are plain JSON numbers;
consumers limited to 64-bit integers must keep inputs small enough that every
field fits, which holds for any desk-scale genus/rank/degree.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .affine import DegreeAffineMap
from .diophantine import LemmaSolution
from .errors import BunredError, ParseError
from .reduction import BaseStep, CompositeStep, ReductionTrace, StepNode
from .types import SheafType

SCHEMA_VERSION = 1


def trace_to_dict(trace: ReductionTrace) -> dict[str, Any]:
    return {
        "version": SCHEMA_VERSION,
        "genus": trace.genus,
        "input": {"rank": trace.input.rank, "degree": trace.input.degree},
        "h": trace.h,
        "total_affine_dim": trace.total_affine_dim,
        "composite_det": _map_to_dict(trace.composite_det),
        "root": _node_to_dict(trace.root),
    }


def _map_to_dict(m: DegreeAffineMap) -> dict[str, int]:
    return {"sign": m.sign, "shift": m.shift}


def _node_to_dict(node: StepNode) -> dict[str, Any]:
    if isinstance(node, BaseStep):
        return {
            "kind": "base",
            "rank": node.t.rank,
            "degree": node.t.degree,
            "twist_degree": node.twist_degree,
        }
    return {
        "kind": "composite",
        "rF": node.sol.rF,
        "dF": node.sol.dF,
        "r1": node.sol.r1,
        "d1": node.sol.d1,
        "h1": node.sol.h1,
        "rkV": node.rkV,
        "rho_affine": node.rho_affine,
        "hecke_affine": node.hecke_affine,
        "det_maps": [_map_to_dict(m) for m in node.det_maps],
        "mu1": _node_to_dict(node.mu1),
        "mu2": _node_to_dict(node.mu2),
    }


def _need(doc: Any, key: str, loc: str) -> Any:
    if not isinstance(doc, dict):
        raise ParseError(loc, f"expected an object, got {type(doc).__name__}")
    if key not in doc:
        raise ParseError(loc, f"missing key '{key}'")
    return doc[key]


def _need_int(doc: Any, key: str, loc: str) -> int:
    v = _need(doc, key, loc)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{loc}.{key}", f"expected an integer, got {v!r}")
    return v


def _map_from_dict(doc: Any, loc: str) -> DegreeAffineMap:
    sign = _need_int(doc, "sign", loc)
    shift = _need_int(doc, "shift", loc)
    try:
        return DegreeAffineMap(sign, shift)
    except BunredError as exc:
        raise ParseError(loc, str(exc)) from exc


def trace_from_dict(doc: Any) -> ReductionTrace:
    loc = "$"
    version = _need_int(doc, "version", loc)
    if version != SCHEMA_VERSION:
        raise ParseError(f"{loc}.version", f"unsupported version {version}")
    genus = _need_int(doc, "genus", loc)
    input_doc = _need(doc, "input", loc)
    try:
        t = SheafType(
            _need_int(input_doc, "rank", f"{loc}.input"),
            _need_int(input_doc, "degree", f"{loc}.input"),
        )
    except BunredError as exc:
        raise ParseError(f"{loc}.input", str(exc)) from exc
    root = _node_from_dict(_need(doc, "root", loc), t, f"{loc}.root")
    return ReductionTrace(
        genus=genus,
        input=t,
        h=_need_int(doc, "h", loc),
        root=root,
        total_affine_dim=_need_int(doc, "total_affine_dim", loc),
        composite_det=_map_from_dict(_need(doc, "composite_det", loc), f"{loc}.composite_det"),
    )


def _node_from_dict(doc: Any, t: SheafType, loc: str) -> StepNode:
    kind = _need(doc, "kind", loc)
    if kind == "base":
        try:
            own = SheafType(_need_int(doc, "rank", loc), _need_int(doc, "degree", loc))
        except BunredError as exc:
            raise ParseError(loc, str(exc)) from exc
        return BaseStep(t=own, twist_degree=_need_int(doc, "twist_degree", loc))
    if kind != "composite":
        raise ParseError(f"{loc}.kind", f"expected 'base' or 'composite', got {kind!r}")

    sol = LemmaSolution(
        rF=_need_int(doc, "rF", loc),
        dF=_need_int(doc, "dF", loc),
        r1=_need_int(doc, "r1", loc),
        d1=_need_int(doc, "d1", loc),
        h=math.gcd(t.rank, t.degree),
        h1=_need_int(doc, "h1", loc),
    )
    maps_doc = _need(doc, "det_maps", loc)
    if not isinstance(maps_doc, list):
        raise ParseError(f"{loc}.det_maps", "expected a list")
    det_maps = tuple(
        _map_from_dict(m, f"{loc}.det_maps[{i}]") for i, m in enumerate(maps_doc)
    )
    try:
        t1 = SheafType(sol.r1, sol.d1)
        t2 = SheafType(sol.h1, -sol.h)
    except BunredError as exc:
        raise ParseError(loc, f"child types are not representable: {exc}") from exc
    return CompositeStep(
        t=t,
        sol=sol,
        rkV=_need_int(doc, "rkV", loc),
        rho_affine=_need_int(doc, "rho_affine", loc),
        hecke_affine=_need_int(doc, "hecke_affine", loc),
        mu1=_node_from_dict(_need(doc, "mu1", loc), t1, f"{loc}.mu1"),
        mu2=_node_from_dict(_need(doc, "mu2", loc), t2, f"{loc}.mu2"),
        det_maps=det_maps,
    )


def dumps(trace: ReductionTrace) -> str:
    """Deterministic serialization; byte-stable under round trips."""
    return json.dumps(trace_to_dict(trace), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> ReductionTrace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"$ (offset {exc.pos})", exc.msg) from exc
    return trace_from_dict(doc)


def dump(trace: ReductionTrace, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(trace))


def load(path: str) -> ReductionTrace:
    with open(path, encoding="utf-8") as f:
        return loads(f.read())
