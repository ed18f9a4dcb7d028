"""Canonical JSON encoding of instances and matchings.

The format is UTF-8 JSON with sorted keys, edges ordered by id, numeric
fields as decimal strings (or "inf"), and constraint keys of the form
"U:3" / "W:0".  Canonical output means equal objects always produce
byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

from .matroid import CapacitySpec, ExplicitSpec, LaminarSpec, MatroidSpec
from .model import Edge, Instance, Matching, Side, VertexRef
from .values import Value


class FormatError(ValueError):
    """Raised when parsing malformed instance or matching documents."""


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# -- vertices ---------------------------------------------------------------


def vertex_to_obj(v: VertexRef) -> dict[str, Any]:
    return {"side": v.side.value, "index": v.index}


def vertex_from_obj(obj: Any) -> VertexRef:
    try:
        return VertexRef(Side(obj["side"]), int(obj["index"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad vertex reference {obj!r}") from exc


def _vertex_key(v: VertexRef) -> str:
    return f"{v.side.value}:{v.index}"


def _vertex_from_key(key: str) -> VertexRef:
    side, _, index = key.partition(":")
    if side not in ("U", "W") or not index.isdigit():
        raise FormatError(f"bad constraint key {key!r}")
    return VertexRef(Side(side), int(index))


# -- matroid specs ----------------------------------------------------------


def spec_to_obj(spec: MatroidSpec) -> dict[str, Any]:
    if isinstance(spec, CapacitySpec):
        return {"type": "capacity", "q": spec.q}
    if isinstance(spec, LaminarSpec):
        return {
            "type": "laminar",
            "sets": [
                {"edges": sorted(members), "quota": quota}
                for members, quota in spec.sets
            ],
        }
    if isinstance(spec, ExplicitSpec):
        return {
            "type": "explicit",
            "independent_sets": [sorted(s) for s in spec.independent_sets],
        }
    raise TypeError(f"unknown matroid spec {type(spec).__name__}")


def spec_from_obj(obj: Any) -> MatroidSpec:
    if not isinstance(obj, dict) or "type" not in obj:
        raise FormatError(f"bad matroid spec {obj!r}")
    kind = obj["type"]
    try:
        if kind == "capacity":
            return CapacitySpec(int(obj["q"]))
        if kind == "laminar":
            return LaminarSpec(
                tuple(
                    (frozenset(int(x) for x in item["edges"]), int(item["quota"]))
                    for item in obj["sets"]
                )
            )
        if kind == "explicit":
            return ExplicitSpec(
                tuple(
                    frozenset(int(x) for x in s) for s in obj["independent_sets"]
                )
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad matroid spec {obj!r}") from exc
    raise FormatError(f"unknown matroid spec type {kind!r}")


# -- instances ---------------------------------------------------------------


def _edge_to_obj(e: Edge) -> dict[str, Any]:
    return {
        "id": e.id,
        "u": e.u.index,
        "w": e.w.index,
        "p_u": str(e.p_u),
        "p_w": str(e.p_w),
        "gamma_u": str(e.gamma_u),
        "delta_u": str(e.delta_u),
        "gamma_w": str(e.gamma_w),
        "delta_w": str(e.delta_w),
        "critical": e.critical,
    }


def _edge_from_obj(obj: Any) -> Edge:
    try:
        return Edge(
            id=int(obj["id"]),
            u=VertexRef(Side.U, int(obj["u"])),
            w=VertexRef(Side.W, int(obj["w"])),
            p_u=Value.parse(str(obj["p_u"])),
            p_w=Value.parse(str(obj["p_w"])),
            gamma_u=Value.parse(str(obj["gamma_u"])),
            delta_u=Value.parse(str(obj["delta_u"])),
            gamma_w=Value.parse(str(obj["gamma_w"])),
            delta_w=Value.parse(str(obj["delta_w"])),
            critical=bool(obj["critical"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad edge record {obj!r}") from exc


def instance_to_obj(instance: Instance) -> dict[str, Any]:
    return {
        "u_count": instance.u_count,
        "w_count": instance.w_count,
        "critical_vertices": [
            vertex_to_obj(v) for v in sorted(instance.critical_vertices)
        ],
        "edges": [_edge_to_obj(e) for e in instance.edges],
        "constraints": {
            _vertex_key(v): spec_to_obj(spec)
            for v, spec in sorted(instance.constraints.items())
        },
    }


def instance_from_obj(obj: Any) -> Instance:
    if not isinstance(obj, dict):
        raise FormatError("instance document must be a JSON object")
    try:
        u_count = int(obj["u_count"])
        w_count = int(obj["w_count"])
        edges = tuple(_edge_from_obj(e) for e in obj["edges"])
        critical = frozenset(
            vertex_from_obj(v) for v in obj.get("critical_vertices", [])
        )
        constraints = {
            _vertex_from_key(key): spec_from_obj(spec)
            for key, spec in obj.get("constraints", {}).items()
        }
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad instance document: {exc}") from exc
    return Instance(
        u_count=u_count,
        w_count=w_count,
        edges=edges,
        critical_vertices=critical,
        constraints=constraints,
    )


def instance_to_json(instance: Instance) -> str:
    return canonical_json(instance_to_obj(instance))


def instance_from_json(text: str) -> Instance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return instance_from_obj(obj)


# -- matchings ----------------------------------------------------------------


def matching_to_json(m: Matching) -> str:
    return canonical_json({"edge_ids": sorted(m.edge_ids)})


def matching_from_json(text: str) -> Matching:
    try:
        obj = json.loads(text)
        return Matching(frozenset(int(x) for x in obj["edge_ids"]))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad matching document: {exc}") from exc
