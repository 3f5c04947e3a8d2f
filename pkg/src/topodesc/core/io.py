"""JSON form of complexes: {"ambient_dim": d, "vertices": [...], "simplices": [...]}."""
from __future__ import annotations

import json
from typing import Any, Dict, List

from .complex import SimplicialComplex, format_rational, parse_rational


def complex_from_json(obj: Dict[str, Any]) -> SimplicialComplex:
    try:
        d = int(obj["ambient_dim"])
        coords = [[parse_rational(c) for c in v] for v in obj["vertices"]]
        simplices = [[int(i) for i in s] for s in obj.get("simplices", [])]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed complex JSON: {exc}") from exc
    for i, p in enumerate(coords):
        if len(p) != d:
            raise ValueError(f"vertex {i} has {len(p)} coordinates, expected {d}")
    for s in simplices:
        if any(v < 0 or v >= len(coords) for v in s):
            raise ValueError(f"simplex {s} references a missing vertex")
    # every listed vertex belongs to the complex
    return SimplicialComplex.build(coords, simplices + [[i] for i in range(len(coords))], ambient_dim=d)


def complex_to_json(K: SimplicialComplex) -> Dict[str, Any]:
    K = K.compact()
    return {
        "ambient_dim": K.ambient_dim,
        "vertices": [[format_rational(c) for c in p] for p in K.vertex_coords],
        "simplices": [list(s) for s in K.ordered()],
    }


def loads_complex(text: str) -> SimplicialComplex:
    return complex_from_json(json.loads(text))


def dumps_complex(K: SimplicialComplex) -> str:
    return json.dumps(complex_to_json(K), indent=2, sort_keys=True)


def complexes_from_json(obj: Any) -> List[SimplicialComplex]:
    if isinstance(obj, dict):
        obj = obj.get("complexes", [obj])
    return [complex_from_json(o) for o in obj]
