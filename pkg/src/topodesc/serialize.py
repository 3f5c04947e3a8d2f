"""JSON, CSV and SVG forms of descriptor values.

Heights are written as "p/q" strings (or integers-as-strings), never decimals.
"""
from __future__ import annotations

import csv
import io
from typing import Any, Dict, List, Tuple

from .core.complex import format_rational, parse_rational
from .descriptors import DescriptorType, DescriptorValue, PersistenceDiagram, StepFunction, step_family
from .persistence import INF

T = DescriptorType


def _h(x) -> str:
    return "inf" if x == INF else format_rational(x)


def _unh(x):
    return INF if x == "inf" else parse_rational(x)


def _fn_json(fn: StepFunction) -> List[List[Any]]:
    return [[_h(h)] + list(v) for h, v in fn.events]


def _fn_from(rows, width: int) -> StepFunction:
    return StepFunction.from_samples(((parse_rational(r[0]), tuple(r[1:])) for r in rows), width)


def value_to_json(v: DescriptorValue) -> Dict[str, Any]:
    out: Dict[str, Any] = {"descriptor": v.kind.value}
    if v.kind in (T.PD, T.APD):
        out["diagram"] = [[_h(b), _h(d), k] for k, b, d in v.payload.points]
    elif v.kind in (T.BC, T.ABC):
        out["functions"] = {str(k): _fn_json(fn) for k, fn in v.payload}
    elif v.kind in (T.ECC, T.AECC):
        out["function"] = _fn_json(v.payload)
    elif v.kind is T.DV:
        lowest, n0 = v.payload
        out["lowest"] = [[format_rational(c) for c in p] for p in lowest]
        out["n0"] = n0
    else:
        out["value"] = v.payload
    return out


def value_from_json(obj: Dict[str, Any]) -> DescriptorValue:
    try:
        kind = T.parse(obj["descriptor"])
        if kind in (T.PD, T.APD):
            pts = [(int(k), _unh(b), _unh(d)) for b, d, k in obj["diagram"]]
            return DescriptorValue(kind, PersistenceDiagram.from_points(pts, verbose=kind.verbose))
        if kind in (T.BC, T.ABC):
            width = 2 if kind.verbose else 1
            return DescriptorValue(kind, step_family(
                {int(k): _fn_from(rows, width) for k, rows in obj["functions"].items()}))
        if kind in (T.ECC, T.AECC):
            return DescriptorValue(kind, _fn_from(obj["function"], 2 if kind.verbose else 1))
        if kind is T.DV:
            lowest = tuple(sorted(tuple(parse_rational(c) for c in p) for p in obj["lowest"]))
            return DescriptorValue(kind, (lowest, int(obj["n0"])))
        return DescriptorValue(kind, int(obj["value"]))
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed descriptor JSON: {exc}") from exc


def value_to_csv(v: DescriptorValue) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if v.kind in (T.PD, T.APD):
        w.writerow(["degree", "birth", "death"])
        for k, b, d in v.payload.points:
            w.writerow([k, _h(b), _h(d)])
    elif v.kind in (T.BC, T.ABC, T.ECC, T.AECC):
        fams = v.payload if v.kind in (T.BC, T.ABC) else ((0, v.payload),)
        width = 2 if v.kind.verbose else 1
        w.writerow(["degree", "height"] + (["a", "b"] if width == 2 else ["value"]))
        for k, fn in fams:
            for h, vals in fn.events:
                w.writerow([k, _h(h)] + list(vals))
    else:
        w.writerow(["descriptor", "value"])
        w.writerow([v.kind.value, value_to_json(v).get("value", "")])
    return buf.getvalue()


_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"]


def _svg_frame(w: int, h: int, body: List[str]) -> str:
    return "\n".join([f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
                      f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>'] + body + ["</svg>"])


def _diagram_svg(dgm: PersistenceDiagram, size: int = 300) -> str:
    finite = [float(x) for _, b, d in dgm.points for x in (b, d) if x != INF]
    lo, hi = (min(finite), max(finite)) if finite else (0.0, 1.0)
    if hi == lo:
        hi = lo + 1
    pad = 30
    span = hi - lo
    top = hi + 0.15 * span  # row for essential classes

    def X(t):
        return pad + (t - lo) / (top - lo) * (size - 2 * pad)

    def Y(t):
        return size - pad - (t - lo) / (top - lo) * (size - 2 * pad)

    body = [f'<line x1="{X(lo):.2f}" y1="{Y(lo):.2f}" x2="{X(top):.2f}" y2="{Y(top):.2f}" stroke="grey"/>',
            f'<line x1="{X(lo):.2f}" y1="{Y(top):.2f}" x2="{X(top):.2f}" y2="{Y(top):.2f}" '
            f'stroke="grey" stroke-dasharray="4 3"/>']
    for k, b, d in dgm.points:
        y = top if d == INF else float(d)
        body.append(f'<circle cx="{X(float(b)):.2f}" cy="{Y(y):.2f}" r="4" fill="{_COLORS[k % len(_COLORS)]}" '
                    f'fill-opacity="0.7"><title>H{k} ({_h(b)}, {_h(d)})</title></circle>')
    return _svg_frame(size, size, body)


def _staircase_svg(fams: List[Tuple[str, StepFunction, int]], w: int = 400, h: int = 240) -> str:
    heights = sorted({float(x) for _, fn, _ in fams for x in fn.heights}) or [0.0]
    values = [x for _, fn, slot in fams for _, v in fn.events for x in (v[slot],)] + [0]
    lo_h, hi_h = heights[0], heights[-1]
    span = (hi_h - lo_h) or 1.0
    left, right = lo_h - 0.1 * span, hi_h + 0.2 * span
    vmin, vmax = min(values), max(values)
    vspan = (vmax - vmin) or 1
    pad = 30

    def X(t):
        return pad + (t - left) / (right - left) * (w - 2 * pad)

    def Y(v):
        return h - pad - (v - vmin) / vspan * (h - 2 * pad)

    body = [f'<line x1="{pad}" y1="{Y(0):.2f}" x2="{w - pad}" y2="{Y(0):.2f}" stroke="grey"/>']
    for n, (label, fn, slot) in enumerate(fams):
        pts = [(left, 0)]
        cur = 0
        for t, v in fn.events:
            pts += [(float(t), cur), (float(t), v[slot])]
            cur = v[slot]
        pts.append((right, cur))
        path = " ".join(f"{X(t):.2f},{Y(v):.2f}" for t, v in pts)
        body.append(f'<polyline points="{path}" fill="none" stroke="{_COLORS[n % len(_COLORS)]}" '
                    f'stroke-width="2"><title>{label}</title></polyline>')
    return _svg_frame(w, h, body)


def value_to_svg(v: DescriptorValue) -> str:
    if v.kind in (T.PD, T.APD):
        return _diagram_svg(v.payload)
    if v.kind in (T.BC, T.ABC):
        fams = []
        for k, fn in v.payload:
            if v.kind.verbose:
                fams += [(f"H{k} positive", fn, 0), (f"H{k} negative", fn, 1)]
            else:
                fams.append((f"beta_{k}", fn, 0))
        return _staircase_svg(fams)
    if v.kind is T.ECC:
        return _staircase_svg([("chi", v.payload, 0)])
    if v.kind is T.AECC:
        return _staircase_svg([("even", v.payload, 0), ("odd", v.payload, 1)])
    raise ValueError(f"nothing to plot for a {v.kind.name} value")
