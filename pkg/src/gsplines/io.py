"""JSON file formats for graphs, splines and isomorphisms.

Graph::

    {"ring": {"kind": "integers"},
     "vertices": ["u", "a", "w"],
     "edges": [{"from": "a", "to": "u", "ideal": [4]}, ...]}

Ring descriptors are ``{"kind": "integers"}``,
``{"kind": "integers_mod", "modulus": 6}`` or
``{"kind": "integer_polynomials", "variable": "x"}``; the shorthand strings
``"Z"``, ``"Z/6"`` and ``"Z[x]"`` are also accepted on input.  Integers may be
JSON numbers or decimal strings; polynomials are ascending coefficient
arrays, so ``x^2 - 9`` is ``[-9, 0, 1]``.

Spline::  ``{"graph": <graph object or path>, "values": {"u": 64, ...}}``

Isomorphism::  ``{"vertex_map": {"u": "u2", ...},
"automorphism": "identity" | {"epsilon": -1, "shift": 0}}``

Writers emit canonical text (vertices in declaration order, edges sorted by
endpoint names, two-space indentation, trailing newline) so output is
byte-for-byte reproducible.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

from .automorphism import Automorphism
from .errors import ParseError, SplineError
from .graph import EdgeLabeledGraph
from .ideals import Ideal
from .iso import LabeledIso
from .rings import INTEGERS, INTEGERS_MOD, POLYNOMIALS, Ring, RingValue
from .spline import Spline

PathLike = Union[str, Path]


def _fail(where: str, message: str):
    raise ParseError(f"{where}: {message}")


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool):
        _fail(where, "expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    _fail(where, f"expected an integer, got {value!r}")


def ring_from_json(obj: Any, where: str = "ring") -> Ring:
    try:
        if isinstance(obj, str):
            return Ring.parse(obj)
        if not isinstance(obj, dict):
            _fail(where, f"expected an object or string, got {obj!r}")
        kind = obj.get("kind")
        if kind == INTEGERS:
            return Ring.integers()
        if kind == INTEGERS_MOD:
            return Ring.mod(_int(obj.get("modulus"), f"{where}.modulus"))
        if kind == POLYNOMIALS:
            return Ring.polynomials(obj.get("variable", "x"))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        _fail(where, str(exc))
    _fail(f"{where}.kind", f"unknown ring kind {obj.get('kind')!r}")


def ring_to_json(ring: Ring) -> dict:
    if ring.kind == INTEGERS:
        return {"kind": INTEGERS}
    if ring.kind == INTEGERS_MOD:
        return {"kind": INTEGERS_MOD, "modulus": ring.modulus}
    return {"kind": POLYNOMIALS, "variable": ring.variable}


def element_from_json(ring: Ring, obj: Any, where: str) -> RingValue:
    if ring.is_polynomial:
        if isinstance(obj, list):
            return ring(tuple(_int(c, f"{where}[{i}]") for i, c in enumerate(obj)))
        return ring(_int(obj, where))
    return ring(_int(obj, where))


def element_to_json(v: RingValue) -> Any:
    if v.ring.is_polynomial:
        return list(v.payload) or [0]
    return v.payload


def parse_element(ring: Ring, text: str) -> RingValue:
    """Command-line literal: a decimal integer, or ``"x^2-9"`` over Z[x]."""
    try:
        return ring(text if ring.is_polynomial else int(text.strip()))
    except ValueError as exc:
        raise ParseError(f"cannot read {text!r} as an element of {ring}: {exc}") from None


def ideal_from_json(ring: Ring, obj: Any, where: str) -> Ideal:
    if not isinstance(obj, list) or not obj:
        _fail(where, "expected a nonempty array of generators")
    if ring.is_polynomial and all(isinstance(c, int) and not isinstance(c, bool) for c in obj) and len(obj) > 1:
        # a bare coefficient array would be ambiguous with a generator list
        _fail(where, "over a polynomial ring write each generator as its own coefficient array")
    return Ideal(ring, [element_from_json(ring, g, f"{where}[{i}]") for i, g in enumerate(obj)])


def graph_from_json(obj: Any) -> EdgeLabeledGraph:
    if not isinstance(obj, dict):
        _fail("graph", "expected a JSON object")
    for key in ("ring", "vertices", "edges"):
        if key not in obj:
            _fail(key, "missing field")
    ring = ring_from_json(obj["ring"])
    verts = obj["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        _fail("vertices", "expected an array of vertex names")
    if not isinstance(obj["edges"], list):
        _fail("edges", "expected an array")
    edges = []
    for i, e in enumerate(obj["edges"]):
        where = f"edges[{i}]"
        if not isinstance(e, dict):
            _fail(where, "expected an object")
        for key in ("from", "to", "ideal"):
            if key not in e:
                _fail(f"{where}.{key}", "missing field")
        edges.append((e["from"], e["to"], ideal_from_json(ring, e["ideal"], f"{where}.ideal")))
    try:
        return EdgeLabeledGraph(ring, verts, edges)
    except SplineError as exc:
        _fail("edges", str(exc))


def graph_to_json(G: EdgeLabeledGraph) -> dict:
    return {
        "ring": ring_to_json(G.ring),
        "vertices": list(G.vertices),
        "edges": [
            {"from": a, "to": b, "ideal": [element_to_json(g) for g in I.generators]}
            for a, b, I in G.edges()
        ],
    }


def spline_from_json(obj: Any, base: Optional[Path] = None) -> Spline:
    if not isinstance(obj, dict):
        _fail("spline", "expected a JSON object")
    for key in ("graph", "values"):
        if key not in obj:
            _fail(key, "missing field")
    g = obj["graph"]
    if isinstance(g, str):
        path = Path(g)
        if base is not None and not path.is_absolute():
            path = base / path
        G = load_graph(path)
    else:
        G = graph_from_json(g)
    vals = obj["values"]
    if not isinstance(vals, dict):
        _fail("values", "expected an object mapping vertex names to elements")
    values = {v: element_from_json(G.ring, x, f"values.{v}") for v, x in vals.items()}
    try:
        return Spline(G, values)
    except SplineError as exc:
        _fail("values", str(exc))


def spline_to_json(rho: Spline) -> dict:
    return {
        "graph": graph_to_json(rho.graph),
        "values": {v: element_to_json(rho[v]) for v in rho.graph.vertices},
    }


def iso_from_json(obj: Any) -> LabeledIso:
    if not isinstance(obj, dict):
        _fail("iso", "expected a JSON object")
    vm = obj.get("vertex_map")
    if not isinstance(vm, dict) or not all(isinstance(k, str) and isinstance(v, str) for k, v in vm.items()):
        _fail("vertex_map", "expected an object mapping vertex names to vertex names")
    auto = obj.get("automorphism", "identity")
    if auto == "identity":
        phi = Automorphism()
    elif isinstance(auto, dict):
        try:
            phi = Automorphism(_int(auto.get("epsilon", 1), "automorphism.epsilon"),
                               _int(auto.get("shift", 0), "automorphism.shift"))
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            _fail("automorphism", str(exc))
    else:
        _fail("automorphism", f"expected \"identity\" or an object, got {auto!r}")
    return LabeledIso.from_mapping(vm, phi)


def iso_to_json(iso: LabeledIso) -> dict:
    phi = iso.automorphism
    auto: Any = "identity" if phi.is_identity else {"epsilon": phi.epsilon, "shift": phi.shift}
    return {"vertex_map": dict(iso.vertex_map), "automorphism": auto}


def _scalar(obj: Any) -> bool:
    return not isinstance(obj, (dict, list))


def _is_leaf(obj: Any) -> bool:
    """Scalars, flat arrays and arrays of flat arrays are written on one line."""
    if isinstance(obj, list):
        return all(_scalar(c) or (isinstance(c, list) and all(map(_scalar, c))) for c in obj)
    return _scalar(obj)


def _format(obj: Any, indent: int) -> str:
    if _is_leaf(obj):
        # coefficient arrays and generator lists stay on one line
        return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_format(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    items = [inner + _format(v, indent + 2) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + pad + "]"


def dumps(obj: Any) -> str:
    """Canonical JSON text: two-space indentation, short arrays inline."""
    return _format(obj, 0) + "\n"


def _read(path: PathLike) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _wrap(path: PathLike, fn, *args):
    try:
        return fn(*args)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def load_graph(path: PathLike) -> EdgeLabeledGraph:
    return _wrap(path, graph_from_json, _read(path))


def load_spline(path: PathLike) -> Spline:
    return _wrap(path, spline_from_json, _read(path), Path(path).parent)


def load_iso(path: PathLike) -> LabeledIso:
    return _wrap(path, iso_from_json, _read(path))


def save(path: PathLike, obj: Any) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
