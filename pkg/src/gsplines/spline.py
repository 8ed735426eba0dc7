"""Splines on edge-labeled graphs and constructive builders.

A spline assigns a ring element to every vertex so that across each edge the
difference of the endpoint values lies in the edge label.  The builders here
produce a spline with a prescribed difference ``rho(u) - rho(w) = x``; all of
them anchor ``rho(w) = 0`` and re-verify their output before returning it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import (
    CrtInconsistency,
    CrtInfeasible,
    GraphError,
    NotInSum,
    RingMismatch,
    SplineError,
    UnsupportedRing,
)
from .graph import (
    EdgeLabeledGraph,
    enumerate_paths,
    is_cycle,
    is_path_graph,
    is_tree,
    pairwise_intersections,
)
from .ideals import Membership, Verdict, crt_solve, decompose_into_sum, ideal_contains
from .rings import RingValue


class Spline:
    """A vertex labeling of ``graph`` (total on its vertices).

    Constructing a Spline does not check the edge conditions; call
    :func:`verify_spline` (or :meth:`check`) for that.
    """

    __slots__ = ("graph", "values")

    def __init__(self, graph: EdgeLabeledGraph, values: Mapping[str, object]):
        missing = [v for v in graph.vertices if v not in values]
        if missing:
            raise GraphError(f"no value for vertices {missing}")
        extra = [v for v in values if v not in graph]
        if extra:
            raise GraphError(f"values given for unknown vertices {extra}")
        vals = {}
        for v in graph.vertices:
            x = values[v]
            if isinstance(x, RingValue) and x.ring != graph.ring:
                raise RingMismatch(f"value at {v!r} is in {x.ring}, graph is over {graph.ring}")
            vals[v] = graph.ring(x)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("Spline is immutable")

    def __getitem__(self, v) -> RingValue:
        return self.values[v]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Spline):
            return NotImplemented
        return self.graph == other.graph and self.values == other.values

    def __hash__(self):
        return hash((self.graph, tuple(self.values.items())))

    def __repr__(self) -> str:
        return "Spline(" + ", ".join(f"{v}={x}" for v, x in self.values.items()) + ")"

    def as_tuple(self) -> Tuple[RingValue, ...]:
        return tuple(self.values[v] for v in self.graph.vertices)

    def difference(self, u, w) -> RingValue:
        return self.values[u] - self.values[w]

    def check(self, search_bound: Optional[int] = None) -> "SplineCheck":
        return verify_spline(self.graph, self.values, search_bound)

    def __add__(self, other):
        return add_splines(self, other)

    def __mul__(self, other):
        if isinstance(other, Spline):
            return multiply_splines(self, other)
        return scale_spline(other, self)

    __rmul__ = __mul__

    def __neg__(self):
        return scale_spline(-1, self)


def constant_spline(G: EdgeLabeledGraph, c=0) -> Spline:
    return Spline(G, {v: c for v in G.vertices})


@dataclass(frozen=True)
class SplineCheck:
    """Result of :func:`verify_spline`.

    ``violations`` are edges whose difference is provably outside the label;
    ``undecided`` are Z[x] edges whose membership came back unknown.
    """

    verdict: Verdict
    violations: Tuple[Tuple[str, str], ...] = ()
    undecided: Tuple[Tuple[str, str], ...] = ()
    memberships: Tuple[Membership, ...] = field(default=(), repr=False, compare=False)

    @property
    def valid(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def status(self) -> str:
        return {Verdict.YES: "valid", Verdict.NO: "invalid", Verdict.UNKNOWN: "unknown"}[self.verdict]


def verify_spline(G: EdgeLabeledGraph, labeling, search_bound: Optional[int] = None) -> SplineCheck:
    """Check every edge condition of a vertex labeling."""
    rho = labeling if isinstance(labeling, Spline) else Spline(G, labeling)
    if rho.graph != G:
        rho = Spline(G, rho.values)
    bad, unsure, proofs = [], [], []
    for a, b, I in G.edges():
        m = ideal_contains(I, rho[a] - rho[b], search_bound)
        proofs.append(m)
        if m.verdict is Verdict.NO:
            bad.append((a, b))
        elif m.verdict is Verdict.UNKNOWN:
            unsure.append((a, b))
    if bad:
        verdict = Verdict.NO
    elif unsure:
        verdict = Verdict.UNKNOWN
    else:
        verdict = Verdict.YES
    return SplineCheck(verdict, tuple(bad), tuple(unsure), tuple(proofs))


def _same_graph(a: Spline, b: Spline) -> EdgeLabeledGraph:
    if a.graph != b.graph:
        raise GraphError("splines live on different edge-labeled graphs")
    return a.graph


def add_splines(a: Spline, b: Spline) -> Spline:
    G = _same_graph(a, b)
    return Spline(G, {v: a[v] + b[v] for v in G.vertices})


def multiply_splines(a: Spline, b: Spline) -> Spline:
    G = _same_graph(a, b)
    return Spline(G, {v: a[v] * b[v] for v in G.vertices})


def scale_spline(r, a: Spline) -> Spline:
    r = a.graph.ring(r)
    return Spline(a.graph, {v: r * a[v] for v in a.graph.vertices})


def translate_spline(a: Spline, v, r) -> Spline:
    """Shift every value by the same constant so that the value at ``v`` becomes ``r``."""
    a.graph.check_vertex(v)
    s = a.graph.ring(r) - a[v]
    return Spline(a.graph, {z: a[z] + s for z in a.graph.vertices})


# -- builders --------------------------------------------------------------


def _finish(G: EdgeLabeledGraph, values: Mapping[str, RingValue], u, w, x: RingValue) -> Spline:
    rho = Spline(G, values)
    check = verify_spline(G, rho)
    if not check.valid:
        raise SplineError(f"construction produced a labeling that is not a verified spline ({check.status}: "
                          f"{check.violations or check.undecided})")
    if rho.difference(u, w) != x:
        raise SplineError(f"construction missed the target difference {x}")
    return rho


def _decompose(x: RingValue, ideals) -> List[RingValue]:
    parts = decompose_into_sum(x, ideals)
    if sum(parts, x.ring.zero()) != x:
        raise SplineError("decomposition does not add up")
    return parts


def _label_along(G: EdgeLabeledGraph, P, x: RingValue, values: Dict[str, RingValue]) -> None:
    """Label the path ``P`` from its end (value 0) back to its start (value x)."""
    ideals = [G.label(a, b) for a, b in zip(P, P[1:])]
    parts = _decompose(x, ideals)
    acc = G.ring.zero()
    values[P[-1]] = acc
    for i in range(len(P) - 2, -1, -1):
        acc = acc + parts[i]
        values[P[i]] = acc


def _copy_nearest(G: EdgeLabeledGraph, values: Dict[str, RingValue]) -> None:
    """Give every unlabeled vertex the value of the nearest labeled one (BFS)."""
    queue = deque(v for v in G.vertices if v in values)
    while queue:
        v = queue.popleft()
        for n in G.neighbors(v):
            if n not in values:
                values[n] = values[v]
                queue.append(n)


def _prepare(G: EdgeLabeledGraph, u, w, x):
    G.check_vertex(u)
    G.check_vertex(w)
    if u == w:
        raise GraphError("u and w must be distinct")
    return G.ring(x)


def build_path_spline(G: EdgeLabeledGraph, u, w, x) -> Spline:
    """Spline on a path graph with ``rho(u) - rho(w) = x``.

    ``x`` is split into one summand per edge of the ``u``-``w`` path and the
    partial sums are laid down from ``w`` (value 0) back to ``u``; vertices
    beyond either end copy the nearest endpoint.
    """
    x = _prepare(G, u, w, x)
    if not is_path_graph(G):
        raise GraphError("graph is not a path")
    (P,) = enumerate_paths(G, u, w)
    values: Dict[str, RingValue] = {}
    _label_along(G, P, x, values)
    _copy_nearest(G, values)
    return _finish(G, values, u, w, x)


def build_tree_spline(G: EdgeLabeledGraph, u, w, x) -> Spline:
    """Spline on a tree: path construction on the ``u``-``w`` path, off-path
    vertices take the value of their nearest path vertex."""
    x = _prepare(G, u, w, x)
    if not is_tree(G):
        raise GraphError("graph is not a tree")
    (P,) = enumerate_paths(G, u, w)
    values: Dict[str, RingValue] = {}
    _label_along(G, P, x, values)
    _copy_nearest(G, values)
    return _finish(G, values, u, w, x)


def build_cycle_spline(G: EdgeLabeledGraph, u, w, x) -> Spline:
    x = _prepare(G, u, w, x)
    if not is_cycle(G):
        raise GraphError("graph is not a cycle")
    paths = enumerate_paths(G, u, w)
    if len(paths) != 2:
        raise GraphError(f"expected two u-w paths on a cycle, found {len(paths)}")
    values: Dict[str, RingValue] = {}
    for P in paths:
        side: Dict[str, RingValue] = {}
        _label_along(G, P, x, side)
        values.update(side)
    return _finish(G, values, u, w, x)


def _bfs_order(G: EdgeLabeledGraph, u, w) -> List[str]:
    order, seen, queue = [], {u}, deque([u])
    while queue:
        v = queue.popleft()
        order.append(v)
        for n in G.neighbors(v):
            if n not in seen:
                seen.add(n)
                queue.append(n)
    order.remove(w)
    return order + [w]


def build_spline_crt(G: EdgeLabeledGraph, u, w, x) -> Spline:
    """General construction by iterated Chinese remaindering (Z and Z/mZ).

    Vertices are processed in BFS order from ``u`` with ``w`` last.  ``u``
    gets ``x`` and ``w`` gets 0; every other vertex ``v`` gets a solution of

        xi = rho(y) mod (intersection of path ideals between y and v)

    for every already-labeled ``y``, ``w`` included.  Over a Prufer domain
    such as Z the system is always solvable; an infeasible system raises
    :class:`CrtInconsistency`.  Vertices outside the component of ``u`` and
    ``w`` are set to 0.
    """
    x = _prepare(G, u, w, x)
    if G.ring.is_polynomial:
        raise UnsupportedRing(f"no CRT construction over {G.ring}")
    if not G.connected(u, w):
        raise GraphError(f"{u!r} and {w!r} are not connected")
    inter = pairwise_intersections(G)
    m = ideal_contains(inter[u, w], x)
    if m.verdict is not Verdict.YES:
        raise NotInSum(f"{x} is not in {inter[u, w]}, the intersection of the {u}-{w} path ideals")

    order = _bfs_order(G, u, w)
    values: Dict[str, RingValue] = {u: x, w: G.ring.zero()}
    labeled = [u, w]
    for v in order[1:-1]:
        system = [(values[y], inter[y, v]) for y in labeled]
        try:
            values[v] = crt_solve(system)
        except CrtInfeasible as exc:
            j, k = exc.pair
            raise CrtInconsistency(
                f"CRT system for {v!r} is infeasible: constraints from {labeled[j]!r} and {labeled[k]!r} conflict"
            ) from exc
        labeled.append(v)
    for v in G.vertices:
        values.setdefault(v, G.ring.zero())
    return _finish(G, values, u, w, x)


def build_spline(G: EdgeLabeledGraph, u, w, x) -> Spline:
    """Pick the specialized builder for paths, trees and cycles, else use CRT."""
    if is_path_graph(G):
        return build_path_spline(G, u, w, x)
    if is_tree(G):
        return build_tree_spline(G, u, w, x)
    if is_cycle(G):
        return build_cycle_spline(G, u, w, x)
    return build_spline_crt(G, u, w, x)


__all__ = [
    "Spline",
    "SplineCheck",
    "constant_spline",
    "verify_spline",
    "add_splines",
    "multiply_splines",
    "scale_spline",
    "translate_spline",
    "build_path_spline",
    "build_tree_spline",
    "build_cycle_spline",
    "build_spline_crt",
    "build_spline",
]
