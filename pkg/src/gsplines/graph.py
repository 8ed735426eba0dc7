"""Edge-labeled simple graphs and path ideals."""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .errors import DisconnectedPair, GraphError, RingMismatch
from .ideals import Ideal, ideal_intersect, sum_of
from .rings import Ring

Path = Tuple[str, ...]


class EdgeLabeledGraph:
    """A simple undirected graph with an ideal of ``ring`` on every edge.

    Vertices keep their declaration order, which fixes neighbor order and so
    the order of every enumeration.  Instances are immutable.

    >>> Z = Ring.integers()
    >>> G = EdgeLabeledGraph(Z, ["u", "v"], [("u", "v", Z.ideal(4))])
    >>> str(G.label("v", "u"))
    '⟨4⟩'
    """

    __slots__ = ("ring", "vertices", "_labels", "_adj", "_index")

    def __init__(self, ring: Ring, vertices: Sequence[str], edges: Iterable[tuple]):
        verts = tuple(str(v) for v in vertices)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex names")
        index = {v: i for i, v in enumerate(verts)}
        labels: Dict[FrozenSet[str], Ideal] = {}
        for u, v, label in edges:
            for x in (u, v):
                if x not in index:
                    raise GraphError(f"edge {u}-{v} references unknown vertex {x!r}")
            if u == v:
                raise GraphError(f"loop at {u!r} is not allowed")
            key = frozenset((u, v))
            if key in labels:
                raise GraphError(f"parallel edge {u}-{v} is not allowed")
            if not isinstance(label, Ideal):
                label = ring.ideal(*label) if isinstance(label, (list, tuple)) else ring.ideal(label)
            if label.ring != ring:
                raise RingMismatch(f"edge {u}-{v} is labeled over {label.ring}, graph is over {ring}")
            labels[key] = label
        adj = {v: [] for v in verts}
        for key in labels:
            a, b = tuple(key)
            adj[a].append(b)
            adj[b].append(a)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "_labels", labels)
        object.__setattr__(self, "_adj", {v: tuple(sorted(ns, key=index.__getitem__)) for v, ns in adj.items()})
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("EdgeLabeledGraph is immutable")

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeLabeledGraph):
            return NotImplemented
        return (self.ring, self.vertices, self._labels) == (other.ring, other.vertices, other._labels)

    def __hash__(self):
        return hash((self.ring, self.vertices, frozenset(self._labels.items())))

    def __repr__(self) -> str:
        return f"EdgeLabeledGraph({self.ring}, {len(self.vertices)} vertices, {len(self._labels)} edges)"

    def check_vertex(self, v) -> None:
        if v not in self._index:
            raise GraphError(f"unknown vertex {v!r}")

    def position(self, v) -> int:
        return self._index[v]

    def neighbors(self, v) -> Tuple[str, ...]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self._labels

    def label(self, u, v) -> Ideal:
        try:
            return self._labels[frozenset((u, v))]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def edges(self) -> List[Tuple[str, str, Ideal]]:
        """Edges as ``(a, b, label)`` with ``a < b``, sorted lexicographically."""
        out = []
        for key, label in self._labels.items():
            a, b = sorted(key)
            out.append((a, b, label))
        out.sort(key=lambda e: (e[0], e[1]))
        return out

    @property
    def edge_count(self) -> int:
        return len(self._labels)

    def subgraph(self, keep: Iterable[str]) -> "EdgeLabeledGraph":
        keep = set(keep)
        verts = [v for v in self.vertices if v in keep]
        edges = [(a, b, I) for a, b, I in self.edges() if a in keep and b in keep]
        return EdgeLabeledGraph(self.ring, verts, edges)

    def components(self, removed: Iterable[str] = ()) -> List[List[str]]:
        """Connected components (in vertex order) after deleting ``removed``."""
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for n in self._adj[v]:
                    if n not in seen:
                        seen.add(n)
                        stack.append(n)
            comps.append(sorted(comp, key=self._index.__getitem__))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def connected(self, u, w) -> bool:
        return any(u in c and w in c for c in self.components())

    def relabeled(self, labels: Mapping[Tuple[str, str], Ideal]) -> "EdgeLabeledGraph":
        """Same graph with some edge labels replaced."""
        new = {frozenset(k): v for k, v in labels.items()}
        return EdgeLabeledGraph(
            self.ring, self.vertices, [(a, b, new.get(frozenset((a, b)), I)) for a, b, I in self.edges()]
        )


def _check_pair(G: EdgeLabeledGraph, u, w) -> None:
    G.check_vertex(u)
    G.check_vertex(w)
    if u == w:
        raise GraphError("the endpoints of a path query must be distinct")


def iter_paths(G: EdgeLabeledGraph, u, w) -> Iterator[Path]:
    """Depth-first generation of every simple ``u``-``w`` path."""
    _check_pair(G, u, w)
    path = [u]
    on_path = {u}
    stack = [iter(G.neighbors(u))]
    while stack:
        for n in stack[-1]:
            if n in on_path:
                continue
            if n == w:
                yield tuple(path) + (w,)
                continue
            path.append(n)
            on_path.add(n)
            stack.append(iter(G.neighbors(n)))
            break
        else:
            stack.pop()
            on_path.discard(path.pop())


def enumerate_paths(G: EdgeLabeledGraph, u, w) -> List[Path]:
    """All simple paths from ``u`` to ``w``; empty iff they are disconnected."""
    return list(iter_paths(G, u, w))


def check_path(G: EdgeLabeledGraph, P: Sequence[str]) -> Path:
    P = tuple(P)
    if len(P) < 2:
        raise GraphError("a path needs at least one edge")
    for v in P:
        G.check_vertex(v)
    if len(set(P)) != len(P):
        raise GraphError(f"path {'-'.join(P)} repeats a vertex")
    for a, b in zip(P, P[1:]):
        if not G.has_edge(a, b):
            raise GraphError(f"path {'-'.join(P)} uses missing edge {a}-{b}")
    return P


def path_ideal(G: EdgeLabeledGraph, P: Sequence[str]) -> Ideal:
    """Sum of the labels along the path ``P``."""
    P = check_path(G, P)
    return sum_of([G.label(a, b) for a, b in zip(P, P[1:])])


def paths_intersection_ideal(G: EdgeLabeledGraph, u, w) -> Ideal:
    """Intersection of the path ideals over every ``u``-``w`` path.

    Over Z[x] this raises NonPrincipalIntersection as soon as a path ideal
    that is not principal has to be intersected.
    """
    result = None
    for P in iter_paths(G, u, w):
        I = path_ideal(G, P)
        result = I if result is None else ideal_intersect(result, I)
    if result is None:
        raise DisconnectedPair(f"{u!r} and {w!r} lie in different components")
    return result


def path_ideals(G: EdgeLabeledGraph, u, w) -> List[Tuple[Path, Ideal]]:
    out = [(P, path_ideal(G, P)) for P in iter_paths(G, u, w)]
    if not out:
        raise DisconnectedPair(f"{u!r} and {w!r} lie in different components")
    return out


def pairwise_intersections(G: EdgeLabeledGraph) -> Dict[Tuple[str, str], Ideal]:
    """``paths_intersection_ideal`` for every ordered connected pair."""
    out = {}
    for comp in G.components():
        for i, a in enumerate(comp):
            for b in comp[i + 1:]:
                I = paths_intersection_ideal(G, a, b)
                out[a, b] = out[b, a] = I
    return out


def is_path_graph(G: EdgeLabeledGraph) -> bool:
    return G.is_connected() and G.edge_count == len(G) - 1 and all(G.degree(v) <= 2 for v in G.vertices)


def is_tree(G: EdgeLabeledGraph) -> bool:
    return G.is_connected() and G.edge_count == len(G) - 1


def is_cycle(G: EdgeLabeledGraph) -> bool:
    return len(G) >= 3 and G.is_connected() and all(G.degree(v) == 2 for v in G.vertices)
