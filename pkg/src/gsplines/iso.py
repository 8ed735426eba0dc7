"""Isomorphisms of edge-labeled graphs and transport of splines along them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Tuple

from .automorphism import IDENTITY, Automorphism, apply_automorphism, image_ideal
from .errors import InvalidIsomorphism, RingMismatch
from .graph import EdgeLabeledGraph
from .ideals import Verdict, ideal_equal
from .spline import Spline


@dataclass(frozen=True)
class LabeledIso:
    """A vertex bijection paired with a ring automorphism.

    ``vertex_map`` sends vertices of the source graph to the target graph.
    """

    vertex_map: Tuple[Tuple[str, str], ...]
    automorphism: Automorphism = IDENTITY

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str], automorphism: Automorphism = IDENTITY) -> "LabeledIso":
        return cls(tuple(mapping.items()), automorphism)

    @property
    def mapping(self) -> dict:
        return dict(self.vertex_map)

    def __call__(self, v):
        return self.mapping[v]

    def inverse(self) -> "LabeledIso":
        return LabeledIso(tuple((b, a) for a, b in self.vertex_map), self.automorphism.inverse())

    def then(self, other: "LabeledIso") -> "LabeledIso":
        """Apply ``self`` first, then ``other``."""
        second = other.mapping
        return LabeledIso(tuple((a, second[b]) for a, b in self.vertex_map),
                          self.automorphism.then(other.automorphism))


@dataclass(frozen=True)
class IsoCheck:
    verdict: Verdict
    reason: str = ""

    @property
    def valid(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def status(self) -> str:
        return {Verdict.YES: "valid", Verdict.NO: "invalid", Verdict.UNKNOWN: "unknown"}[self.verdict]


def verify_iso(G: EdgeLabeledGraph, H: EdgeLabeledGraph, iso: LabeledIso,
               search_bound: Optional[int] = None) -> IsoCheck:
    """Is ``iso`` an isomorphism of edge-labeled graphs from ``G`` to ``H``?"""
    if G.ring != H.ring:
        raise RingMismatch(f"{G.ring} and {H.ring} differ")
    try:
        iso.automorphism.validate_for(G.ring)
    except Exception as exc:
        return IsoCheck(Verdict.NO, str(exc))
    phi = iso.mapping
    if len(phi) != len(iso.vertex_map):
        return IsoCheck(Verdict.NO, "vertex map lists a vertex twice")
    if set(phi) != set(G.vertices):
        return IsoCheck(Verdict.NO, "vertex map is not defined exactly on the source vertices")
    if sorted(phi.values()) != sorted(H.vertices):
        return IsoCheck(Verdict.NO, "vertex map is not a bijection onto the target vertices")
    if G.edge_count != H.edge_count:
        return IsoCheck(Verdict.NO, "edge counts differ")
    unknown = None
    for a, b, I in G.edges():
        if not H.has_edge(phi[a], phi[b]):
            return IsoCheck(Verdict.NO, f"edge {a}-{b} is not preserved")
        eq = ideal_equal(image_ideal(iso.automorphism, I), H.label(phi[a], phi[b]), search_bound)
        if eq is Verdict.NO:
            return IsoCheck(Verdict.NO, f"label of {a}-{b} does not map to the label of {phi[a]}-{phi[b]}")
        if eq is Verdict.UNKNOWN and unknown is None:
            unknown = f"could not compare labels on {a}-{b}"
    if unknown:
        return IsoCheck(Verdict.UNKNOWN, unknown)
    return IsoCheck(Verdict.YES)


def transport_spline(rho: Spline, iso: LabeledIso, target: EdgeLabeledGraph, check: bool = True) -> Spline:
    """The spline ``v' -> phi2(rho(phi1^-1(v')))`` on ``target``."""
    if check:
        result = verify_iso(rho.graph, target, iso)
        if not result.valid:
            raise InvalidIsomorphism(f"not a valid isomorphism ({result.status}): {result.reason}")
    phi2 = iso.automorphism
    return Spline(target, {b: apply_automorphism(phi2, rho[a]) for a, b in iso.vertex_map})
