"""Universal Difference Property: pasting criterion, witnesses, brute force.

A graph has the UDP when, for every connected pair ``(u, w)``, every element
of the intersection of the ``u``-``w`` path ideals is realized as
``rho(u) - rho(w)`` by some spline.  For a graph pasted from two pieces at a
cut vertex ``z`` this reduces to the ideal equation

    I(u, w) == I(u, z) + I(z, w)

for ``u`` and ``w`` on opposite sides, where ``I(a, b)`` is the intersection
of the ``a``-``b`` path ideals.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    BudgetExceeded,
    GraphError,
    MoreThanTwoSides,
    NonPrincipalIntersection,
    NotACutVertex,
    NotInSum,
    PastingEquationFails,
    UnsupportedRing,
)
from .graph import EdgeLabeledGraph, path_ideals, paths_intersection_ideal
from .ideals import (
    Ideal,
    Membership,
    Verdict,
    decompose_into_sum,
    ideal_contains,
    ideal_equal,
    ideal_subset,
    ideal_sum,
)
from .rings import RingValue
from .spline import Spline, _finish, build_spline, constant_spline, translate_spline

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class PastingDecomposition:
    """``G`` seen as two connected pieces sharing only the vertex ``cut``."""

    cut: str
    side1: Tuple[str, ...]
    side2: Tuple[str, ...]

    def side_of(self, v) -> int:
        if v == self.cut:
            return 0
        if v in self.side1:
            return 1
        if v in self.side2:
            return 2
        raise GraphError(f"vertex {v!r} is not covered by the decomposition")


def find_cut_decomposition(G: EdgeLabeledGraph, z) -> PastingDecomposition:
    G.check_vertex(z)
    if not G.is_connected():
        raise GraphError("pasting decompositions need a connected graph")
    comps = G.components(removed=[z])
    if len(comps) < 2:
        raise NotACutVertex(f"removing {z!r} leaves the graph connected")
    if len(comps) > 2:
        raise MoreThanTwoSides(f"removing {z!r} leaves {len(comps)} components; only two sides are supported")
    sides = []
    for comp in comps:
        keep = set(comp) | {z}
        sides.append(tuple(v for v in G.vertices if v in keep))
    return PastingDecomposition(z, sides[0], sides[1])


def cut_decompositions(G: EdgeLabeledGraph) -> List[PastingDecomposition]:
    """Every two-sided pasting decomposition of ``G``, in vertex order of the cut."""
    out = []
    for z in G.vertices:
        try:
            out.append(find_cut_decomposition(G, z))
        except (NotACutVertex, MoreThanTwoSides, GraphError):
            continue
    return out


def _zero(G: EdgeLabeledGraph) -> Ideal:
    return Ideal(G.ring, [0])


def _side_ideal(G: EdgeLabeledGraph, a, z) -> Ideal:
    return _zero(G) if a == z else paths_intersection_ideal(G, a, z)


def _orient(dec: PastingDecomposition, u, w) -> None:
    su, sw = dec.side_of(u), dec.side_of(w)
    if u == w or (su and sw and su == sw):
        raise GraphError(f"{u!r} and {w!r} are not on opposite sides of the cut {dec.cut!r}")


@dataclass
class PastingCheck:
    """Outcome of testing the pasting equation for one pair.

    ``verdict`` is "holds", "fails" or "unknown".  ``lhs`` is the intersection
    ideal when it could be formed; over Z[x] it may only be available as
    ``lhs_parts`` (the individual path ideals being intersected).
    """

    u: str
    w: str
    cut: str
    verdict: str
    rhs_u_side: Ideal
    rhs_w_side: Ideal
    rhs: Ideal
    lhs: Optional[Ideal] = None
    lhs_parts: Tuple[Ideal, ...] = ()
    witness: Optional[RingValue] = None
    lhs_in_u_side: Verdict = Verdict.UNKNOWN
    lhs_in_w_side: Verdict = Verdict.UNKNOWN
    certificates: List[Membership] = field(default_factory=list)

    def lhs_text(self) -> str:
        if self.lhs is not None:
            return str(self.lhs)
        return " ∩ ".join(str(I) for I in self.lhs_parts)

    def render(self) -> str:
        lines = [
            f"pair {self.u} {self.w} (cut {self.cut})",
            f"  lhs: {self.lhs_text()}",
            f"  rhs: {self.rhs_u_side} + {self.rhs_w_side} = {self.rhs}",
            f"  lhs ⊆ I({self.u},{self.cut}): {self.lhs_in_u_side}",
            f"  lhs ⊆ I({self.w},{self.cut}): {self.lhs_in_w_side}",
            f"  verdict: {self.verdict}",
        ]
        if self.witness is not None:
            lines.append(f"  witness: {self.witness}")
        for m in self.certificates:
            lines.append(f"  certificate: {m.describe()}")
        return "\n".join(lines)


def _in_all(parts: Sequence[Ideal], x, bound) -> Verdict:
    verdicts = [ideal_contains(I, x, bound).verdict for I in parts]
    if Verdict.NO in verdicts:
        return Verdict.NO
    if Verdict.UNKNOWN in verdicts:
        return Verdict.UNKNOWN
    return Verdict.YES


def _witness_candidates(parts: Sequence[Ideal], rhs: Ideal):
    pool = []
    for I in list(parts) + [rhs]:
        for g in I.generators:
            if g not in pool and not g.is_zero():
                pool.append(g)
    lhs_gens = [g for I in parts for g in I.generators]
    seen = set()
    for g in lhs_gens:
        if g not in seen:
            seen.add(g)
            yield g
    for size in (2, 3):
        for combo in itertools.combinations(pool, size):
            for signs in itertools.product((1, -1), repeat=size - 1):
                x = combo[0]
                for s, g in zip(signs, combo[1:]):
                    x = x + g if s == 1 else x - g
                if not x.is_zero() and x not in seen:
                    seen.add(x)
                    yield x


def check_pasting_equation(G: EdgeLabeledGraph, dec: PastingDecomposition, u, w,
                           search_bound: Optional[int] = None) -> PastingCheck:
    """Test ``I(u, w) == I(u, z) + I(z, w)`` for a pair on opposite sides."""
    _orient(dec, u, w)
    z = dec.cut
    A = _side_ideal(G, u, z)
    B = _side_ideal(G, w, z)
    rhs = ideal_sum(A, B)
    check = PastingCheck(u, w, z, "unknown", A, B, rhs)
    try:
        check.lhs = paths_intersection_ideal(G, u, w)
        parts = (check.lhs,)
    except NonPrincipalIntersection:
        parts = tuple(I for _, I in path_ideals(G, u, w))
        check.lhs_parts = parts

    if check.lhs is not None:
        eq = ideal_equal(check.lhs, rhs, search_bound)
        check.lhs_in_u_side = ideal_subset(check.lhs, A, search_bound)
        check.lhs_in_w_side = ideal_subset(check.lhs, B, search_bound)
        if eq is Verdict.YES:
            check.verdict = "holds"
            return check

    for x in _witness_candidates(parts, rhs):
        if _in_all(parts, x, search_bound) is not Verdict.YES:
            continue
        m = ideal_contains(rhs, x, search_bound)
        if m.verdict is Verdict.NO:
            check.verdict = "fails"
            check.witness = x
            check.certificates.append(m)
            # a witness outside A + B lies outside A and outside B
            check.lhs_in_u_side = check.lhs_in_w_side = Verdict.NO
            return check
    return check


def build_pasted_spline(G: EdgeLabeledGraph, dec: PastingDecomposition, u, w, x) -> Spline:
    """Spline with ``rho(u) - rho(w) = x`` glued from one spline per side.

    ``x`` is split as ``s + t`` with ``s`` in ``I(u, z)`` and ``t`` in
    ``I(z, w)``; each side gets its own spline, the second is shifted to agree
    with the first at ``z``, and the two are glued.
    """
    x = G.ring(x)
    check = check_pasting_equation(G, dec, u, w)
    if check.verdict != "holds":
        raise PastingEquationFails(f"the pasting equation does not hold for ({u}, {w}): {check.verdict}")
    if ideal_contains(check.lhs, x).verdict is not Verdict.YES:
        raise NotInSum(f"{x} is not in {check.lhs}")
    z = dec.cut
    s, t = decompose_into_sum(x, [check.rhs_u_side, check.rhs_w_side])
    if u != z:
        side_u = dec.side1 if u in dec.side1 else dec.side2
    else:
        side_u = dec.side2 if w in dec.side1 else dec.side1
    side_w = dec.side2 if side_u is dec.side1 else dec.side1

    G1, G2 = G.subgraph(side_u), G.subgraph(side_w)
    rho1 = constant_spline(G1) if u == z else build_spline(G1, u, z, s)
    rho2 = constant_spline(G2) if w == z else build_spline(G2, z, w, t)
    rho2 = translate_spline(rho2, z, rho1[z])
    values: Dict[str, RingValue] = dict(rho1.values)
    values.update(rho2.values)
    return _finish(G, values, u, w, x)


# -- brute force over Z/mZ -------------------------------------------------


def _extend(arr: np.ndarray, m: int, checks: Sequence[Tuple[int, int]]) -> np.ndarray:
    n = arr.shape[0]
    col = np.repeat(np.arange(m, dtype=np.int64), n)
    new = np.hstack([np.tile(arr, (m, 1)), col[:, None]])
    keep = np.ones(new.shape[0], dtype=bool)
    for j, d in checks:
        diff = (new[:, -1] - new[:, j]) % m
        keep &= (diff == 0) if d == 0 else (diff % d == 0)
    return new[keep]


def _enumerate(m: int, constraints: Sequence[Sequence[Tuple[int, int]]], first: Sequence[int]) -> np.ndarray:
    """All assignments (rows) satisfying the edge constraints.

    ``constraints[i]`` lists ``(j, d)`` for each edge to an earlier vertex
    ``j < i`` with label generator ``d`` (0 for the zero ideal).
    """
    arr = np.asarray(first, dtype=np.int64)[:, None]
    for i in range(1, len(constraints)):
        arr = _extend(arr, m, constraints[i])
        if arr.shape[0] == 0:
            return np.empty((0, len(constraints)), dtype=np.int64)
    return arr


def _differences(args) -> Dict[Tuple[int, int], set]:
    m, constraints, first, pairs = args
    arr = _enumerate(m, constraints, first)
    return {(i, j): set(np.unique((arr[:, i] - arr[:, j]) % m).tolist()) for i, j in pairs}


def enumerate_splines(G: EdgeLabeledGraph, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Every spline on ``G`` over Z/mZ, one row per spline, columns in vertex order."""
    m, constraints = _brute_setup(G, budget)
    return _enumerate(m, constraints, range(m))


def _brute_setup(G: EdgeLabeledGraph, budget: int):
    if not G.ring.is_modular:
        raise UnsupportedRing(f"brute force needs a finite ring Z/mZ, not {G.ring}")
    m = G.ring.modulus
    if m ** len(G) > budget:
        raise BudgetExceeded(f"{m}^{len(G)} assignments exceed the budget of {budget}")
    constraints = []
    for i, v in enumerate(G.vertices):
        constraints.append([(G.position(n), G.label(v, n).generator.payload)
                            for n in G.neighbors(v) if G.position(n) < i])
    return m, constraints


@dataclass(frozen=True)
class PairReport:
    u: str
    w: str
    intersection: Ideal
    achievable: Tuple[int, ...]
    expected: Tuple[int, ...]
    verdict: str
    witness: Optional[int] = None


@dataclass
class UdpReport:
    verdict: str
    pairs: List[PairReport]
    spline_count: Optional[int] = None

    def render(self) -> str:
        out = []
        for p in self.pairs:
            out.append(f"pair {p.u} {p.w}")
            out.append(f"  intersection: {p.intersection}")
            out.append("  achievable: " + " ".join(map(str, p.achievable)))
            out.append("  expected: " + " ".join(map(str, p.expected)))
            out.append(f"  verdict: {p.verdict}")
            if p.witness is not None:
                out.append(f"  witness: {p.witness}")
        out.append(f"verdict: {self.verdict}")
        return "\n".join(out)


def compare_differences(u, w, inter: Ideal, achieved) -> PairReport:
    """Compare realized differences with the residues of the intersection ideal.

    The first missing residue becomes the witness.
    """
    m = inter.ring.modulus
    d = inter.generator.payload
    expected = tuple(range(0, m, d)) if d else (0,)
    achievable = tuple(sorted(achieved))
    missing = sorted(set(expected) - set(achievable))
    if missing:
        return PairReport(u, w, inter, achievable, expected, "fails", missing[0])
    return PairReport(u, w, inter, achievable, expected, "holds")


def brute_force_udp(G: EdgeLabeledGraph, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> UdpReport:
    """Decide the UDP over Z/mZ by enumerating every spline.

    For each connected pair the set of realized differences is compared with
    the residues in the intersection ideal.  With ``jobs > 1`` the values of
    the first vertex are split across worker processes and the difference
    sets are merged by union, so the report does not depend on ``jobs``.
    """
    m, constraints = _brute_setup(G, budget)
    index_pairs = []
    for comp in G.components():
        for a, b in itertools.combinations(comp, 2):
            index_pairs.append((G.position(a), G.position(b)))
    index_pairs.sort()

    chunks = [list(range(m))] if jobs <= 1 else [list(range(m))[k::jobs] for k in range(min(jobs, m))]
    tasks = [(m, constraints, c, index_pairs) for c in chunks]
    if len(tasks) == 1:
        results = [_differences(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(tasks)) as pool:
            results = list(pool.map(_differences, tasks))
    merged = {p: set() for p in index_pairs}
    for r in results:
        for p, s in r.items():
            merged[p] |= s

    reports = []
    for i, j in index_pairs:
        u, w = G.vertices[i], G.vertices[j]
        reports.append(compare_differences(u, w, paths_intersection_ideal(G, u, w), merged[i, j]))
    verdict = "fails" if any(p.verdict == "fails" for p in reports) else "holds"
    return UdpReport(verdict, reports)


# -- counterexample witnesses ----------------------------------------------


@dataclass
class WitnessReport:
    """Confirmation status of a claimed UDP counterexample ``(u, w, x)``.

    ``outcome`` is "confirmed" (x lies in every path ideal and provably
    outside ``I(u, z) + I(z, w)``), "rejected" (x is zero or outside some path
    ideal, so it is not a counterexample) or "unconfirmed" (anything else,
    including every unknown membership).
    """

    u: str
    w: str
    target: RingValue
    outcome: str
    reason: str
    path_checks: List[Tuple[Tuple[str, ...], Membership]] = field(default_factory=list)
    cut: Optional[str] = None
    rhs: Optional[Ideal] = None
    rhs_check: Optional[Membership] = None

    def render(self) -> str:
        lines = [f"witness {self.target} for pair {self.u} {self.w}"]
        for P, m in self.path_checks:
            lines.append(f"  path {'-'.join(P)}: {m.describe()}")
        if self.rhs_check is not None:
            lines.append(f"  cut {self.cut}: {self.rhs_check.describe()}")
        lines.append(f"  outcome: {self.outcome} ({self.reason})")
        return "\n".join(lines)


def verify_non_udp_witness(G: EdgeLabeledGraph, u, w, x, cut=None,
                           search_bound: Optional[int] = None) -> WitnessReport:
    """Check that no spline on ``G`` can have ``rho(u) - rho(w) = x`` although
    ``x`` lies in every ``u``-``w`` path ideal."""
    x = G.ring(x)
    report = WitnessReport(u, w, x, "unconfirmed", "")
    if x.is_zero():
        report.outcome, report.reason = "rejected", "0 is realized by every constant spline"
        return report
    for P, I in path_ideals(G, u, w):
        report.path_checks.append((P, ideal_contains(I, x, search_bound)))
    verdicts = [m.verdict for _, m in report.path_checks]
    if Verdict.NO in verdicts:
        report.outcome, report.reason = "rejected", "target lies outside a path ideal"
        return report
    if Verdict.UNKNOWN in verdicts:
        report.reason = "a path-ideal membership is unknown"
        return report

    if cut is not None:
        decs = [find_cut_decomposition(G, cut)]
    else:
        decs = cut_decompositions(G)
    decs = [d for d in decs if u != d.cut and w != d.cut and d.side_of(u) != d.side_of(w)]
    if not decs:
        report.reason = "no cut vertex separates the pair"
        return report
    dec = decs[0]
    report.cut = dec.cut
    try:
        report.rhs = ideal_sum(_side_ideal(G, u, dec.cut), _side_ideal(G, w, dec.cut))
    except NonPrincipalIntersection:
        report.reason = "a side intersection is not principal, so I(u,z) + I(z,w) cannot be formed"
        return report
    report.rhs_check = ideal_contains(report.rhs, x, search_bound)
    v = report.rhs_check.verdict
    if v is Verdict.NO:
        report.outcome, report.reason = "confirmed", "target lies outside I(u,z) + I(z,w)"
    elif v is Verdict.YES:
        report.reason = "target lies in I(u,z) + I(z,w), so a spline realizes it"
    else:
        report.reason = "membership in I(u,z) + I(z,w) is unknown"
    return report
