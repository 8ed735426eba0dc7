"""Finitely generated ideals of Z, Z/mZ and Z[x].

Over Z and Z/mZ every ideal is principal and is stored as its canonical
generator, so all questions are decided by divisibility.  Over Z[x] an ideal
is a cleaned-up generator list; membership is settled by an explicit cofactor
search (yes), a reduction modulo a small prime (no), or reported as unknown.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from . import polynomial as poly
from .errors import (
    CrtInconsistency,
    CrtInfeasible,
    MembershipUndecided,
    NonPrincipalIntersection,
    NotInSum,
    RingMismatch,
    UnsupportedRing,
)
from .intlinalg import solve_integer_system, xgcd
from .rings import Ring, RingValue

CERTIFICATE_PRIMES = (2, 3, 5, 7, 11, 13)
CERTIFICATE_POINTS = (0, 1, -1, 2, -2, 3, -3)
EXTRA_DEGREE = 4


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """Conjunction of three-valued answers: any NO wins, then any UNKNOWN."""
    seen = set(verdicts)
    if Verdict.NO in seen:
        return Verdict.NO
    if Verdict.UNKNOWN in seen:
        return Verdict.UNKNOWN
    return Verdict.YES


def _normalize(ring: Ring, gens: Sequence[RingValue]) -> Tuple[RingValue, ...]:
    if ring.kind == "integers":
        return (ring(math.gcd(*(g.payload for g in gens))),)
    if ring.is_modular:
        m = ring.modulus
        d = math.gcd(m, *(g.payload for g in gens))
        return (ring(0 if d == m else d),)

    polys = []
    const = 0
    for g in gens:
        f = poly.positive(g.payload)
        if not f:
            continue
        if len(f) == 1:
            const = math.gcd(const, f[0])
        elif f not in polys:
            polys.append(f)
    if const == 1:
        return (ring(1),)
    if const:
        polys.insert(0, (const,))
    # drop generators that are multiples of another generator
    kept = [
        f for f in polys
        if not any(h != f and poly.exact_quotient(f, h) is not None for h in polys)
    ]
    if not kept:
        return (ring(0),)
    return tuple(RingValue(ring, f) for f in kept)


@dataclass(frozen=True, init=False)
class Ideal:
    """A finitely generated ideal, normalized on construction.

    >>> Ring.integers().ideal(4, 6)
    Ideal(Z, ⟨2⟩)
    """

    ring: Ring
    generators: Tuple[RingValue, ...]

    def __init__(self, ring: Ring, generators: Iterable[Union[RingValue, int, str]]):
        gens = [ring(g) for g in generators]
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", _normalize(ring, gens))

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    @property
    def generator(self) -> RingValue:
        if not self.is_principal:
            raise NonPrincipalIntersection(f"{self} is not presented as a principal ideal")
        return self.generators[0]

    @property
    def is_zero(self) -> bool:
        return self.generators[0].is_zero() and self.is_principal

    def __str__(self) -> str:
        return "⟨" + ", ".join(str(g) for g in self.generators) + "⟩"

    def __repr__(self) -> str:
        return f"Ideal({self.ring}, {self})"


def _same_ring(*items) -> Ring:
    rings = {it.ring for it in items}
    if len(rings) != 1:
        raise RingMismatch("operands live in different rings: " + ", ".join(sorted(map(str, rings))))
    return rings.pop()


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    return Ideal(ring, I.generators + J.generators)


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    if ring.is_polynomial:
        if not (I.is_principal and J.is_principal):
            # nested ideals intersect to the smaller one
            if ideal_subset(I, J) is Verdict.YES:
                return I
            if ideal_subset(J, I) is Verdict.YES:
                return J
            raise NonPrincipalIntersection(f"cannot intersect {I} and {J} in {ring}")
        return Ideal(ring, [RingValue(ring, poly.lcm(I.generator.payload, J.generator.payload))])
    a, b = I.generator.payload, J.generator.payload
    if ring.is_modular and (a == 0 or b == 0):
        return Ideal(ring, [0])
    return Ideal(ring, [math.lcm(a, b)])


def sum_of(ideals: Sequence[Ideal]) -> Ideal:
    return reduce(ideal_sum, ideals)


def intersection_of(ideals: Sequence[Ideal]) -> Ideal:
    return reduce(ideal_intersect, ideals)


# -- membership ------------------------------------------------------------


@dataclass(frozen=True)
class DivisibilityWitness:
    """Non-membership in a principal ideal: the generator does not divide the target."""

    generator: RingValue
    remainder: Optional[RingValue] = None

    def __str__(self) -> str:
        if self.remainder is None:
            return f"{self.generator} does not divide the target"
        return f"{self.generator} does not divide the target (remainder {self.remainder})"


@dataclass(frozen=True)
class PrimeReduction:
    """Non-membership certified by reducing modulo the prime ``p``.

    If ``t`` were in ``I`` then ``t mod p`` would lie in ``I mod p``, which is
    the principal ideal generated by ``reduced_gcd`` in GF(p)[x].
    """

    p: int
    reduced_gcd: tuple
    reduced_target: tuple
    reason: str

    def check(self, ideal: Ideal, target: RingValue) -> bool:
        g: tuple = ()
        for f in ideal.generators:
            g = poly.gcd_mod(g, f.payload, self.p)
        return g == self.reduced_gcd and not poly.divides_mod(g, target.payload, self.p)

    def __str__(self) -> str:
        return f"prime {self.p}: {self.reason}"


@dataclass(frozen=True)
class EvaluationReduction:
    """Non-membership certified by the substitution ``x -> point``.

    Evaluation is a ring map onto Z, so ``t in I`` would force ``t(point)``
    into the ideal of Z generated by the generators' values, i.e. to be a
    multiple of ``image_gcd``.
    """

    point: int
    image_gcd: int
    target_value: int

    def check(self, ideal: Ideal, target: RingValue) -> bool:
        g = math.gcd(*(_evaluate(f.payload, self.point) for f in ideal.generators))
        v = _evaluate(target.payload, self.point)
        return g == self.image_gcd and v == self.target_value and (v != 0 if g == 0 else v % g != 0)

    def __str__(self) -> str:
        return (f"at x = {self.point} the ideal maps to ⟨{self.image_gcd}⟩ in Z, "
                f"which does not contain {self.target_value}")


def _evaluate(f: tuple, a: int) -> int:
    v = 0
    for c in reversed(f):
        v = v * a + c
    return v


@dataclass(frozen=True)
class Membership:
    """Outcome of ``target in ideal``.

    ``cofactors`` (for YES) satisfy ``sum(f*g) == target`` over the ideal's
    generators; :meth:`recheck` recomputes that sum.
    """

    ideal: Ideal
    target: RingValue
    verdict: Verdict
    cofactors: Tuple[RingValue, ...] = ()
    certificate: Union[DivisibilityWitness, PrimeReduction, EvaluationReduction, None] = None

    def recheck(self) -> bool:
        if self.verdict is Verdict.YES:
            total = self.ideal.ring.zero()
            for f, g in zip(self.cofactors, self.ideal.generators, strict=True):
                total = total + f * g
            return total == self.target
        if isinstance(self.certificate, (PrimeReduction, EvaluationReduction)):
            return self.certificate.check(self.ideal, self.target)
        if isinstance(self.certificate, DivisibilityWitness):
            return ideal_contains(self.ideal, self.target).verdict is Verdict.NO
        return self.verdict is Verdict.UNKNOWN

    def describe(self) -> str:
        head = f"{self.target} in {self.ideal}: {self.verdict}"
        if self.verdict is Verdict.YES:
            terms = " + ".join(f"({f})*({g})" for f, g in zip(self.cofactors, self.ideal.generators))
            return f"{head} [{self.target} = {terms}]"
        if self.certificate is not None:
            return f"{head} [{self.certificate}]"
        return head


def default_search_bound(I: Ideal, t: RingValue) -> int:
    return max(poly.degree(t.payload), *(poly.degree(g.payload) for g in I.generators)) + EXTRA_DEGREE


def _cofactor_search(gens: Sequence[tuple], t: tuple, bound: int) -> Optional[List[tuple]]:
    width = bound + 1
    top = max(bound + max(len(g) - 1 for g in gens), len(t) - 1)
    rows = top + 1
    A = [[0] * (width * len(gens)) for _ in range(rows)]
    for i, g in enumerate(gens):
        for j in range(width):
            for d, c in enumerate(g):
                A[j + d][i * width + j] = c
    b = [t[d] if d < len(t) else 0 for d in range(rows)]
    y = solve_integer_system(A, b)
    if y is None:
        return None
    return [poly.strip(y[i * width:(i + 1) * width]) for i in range(len(gens))]


def _prime_certificate(gens: Sequence[tuple], t: tuple, ring: Ring) -> Optional[PrimeReduction]:
    for p in CERTIFICATE_PRIMES:
        g: tuple = ()
        for f in gens:
            g = poly.gcd_mod(g, f, p)
        tp = poly.reduce_mod(t, p)
        if not poly.divides_mod(g, tp, p):
            v = ring.variable
            if g:
                why = (f"mod {p} the ideal is generated by {poly.render(g, v)}, "
                       f"which does not divide {poly.render(tp, v)}")
            else:
                why = f"mod {p} the ideal is zero but the target reduces to {poly.render(tp, v)}"
            return PrimeReduction(p, g, tp, why)
    return None


def _evaluation_certificate(gens: Sequence[tuple], t: tuple) -> Optional[EvaluationReduction]:
    for a in CERTIFICATE_POINTS:
        g = math.gcd(*(_evaluate(f, a) for f in gens))
        v = _evaluate(t, a)
        if (v != 0) if g == 0 else (v % g != 0):
            return EvaluationReduction(a, g, v)
    return None


def ideal_contains(I: Ideal, t, search_bound: Optional[int] = None) -> Membership:
    """Decide (or try to decide) whether ``t`` lies in ``I``.

    Over Z and Z/mZ the answer is always YES or NO.  Over Z[x] a principal
    ideal is decided by exact division; otherwise cofactors of degree at most
    ``search_bound`` are searched for, then prime-reduction certificates are
    tried (primes first, then evaluation at small integers), and UNKNOWN is
    returned if nothing succeeds.
    """
    ring = I.ring
    t = ring(t)
    gens = I.generators
    if t.is_zero():
        return Membership(I, t, Verdict.YES, tuple(ring.zero() for _ in gens))

    if not ring.is_polynomial:
        d = gens[0].payload
        if d != 0 and t.payload % d == 0:
            return Membership(I, t, Verdict.YES, (ring(t.payload // d),))
        rem = ring(t.payload % d) if d else t
        return Membership(I, t, Verdict.NO, certificate=DivisibilityWitness(gens[0], rem))

    if I.is_principal:
        g = gens[0].payload
        if not g:
            return Membership(I, t, Verdict.NO, certificate=DivisibilityWitness(gens[0]))
        q = poly.exact_quotient(t.payload, g)
        if q is not None:
            return Membership(I, t, Verdict.YES, (RingValue(ring, q),))
        return Membership(I, t, Verdict.NO, certificate=DivisibilityWitness(gens[0]))

    bound = default_search_bound(I, t) if search_bound is None else search_bound
    payloads = [g.payload for g in gens]
    found = _cofactor_search(payloads, t.payload, bound)
    if found is not None:
        cof = tuple(RingValue(ring, f) for f in found)
        return Membership(I, t, Verdict.YES, cof)
    cert = _prime_certificate(payloads, t.payload, ring) or _evaluation_certificate(payloads, t.payload)
    if cert is not None:
        return Membership(I, t, Verdict.NO, certificate=cert)
    return Membership(I, t, Verdict.UNKNOWN)


def ideal_subset(I: Ideal, J: Ideal, search_bound: Optional[int] = None) -> Verdict:
    """Is ``I`` contained in ``J``?  Checked generator by generator."""
    _same_ring(I, J)
    verdicts = []
    for g in I.generators:
        v = ideal_contains(J, g, search_bound).verdict
        if v is Verdict.NO:
            return v
        verdicts.append(v)
    return combine(verdicts)


def ideal_equal(I: Ideal, J: Ideal, search_bound: Optional[int] = None) -> Verdict:
    ring = _same_ring(I, J)
    if I.generators == J.generators:
        return Verdict.YES
    if not ring.is_polynomial:
        return Verdict.NO
    return combine([ideal_subset(I, J, search_bound), ideal_subset(J, I, search_bound)])


# -- decomposition and CRT -------------------------------------------------


def _centered(c: int, n: int) -> int:
    if n <= 0:
        return c
    c %= n
    return c - n if 2 * c > n else c


def _decompose_integers(x: int, gens: Sequence[int]) -> List[int]:
    k = len(gens)
    parts = []
    rest = x
    for i, g in enumerate(gens):
        if i == k - 1:
            if (g == 0 and rest != 0) or (g != 0 and rest % g):
                raise NotInSum(f"{x} is not in the sum of the ideals generated by {list(gens)}")
            parts.append(rest)
            break
        tail = math.gcd(*gens[i + 1:])
        h, s, _ = xgcd(g, tail)
        if h == 0:
            if rest:
                raise NotInSum(f"{x} is not in the sum of the ideals generated by {list(gens)}")
            parts.append(0)
            continue
        if rest % h:
            raise NotInSum(f"{x} is not in the sum of the ideals generated by {list(gens)}")
        c = _centered(s * (rest // h), tail // h)
        parts.append(c * g)
        rest -= c * g
    return parts


def decompose_into_sum(x, ideals: Sequence[Ideal]) -> List[RingValue]:
    """Write ``x`` as ``a_1 + ... + a_k`` with ``a_i`` in ``ideals[i]``.

    Over Z the ideals are peeled off in order using the extended gcd of the
    remaining generators.  Z/mZ is handled by lifting to Z; Z[x] uses the
    cofactors of a membership proof in the combined ideal.
    """
    if not ideals:
        raise ValueError("need at least one ideal")
    ring = _same_ring(*ideals)
    x = ring(x)
    if ring.kind == "integers":
        return [ring(a) for a in _decompose_integers(x.payload, [I.generator.payload for I in ideals])]
    if ring.is_modular:
        m = ring.modulus
        gens = [I.generator.payload or m for I in ideals]
        try:
            parts = _decompose_integers(x.payload, gens + [m])
        except NotInSum:
            raise NotInSum(f"{x} is not in the sum of {', '.join(map(str, ideals))}") from None
        return [ring(a) for a in parts[:-1]]

    total = Ideal(ring, [g for I in ideals for g in I.generators])
    # decompose against the raw generator lists so every term maps to its own ideal
    flat = [(i, g) for i, I in enumerate(ideals) for g in I.generators]
    raw = [g.payload for _, g in flat if not g.is_zero()]
    if x.is_zero():
        return [ring.zero() for _ in ideals]
    if total.is_zero:
        raise NotInSum(f"{x} is not in the zero ideal")
    bound = default_search_bound(total, x)
    found = _cofactor_search(raw, x.payload, bound) if raw else None
    if found is None:
        verdict = ideal_contains(total, x).verdict
        if verdict is Verdict.NO:
            raise NotInSum(f"{x} is not in {total}")
        raise MembershipUndecided(f"could not decide whether {x} lies in {total}")
    parts = [ring.zero() for _ in ideals]
    it = iter(found)
    for i, g in flat:
        if g.is_zero():
            continue
        parts[i] = parts[i] + RingValue(ring, next(it)) * g
    return parts


def _merge(a: int, n: int, b: int, k: int) -> Optional[Tuple[int, int]]:
    """Combine x = a mod n and x = b mod k (modulus 0 means exact equality)."""
    if n == 0 and k == 0:
        return (a, 0) if a == b else None
    if n == 0:
        return (a, 0) if (a - b) % k == 0 else None
    if k == 0:
        return (b, 0) if (b - a) % n == 0 else None
    g, s, _ = xgcd(n, k)
    if (b - a) % g:
        return None
    lcm = n // g * k
    x = a + n * ((b - a) // g * s % (k // g))
    return x % lcm, lcm


def _pair_ok(a: int, n: int, b: int, k: int) -> bool:
    g = math.gcd(n, k)
    return a == b if g == 0 else (a - b) % g == 0


def crt_solve(congruences: Sequence[Tuple[object, Ideal]]) -> RingValue:
    """Solve ``x = x_i mod I_i`` for all i, merging left to right.

    Returns the least nonnegative solution modulo the combined ideal (over Z
    with a zero ideal present, the unique exact value).  Raises
    :class:`CrtInfeasible` naming a pair ``(j, k)`` with
    ``x_j - x_k`` outside ``I_j + I_k``.
    """
    if not congruences:
        raise ValueError("empty congruence system")
    ring = _same_ring(*(I for _, I in congruences))
    if ring.is_polynomial:
        raise UnsupportedRing(f"no CRT solver over {ring}")
    m = ring.modulus if ring.is_modular else 0
    system = []
    for x, I in congruences:
        v = ring(x).payload
        d = I.generator.payload
        system.append((v, (d or m) if ring.is_modular else d))

    if len(system) == 1:
        return ring(congruences[0][0])
    acc = system[0]
    for k in range(1, len(system)):
        merged = _merge(acc[0], acc[1], *system[k])
        if merged is None:
            for j in range(k):
                if not _pair_ok(*system[j], *system[k]):
                    raise CrtInfeasible(j, k)
            raise CrtInconsistency(f"congruence {k} conflicts with the system although every pair is compatible")
        acc = merged
    return ring(acc[0])
