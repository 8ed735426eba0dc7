"""Slow, obviously-correct reference computations used to freeze expected values.

Nothing here calls into the library's algorithms; graphs are plain
``(vertices, {(a, b): d})`` data with integer generators.
"""

import itertools
import math


def simple_paths(vertices, edges, u, w):
    """Every simple u-w path, by trying each ordered subset of the other vertices."""
    adj = {frozenset(e) for e in edges}
    others = [v for v in vertices if v not in (u, w)]
    found = []
    for k in range(len(others) + 1):
        for mid in itertools.permutations(others, k):
            P = (u, *mid, w)
            if all(frozenset(p) in adj for p in zip(P, P[1:])):
                found.append(P)
    return found


def label(edges, a, b):
    return edges[(a, b)] if (a, b) in edges else edges[(b, a)]


def intersection_generator(vertices, edges, u, w, m=0):
    """Generator of the intersection of the u-w path ideals over Z (m=0) or Z/m."""
    gens = []
    for P in simple_paths(vertices, edges, u, w):
        g = 0
        for a, b in zip(P, P[1:]):
            g = math.gcd(g, label(edges, a, b))
        gens.append(math.gcd(g, m))
    if m:
        # over Z/m the ideal generated by d is the ideal of gcd(d, m); intersecting
        # takes lcm of those divisors, with m itself standing for zero
        out = 1
        for g in gens:
            out = math.lcm(out, g or m)
        return out % m
    out = 1
    for g in gens:
        out = 0 if g == 0 or out == 0 else math.lcm(out, g)
    return out


def splines_mod(vertices, edges, m):
    """All splines over Z/m by plain product enumeration."""
    idx = {v: i for i, v in enumerate(vertices)}
    checks = [(idx[a], idx[b], math.gcd(d, m) or m) for (a, b), d in edges.items()]
    for vals in itertools.product(range(m), repeat=len(vertices)):
        if all((vals[i] - vals[j]) % d == 0 for i, j, d in checks):
            yield vals


def difference_sets(vertices, edges, m):
    n = len(vertices)
    out = {(i, j): set() for i in range(n) for j in range(i + 1, n)}
    for vals in splines_mod(vertices, edges, m):
        for (i, j), s in out.items():
            s.add((vals[i] - vals[j]) % m)
    return out


def crt_search(system, modulus=0):
    """Least nonnegative x with x = a mod n for every (a, n); None if none exists.

    Over Z the search runs through one full period of the combined modulus,
    over Z/m through the residues of m (with n = 0 read as n = m).
    """
    if modulus:
        system = [(a % modulus, n or modulus) for a, n in system]
        candidates = range(modulus)
    else:
        exact = [a for a, n in system if n == 0]
        if exact:
            candidates = [exact[0]]
        else:
            period = 1
            for _, n in system:
                period = math.lcm(period, n)
            candidates = range(period)
    for x in candidates:
        if all((x - a) % n == 0 if n else x == a for a, n in system):
            return x
    return None


def poly_eval(coeffs, a):
    return sum(c * a**i for i, c in enumerate(coeffs))
