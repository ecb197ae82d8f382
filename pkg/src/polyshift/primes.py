"""Associated primes, v-numbers, monomial localization and height.

Ass here always means the associated primes of the quotient ring S/I:
a monomial prime P is associated exactly when P = (I : w) for a monomial
witness w, and witnesses can be confined to the box below the lcm of the
generators.  The sweep over that box is exact, not heuristic, and is
vectorized over all candidate witnesses at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import ResourceBudgetError
from .monomials import MonomialIdeal, support

MonomialPrime = frozenset  # of 0-based variable indices


def prime_ideal(n: int, variables) -> MonomialIdeal:
    """The monomial prime generated by the named variables (0-based)."""
    gens = []
    for i in sorted(variables):
        v = [0] * n
        v[i] = 1
        gens.append(tuple(v))
    return MonomialIdeal(n, gens, _minimal=True)


def prime_to_json(p: MonomialPrime):
    return sorted(i + 1 for i in p)


@dataclass(frozen=True)
class AssResult:
    """Associated primes with one minimal-degree monomial witness each."""

    n: int
    primes: frozenset
    witnesses: dict

    def __contains__(self, prime) -> bool:
        return frozenset(prime) in self.primes

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "primes": sorted(prime_to_json(p) for p in self.primes),
            "witnesses": {
                ",".join(map(str, prime_to_json(p))): list(w)
                for p, w in sorted(self.witnesses.items(), key=lambda kv: prime_to_json(kv[0]))
            },
        }


def ass(ideal: MonomialIdeal, budget=2_000_000) -> AssResult:
    """All associated primes of S/I, with minimal-degree witnesses.

    Every candidate witness w <= lcm(G(I)) componentwise is classified at
    once: w is a witness for the prime on variable set V exactly when w is
    outside I, V collects the variables x_j with some generator quotient
    u / gcd(u, w) equal to x_j, and every generator quotient meets V.
    """
    if not ideal.is_proper:
        raise ValueError("associated primes need a nonzero proper ideal")
    n = ideal.n
    box = ideal.bounding_multidegree()
    npoints = prod(b + 1 for b in box)
    if npoints > budget:
        raise ResourceBudgetError(
            f"witness box has {npoints} points, over the budget of {budget}"
        )
    axes = [np.arange(b + 1, dtype=np.int32) for b in box]
    grid = np.meshgrid(*axes, indexing="ij")
    W = np.stack([g.reshape(-1) for g in grid], axis=1)  # (N, n)
    G = np.array(ideal.gens, dtype=np.int32)  # (g, n)

    N = W.shape[0]
    in_ideal = np.zeros(N, dtype=bool)
    vmask = np.zeros((N, n), dtype=bool)
    for u in G:
        diff = u[None, :] - W
        pos = diff > 0
        cnt = pos.sum(axis=1)
        in_ideal |= cnt == 0
        rows = np.nonzero(cnt == 1)[0]
        if rows.size:
            js = pos[rows].argmax(axis=1)
            good = diff[rows, js] == 1
            vmask[rows[good], js[good]] = True

    ok = ~in_ideal
    for u in G:
        pos = (u[None, :] - W) > 0
        ok &= (pos & vmask).any(axis=1)

    primes = {}
    for r in np.nonzero(ok)[0]:
        p = frozenset(int(j) for j in np.nonzero(vmask[r])[0])
        w = tuple(int(x) for x in W[r])
        d = sum(w)
        old = primes.get(p)
        if old is None or d < sum(old) or (d == sum(old) and w < old):
            primes[p] = w
    return AssResult(n, frozenset(primes), primes)


def v_p(ideal: MonomialIdeal, prime, ass_result: AssResult | None = None) -> int:
    """Minimal degree of a monomial witness w with (I : w) equal to the prime."""
    prime = frozenset(prime)
    if ass_result is None:
        ass_result = ass(ideal)
    if prime not in ass_result.primes:
        raise ValueError(f"{sorted(prime)} is not an associated prime")
    return sum(ass_result.witnesses[prime])


def v_number(ideal: MonomialIdeal, ass_result: AssResult | None = None) -> int:
    """Minimum of the per-prime witness degrees."""
    if ass_result is None:
        ass_result = ass(ideal)
    return min(sum(w) for w in ass_result.witnesses.values())


def localize(ideal: MonomialIdeal, prime) -> MonomialIdeal:
    """Monomial localization: substitute 1 for the variables outside the
    prime, landing in the polynomial ring on the prime's variables."""
    keep = sorted(frozenset(prime))
    if not keep:
        raise ValueError("localization at the empty prime is undefined")
    if any(i < 0 or i >= ideal.n for i in keep):
        raise ValueError("prime variable out of range")
    return MonomialIdeal(len(keep), (tuple(g[i] for i in keep) for g in ideal.gens))


def minimal_primes(ideal: MonomialIdeal):
    """Minimal monomial primes, as the minimal transversals of the
    generator supports."""
    if not ideal.is_proper:
        raise ValueError("minimal primes need a nonzero proper ideal")
    supports = sorted({support(g) for g in ideal.gens}, key=len)
    found = []

    def rec(idx, chosen):
        while idx < len(supports) and supports[idx] & chosen:
            idx += 1
        if idx == len(supports):
            found.append(frozenset(chosen))
            return
        for v in sorted(supports[idx]):
            rec(idx + 1, chosen | {v})

    rec(0, frozenset())
    out = set()
    for t in sorted(found, key=len):
        if not any(m <= t for m in out):
            out.add(t)
    return out


def height(ideal: MonomialIdeal) -> int:
    return min(len(p) for p in minimal_primes(ideal))
