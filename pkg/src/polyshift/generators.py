"""Seeded instance generators for the fuzz harness.

Every family produces its instances constructively, so membership in the
target class (polymatroidal or componentwise polymatroidal) is guaranteed
by closure results rather than rejection sampling; the defining check is
still run on every generated ideal and a violation is a hard error.
Identical recipe and seed always regenerate the identical instance.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .monomials import MonomialIdeal
from .polymatroids import (
    complete_multipartite,
    edge_ideal,
    is_componentwise_polymatroidal,
    is_polymatroidal,
    principal_borel,
    veronese,
)
from .primes import prime_ideal

FAMILIES = (
    "veronese",
    "borel",
    "multipartite-edge",
    "transversal-product",
    "strong-exchange",
    "intersection-bh",
    "random-restriction",
    "explicit",
)


@dataclass(frozen=True)
class InstanceRecipe:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def rng(self) -> random.Random:
        # string seeding hashes with sha512, stable across platforms
        return random.Random(f"{self.seed}:{self.family}:{json.dumps(self.params, sort_keys=True)}")

    def to_json(self) -> dict:
        return {"family": self.family, "params": self.params, "seed": self.seed}

    @classmethod
    def from_json(cls, data) -> "InstanceRecipe":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["family"], dict(data.get("params", {})), int(data.get("seed", 0)))


def _rand_cap_vector(rng, n, entry_max, min_total):
    while True:
        a = tuple(rng.randint(0, entry_max) for _ in range(n))
        if sum(a) >= min_total and any(a):
            return a


def _gen_veronese(rng, params):
    if "a" in params:
        return veronese(params["a"], params["d"])
    n = params.get("n", rng.randint(2, params.get("n_max", 4)))
    entry_max = params.get("entry_max", 3)
    d_max = params.get("d_max", 3)
    a = _rand_cap_vector(rng, n, entry_max, 1)
    d = rng.randint(1, min(sum(a), d_max))
    return veronese(a, d)


def _gen_borel(rng, params):
    if "u" in params:
        return principal_borel(params["u"])
    n = params.get("n", rng.randint(2, params.get("n_max", 4)))
    d = rng.randint(1, params.get("d_max", 3))
    u = [0] * n
    for _ in range(d):
        u[rng.randrange(n)] += 1
    if not any(u[1:]):
        u[rng.randint(1, n - 1)] += 1  # avoid pure x1 powers, they are principal
    return principal_borel(u)


def _gen_multipartite(rng, params):
    if "sizes" in params:
        sizes = params["sizes"]
    else:
        n = params.get("n", rng.randint(3, params.get("n_max", 5)))
        sizes = []
        left = n
        while left:
            s = rng.randint(1, left)
            sizes.append(s)
            left -= s
        if len(sizes) == 1:  # at least two parts, so the ideal is nonzero
            sizes = [1, sizes[0] - 1] if sizes[0] > 1 else [1, 1]
    return edge_ideal(complete_multipartite(sizes))


def _gen_transversal_product(rng, params):
    if "primes" in params:
        n = params["n"]
        primesets = [[i - 1 for i in p] for p in params["primes"]]
    else:
        n = params.get("n", rng.randint(2, params.get("n_max", 4)))
        factors = rng.randint(1, params.get("factors_max", 3))
        primesets = []
        for _ in range(factors):
            size = rng.randint(1, n)
            primesets.append(rng.sample(range(n), size))
    out = MonomialIdeal.ring(n)
    for p in primesets:
        out = out.product(prime_ideal(n, p))
    return out


def _gen_strong_exchange(rng, params):
    if "a" in params:
        core = veronese(params["a"], params["d"])
        u = tuple(params.get("u", (0,) * len(params["a"])))
    else:
        n = params.get("n", rng.randint(2, params.get("n_max", 4)))
        a = _rand_cap_vector(rng, n, params.get("entry_max", 2), 1)
        d = rng.randint(1, min(sum(a), params.get("d_max", 3)))
        core = veronese(a, d)
        u = [0] * n
        for _ in range(rng.randint(0, 2)):
            u[rng.randrange(n)] += 1
        u = tuple(u)
    return core.scale(u)


def _gen_intersection_bh(rng, params):
    """Intersections of powers of height-(n-1) monomial primes; any two of
    those primes sum to the maximal ideal, making the result componentwise
    polymatroidal."""
    if "powers" in params:
        n = params["n"]
        powers = {int(k) - 1: v for k, v in params["powers"].items()}
    else:
        n = params.get("n", rng.randint(2, params.get("n_max", 4)))
        r = rng.randint(1, n)
        missing = rng.sample(range(n), r)
        powers = {i: rng.randint(1, params.get("k_max", 3)) for i in missing}
    out = None
    for i, k in sorted(powers.items()):
        p = prime_ideal(n, [j for j in range(n) if j != i]).power(k)
        out = p if out is None else out.intersect(p)
    return out


def _gen_random_restriction(rng, params):
    if "base" in params:
        base = generate(InstanceRecipe.from_json(params["base"]))
        a = tuple(params["a"])
        return base.restriction(a)
    kind = rng.choice(["veronese", "transversal-product"])
    base = _DISPATCH[kind](rng, {"n_max": params.get("n_max", 4)})
    # cap at the multidegree of a surviving generator so the result is nonzero
    keep = rng.choice(base.gens)
    deg = base.bounding_multidegree()
    a = tuple(rng.randint(keep[i], deg[i]) for i in range(base.n))
    return base.restriction(a)


def _gen_explicit(rng, params):
    return MonomialIdeal(params["n"], [tuple(g) for g in params["gens"]])


_DISPATCH = {
    "veronese": _gen_veronese,
    "borel": _gen_borel,
    "multipartite-edge": _gen_multipartite,
    "transversal-product": _gen_transversal_product,
    "strong-exchange": _gen_strong_exchange,
    "intersection-bh": _gen_intersection_bh,
    "random-restriction": _gen_random_restriction,
    "explicit": _gen_explicit,
}

_DEFINING_CHECK = {
    "veronese": is_polymatroidal,
    "borel": is_polymatroidal,
    "multipartite-edge": is_polymatroidal,
    "transversal-product": is_polymatroidal,
    "strong-exchange": is_polymatroidal,
    "intersection-bh": is_componentwise_polymatroidal,
    "random-restriction": is_polymatroidal,
    "explicit": None,
}


def generate(recipe: InstanceRecipe) -> MonomialIdeal:
    """Build the instance for a recipe; pure in (family, params, seed)."""
    if recipe.family not in _DISPATCH:
        raise ValueError(f"unknown family {recipe.family!r}; known: {sorted(_DISPATCH)}")
    ideal = _DISPATCH[recipe.family](recipe.rng(), recipe.params)
    check = _DEFINING_CHECK[recipe.family]
    if check is not None and not check(ideal):
        raise AssertionError(f"{recipe.family} instance failed its defining check: {ideal}")
    return ideal
