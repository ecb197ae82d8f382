"""Discrete polymatroids, exchange-property checks and the Möbius function.

A discrete polymatroid is stored by its set of bases (exponent vectors of
equal modulus satisfying the exchange property) together with a cage, a
vector dominating every base componentwise.  The poset of lattice points
(integer vectors dominated by some base, ordered componentwise) carries a
Möbius function computed against an adjoined top element; its nonvanishing
at suitable points decides membership in homological shift ideals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import IdealParseError
from .monomials import MonomialIdeal, degree, divides

# ---------------------------------------------------------------------------
# exchange properties


def exchange_violation(ideal: MonomialIdeal):
    """First witness (u, v, i) violating the exchange property, else None.

    For every ordered generator pair (u, v) and every i with u_i > v_i there
    must exist j with u_j < v_j and x_j * u / x_i a generator.  Requires an
    equigenerated ideal.
    """
    if not ideal.is_equigenerated:
        raise ValueError("exchange property is defined for equigenerated ideals")
    gens = ideal.gens
    gen_set = set(gens)
    n = ideal.n
    for u in gens:
        for v in gens:
            if u == v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(n):
                    if u[j] >= v[j]:
                        continue
                    w = list(u)
                    w[i] -= 1
                    w[j] += 1
                    if tuple(w) in gen_set:
                        ok = True
                        break
                if not ok:
                    return (u, v, i)
    return None


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    """Equigenerated with the exchange property.

    The zero ideal is not polymatroidal by convention; the whole ring is
    (single base, the zero vector).
    """
    if ideal.is_zero:
        return False
    if not ideal.is_equigenerated:
        return False
    return exchange_violation(ideal) is None


def check_symmetric_exchange(ideal: MonomialIdeal) -> bool:
    """For all u, v and i with u_i < v_i there is j with u_j > v_j such that
    x_i u / x_j and x_j v / x_i are both generators."""
    if not ideal.is_equigenerated:
        raise ValueError("symmetric exchange is defined for equigenerated ideals")
    gens = ideal.gens
    gen_set = set(gens)
    n = ideal.n
    for u in gens:
        for v in gens:
            if u == v:
                continue
            for i in range(n):
                if u[i] >= v[i]:
                    continue
                ok = False
                for j in range(n):
                    if u[j] <= v[j]:
                        continue
                    w1 = list(u)
                    w1[j] -= 1
                    w1[i] += 1
                    w2 = list(v)
                    w2[i] -= 1
                    w2[j] += 1
                    if tuple(w1) in gen_set and tuple(w2) in gen_set:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def check_strong_exchange(ideal: MonomialIdeal) -> bool:
    """For all u, v, every i with u_i > v_i and every j with u_j < v_j,
    x_j u / x_i lies in the ideal."""
    if not ideal.is_equigenerated:
        raise ValueError("strong exchange is defined for equigenerated ideals")
    gens = ideal.gens
    gen_set = set(gens)
    n = ideal.n
    for u in gens:
        for v in gens:
            if u == v:
                continue
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                for j in range(n):
                    if u[j] >= v[j]:
                        continue
                    w = list(u)
                    w[i] -= 1
                    w[j] += 1
                    if tuple(w) not in gen_set:
                        return False
    return True


def is_matroidal(ideal: MonomialIdeal) -> bool:
    return ideal.is_squarefree and is_polymatroidal(ideal)


def is_componentwise_polymatroidal(ideal: MonomialIdeal) -> bool:
    """Every nonzero graded component ideal is polymatroidal.

    Components above the maximal generator degree are maximal-ideal
    multiples of earlier ones, so checking up to that degree decides the
    property.  The zero ideal is rejected.
    """
    if ideal.is_zero:
        return False
    for j in range(ideal.alpha(), ideal.max_gen_degree() + 1):
        comp = ideal.graded_component(j)
        if not comp.is_zero and not is_polymatroidal(comp):
            return False
    return True


# ---------------------------------------------------------------------------
# named constructions


def veronese(a, d: int) -> MonomialIdeal:
    """Veronese type ideal: all monomials of degree d with exponents capped by a."""
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise ValueError("cap vector must be non-negative")
    if d < 1:
        raise ValueError("degree must be >= 1")
    if sum(a) < d:
        raise ValueError(f"cap vector {a} cannot carry degree {d}")
    n = len(a)
    gens = []

    def rec(i, left, prefix):
        if i == n - 1:
            if left <= a[i]:
                gens.append(tuple(prefix + [left]))
            return
        for e in range(min(a[i], left) + 1):
            rec(i + 1, left - e, prefix + [e])

    rec(0, d, [])
    return MonomialIdeal(n, gens, _minimal=True)


def principal_borel(u) -> MonomialIdeal:
    """Principal Borel ideal of the monomial u = x_{j_1} ... x_{j_d}.

    Generated by all x_{p_1} ... x_{p_d} with p_1 <= ... <= p_d and
    p_s <= j_s positionwise.
    """
    u = tuple(int(x) for x in u)
    n = len(u)
    if not any(u):
        raise ValueError("principal Borel ideal of the unit monomial is undefined")
    js = []
    for i, e in enumerate(u):
        js.extend([i] * e)  # 0-based, ascending
    d = len(js)
    gens = []

    def rec(s, lo, vec):
        if s == d:
            gens.append(tuple(vec))
            return
        for p in range(lo, js[s] + 1):
            vec[p] += 1
            rec(s + 1, p, vec)
            vec[p] -= 1

    rec(0, 0, [0] * n)
    return MonomialIdeal(n, gens, _minimal=True)


# ---------------------------------------------------------------------------
# graphs and edge ideals


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1 with a frozenset of sorted edge pairs."""

    n: int
    edges: frozenset

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Edges as 1-based pairs, matching the JSON interface."""
        out = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            out.add((min(a, b) - 1, max(a, b) - 1))
        return cls(n, frozenset(out))

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise IdealParseError("graph JSON needs keys 'n' and 'edges'")
        return cls.from_edges(data["n"], data["edges"])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": sorted([a + 1, b + 1] for a, b in self.edges)}

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges


def edge_ideal(graph: Graph) -> MonomialIdeal:
    gens = []
    for a, b in graph.edges:
        v = [0] * graph.n
        v[a] = 1
        v[b] = 1
        gens.append(tuple(v))
    return MonomialIdeal(graph.n, gens, _minimal=True)


def complete_multipartite(sizes) -> Graph:
    """Complete multipartite graph whose parts are consecutive intervals."""
    sizes = [int(s) for s in sizes]
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be >= 1")
    n = sum(sizes)
    bounds = []
    t = 0
    for s in sizes:
        bounds.append((t, t + s))
        t += s
    edges = set()
    for pi, (a0, a1) in enumerate(bounds):
        for qi in range(pi + 1, len(bounds)):
            b0, b1 = bounds[qi]
            for a in range(a0, a1):
                for b in range(b0, b1):
                    edges.add((a, b))
    return Graph(n, frozenset(edges))


def complement_clique_partition(graph: Graph):
    """Connected components of the complement, when each one is a clique there.

    Returns the list of components (sorted vertex lists, ordered by least
    vertex) or None when some component fails to be a complement-clique.
    A graph is complete multipartite exactly when this partition exists and
    has at least two parts.
    """
    n = graph.n
    comp_adj = [set() for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if not graph.adjacent(a, b):
                comp_adj[a].add(b)
                comp_adj[b].add(a)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        comp = []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in comp_adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comp.sort()
        for a, b in combinations(comp, 2):
            if graph.adjacent(a, b):  # complement edge missing inside the part
                return None
        parts.append(comp)
    parts.sort(key=lambda c: c[0])
    return parts


def is_complete_multipartite(graph: Graph) -> bool:
    """At least two parts, so the edge ideal is nonzero."""
    parts = complement_clique_partition(graph)
    return parts is not None and len(parts) >= 2


def support_subgraph(graph: Graph) -> Graph:
    """Induced subgraph on the non-isolated vertices, relabeled consecutively."""
    used = sorted({v for e in graph.edges for v in e})
    idx = {v: i for i, v in enumerate(used)}
    return Graph(len(used) if used else 1, frozenset((idx[a], idx[b]) for a, b in graph.edges))


def is_complete_multipartite_support(graph: Graph) -> bool:
    """Complete multipartite after dropping isolated vertices.

    The edge ideal of a graph does not see isolated vertices, so this is the
    recognition matching matroidality of the edge ideal; edgeless graphs
    yield the zero ideal and are rejected.
    """
    if not graph.edges:
        return False
    return is_complete_multipartite(support_subgraph(graph))


# ---------------------------------------------------------------------------
# polymatroid structure


@dataclass(frozen=True)
class MobiusTable:
    """Möbius values on the full lattice-point poset of a polymatroid."""

    points: tuple
    mu: dict

    def __getitem__(self, point):
        return self.mu[tuple(point)]


class DiscretePolymatroid:
    """Bases of equal modulus with the exchange property, plus a cage."""

    __slots__ = ("n", "bases", "rank", "cage", "_points", "_mu1", "_duals")

    def __init__(self, n, bases, cage, *, _checked=False):
        bases = tuple(sorted({tuple(int(x) for x in b) for b in bases}))
        if not bases:
            raise ValueError("a polymatroid needs at least one base")
        moduli = {sum(b) for b in bases}
        if len(moduli) != 1:
            raise ValueError("bases must have equal modulus")
        if any(len(b) != n for b in bases):
            raise ValueError("base length mismatch")
        cage = tuple(int(x) for x in cage)
        if len(cage) != n:
            raise ValueError("cage length mismatch")
        for b in bases:
            if not divides(b, cage):
                raise ValueError(f"cage {cage} does not dominate base {b}")
        if not _checked:
            witness = exchange_violation(MonomialIdeal(n, bases, _minimal=True))
            if witness is not None:
                raise ValueError(f"exchange property fails: witness {witness}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "rank", moduli.pop())
        object.__setattr__(self, "cage", cage)
        object.__setattr__(self, "_points", None)
        object.__setattr__(self, "_mu1", {})
        object.__setattr__(self, "_duals", {})

    def __setattr__(self, *args):
        raise AttributeError("DiscretePolymatroid is immutable")

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal, cage=None) -> "DiscretePolymatroid":
        if not is_polymatroidal(ideal):
            raise ValueError("ideal is not polymatroidal")
        if cage is None:
            cage = ideal.bounding_multidegree()
        return cls(ideal.n, ideal.gens, cage, _checked=True)

    @classmethod
    def from_bases(cls, n, bases, cage=None) -> "DiscretePolymatroid":
        if cage is None:
            bases = list(bases)
            cage = tuple(max(b[i] for b in bases) for i in range(n))
        return cls(n, bases, cage)

    @classmethod
    def from_bases_unchecked(cls, n, bases, cage=None) -> "DiscretePolymatroid":
        """For bases known correct by construction (Veronese, duals, boxes)."""
        if cage is None:
            bases = list(bases)
            cage = tuple(max(b[i] for b in bases) for i in range(n))
        return cls(n, bases, cage, _checked=True)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, self.bases, _minimal=True)

    def rank_of(self, subset) -> int:
        """Rank of a ground subset: max of u(A) over the bases."""
        subset = list(subset)
        return max(sum(b[i] for i in subset) for b in self.bases)

    def contains_point(self, v) -> bool:
        v = tuple(v)
        if any(x < 0 for x in v):
            return False
        return any(divides(v, b) for b in self.bases)

    def lattice_points(self):
        """All integer vectors dominated by some base (independent vectors)."""
        if self._points is not None:
            return self._points
        caps = tuple(max(b[i] for b in self.bases) for i in range(self.n))
        points = []

        def rec(i, left, prefix):
            if i == len(caps):
                v = tuple(prefix)
                if any(divides(v, b) for b in self.bases):
                    points.append(v)
                return
            for e in range(min(caps[i], left) + 1):
                rec(i + 1, left - e, prefix + [e])

        rec(0, self.rank, [])
        points.sort()
        object.__setattr__(self, "_points", tuple(points))
        return self._points

    def dual(self, cage=None) -> "DiscretePolymatroid":
        """Dual polymatroid: bases are the complements c - u in the cage."""
        cage = self.cage if cage is None else tuple(int(x) for x in cage)
        if cage in self._duals:
            return self._duals[cage]
        for b in self.bases:
            if not divides(b, cage):
                raise ValueError(f"{cage} is not a cage: base {b} escapes it")
        dual_bases = [tuple(c - x for c, x in zip(cage, b)) for b in self.bases]
        out = DiscretePolymatroid(self.n, dual_bases, cage, _checked=True)
        self._duals[cage] = out
        return out

    # -- Möbius function

    def _interval_above(self, v):
        """Lattice points >= v, enumerated within the cap box."""
        caps = tuple(max(b[i] for b in self.bases) for i in range(self.n))
        out = []
        slack = self.rank - sum(v)
        if slack < 0:
            return out

        def rec(i, left, prefix):
            if i == len(caps):
                w = tuple(prefix)
                if any(divides(w, b) for b in self.bases):
                    out.append(w)
                return
            for e in range(v[i], min(caps[i], v[i] + left) + 1):
                rec(i + 1, left - (e - v[i]), prefix + [e])

        rec(0, slack, [])
        return out

    def mobius_at(self, v) -> int:
        """Möbius value at a single lattice point.

        Defined as minus the classical Möbius value mu(v, top) on the poset
        of lattice points with an adjoined maximum.  Only the interval above
        v enters the recursion, so the full poset is never materialized.
        Returns 0 for vectors outside the lattice-point poset.
        """
        v = tuple(int(x) for x in v)
        if not self.contains_point(v):
            return 0
        memo = self._mu1
        if v in memo:
            return -memo[v]
        above = self._interval_above(v)
        above.sort(key=degree, reverse=True)
        for z in above:
            if z in memo:
                continue
            acc = -1  # the adjoined top contributes mu(top, top) = 1
            for w in above:
                if w != z and sum(w) > sum(z) and divides(z, w):
                    acc -= memo[w]
            memo[z] = acc
        return -memo[v]

    def mobius(self) -> MobiusTable:
        """The full Möbius table over the lattice-point poset."""
        points = self.lattice_points()
        for v in sorted(points, key=degree, reverse=True):
            self.mobius_at(v)
        return MobiusTable(points, {v: -self._mu1[v] for v in points})

    # -- serialization

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "bases": [list(b) for b in self.bases],
            "cage": list(self.cage),
        }

    @classmethod
    def from_json(cls, data) -> "DiscretePolymatroid":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "n" not in data or "bases" not in data:
            raise IdealParseError("polymatroid JSON needs keys 'n' and 'bases'")
        cage = data.get("cage")
        if cage is None:
            return cls.from_bases(data["n"], data["bases"])
        return cls(data["n"], data["bases"], cage)

    def __repr__(self):
        return f"DiscretePolymatroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"


def box_polymatroid(c, i: int) -> DiscretePolymatroid:
    """Truncated box: lattice points {y : |y| <= i, y <= c}, rank min(i, |c|)."""
    c = tuple(int(x) for x in c)
    if any(x < 1 for x in c):
        raise ValueError("cap entries must be positive")
    if i < 1:
        raise ValueError("truncation level must be >= 1")
    r = min(i, sum(c))
    bases = veronese(c, r).gens
    return DiscretePolymatroid.from_bases_unchecked(len(c), bases, cage=c)


def mobius_hs_membership(source, u, js, cage=None) -> bool:
    """Membership of x_{j_1} ... x_{j_i} x^u in the i-th homological shift ideal.

    source is a polymatroidal ideal or a DiscretePolymatroid, u one of its
    bases, js a set of distinct 0-based variable indices.  The test is
    nonvanishing of the dual polymatroid's Möbius function at
    cage - u - sum of unit vectors; vectors with negative entries are
    outside the poset and yield False.
    """
    if isinstance(source, MonomialIdeal):
        poly = DiscretePolymatroid.from_ideal(source, cage=cage)
        cage = poly.cage
    else:
        poly = source
        cage = poly.cage if cage is None else tuple(int(x) for x in cage)
    u = tuple(int(x) for x in u)
    if u not in set(poly.bases):
        raise ValueError(f"{u} is not a base")
    js = tuple(sorted(int(j) for j in js))
    if len(set(js)) != len(js):
        raise ValueError("indices must be distinct")
    if js and not (0 <= js[0] and js[-1] < poly.n):
        raise ValueError("index out of range")
    v = list(c - x for c, x in zip(cage, u))
    for j in js:
        v[j] -= 1
    if any(x < 0 for x in v):
        return False
    dual = poly.dual(cage)
    if not dual.contains_point(v):
        return False
    return dual.mobius_at(v) != 0
