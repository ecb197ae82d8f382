"""Linear quotients, homological shift ideals and multigraded Betti numbers.

Two independent routes compute the same invariants:

* linear quotients: an admissible order on the generators yields the
  quotient sets set(u), from which homological shift ideals and Betti
  numbers are read off combinatorially;
* simplicial homology: for each candidate multidegree a in the lcm lattice,
  the complex of squarefree divisors x_F with x^a / x_F in the ideal has
  reduced homology equal to the multigraded Tor spaces, computed by exact
  rank over the rationals or over a prime field.

The two never share code, so they can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import NoLinearQuotientsError, ResourceBudgetError
from .monomials import (
    MonomialIdeal,
    colon_quotient,
    maximal_ideal,
    mono_lcm,
    support,
)
from .polymatroids import Graph, complement_clique_partition, is_polymatroidal


# ---------------------------------------------------------------------------
# linear quotients


@dataclass(frozen=True)
class LinearQuotientsData:
    """An ordered generating sequence with its variable quotient sets.

    When admits is True, the colon of each prefix against the next generator
    is generated by the variables indexed by sets[i] (0-based).  fail_index
    marks the first position whose colon is not variable-generated.
    """

    n: int
    order: tuple
    sets: tuple
    admits: bool
    fail_index: int | None = None

    def max_set_size(self) -> int:
        return max((len(s) for s in self.sets), default=0)


def _quotient_set(prefix, u, n):
    """Variable set generating (prefix) : (u), or None if not variable-generated."""
    quots = [colon_quotient(p, u) for p in prefix]
    var_of = {}
    for q in quots:
        if sum(q) == 1:
            var_of[q.index(1)] = True
    if all(any(q[t] for t in var_of) for q in quots):
        return frozenset(var_of)
    return None


def lex_linear_quotients(ideal: MonomialIdeal, var_order=None) -> LinearQuotientsData:
    """Quotient data for the descending lexicographic generator order.

    var_order permutes the variables: position k of the permutation is the
    k-th largest variable.  Works on any monomial ideal; admits=False with
    the failing position when some colon is not variable-generated.
    """
    n = ideal.n
    if var_order is None:
        var_order = tuple(range(n))
    else:
        var_order = tuple(var_order)
        if sorted(var_order) != list(range(n)):
            raise ValueError("var_order must be a permutation of the variables")
    order = sorted(ideal.gens, key=lambda g: tuple(g[i] for i in var_order), reverse=True)
    sets = []
    for i, u in enumerate(order):
        s = _quotient_set(order[:i], u, n)
        if s is None:
            return LinearQuotientsData(n, tuple(order), tuple(sets), False, i)
        sets.append(s)
    return LinearQuotientsData(n, tuple(order), tuple(sets), True)


def search_linear_quotients(ideal: MonomialIdeal, node_budget=500_000) -> LinearQuotientsData:
    """Backtracking search for an admissible order with non-decreasing degrees.

    Generators are consumed degree bucket by degree bucket; inside a bucket
    any generator whose prefix colon is variable-generated may come next.
    Failed prefix sets are memoized (the colon only depends on the set of
    chosen generators).  admits=False only after exhausting the search.
    """
    n = ideal.n
    gens = sorted(ideal.gens, key=lambda g: (sum(g), g))
    buckets = []
    for g in gens:
        if buckets and sum(buckets[-1][0]) == sum(g):
            buckets[-1].append(g)
        else:
            buckets.append([g])

    order = []
    sets = []
    dead = set()
    nodes = 0

    def extend(bucket_idx, remaining):
        nonlocal nodes
        if bucket_idx == len(buckets):
            return True
        if not remaining:
            return extend(bucket_idx + 1, list(buckets[bucket_idx + 1]) if bucket_idx + 1 < len(buckets) else [])
        state = frozenset(order)
        if state in dead:
            return False
        nodes += 1
        if nodes > node_budget:
            raise ResourceBudgetError(f"linear quotients search exceeded {node_budget} nodes")
        for k, u in enumerate(remaining):
            s = _quotient_set(order, u, n)
            if s is None:
                continue
            order.append(u)
            sets.append(s)
            if extend(bucket_idx, remaining[:k] + remaining[k + 1 :]):
                return True
            order.pop()
            sets.pop()
        dead.add(state)
        return False

    if not gens:
        return LinearQuotientsData(n, (), (), True)
    if extend(0, list(buckets[0])):
        return LinearQuotientsData(n, tuple(order), tuple(sets), True)
    return LinearQuotientsData(n, tuple(gens), (), False, 0)


def resolve_linear_quotients(ideal: MonomialIdeal) -> LinearQuotientsData:
    """Lexicographic order first (always admissible for polymatroidal
    ideals), then the backtracking search for mixed-degree ideals."""
    if ideal.is_equigenerated:
        lq = lex_linear_quotients(ideal)
        if lq.admits:
            return lq
    return search_linear_quotients(ideal)


# ---------------------------------------------------------------------------
# homological shift ideals via quotient sets


def hs(ideal: MonomialIdeal, i: int, lq: LinearQuotientsData | None = None) -> MonomialIdeal:
    """The i-th homological shift ideal from a linear quotients certificate.

    Generated by x_F u over all generators u and i-subsets F of set(u).
    Raises NoLinearQuotientsError when no admissible order exists; callers
    wanting the homology route use hs_from_tor explicitly.
    """
    if i < 0:
        raise ValueError("homological index must be >= 0")
    if i == 0:
        return ideal
    if ideal.is_zero or i >= ideal.n:
        return MonomialIdeal.zero(ideal.n)
    if lq is None:
        lq = resolve_linear_quotients(ideal)
    if not lq.admits:
        raise NoLinearQuotientsError(
            f"no linear quotients order found (first obstruction at position {lq.fail_index})"
        )
    gens = set()
    for u, s in zip(lq.order, lq.sets):
        if len(s) < i:
            continue
        for f in combinations(sorted(s), i):
            w = list(u)
            for j in f:
                w[j] += 1
            gens.add(tuple(w))
    if not gens:
        return MonomialIdeal.zero(ideal.n)
    if ideal.is_equigenerated:
        return MonomialIdeal(ideal.n, gens, _minimal=True)
    return MonomialIdeal(ideal.n, gens)


def hs1_lcm(ideal: MonomialIdeal) -> MonomialIdeal:
    """First homological shift ideal as the ideal of pairwise lcms.

    Needs no linear quotients, so it serves as an independent HS_1 oracle.
    """
    gens = ideal.gens
    out = {mono_lcm(gens[a], gens[b]) for a in range(len(gens)) for b in range(a + 1, len(gens))}
    return MonomialIdeal(ideal.n, out)


def hs1_polymatroidal(ideal: MonomialIdeal) -> MonomialIdeal:
    """HS_1 of a polymatroidal ideal as (m * I) restricted at the bounding
    multidegree."""
    if not is_polymatroidal(ideal):
        raise ValueError("ideal is not polymatroidal")
    mi = maximal_ideal(ideal.n).product(ideal)
    return mi.restriction(ideal.bounding_multidegree())


# ---------------------------------------------------------------------------
# multigraded Betti numbers via squarefree divisor complexes


@dataclass(frozen=True)
class MultigradedBetti:
    """dim Tor_i(K, I)_a for every homological index i and multidegree a."""

    n: int
    field_char: int
    entries: dict = field(default_factory=dict)

    def betti_numbers(self):
        if not self.entries:
            return (0,)
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), dim in self.entries.items():
            out[i] += dim
        return tuple(out)

    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def hs_ideal(self, i: int) -> MonomialIdeal:
        """Ideal generated by the multidegrees with nonzero Tor_i."""
        gens = [a for (j, a) in self.entries if j == i]
        return MonomialIdeal(self.n, gens)

    def regularity(self) -> int:
        return max(sum(a) - i for i, a in self.entries)

    def to_json(self) -> dict:
        table = {}
        for (i, a), dim in sorted(self.entries.items()):
            table[",".join(map(str, (i, *a)))] = dim
        return {"char": self.field_char, "table": table}

    def triangle(self) -> str:
        """Betti table in the usual triangle layout: rows are internal
        degrees j - i, columns homological degrees."""
        if not self.entries:
            return "0"
        pd = self.pd()
        rows = {}
        for (i, a), dim in self.entries.items():
            rows.setdefault(sum(a) - i, [0] * (pd + 1))[i] += dim
        lines = ["    " + " ".join(f"{i:>5}" for i in range(pd + 1))]
        for r in sorted(rows):
            cells = " ".join(f"{v:>5}" if v else "    ." for v in rows[r])
            lines.append(f"{r:>3}: {cells}")
        return "\n".join(lines)


def _matrix_rank(rows, char: int) -> int:
    """Exact rank by Gaussian elimination, over Q or over GF(char)."""
    if not rows or not rows[0]:
        return 0
    if char:
        m = [[x % char for x in row] for row in rows]
    else:
        m = [[Fraction(x) for x in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        if char:
            inv = pow(pv, char - 2, char)
            m[row] = [(x * inv) % char for x in m[row]]
        else:
            m[row] = [x / pv for x in m[row]]
        for r in range(nrows):
            if r != row and m[r][col]:
                f = m[r][col]
                if char:
                    m[r] = [(x - f * y) % char for x, y in zip(m[r], m[row])]
                else:
                    m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def _reduced_homology_dims(faces_by_size, top_size, char):
    """Reduced homology dims indexed by face size (H~ of dimension size-1)."""
    ranks = {}
    for k in range(1, top_size + 1):
        lower = faces_by_size.get(k - 1, [])
        upper = faces_by_size.get(k, [])
        if not lower or not upper:
            ranks[k] = 0
            continue
        index = {f: i for i, f in enumerate(lower)}
        rows = []
        for f in upper:
            row = [0] * len(lower)
            for t in range(len(f)):
                sub = f[:t] + f[t + 1 :]
                row[index[sub]] = -1 if t % 2 else 1
            rows.append(row)
        ranks[k] = _matrix_rank(rows, char)
    dims = {}
    for k in range(0, top_size + 1):
        c = len(faces_by_size.get(k, []))
        dims[k] = c - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return dims


def lcm_lattice(ideal: MonomialIdeal, budget=50_000):
    """All joins of nonempty generator subsets, as a set of multidegrees."""
    points = set(ideal.gens)
    frontier = set(ideal.gens)
    while frontier:
        fresh = set()
        for a in frontier:
            for g in ideal.gens:
                j = mono_lcm(a, g)
                if j not in points:
                    fresh.add(j)
        points |= fresh
        if len(points) > budget:
            raise ResourceBudgetError(
                f"lcm lattice exceeded the budget of {budget} multidegrees"
            )
        frontier = fresh
    return points


def koszul_tor(ideal: MonomialIdeal, field_char: int = 0, budget=50_000) -> MultigradedBetti:
    """Multigraded Betti numbers by squarefree divisor complex homology.

    Candidate multidegrees run over the lcm lattice of the generators (Tor
    is supported there).  For each candidate a, the simplicial complex of
    subsets F of supp(a) with x^a / x_F in the ideal has reduced homology
    H~_{i-1} of dimension equal to dim Tor_i(K, I)_a.
    """
    if ideal.is_zero:
        raise ValueError("Tor of the zero ideal is not computed")
    if field_char and (field_char < 2 or any(field_char % p == 0 for p in range(2, field_char))):
        raise ValueError("field characteristic must be 0 or a prime")
    entries = {}
    for a in lcm_lattice(ideal, budget=budget):
        supp = sorted(support(a))
        # the full simplex is contractible: skip when the deepest quotient stays inside
        deepest = tuple(x - 1 if i in set(supp) else x for i, x in enumerate(a))
        if supp and ideal.contains(deepest):
            continue
        faces_by_size = {0: [()]}
        for k in range(1, len(supp) + 1):
            faces = []
            for f in combinations(supp, k):
                q = list(a)
                for j in f:
                    q[j] -= 1
                if ideal.contains(q):
                    faces.append(f)
            if not faces:
                break
            faces_by_size[k] = faces
        top = max(faces_by_size)
        dims = _reduced_homology_dims(faces_by_size, top, field_char)
        for k, d in dims.items():
            if d:
                entries[(k, a)] = d
    return MultigradedBetti(ideal.n, field_char, entries)


def hs_from_tor(ideal: MonomialIdeal, i: int, field_char: int = 0, budget=50_000) -> MonomialIdeal:
    """Homological shift ideal through the homology route."""
    if i == 0:
        return ideal
    if ideal.is_zero or i >= ideal.n:
        return MonomialIdeal.zero(ideal.n)
    return koszul_tor(ideal, field_char=field_char, budget=budget).hs_ideal(i)


# ---------------------------------------------------------------------------
# derived invariants


def betti(ideal: MonomialIdeal, lq: LinearQuotientsData | None = None, field_char: int = 0):
    """Total Betti numbers (beta_0, ..., beta_pd).

    Uses the linear quotients count sum_u C(|set(u)|, j) when an admissible
    order exists (the iterated mapping cone is then a minimal resolution),
    else the homology route.
    """
    if ideal.is_zero:
        raise ValueError("Betti numbers of the zero ideal are not defined")
    if lq is None:
        lq = resolve_linear_quotients(ideal)
    if lq.admits:
        top = lq.max_set_size()
        out = [0] * (top + 1)
        for s in lq.sets:
            for j in range(len(s) + 1):
                out[j] += comb(len(s), j)
        return tuple(out)
    return koszul_tor(ideal, field_char=field_char).betti_numbers()


def pd(ideal: MonomialIdeal, lq: LinearQuotientsData | None = None) -> int:
    b = betti(ideal, lq=lq)
    return max(j for j, v in enumerate(b) if v)


def depth_quotient(ideal: MonomialIdeal, lq: LinearQuotientsData | None = None) -> int:
    """depth S/I = n - pd(I) - 1 (Auslander-Buchsbaum)."""
    if ideal.is_zero or ideal.is_ring:
        raise ValueError("depth of S over a trivial ideal is not reported")
    return ideal.n - pd(ideal, lq=lq) - 1


def has_linear_resolution(ideal: MonomialIdeal, field_char: int = 0) -> bool:
    """Linear quotients certify linearity for equigenerated ideals; the
    homology route decides the rest."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no resolution to speak of")
    if ideal.is_ring:
        return True
    if not ideal.is_equigenerated:
        return False
    lq = resolve_linear_quotients(ideal)
    if lq.admits:
        return True
    d = ideal.alpha()
    table = koszul_tor(ideal, field_char=field_char)
    return all(sum(a) == d + i for i, a in table.entries)


def reg_linear(ideal: MonomialIdeal) -> int:
    """Regularity of an ideal certified to have linear resolution."""
    if not has_linear_resolution(ideal):
        raise ValueError("ideal does not have a linear resolution")
    if ideal.is_ring:
        return 0
    return ideal.alpha()


def regularity_via_tor(ideal: MonomialIdeal, field_char: int = 0) -> int:
    """Full Castelnuovo-Mumford regularity; exact but only for small ideals."""
    return koszul_tor(ideal, field_char=field_char).regularity()


# ---------------------------------------------------------------------------
# quotient sets of powers of complete multipartite edge ideals


def set_u_multipartite(graph: Graph, k: int, u) -> frozenset:
    """set(u) for a generator u of the k-th power of the edge ideal of a
    complete multipartite graph with interval parts, under descending
    lexicographic order.

    Case split: when an earlier part already carries full degree k, the set
    is [1, p-1] joined with [t+1, max(u)-1] (1-based, p the largest used
    vertex of that part, t its right endpoint); otherwise the whole initial
    segment below max(u).
    """
    parts = complement_clique_partition(graph)
    if parts is None or len(parts) < 2:
        raise ValueError("graph is not complete multipartite")
    for part in parts:
        if part[-1] - part[0] + 1 != len(part):
            raise ValueError("parts must be consecutive intervals")
    parts.sort(key=lambda p: p[0])
    u = tuple(int(x) for x in u)
    if len(u) != graph.n or sum(u) != 2 * k:
        raise ValueError(f"{u} is not a degree-2k generator for k={k}")

    maxu = max(i for i, x in enumerate(u) if x)
    d = next(idx for idx, p in enumerate(parts) if p[0] <= maxu <= p[-1])
    for dprime in range(d):
        part = parts[dprime]
        if sum(u[v] for v in part) == k:
            p = max(v for v in part if u[v])
            t = part[-1]  # 0-based right endpoint; 1-based t_{d'} = t + 1
            return frozenset(range(p)) | frozenset(range(t + 1, maxu))
    return frozenset(range(maxu))
