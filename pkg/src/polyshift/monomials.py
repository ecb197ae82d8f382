"""Exact arithmetic for monomials and monomial ideals.

A monomial is an exponent vector: a plain tuple of non-negative ints of
length n (the number of variables).  All arithmetic is integer-exact.

A MonomialIdeal stores its unique minimal monomial generating set,
deduplicated and sorted in graded lexicographic order (x1 > x2 > ... > xn),
so ideal equality is representation equality.  The zero ideal is the empty
generating set; the whole ring is generated by the unit monomial.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import IdealParseError

Exponents = tuple  # exponent vector, tuple[int, ...]


# ---------------------------------------------------------------------------
# exponent-vector helpers


def degree(m: Exponents) -> int:
    return sum(m)


def divides(a: Exponents, b: Exponents) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_gcd(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def colon_quotient(u: Exponents, f: Exponents) -> Exponents:
    """u / gcd(u, f), the generator of the colon (u) : f."""
    return tuple(x - y if x > y else 0 for x, y in zip(u, f))


def support(m: Exponents) -> frozenset:
    return frozenset(i for i, x in enumerate(m) if x)


def is_squarefree(m: Exponents) -> bool:
    return all(x <= 1 for x in m)


def max_index(m: Exponents):
    """Largest variable index (0-based) dividing x^m, or None for the unit."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    return None


def unit(n: int) -> Exponents:
    return (0,) * n


def variable(n: int, i: int) -> Exponents:
    """The exponent vector of x_{i+1} (0-based index i)."""
    e = [0] * n
    e[i] = 1
    return tuple(e)


def grlex_key(m: Exponents):
    """Sort key: degree-first, then lex descending with x1 > ... > xn."""
    return (sum(m), tuple(-x for x in m))


def monomials_of_degree(n: int, d: int) -> Iterator[Exponents]:
    """All exponent vectors of length n with modulus d (weak compositions)."""
    if n == 1:
        yield (d,)
        return
    for bars in combinations(range(d + n - 1), n - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(d + n - 2 - prev)
        yield tuple(out)


def _minimal_subset(gens):
    """Divisibility-minimal subset of a deduplicated list of monomials."""
    kept = []
    for g in sorted(set(gens), key=grlex_key):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return kept


# ---------------------------------------------------------------------------
# the ideal class


class MonomialIdeal:
    """A monomial ideal given by its minimal generating set.

    Immutable after construction; safe to share across threads.  The
    constructor minimalizes unless told the input is already an antichain
    (internal fast path for equigenerated products).
    """

    __slots__ = ("n", "gens", "_hash")

    def __init__(self, n: int, gens: Iterable[Sequence[int]] = (), *, _minimal=False):
        if n < 1:
            raise ValueError("need at least one variable")
        normalized = []
        for g in gens:
            t = tuple(int(x) for x in g)
            if len(t) != n:
                raise ValueError(f"exponent vector {t} has length {len(t)}, expected {n}")
            if any(x < 0 for x in t):
                raise ValueError(f"negative exponent in {t}")
            normalized.append(t)
        if not _minimal:
            normalized = _minimal_subset(normalized)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "gens", tuple(sorted(set(normalized), key=grlex_key)))
        object.__setattr__(self, "_hash", hash((n, self.gens)))

    def __setattr__(self, *args):
        raise AttributeError("MonomialIdeal is immutable")

    # -- basic structure

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, (), _minimal=True)

    @classmethod
    def ring(cls, n: int) -> "MonomialIdeal":
        return cls(n, (unit(n),), _minimal=True)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_ring(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_ring

    def degrees(self):
        return tuple(sum(g) for g in self.gens)

    @property
    def is_equigenerated(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) <= 1

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def max_gen_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero ideal has no generators")
        return max(self.degrees())

    def alpha(self) -> int:
        """Smallest degree of a minimal generator."""
        if self.is_zero:
            raise ValueError("zero ideal has no generators")
        return min(self.degrees())

    def bounding_multidegree(self) -> Exponents:
        """Per-variable maximum exponent over the generators."""
        if self.is_zero:
            raise ValueError("zero ideal has no bounding multidegree")
        return tuple(max(g[i] for g in self.gens) for i in range(self.n))

    def lcm_gens(self) -> Exponents:
        return self.bounding_multidegree()

    # -- membership and arithmetic

    def contains(self, m: Sequence[int]) -> bool:
        m = tuple(m)
        if len(m) != self.n:
            raise ValueError("variable count mismatch")
        return any(divides(g, m) for g in self.gens)

    def __contains__(self, m) -> bool:
        return self.contains(m)

    def _check_same_ring(self, other: "MonomialIdeal"):
        if self.n != other.n:
            raise ValueError("ideals live in different rings")

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same_ring(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.n)
        cands = {mono_mul(a, b) for a in self.gens for b in other.gens}
        if self.is_equigenerated and other.is_equigenerated:
            # all candidates share one degree, so deduplication suffices
            return MonomialIdeal(self.n, cands, _minimal=True)
        return MonomialIdeal(self.n, cands)

    __mul__ = product

    def power(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative power")
        out = MonomialIdeal.ring(self.n)
        for _ in range(k):
            out = out.product(self)
        return out

    __pow__ = power

    def scale(self, m: Sequence[int]) -> "MonomialIdeal":
        """The ideal x^m * I."""
        m = tuple(m)
        return MonomialIdeal(self.n, (mono_mul(m, g) for g in self.gens), _minimal=True)

    def colon_monomial(self, f: Sequence[int]) -> "MonomialIdeal":
        f = tuple(f)
        if len(f) != self.n:
            raise ValueError("variable count mismatch")
        return MonomialIdeal(self.n, (colon_quotient(g, f) for g in self.gens))

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """The colon ideal (self : other).  The zero divisor is rejected."""
        self._check_same_ring(other)
        if other.is_zero:
            raise ValueError("colon by the zero ideal is undefined")
        out = None
        for b in other.gens:
            piece = self.colon_monomial(b)
            out = piece if out is None else out.intersect(piece)
        return out

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_same_ring(other)
        return MonomialIdeal(
            self.n, (mono_lcm(a, b) for a in self.gens for b in other.gens)
        )

    __and__ = intersect

    def restriction(self, a: Sequence[int]) -> "MonomialIdeal":
        """Subideal generated by the generators dominated componentwise by a."""
        a = tuple(int(x) for x in a)
        if len(a) != self.n:
            raise ValueError("variable count mismatch")
        if any(x < 0 for x in a):
            raise ValueError("restriction vector must be non-negative")
        return MonomialIdeal(
            self.n, (g for g in self.gens if divides(g, a)), _minimal=True
        )

    def graded_component(self, j: int) -> "MonomialIdeal":
        """Ideal generated by all degree-j monomials contained in self.

        Built by multiplying generators of degree <= j up to degree j, which
        stays cheap when the ideal is sparse.
        """
        if j < 0:
            raise ValueError("component degree must be >= 0")
        out = set()
        for g in self.gens:
            d = sum(g)
            if d > j:
                continue
            for m in monomials_of_degree(self.n, j - d):
                out.add(mono_mul(g, m))
        return MonomialIdeal(self.n, out, _minimal=True)

    def socle(self) -> "MonomialIdeal":
        """Ideal generated by the generators of (I : m) lying outside I."""
        if self.is_zero:
            raise ValueError("socle of the zero ideal is undefined")
        q = self.colon(maximal_ideal(self.n))
        return MonomialIdeal(
            self.n, (g for g in q.gens if not self.contains(g)), _minimal=True
        )

    def saturation(self):
        """Iterate J <- (J : m) to the fixpoint.

        Returns (saturated ideal, number of colon steps taken), the step
        count being the smallest k with (I : m^k) stable.
        """
        mm = maximal_ideal(self.n)
        cur = self
        steps = 0
        while True:
            if cur.is_zero:
                return cur, steps
            nxt = cur.colon(mm)
            if nxt == cur:
                return cur, steps
            cur = nxt
            steps += 1

    # -- equality, hashing, printing

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens={format_ideal(self)!r})"

    def __str__(self):
        return format_ideal(self)

    # -- serialization

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "n" not in data or "gens" not in data:
            raise IdealParseError("ideal JSON needs keys 'n' and 'gens'")
        n = data["n"]
        if not isinstance(n, int) or n < 1:
            raise IdealParseError(f"invalid variable count {n!r}")
        gens = data["gens"]
        for g in gens:
            if len(g) != n:
                raise IdealParseError(f"generator {g} has length {len(g)}, expected {n}")
            if any((not isinstance(x, int)) or x < 0 for x in g):
                raise IdealParseError(f"generator {g} has a negative or non-integer exponent")
        return cls(n, gens)


# ---------------------------------------------------------------------------
# spec-level operations as free functions


def minimalize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Divisibility-minimal, deduplicated, canonically sorted ideal."""
    return MonomialIdeal(n, gens)


def maximal_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (variable(n, i) for i in range(n)), _minimal=True)


def principal(n: int, m: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(n, (tuple(m),), _minimal=True)


# ---------------------------------------------------------------------------
# text format: "x1^2*x3, x2*x4"; "1" is the unit monomial, "0" the zero ideal


def format_monomial(m: Exponents) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero:
        return "0"
    return ", ".join(format_monomial(g) for g in ideal.gens)


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take_int(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise IdealParseError("expected an integer", start)
        return int(self.text[start : self.pos]), start


def parse_monomial(text: str, n: int) -> Exponents:
    m = parse_ideal(text, n=n)
    if len(m.gens) != 1:
        raise IdealParseError("expected a single monomial")
    return m.gens[0]


def parse_ideal(text: str, n=None) -> MonomialIdeal:
    """Parse the human ideal format.

    Rejects out-of-range variable indices; when n is omitted it is inferred
    as the largest index that occurs (an error for '0' or '1' alone).
    """
    sc = _Scanner(text)
    if sc.peek() is None:
        raise IdealParseError("empty input", sc.pos)
    if sc.peek() == "0":
        pos = sc.pos
        sc.pos += 1
        if sc.peek() is not None:
            raise IdealParseError("'0' must stand alone", sc.pos)
        if n is None:
            raise IdealParseError("zero ideal needs an explicit variable count", pos)
        return MonomialIdeal.zero(n)

    gens = []  # list of dict var_index -> exponent
    max_var = 0
    while True:
        factors = {}
        while True:
            ch = sc.peek()
            if ch == "1":
                sc.pos += 1
            elif ch == "x":
                sc.pos += 1
                idx, at = sc.take_int()
                if idx < 1:
                    raise IdealParseError(f"variable index must be >= 1, got {idx}", at)
                exp = 1
                if sc.peek() == "^":
                    sc.pos += 1
                    exp, _ = sc.take_int()
                factors[idx - 1] = factors.get(idx - 1, 0) + exp
                max_var = max(max_var, idx)
            else:
                raise IdealParseError(
                    f"expected a variable or '1', got {ch!r}" if ch else "unexpected end of input",
                    sc.pos,
                )
            nxt = sc.peek()
            if nxt == "*":
                sc.pos += 1
                continue
            break
        gens.append(factors)
        nxt = sc.peek()
        if nxt == ",":
            sc.pos += 1
            continue
        if nxt is None:
            break
        raise IdealParseError(f"unexpected character {nxt!r}", sc.pos)

    if n is None:
        n = max_var if max_var else None
        if n is None:
            raise IdealParseError("cannot infer a variable count from '1'")
    if max_var > n:
        raise IdealParseError(f"variable x{max_var} is out of range for n={n}")
    vecs = []
    for factors in gens:
        v = [0] * n
        for i, e in factors.items():
            v[i] = e
        vecs.append(tuple(v))
    return MonomialIdeal(n, vecs)
