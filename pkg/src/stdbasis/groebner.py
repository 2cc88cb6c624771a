"""Gröbner bases and the ideal operations built on them.

The engine is a Buchberger algorithm with Gebauer-Möller pair pruning.
Internally polynomials are ``dict[exponent, int]`` kept primitive (content
divided out), which avoids rational arithmetic during reduction.  Public
functions take and return :class:`~stdbasis.poly.Polynomial` values.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd
from typing import Iterable, Sequence

from .poly import DEGREVLEX, MonomialOrder, Polynomial, Ring

IntPoly = dict  # exponent tuple -> nonzero int


class UnsupportedInput(ValueError):
    """Input violates a standing hypothesis of the requested computation."""


# ---------------------------------------------------------------------------
# integer polynomial kernel

def _content(p: IntPoly) -> int:
    return reduce(gcd, p.values(), 0)


def _to_int(f: Polynomial) -> IntPoly:
    den = 1
    for c in f._terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    p = {e: int(c * den) for e, c in f._terms.items()}
    g = _content(p)
    return {e: c // g for e, c in p.items()} if g > 1 else p


def _from_int(ring: Ring, p: IntPoly, order: MonomialOrder) -> Polynomial:
    """Monic rational polynomial from an integer one."""
    if not p:
        return ring.zero()
    lm = max(p, key=order.key)
    lc = p[lm]
    return Polynomial._raw(ring, {e: Fraction(c, lc) for e, c in p.items()})


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Basis:
    """Working basis: parallel lists of leading monomials, coefficients, polys."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.key = order.key
        self.lms: list = []
        self.lcs: list = []
        self.polys: list = []
        self.sugar: list = []

    def add(self, p: IntPoly, sugar: int) -> int:
        lm = max(p, key=self.key)
        if p[lm] < 0:
            p = {e: -c for e, c in p.items()}
        self.lms.append(lm)
        self.lcs.append(p[lm])
        self.polys.append(p)
        self.sugar.append(sugar)
        return len(self.polys) - 1


def _reduce(f: IntPoly, reducers: Sequence[int], B: _Basis, full: bool = True) -> IntPoly:
    """Normal form of ``f`` modulo ``B.polys[reducers]``, up to a unit scalar."""
    key = B.key
    f = dict(f)
    if not f:
        return f
    rem: IntPoly = {}
    heap = [-key(e) for e in f]
    heapq.heapify(heap)
    where = {key(e): e for e in f}
    lms, lcs, polys = B.lms, B.lcs, B.polys
    steps = 0
    while heap:
        k = -heapq.heappop(heap)
        e = where.get(k)
        if e is None or e not in f:
            continue
        c = f[e]
        for i in reducers:
            lm = lms[i]
            if _divides(lm, e):
                break
        else:
            i = None
        if i is None:
            del f[e]
            rem[e] = c
            if not full:
                rem.update(f)
                f = {}
                break
            continue
        a = lcs[i]
        g = gcd(a, c)
        fa, fc = a // g, c // g
        if fa != 1:
            for t in f:
                f[t] *= fa
            for t in rem:
                rem[t] *= fa
        shift = tuple(x - y for x, y in zip(e, lms[i]))
        for t, v in polys[i].items():
            m = tuple(x + y for x, y in zip(t, shift))
            nv = f.get(m, 0) - fc * v
            if nv:
                if m not in f:
                    km = key(m)
                    where[km] = m
                    heapq.heappush(heap, -km)
                f[m] = nv
            else:
                f.pop(m, None)
        # the leading term cancels exactly
        f.pop(e, None)
        steps += 1
        if fa != 1 and steps % 8 == 0:
            g = gcd(_content(f), _content(rem))
            if g > 1:
                for t in f:
                    f[t] //= g
                for t in rem:
                    rem[t] //= g
    for t, v in f.items():
        rem[t] = v
    g = _content(rem)
    if g > 1:
        rem = {t: v // g for t, v in rem.items()}
    return rem


def _spoly(i: int, j: int, B: _Basis) -> IntPoly:
    li, lj = B.lms[i], B.lms[j]
    l = _lcm(li, lj)
    ai, aj = B.lcs[i], B.lcs[j]
    g = gcd(ai, aj)
    ci, cj = aj // g, ai // g
    si = tuple(x - y for x, y in zip(l, li))
    sj = tuple(x - y for x, y in zip(l, lj))
    out: IntPoly = {}
    for t, v in B.polys[i].items():
        m = tuple(x + y for x, y in zip(t, si))
        out[m] = ci * v
    for t, v in B.polys[j].items():
        m = tuple(x + y for x, y in zip(t, sj))
        nv = out.get(m, 0) - cj * v
        if nv:
            out[m] = nv
        else:
            out.pop(m, None)
    return out


def _gm_update(B: _Basis, active: list[int], pairs: set, h: int) -> list[int]:
    """Gebauer-Möller installation of the new element ``h``."""
    lms = B.lms
    lh = lms[h]
    C = [(g, _lcm(lms[g], lh)) for g in active]
    D = []
    while C:
        g1, l1 = C.pop(0)
        if _coprime(lms[g1], lh) or not any(_divides(l2, l1) for _, l2 in C + D):
            D.append((g1, l1))
    E = {(g, h) for g, _ in D if not _coprime(lms[g], lh)}
    stale = set()
    for (a, b) in pairs:
        lab = _lcm(lms[a], lms[b])
        if _divides(lh, lab) and _lcm(lms[a], lh) != lab and _lcm(lms[b], lh) != lab:
            stale.add((a, b))
    pairs -= stale
    pairs |= E
    return [g for g in active if not _divides(lh, lms[g])] + [h]


def _interreduce(B: _Basis, active: list[int]) -> list[IntPoly]:
    key = B.key
    mins = []
    for i in active:
        if not any(j != i and _divides(B.lms[j], B.lms[i]) and (B.lms[j] != B.lms[i] or j < i)
                   for j in active):
            mins.append(i)
    out_basis = _Basis(B.order)
    for i in mins:
        out_basis.add(B.polys[i], B.sugar[i])
    result = []
    n = len(mins)
    for k in range(n):
        others = [j for j in range(n) if j != k]
        result.append(_reduce(out_basis.polys[k], others, out_basis))
    result = [r for r in result if r]
    for r in result:
        lm = max(r, key=key)
        if r[lm] < 0:
            for e in r:
                r[e] = -r[e]
    result.sort(key=lambda r: key(max(r, key=key)))
    return result


def _buchberger(F: Iterable[IntPoly], order: MonomialOrder, sugar: bool = False) -> list[IntPoly]:
    B = _Basis(order)
    key = order.key
    active: list[int] = []
    pairs: set = set()
    inputs = sorted((p for p in F if p), key=lambda p: key(max(p, key=key)))
    for p in inputs:
        r = _reduce(p, active, B)
        if not r:
            continue
        if all(not any(e) for e in r):
            return [{(0,) * len(next(iter(r))): 1}]
        h = B.add(r, max(sum(e) for e in p))
        active = _gm_update(B, active, pairs, h)

    def pair_priority(pr):
        a, b = pr
        l = _lcm(B.lms[a], B.lms[b])
        if sugar:
            s = max(B.sugar[a] + sum(l) - sum(B.lms[a]), B.sugar[b] + sum(l) - sum(B.lms[b]))
        elif order.is_graded():
            s = sum(l)
        else:
            s = 0  # normal strategy: smallest lcm in the order itself
        return (s, key(l), a, b)

    while pairs:
        pr = min(pairs, key=pair_priority)
        pairs.discard(pr)
        a, b = pr
        s = _spoly(a, b, B)
        r = _reduce(s, active, B)
        if not r:
            continue
        if all(not any(e) for e in r):
            return [{(0,) * len(next(iter(r))): 1}]
        l = _lcm(B.lms[a], B.lms[b])
        sg = max(B.sugar[a] + sum(l) - sum(B.lms[a]), B.sugar[b] + sum(l) - sum(B.lms[b]))
        h = B.add(r, sg)
        active = _gm_update(B, active, pairs, h)
    return _interreduce(B, active)


def _nf_against(f: IntPoly, G: Sequence[IntPoly], order: MonomialOrder) -> IntPoly:
    B = _Basis(order)
    for g in G:
        B.add(g, 0)
    return _reduce(f, list(range(len(G))), B)


# ---------------------------------------------------------------------------
# ideals

class Ideal:
    """Ideal of a polynomial ring given by generators; caches Gröbner bases."""

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError(f"generator {g} lives in {g.ring.names}, not {ring.names}")
            if not g.is_zero():
                gens.append(g)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._gb: dict = {}
        self._lock = threading.Lock()

    @classmethod
    def irrelevant(cls, ring: Ring) -> "Ideal":
        return cls(ring, ring.gens())

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, [ring.one()])

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators)) or '0'})"

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def _int_gb(self, order: MonomialOrder = DEGREVLEX, sugar: bool = False) -> list[IntPoly]:
        with self._lock:
            G = self._gb.get(order)
            if G is None:
                G = _buchberger([_to_int(g) for g in self.generators], order, sugar=sugar)
                self._gb[order] = G
            return G

    def groebner(self, order: MonomialOrder = DEGREVLEX, sugar: bool = False) -> tuple[Polynomial, ...]:
        return tuple(_from_int(self.ring, p, order) for p in self._int_gb(order, sugar))

    def is_unit(self) -> bool:
        G = self._int_gb()
        return len(G) == 1 and not any(next(iter(G[0])))

    def is_zero(self) -> bool:
        return not self.generators

    def normal_form(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        return normal_form(f, self, order)

    def contains(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def leading_monomials(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[int, ...]]:
        return [max(p, key=order.key) for p in self._int_gb(order)]

    def hilbert(self) -> "HilbertData":
        return hilbert_data(self)


def reduced_groebner(I: Ideal, order: MonomialOrder = DEGREVLEX, sugar: bool = False) -> tuple[Polynomial, ...]:
    """Reduced Gröbner basis (monic, ascending leading terms)."""
    return I.groebner(order, sugar)


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Remainder of ``f`` modulo the reduced Gröbner basis of ``I``."""
    if f.is_zero():
        return f
    if I.is_zero():
        return f
    return _exact_remainder(f, I._int_gb(order), order)


def _exact_remainder(f: Polynomial, G: Sequence[IntPoly], order: MonomialOrder) -> Polynomial:
    key = order.key
    lead = [(max(g, key=key), g) for g in G]
    terms = dict(f._terms)
    rem = {}
    while terms:
        e = max(terms, key=key)
        c = terms[e]
        for lm, g in lead:
            if _divides(lm, e):
                q = c / g[lm]
                shift = tuple(x - y for x, y in zip(e, lm))
                for t, v in g.items():
                    m = tuple(x + y for x, y in zip(t, shift))
                    nv = terms.get(m, 0) - q * v
                    if nv:
                        terms[m] = nv
                    else:
                        terms.pop(m, None)
                break
        else:
            rem[e] = c
            del terms[e]
    return Polynomial._raw(f.ring, rem)


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    if f.is_zero():
        return True
    if I.is_zero():
        return False
    G = I._int_gb()
    return not _nf_against(_to_int(f), G, DEGREVLEX)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    return I._int_gb() == J._int_gb()


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.generators + J.generators)


def product(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, [a * b for a in I.generators for b in J.generators])


def _with_aux_variable(ring: Ring, name: str = "t") -> Ring:
    while name in ring.names:
        name += "_"
    return ring.insert(0, name)


def _lift(f: Polynomial, target: Ring) -> Polynomial:
    return Polynomial._raw(target, {(0,) + e: c for e, c in f._terms.items()})


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    if I.is_unit():
        return Ideal(ring, J.generators)
    if J.is_unit():
        return Ideal(ring, I.generators)
    big = _with_aux_variable(ring)
    t = big.var(0)
    gens = [t * _lift(f, big) for f in I.generators]
    gens += [(big.one() - t) * _lift(g, big) for g in J.generators]
    order = MonomialOrder("elim", 1)
    G = _buchberger([_to_int(g) for g in gens], order, sugar=True)
    kept = [Polynomial._raw(ring, {e[1:]: Fraction(c) for e, c in p.items()})
            for p in G if all(e[0] == 0 for e in p)]
    return Ideal(ring, kept)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``f / g`` when ``g`` divides ``f`` exactly."""
    order = DEGREVLEX
    key = order.key
    lm, lc = g.leading_term(order)
    rem = dict(f._terms)
    q = {}
    gt = g._terms
    while rem:
        e = max(rem, key=key)
        if not _divides(lm, e):
            raise ValueError(f"{g} does not divide {f}")
        c = rem[e] / lc
        shift = tuple(x - y for x, y in zip(e, lm))
        q[shift] = c
        for t, v in gt.items():
            m = tuple(x + y for x, y in zip(t, shift))
            nv = rem.get(m, 0) - c * v
            if nv:
                rem[m] = nv
            else:
                rem.pop(m, None)
    return Polynomial._raw(f.ring, q)


def _variable_index(g: Polynomial) -> int | None:
    if len(g) != 1:
        return None
    (e, c), = g.items()
    if sum(e) == 1:
        return e.index(1)
    return None


def _swap_last(n: int, k: int) -> list[int]:
    perm = list(range(n))
    perm[k], perm[n - 1] = n - 1, k
    return perm


def _colon_variable(I: Ideal, k: int, infinite: bool = False) -> Ideal:
    """``I : y_k`` (or ``I : y_k^inf``) for homogeneous ``I`` by the revlex trick.

    With ``y_k`` moved to the last position, degrevlex Gröbner basis elements
    divided by the largest admissible power of ``y_k`` form a basis of the
    quotient ideal.
    """
    ring = I.ring
    n = ring.arity
    perm = _swap_last(n, k)
    J = Ideal(ring, [g.permute(perm) for g in I.generators])
    out = []
    for p in J._int_gb():
        s = min(e[n - 1] for e in p)
        if not infinite:
            s = min(s, 1)
        if s:
            p = {e[:-1] + (e[-1] - s,): c for e, c in p.items()}
        out.append(Polynomial._raw(ring, {e: Fraction(c) for e, c in p.items()}).permute(perm))
    return Ideal(ring, out)


def colon_principal(I: Ideal, g: Polynomial) -> Ideal:
    if g.is_zero():
        raise ValueError("colon by the zero ideal")
    if I.is_zero():
        return Ideal(I.ring)
    k = _variable_index(g)
    if k is not None and I.is_homogeneous():
        return _colon_variable(I, k)
    inter = intersect(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [divide_exact(h, g) for h in inter.generators])


def colon(I: Ideal, J: Ideal) -> Ideal:
    """``I : J = {f : f J ⊆ I}`` as an intersection of principal colons."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    parts = [colon_principal(I, g) for g in J.generators]
    return reduce(intersect, parts)


def saturate(I: Ideal, J: Ideal, max_steps: int = 1000) -> tuple[Ideal, int]:
    """``I : J^inf`` and the first index at which ``I : J^k`` stabilizes."""
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    cur = I
    for k in range(max_steps):
        if cur.is_unit():
            return cur, k
        nxt = colon(cur, J)
        if cur.contains_ideal(nxt):
            return cur, k
        cur = nxt
    raise RuntimeError("saturation did not stabilize")


def saturate_irrelevant(I: Ideal) -> tuple[Ideal, int]:
    """Saturation with respect to the irrelevant ideal and its exponent.

    Computed as the intersection of the variable saturations ``I : y_k^inf``;
    the exponent is the least ``k`` with ``I : M^k = I : M^inf``.
    """
    if not I.is_homogeneous():
        raise UnsupportedInput("saturation by the irrelevant ideal needs a homogeneous ideal")
    ring = I.ring
    if I.is_zero() or I.is_unit():
        return I, 0
    parts = [_colon_variable(I, k, infinite=True) for k in range(ring.arity)]
    if any(P.is_unit() for P in parts):
        parts = [P for P in parts if not P.is_unit()] or [Ideal.unit(ring)]
    S = reduce(intersect, parts)
    return S, max(_annihilating_power(g, I) for g in S.groebner())


def _annihilating_power(g: Polynomial, I: Ideal) -> int:
    """Least ``t`` with ``g * M^t ⊆ I`` (``g`` must lie in ``I^sat``)."""
    n = g.ring.arity
    bad = [(0,) * n]
    t = 0
    while True:
        bad = [m for m in bad if not I.contains(g.mul_monomial(m))]
        if not bad:
            return t
        t += 1
        if t > 10_000:
            raise RuntimeError("annihilating power search did not terminate")
        nxt = set()
        for m in bad:
            for k in range(n):
                nxt.add(m[:k] + (m[k] + 1,) + m[k + 1:])
        bad = sorted(nxt)


def saturate_variable(I: Ideal, k: int) -> Ideal:
    """``I : y_k^inf``."""
    if I.is_homogeneous():
        return _colon_variable(I, k, infinite=True)
    return saturate(I, Ideal(I.ring, [I.ring.var(k)]))[0]


def saturate_form(I: Ideal, g: Polynomial) -> Ideal:
    """``I : g^inf``; a linear ``g`` is first turned into a coordinate."""
    from .poly import coordinates_for_form, linear_change

    if I.is_homogeneous() and g.is_homogeneous() and g.degree() == 1:
        k, m = coordinates_for_form(g)
        inv = _inverse(m)
        J = Ideal(I.ring, [linear_change(f, m) for f in I.generators])
        S = saturate_variable(J, k)
        return Ideal(I.ring, [linear_change(f, inv) for f in S.generators])
    return saturate(I, Ideal(I.ring, [g]))[0]


def _inverse(m):
    n = len(m)
    a = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c])
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                q = a[r][c]
                a[r] = [x - q * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def is_regular_for_quotient(L: Polynomial, I: Ideal) -> bool:
    """True iff multiplication by ``L`` is injective on ``S/I``."""
    if L.is_zero():
        raise ValueError("zero form")
    if I.is_unit():
        raise ValueError("quotient by the unit ideal")
    return I.contains_ideal(colon_principal(I, L))


def irrelevant_power_contained(I: Ideal) -> int | None:
    """Smallest ``t`` with ``M^t ⊆ I`` (``None`` if no power of M lies in I)."""
    sat, t = saturate_irrelevant(I)
    return t if sat.is_unit() else None


# ---------------------------------------------------------------------------
# Hilbert functions

def _minimalize(mons: Iterable[tuple]) -> tuple:
    ms = sorted(set(mons), key=sum)
    out = []
    for m in ms:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


_NUM_CACHE: dict = {}


def hilbert_numerator(mons: Iterable[tuple]) -> list[int]:
    """Numerator ``N(t)`` of the Hilbert series ``N(t)/(1-t)^n`` of ``S/(mons)``."""
    gens = _minimalize(mons)
    hit = _NUM_CACHE.get(gens)
    if hit is not None:
        return list(hit)
    if not gens:
        res = [1]
    elif all(_coprime(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]):
        res = [1]
        for g in gens:
            d = sum(g)
            res = _poly_mul(res, [1] + [0] * (d - 1) + [-1])
    else:
        n = len(gens[0])
        counts = [sum(1 for g in gens if g[i] and sum(g) > 1) for i in range(n)]
        v = max(range(n), key=lambda i: counts[i])
        p = tuple(int(i == v) for i in range(n))
        plus = hilbert_numerator(gens + (p,))
        quot = hilbert_numerator(tuple(tuple(max(a - b, 0) for a, b in zip(g, p)) for g in gens))
        res = _poly_add(plus, [0] + quot)
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    _NUM_CACHE[gens] = tuple(res)
    return list(res)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function and polynomial of ``S/I``.

    ``polynomial`` holds rational coefficients in increasing degree; the
    function and polynomial agree for every ``d >= stabilization_degree``.
    """

    nvars: int
    numerator: tuple[int, ...]
    dimension: int
    polynomial: tuple[Fraction, ...]
    stabilization_degree: int

    def function(self, d: int) -> int:
        if d < 0:
            return 0
        n = self.nvars
        return sum(c * comb(d - j + n - 1, n - 1) for j, c in enumerate(self.numerator) if d - j >= 0)

    def __call__(self, d: int) -> int:
        return self.function(d)

    def values(self, upto: int) -> list[int]:
        return [self.function(d) for d in range(upto + 1)]

    def poly_value(self, d: int) -> Fraction:
        return sum((c * d ** i for i, c in enumerate(self.polynomial)), Fraction(0))

    def same_polynomial(self, other: "HilbertData") -> bool:
        return self.polynomial == other.polynomial


def _binomial_poly(shift: int, k: int) -> list[Fraction]:
    """Coefficients in ``d`` of ``C(d + shift, k)``."""
    out = [Fraction(1)]
    for m in range(k):
        # multiply by (d + shift - m) / (m + 1)
        a = Fraction(shift - m, m + 1)
        b = Fraction(1, m + 1)
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] += c * a
            nxt[i + 1] += c * b
        out = nxt
    return out


def hilbert_data(I: Ideal) -> HilbertData:
    if not I.is_homogeneous():
        raise UnsupportedInput("Hilbert data needs a homogeneous ideal")
    n = I.ring.arity
    lms = I.leading_monomials() if not I.is_zero() else []
    num = hilbert_numerator(lms)
    if I.is_zero():
        num = [1]
    # strip factors (1 - t)
    q = list(num)
    k = 0
    while k < n and sum(q) == 0 and any(q):
        # synthetic division by (1 - t): q = (1-t) r  =>  r_i = sum_{j<=i} q_j
        r, acc = [], 0
        for c in q[:-1]:
            acc += c
            r.append(acc)
        q = r
        k += 1
    dim = n - k
    if not any(q):
        dim = 0
    if dim == 0:
        hp: list[Fraction] = []
    else:
        hp = [Fraction(0)] * dim
        for j, c in enumerate(q):
            if c:
                for i, v in enumerate(_binomial_poly(dim - 1 - j, dim - 1)):
                    hp[i] += c * v
        while hp and hp[-1] == 0:
            hp.pop()
    data = HilbertData(n, tuple(num), dim, tuple(hp), 0)
    start = max(0, len(q) - 1 - dim + 1, len(num))
    d0 = start
    while d0 > 0 and data.function(d0 - 1) == data.poly_value(d0 - 1):
        d0 -= 1
    return HilbertData(n, tuple(num), dim, tuple(hp), d0)
