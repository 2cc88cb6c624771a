"""Exact sparse multivariate polynomials over the rationals.

Polynomials are immutable values: a ring descriptor plus a map from exponent
tuples to nonzero :class:`fractions.Fraction` coefficients.  Monomial orders
are encoded as integer sort keys so that term comparisons are cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as _iproduct
from math import comb, gcd
from typing import Iterable, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

_RADIX_BITS = 24
_RADIX = 1 << _RADIX_BITS


class ParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))
        self.pos = pos


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """Polynomial ring ``Q[names]``; variable 0 is the default dehomogenizer."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                raise ValueError(f"invalid variable name {n!r}")

    @property
    def arity(self) -> int:
        return len(self.names)

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.arity))

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.arity
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def index(self, name: str) -> int:
        return self.names.index(name)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: Scalar) -> "Polynomial":
        return Polynomial(self, {(0,) * self.arity: Fraction(c)})

    def monomial(self, exp: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exp): Fraction(coeff)})

    def __call__(self, text: str) -> "Polynomial":
        return parse_form(text, self)

    def drop(self, i: int) -> "Ring":
        if not 0 <= i < self.arity:
            raise IndexError(f"variable index {i} out of range")
        return Ring(self.names[:i] + self.names[i + 1:])

    def insert(self, i: int, name: str) -> "Ring":
        return Ring(self.names[:i] + (name,) + self.names[i:])


def monomials_of_degree(nvars: int, d: int) -> list[Exponent]:
    """All exponent tuples of total degree ``d``, in descending lex order."""
    if d < 0:
        return []
    if nvars == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - a):
            out.append((a,) + rest)
    return out


def count_monomials(nvars: int, d: int) -> int:
    return comb(d + nvars - 1, nvars - 1) if d >= 0 else 0


@dataclass(frozen=True)
class MonomialOrder:
    """Global monomial order: ``degrevlex``, ``lex`` or ``elim`` (block order).

    ``elim`` with ``block=k`` compares the first ``k`` variables by degrevlex
    first and breaks ties with degrevlex on the remaining ones, so it
    eliminates the first block.
    """

    kind: str = "degrevlex"
    block: int = 0
    _memo: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    @classmethod
    def parse(cls, name: str) -> "MonomialOrder":
        m = re.fullmatch(r"elim(?:\((\d+)\)|:?(\d+))", name)
        if m:
            return cls("elim", int(m.group(1) or m.group(2)))
        return cls(name)

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind

    def _digits(self, e: Exponent) -> list[int]:
        if self.kind == "lex":
            return list(e)
        if self.kind == "degrevlex":
            return [sum(e)] + [_RADIX - 1 - x for x in reversed(e)]
        k = self.block
        a, b = e[:k], e[k:]
        return ([sum(a)] + [_RADIX - 1 - x for x in reversed(a)]
                + [sum(b)] + [_RADIX - 1 - x for x in reversed(b)])

    def key(self, e: Exponent) -> int:
        """Integer sort key; larger key means larger monomial."""
        try:
            return self._memo[e]
        except KeyError:
            v = 0
            for d in self._digits(e):
                v = (v << _RADIX_BITS) | d
            self._memo[e] = v
            return v

    def is_graded(self) -> bool:
        return self.kind == "degrevlex"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported scalar {c!r}; use int or Fraction")


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Exponent, Scalar] = ()):
        self.ring = ring
        clean = {}
        n = ring.arity
        for e, c in dict(terms).items():
            c = _as_fraction(c)
            if c:
                e = tuple(e)
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent {e} for ring of arity {n}")
                clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self.ring.arity, Fraction(0))

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=order.key)
        return e, self._terms[e]

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX):
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: c for e, c in self._terms.items() if sum(e) == d})

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise RingMismatch(f"ring mismatch: {self.ring.names} vs {other.ring.names}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._terms)
        for e, c in other._terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Polynomial._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        t: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    del t[e]
        return Polynomial._raw(self.ring, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: c * v for e, v in self._terms.items()})

    def mul_monomial(self, exp: Exponent, c: Scalar = 1) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self._terms.items()})

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(1 / self.leading_term(order)[1])

    def exact_div_monomial(self, exp: Exponent) -> "Polynomial":
        out = {}
        for e, c in self._terms.items():
            q = tuple(a - b for a, b in zip(e, exp))
            if any(x < 0 for x in q):
                raise ValueError("monomial does not divide polynomial")
            out[q] = c
        return Polynomial._raw(self.ring, out)

    # -- equality / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- substitution -----------------------------------------------------
    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at ``point`` (one rational per variable)."""
        if len(point) != self.ring.arity:
            raise ValueError(f"point has {len(point)} coordinates, ring has {self.ring.arity}")
        pt = [_as_fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace variable ``i`` by ``images[i]`` (all in one target ring)."""
        if len(images) != self.ring.arity:
            raise ValueError("need one image per variable")
        target = images[0].ring
        powers: list[dict[int, Polynomial]] = [{0: target.one()} for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * images[i]
            return cache[k]

        out = target.zero()
        for e, c in self._terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Reindex variables: exponent position ``i`` moves to ``perm[i]``."""
        out = {}
        for e, c in self._terms.items():
            ne = [0] * len(e)
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return Polynomial._raw(self.ring, out)

    # -- printing ---------------------------------------------------------
    def __str__(self):
        return format_form(self)

    def __repr__(self):
        return f"Polynomial({format_form(self)!r}, ring={self.ring.names})"


# ---------------------------------------------------------------------------
# printing and parsing

def _format_monomial(e: Exponent, names: Sequence[str]) -> str:
    parts = []
    for n, k in zip(names, e):
        if k == 1:
            parts.append(n)
        elif k > 1:
            parts.append(f"{n}^{k}")
    return "*".join(parts)


def format_form(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    if f.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(f.sorted_terms(order)):
        mono = _format_monomial(e, f.ring.names)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{a}*{mono}"
        else:
            body = str(a)
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if m.group(1):
                self.tokens.append(("num", m.group(1), m.start(1)))
            elif m.group(2):
                self._split_identifier(m.group(2), m.start(2))
            else:
                if m.group(3) not in "+-*/^()":
                    raise ParseError(f"unexpected character {m.group(3)!r}", m.start(3), text)
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def _split_identifier(self, ident: str, start: int):
        names = self.ring.names
        if ident in names:
            self.tokens.append(("var", ident, start))
            return
        # juxtaposed variable names such as "xyz"; longest name first
        by_len = sorted(names, key=len, reverse=True)
        pos = 0
        while pos < len(ident):
            for n in by_len:
                if ident.startswith(n, pos):
                    self.tokens.append(("var", n, start + pos))
                    pos += len(n)
                    break
            else:
                raise ParseError(f"unknown variable {ident!r}", start, self.text)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, val):
        t = self.take()
        if t[1] != val:
            raise ParseError(f"expected {val!r}", t[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", 0, self.text)
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2], self.text)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        t = self.peek()
        if t[1] in "+-" and t[0] == "op":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = self.term().scale(sign)
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def _starts_factor(self, t) -> bool:
        return t[0] in ("num", "var") or (t[0] == "op" and t[1] == "(")

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif t[0] == "op" and t[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "num":
                    raise ParseError("only division by an integer constant is allowed", d[2], self.text)
                if int(d[1]) == 0:
                    raise ParseError("division by zero", d[2], self.text)
                acc = acc.scale(Fraction(1, int(d[1])))
            elif self._starts_factor(t):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            k = self.take()
            if k[0] != "num":
                raise ParseError("exponent must be a non-negative integer", k[2], self.text)
            base = base ** int(k[1])
        return base

    def atom(self) -> Polynomial:
        t = self.take()
        if t[0] == "num":
            return self.ring.const(int(t[1]))
        if t[0] == "var":
            return self.ring.var(self.ring.index(t[1]))
        if t[0] == "op" and t[1] == "(":
            p = self.expr()
            self.expect(")")
            return p
        if t[0] == "op" and t[1] == "-":
            return -self.factor()
        raise ParseError(f"unexpected token {t[1]!r}" if t[1] else "unexpected end of input", t[2], self.text)


def parse_form(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` such as ``"3/2*x^2y - (x+z)^3"`` into a polynomial of ``ring``."""
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# grading and coordinate changes

def dehomogenize(f: Polynomial, var_index: int = 0) -> Polynomial:
    """Set variable ``var_index`` to 1; the result lives in the smaller ring."""
    ring = f.ring
    if not 0 <= var_index < ring.arity:
        raise IndexError(f"variable index {var_index} out of range")
    target = ring.drop(var_index)
    out: dict = {}
    for e, c in f.items():
        ne = e[:var_index] + e[var_index + 1:]
        v = out.get(ne, 0) + c
        if v:
            out[ne] = v
        else:
            del out[ne]
    return Polynomial._raw(target, out)


def homogenize(f: Polynomial, var_index: int = 0, name: str | None = None) -> Polynomial:
    """Insert a new variable at ``var_index`` padding each term to degree ``deg f``."""
    if name is None:
        name = _fresh_name(f.ring, "h")
    target = f.ring.insert(var_index, name)
    d = f.degree()
    out = {}
    for e, c in f.items():
        out[e[:var_index] + (d - sum(e),) + e[var_index:]] = c
    return Polynomial._raw(target, out)


def _fresh_name(ring: Ring, base: str) -> str:
    name, k = base, 0
    while name in ring.names:
        k += 1
        name = f"{base}{k}"
    return name


def _det(m: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c]:
                q = a[r][c] / a[c][c]
                a[r] = [x - q * y for x, y in zip(a[r], a[c])]
    return det


def linear_change(f: Polynomial, matrix: Sequence[Sequence[Scalar]]) -> Polynomial:
    """Substitute ``y_i -> sum_j matrix[i][j] * y_j`` (matrix must be invertible)."""
    n = f.ring.arity
    m = [[_as_fraction(x) for x in row] for row in matrix]
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError(f"need a {n}x{n} matrix")
    if _det(m) == 0:
        raise ValueError("singular coordinate change")
    gens = f.ring.gens()
    images = []
    for row in m:
        img = f.ring.zero()
        for c, g in zip(row, gens):
            if c:
                img = img + g.scale(c)
        images.append(img)
    return f.substitute(images)


def linear_form_coefficients(L: Polynomial) -> list[Fraction]:
    if L.is_zero() or L.degree() != 1 or not L.is_homogeneous():
        raise ValueError(f"{L} is not a nonzero linear form")
    n = L.ring.arity
    return [L.coefficient(tuple(int(i == j) for j in range(n))) for i in range(n)]


def coordinates_for_form(L: Polynomial, position: int | None = None) -> tuple[int, list[list[Fraction]]]:
    """Coordinate change that turns the linear form ``L`` into a variable.

    Returns ``(k, matrix)`` such that ``linear_change(f, matrix)`` expresses
    ``f`` in coordinates where the new ``k``-th variable equals ``L``; then
    ``dehomogenize(..., k)`` is dehomogenization with respect to ``L``.
    """
    c = linear_form_coefficients(L)
    n = len(c)
    if position is None:
        position = next(i for i in range(n) if c[i])
    k = position
    if not c[k]:
        raise ValueError(f"L does not involve variable {k}")
    # old y_k = (Y_k - sum_{j!=k} c_j Y_j) / c_k, old y_j = Y_j
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m[k] = [(-c[j] / c[k] if j != k else 1 / c[k]) for j in range(n)]
    return k, m


def dehomogenize_wrt(f: Polynomial, L: Polynomial) -> Polynomial:
    """Dehomogenize ``f`` with respect to an arbitrary nonzero linear form."""
    k, m = coordinates_for_form(L)
    return dehomogenize(linear_change(f, m), k)


def small_points(nvars: int, height: int = 3) -> Iterable[tuple[int, ...]]:
    """Projective points with coordinates in ``[-height, height]``, low height first.

    Each point is listed once, normalized so its first nonzero coordinate is
    positive.
    """
    seen = set()
    coords = [0]
    for h in range(1, height + 1):
        coords = coords + [h, -h]
        for p in _iproduct(coords, repeat=nvars):
            if max(map(abs, p)) != h:
                continue
            first = next((x for x in p if x), 0)
            if first <= 0 or gcd(*p) != 1:
                continue
            if p in seen:
                continue
            seen.add(p)
            yield p
