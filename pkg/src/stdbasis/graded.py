"""Graded pieces of homogeneous ideals and standard (minimal) bases."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groebner import Ideal, UnsupportedInput
from .poly import DEGREVLEX, Polynomial, Ring, monomials_of_degree


class Echelon:
    """Incremental row echelon form over Q for polynomials of one degree.

    Rows are kept fully reduced against each other; each has a distinct
    pivot monomial (its degrevlex-leading term) with coefficient 1.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot exponent -> dict exponent -> Fraction
        self._key = DEGREVLEX.key

    def __len__(self):
        return len(self.rows)

    def reduce(self, terms: dict) -> dict:
        v = dict(terms)
        key = self._key
        while True:
            pivots = [e for e in v if e in self.rows]
            if not pivots:
                return v
            e = max(pivots, key=key)
            c = v[e]
            for t, a in self.rows[e].items():
                nv = v.get(t, 0) - c * a
                if nv:
                    v[t] = nv
                else:
                    v.pop(t, None)

    def add(self, terms: dict) -> bool:
        """Insert a vector; return False when it is already in the span."""
        v = self.reduce(terms)
        if not v:
            return False
        e = max(v, key=self._key)
        c = v[e]
        v = {t: a / c for t, a in v.items()}
        for p, row in self.rows.items():
            if e in row:
                k = row[e]
                for t, a in v.items():
                    nv = row.get(t, 0) - k * a
                    if nv:
                        row[t] = nv
                    else:
                        row.pop(t, None)
        self.rows[e] = v
        return True

    def contains(self, terms: dict) -> bool:
        return not self.reduce(terms)


@dataclass(frozen=True)
class GradedPieceBasis:
    degree: int
    basis: tuple[Polynomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _check_homogeneous(gens: Iterable[Polynomial]):
    for g in gens:
        if not g.is_homogeneous():
            raise UnsupportedInput(f"{g} is not homogeneous")


def _span_in_degree(gens: Sequence[Polynomial], d: int, below: bool = False) -> Echelon:
    """Echelon form of the monomial multiples of ``gens`` landing in degree ``d``.

    With ``below`` only generators of degree ``< d`` contribute, i.e. the
    space ``(I_{d-1} S_1)_d``.
    """
    ech = Echelon()
    for g in gens:
        k = g.degree()
        if k > d or (below and k == d):
            continue
        for m in monomials_of_degree(g.ring.arity, d - k):
            ech.add(g.mul_monomial(m)._terms)
    return ech


def graded_piece(I: Ideal, d: int) -> GradedPieceBasis:
    """Row-reduced basis of ``I_d``."""
    _check_homogeneous(I.generators)
    if d < 0:
        raise ValueError("degree must be non-negative")
    ech = _span_in_degree(I.generators, d)
    basis = tuple(Polynomial(I.ring, ech.rows[e]) for e in sorted(ech.rows, key=DEGREVLEX.key, reverse=True))
    return GradedPieceBasis(d, basis)


@dataclass(frozen=True)
class StandardBasis:
    """Minimal homogeneous generating set ordered by weakly increasing degree."""

    ring: Ring
    elements: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        degs = self.degrees
        if any(a > b for a, b in zip(degs, degs[1:])):
            raise ValueError(f"standard basis degrees must be weakly increasing, got {degs}")
        _check_homogeneous(self.elements)
        if any(e.is_zero() for e in self.elements):
            raise ValueError("standard basis contains zero")

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(e.degree() for e in self.elements)

    @property
    def initial_degree(self) -> int:
        """Minimal degree of the ideal (alpha)."""
        return self.elements[0].degree()

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements)

    def without(self, indices: Iterable[int]) -> Ideal:
        gone = set(indices)
        return Ideal(self.ring, [e for i, e in enumerate(self.elements) if i not in gone])

    def replace(self, mapping: dict) -> "StandardBasis":
        return StandardBasis(self.ring, [mapping.get(i, e) for i, e in enumerate(self.elements)])

    def betti(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees).items()))

    def is_minimal(self) -> bool:
        return is_standard_basis(self.elements)

    def __str__(self):
        return "(" + ", ".join(map(str, self.elements)) + ")"


def is_standard_basis(elements: Sequence[Polynomial]) -> bool:
    """Each degree-d element is independent modulo ``(I_{d-1}S_1)_d`` and the others."""
    _check_homogeneous(elements)
    for d in sorted({e.degree() for e in elements}):
        ech = _span_in_degree(elements, d, below=True)
        for e in elements:
            if e.degree() == d and not ech.add(e._terms):
                return False
    return True


def extract_standard_basis(gens: Sequence[Polynomial], ring: Ring | None = None) -> StandardBasis:
    """Pick a standard basis among ``gens``, preferring earlier generators."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    _check_homogeneous(gens)
    ring = ring or gens[0].ring
    chosen: list[Polynomial] = []
    for d in sorted({g.degree() for g in gens}):
        ech = _span_in_degree(chosen, d, below=True)
        for g in gens:
            if g.degree() == d and ech.add(g._terms):
                chosen.append(g)
    return StandardBasis(ring, chosen)


def first_betti(I: Ideal) -> dict[int, int]:
    """Number of minimal generators per degree: ``dim I_d - dim (I_{d-1}S_1)_d``."""
    _check_homogeneous(I.generators)
    out = {}
    for d in sorted({g.degree() for g in I.generators}):
        full = len(_span_in_degree(I.generators, d))
        lower = len(_span_in_degree(I.generators, d, below=True))
        if full > lower:
            out[d] = full - lower
    return out
