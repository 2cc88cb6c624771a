"""Hilbert–Burch matrices of codimension-two perfect ideals.

A ``(t-1) x t`` matrix of forms whose signed maximal minors
``g_j = (-1)^j det(M without column j)`` (columns counted from 1) form a
standard basis.  Generator ``g_j`` is inessential exactly when the ideal of
the entries of column ``j`` contains a power of the irrelevant ideal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .essentiality import (
    NOT_SI,
    RULE_COLUMN,
    RULE_TOP,
    SI_CERTIFIED,
    SI_LIKELY,
    CrossCheckError,
    classify,
    is_inessential_set,
    random_form,
    _pool_radius,
)
from .graded import StandardBasis
from .groebner import Ideal, hilbert_data, saturate_irrelevant
from .poly import Polynomial, Ring, dehomogenize_wrt, monomials_of_degree


class MatrixError(ValueError):
    """Inconsistent degrees or a vanishing maximal minor."""


def determinant(rows: Sequence[Sequence[Polynomial]], ring: Ring) -> Polynomial:
    """Fraction-free Laplace expansion along the sparsest remaining row."""
    n = len(rows)
    memo: dict = {}

    def det(rset: tuple, cset: tuple) -> Polynomial:
        if not rset:
            return ring.one()
        key = (rset, cset)
        if key in memo:
            return memo[key]
        r = min(rset, key=lambda i: sum(1 for c in cset if not rows[i][c].is_zero()))
        rest = tuple(i for i in rset if i != r)
        out = ring.zero()
        for pos, c in enumerate(cset):
            a = rows[r][c]
            if a.is_zero():
                continue
            rpos = rset.index(r)
            sub = det(rest, cset[:pos] + cset[pos + 1:])
            term = a * sub
            out = out - term if (rpos + pos) % 2 else out + term
        memo[key] = out
        return out

    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    return det(tuple(range(n)), tuple(range(n)))


@dataclass(frozen=True)
class HilbertMatrix:
    """Rows of homogeneous forms; ``column_degrees[j]`` is ``deg g_j``."""

    ring: Ring
    entries: tuple[tuple[Polynomial, ...], ...]
    column_degrees: tuple[int, ...] = ()
    row_degrees: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        t = len(rows) + 1
        if any(len(r) != t for r in rows):
            raise MatrixError(f"a Hilbert matrix has shape (t-1) x t; got {len(rows)} rows of lengths "
                              f"{[len(r) for r in rows]}")
        for r in rows:
            for a in r:
                if not a.is_homogeneous():
                    raise MatrixError(f"entry {a} is not homogeneous")
        if not self.column_degrees:
            gens = _signed_minors(self.ring, rows)
            object.__setattr__(self, "column_degrees", tuple(g.degree() for g in gens))
        e = self.column_degrees
        if len(e) != t:
            raise MatrixError("one degree label per column is required")
        if not self.row_degrees:
            d = []
            for i, r in enumerate(rows):
                nz = [a.degree() + e[j] for j, a in enumerate(r) if not a.is_zero()]
                if not nz:
                    raise MatrixError(f"row {i + 1} is zero")
                d.append(nz[0])
            object.__setattr__(self, "row_degrees", tuple(d))
        for i, r in enumerate(rows):
            for j, a in enumerate(r):
                if not a.is_zero() and a.degree() != self.row_degrees[i] - e[j]:
                    raise MatrixError(
                        f"entry ({i + 1},{j + 1}) = {a} has degree {a.degree()}, expected "
                        f"{self.row_degrees[i]} - {e[j]}")
        if any(a > b for a, b in zip(e, e[1:])):
            raise MatrixError(f"column degrees must be weakly increasing, got {e}")

    @classmethod
    def parse(cls, ring: Ring, rows: Sequence[Sequence[str]]) -> "HilbertMatrix":
        return cls(ring, tuple(tuple(ring(s) for s in r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.entries) + 1

    def column(self, j: int) -> tuple[Polynomial, ...]:
        return tuple(r[j] for r in self.entries)

    def column_ideal(self, j: int) -> Ideal:
        return Ideal(self.ring, self.column(j))

    def with_column(self, j: int, col: Sequence[Polynomial]) -> "HilbertMatrix":
        rows = [list(r) for r in self.entries]
        for r, a in zip(rows, col):
            r[j] = a
        return HilbertMatrix(self.ring, tuple(map(tuple, rows)), self.column_degrees, self.row_degrees)


def _signed_minors(ring: Ring, rows) -> list[Polynomial]:
    t = len(rows) + 1
    out = []
    for j in range(t):
        sub = [[r[c] for c in range(t) if c != j] for r in rows]
        g = determinant(sub, ring)
        if g.is_zero():
            raise MatrixError(f"the minor deleting column {j + 1} vanishes")
        out.append(g if (j + 1) % 2 == 0 else -g)
    return out


def generators_from_matrix(M: HilbertMatrix) -> list[Polynomial]:
    """``g_j = (-1)^j det(M without column j)`` for ``j = 1..t``."""
    return _signed_minors(M.ring, M.entries)


def basis_from_matrix(M: HilbertMatrix) -> StandardBasis:
    return StandardBasis(M.ring, generators_from_matrix(M))


@dataclass(frozen=True)
class MatrixCheck:
    ok: bool
    diagnostic: str = ""

    def __bool__(self):
        return self.ok


def verify_matrix(M: HilbertMatrix, B: StandardBasis) -> MatrixCheck:
    """Minors agree with ``B`` up to scalars and every row is a syzygy of ``B``."""
    if len(B) != M.size:
        return MatrixCheck(False, f"matrix has {M.size} columns, basis has {len(B)} elements")
    for i, row in enumerate(M.entries):
        s = M.ring.zero()
        for a, g in zip(row, B):
            s = s + a * g
        if not s.is_zero():
            return MatrixCheck(False, f"row {i + 1} is not a syzygy: row . B = {s}")
    try:
        gens = generators_from_matrix(M)
    except MatrixError as exc:
        return MatrixCheck(False, str(exc))
    for j, (g, b) in enumerate(zip(gens, B)):
        e, c = g.leading_term()
        q = b.coefficient(e) / c
        if not q or g.scale(q) != b:
            return MatrixCheck(False, f"minor {j + 1} = {g} is not a scalar multiple of {b}")
    return MatrixCheck(True)


# ---------------------------------------------------------------------------
# column verdicts

@dataclass(frozen=True)
class ColumnVerdict:
    column: int
    inessential: bool
    exponent: int | None = None
    si_status: str | None = None
    rule: str | None = None
    trials: int = 0
    seed: int | None = None
    witness_column: tuple[Polynomial, ...] | None = None
    witness_coefficients: dict | None = None

    def to_json(self, column_ideal: Ideal | None = None) -> dict:
        out = {"column": self.column + 1,
               "status": "inessential" if self.inessential else "essential"}
        if column_ideal is not None:
            out["column_ideal"] = [str(a) for a in column_ideal.generators]
        if self.inessential:
            out["exponent"] = self.exponent
        if self.si_status:
            out["si_status"] = self.si_status
            out["certainty"] = f"monte-carlo({self.trials})" if self.si_status == SI_LIKELY else "exact"
        if self.rule:
            out["rule"] = self.rule
        if self.si_status == SI_LIKELY:
            out["trials"] = self.trials
            out["seed"] = self.seed
        if self.witness_column is not None:
            out["witness_column"] = [str(a) for a in self.witness_column]
        return out


def _irrelevant_exponent(col: Iterable[Polynomial], ring: Ring) -> int | None:
    C = Ideal(ring, col)
    if C.is_zero():
        return None
    sat, t = saturate_irrelevant(C)
    return t if sat.is_unit() else None


def _has_irrelevant_power(col: Iterable[Polynomial], ring: Ring) -> bool:
    """Finite colength test through the Krull dimension of the quotient."""
    C = Ideal(ring, col)
    if C.is_zero():
        return False
    return C.is_unit() or hilbert_data(C).dimension == 0


def recheck_exponent(M: HilbertMatrix, j: int, t: int) -> bool:
    C = M.column_ideal(j)
    return all(C.contains(M.ring.monomial(m)) for m in monomials_of_degree(M.ring.arity, t))


def column_criterion(M: HilbertMatrix, j: int, crosscheck: bool = True) -> ColumnVerdict:
    """Inessential iff the column ideal contains some ``M^t``; ``t`` minimal."""
    t = _irrelevant_exponent(M.column(j), M.ring)
    v = ColumnVerdict(j, t is not None, exponent=t)
    if crosscheck:
        B = basis_from_matrix(M)
        if classify(B, j).inessential != v.inessential:
            raise CrossCheckError(f"column {j + 1}: column criterion and saturation membership disagree")
    return v


def legal_degrees(M: HilbertMatrix, r: int) -> dict[int, int]:
    """Columns that may be added to column ``r`` and the degree of their coefficient."""
    e = M.column_degrees
    return {j: e[j] - e[r] for j in range(M.size) if j != r and e[j] >= e[r]}


def _combine(M: HilbertMatrix, r: int, coeffs: dict) -> tuple[Polynomial, ...]:
    col = list(M.column(r))
    for j, a in coeffs.items():
        if a.is_zero():
            continue
        for i, x in enumerate(M.column(j)):
            col[i] = col[i] + a * x
    return tuple(col)


def _exact_linear_rule(M: HilbertMatrix, r: int, legal: dict) -> bool:
    """All legal coefficients are scalars and all entries linear: decide exactly.

    The combined column spans the linear forms for every parameter value iff
    the maximal minors of its parametric coefficient matrix have no common
    zero, i.e. generate the unit ideal of the parameter ring.
    """
    if any(d != 0 for d in legal.values()):
        return False
    cols = [r] + sorted(legal)
    if any(not a.is_zero() and a.degree() != 1 for j in cols for a in M.column(j)):
        return False
    n = M.ring.arity
    params = Ring(tuple(f"s{k}" for k in range(len(legal))))
    svars = [params.one()] + list(params.gens())
    rows = []
    for i in range(len(M.entries)):
        row = []
        for v in range(n):
            e = tuple(int(k == v) for k in range(n))
            c = params.zero()
            for s, j in zip(svars, cols):
                a = M.entries[i][j].coefficient(e)
                if a:
                    c = c + s.scale(a)
            row.append(c)
        rows.append(row)
    if len(rows) < n:
        return False
    minors = [determinant([rows[i] for i in sub], params) for sub in combinations(range(len(rows)), n)]
    return Ideal(params, minors).is_unit()


def si_column_test(M: HilbertMatrix, j: int, trials: int, rng: random.Random) -> ColumnVerdict:
    """Strong inessentiality of ``g_j`` through column combinations."""
    base = column_criterion(M, j)
    if not base.inessential:
        raise ValueError(f"column {j + 1} is essential")
    legal = legal_degrees(M, j)
    if not legal:
        return ColumnVerdict(j, True, base.exponent, SI_CERTIFIED, rule=RULE_TOP)
    exact = _exact_linear_rule(M, j, legal)

    def probe(coeffs):
        col = _combine(M, j, coeffs)
        if not _has_irrelevant_power(col, M.ring):
            return ColumnVerdict(j, True, base.exponent, NOT_SI, witness_column=col,
                                 witness_coefficients=coeffs)
        return None

    found = None
    scalars = [k for k, d in legal.items() if d == 0]
    if scalars and len(scalars) <= 6:
        for vals in product((1, -1, 0), repeat=len(scalars)):
            if not any(vals):
                continue
            coeffs = {k: M.ring.const(v) for k, v in zip(scalars, vals)}
            found = probe(coeffs)
            if found:
                break
    if found is None:
        for trial in range(trials):
            r = _pool_radius(trial)
            coeffs = {k: random_form(M.ring, d, rng, r) for k, d in legal.items()}
            if all(a.is_zero() for a in coeffs.values()):
                continue
            found = probe(coeffs)
            if found:
                break
    if found is not None:
        if exact:
            raise CrossCheckError(f"column {j + 1}: exact rule certified a column with an essential combination")
        return found
    if exact:
        return ColumnVerdict(j, True, base.exponent, SI_CERTIFIED, rule=RULE_COLUMN, trials=trials)
    return ColumnVerdict(j, True, base.exponent, SI_LIKELY, trials=trials,
                         seed=getattr(rng, "seed_value", None))


def recheck_column_verdict(M: HilbertMatrix, v: ColumnVerdict) -> bool:
    if v.inessential and not recheck_exponent(M, v.column, v.exponent):
        return False
    if v.si_status == NOT_SI:
        return _irrelevant_exponent(v.witness_column, M.ring) is None and \
            _combine(M, v.column, v.witness_coefficients) == v.witness_column
    if v.si_status == SI_CERTIFIED and v.rule == RULE_TOP:
        return not legal_degrees(M, v.column)
    if v.si_status == SI_CERTIFIED and v.rule == RULE_COLUMN:
        return _exact_linear_rule(M, v.column, legal_degrees(M, v.column))
    return column_criterion(M, v.column, crosscheck=False).inessential == v.inessential


def dehomogenized_column_ideal(M: HilbertMatrix, j: int, L: Polynomial) -> Ideal:
    col = [dehomogenize_wrt(a, L) for a in M.column(j)]
    col = [a for a in col if not a.is_zero()]
    if not col:
        raise ValueError("column dehomogenizes to zero")
    return Ideal(col[0].ring, col)


@dataclass(frozen=True)
class SetVerdict:
    indices: tuple[int, ...]
    inessential: bool
    sampled_inessential: bool
    certainty: str
    trials: int
    witness: tuple | None = None  # (position, combined column)

    def to_json(self) -> dict:
        out = {"indices": [i + 1 for i in self.indices],
               "status": "inessential-set" if self.inessential else "not-inessential",
               "sampled": "all-pass" if self.sampled_inessential else "failure",
               "certainty": self.certainty, "trials": self.trials}
        if self.witness is not None:
            k, col = self.witness
            out["witness"] = {"column": k + 1, "combined": [str(a) for a in col]}
        return out


def inessential_set_column_test(M: HilbertMatrix, indices: Iterable[int], trials: int,
                                rng: random.Random) -> SetVerdict:
    """Sample triangular column combinations, confirm with the exact saturation test."""
    idx = tuple(indices)
    if list(idx) != sorted(set(idx)) or any(not 0 <= i < M.size for i in idx):
        raise ValueError("indices must be distinct, ascending and in range")
    e = M.column_degrees
    witness = None
    for trial in range(max(trials, 1)):
        for pos, r in enumerate(idx):
            later = [h for h in idx[pos + 1:] if e[h] >= e[r]]
            if trial == 0:
                coeffs = {}
            else:
                rad = _pool_radius(trial - 1)
                coeffs = {h: random_form(M.ring, e[h] - e[r], rng, rad) for h in later}
            col = _combine(M, r, coeffs)
            if not _has_irrelevant_power(col, M.ring):
                witness = (r, col)
                break
        if witness:
            break
    sampled = witness is None
    exact = is_inessential_set(basis_from_matrix(M), idx)
    if not sampled and exact:
        raise CrossCheckError(f"set {idx}: a sampled combination fails although the set is inessential")
    return SetVerdict(idx, exact, sampled, "exact", trials, witness)
