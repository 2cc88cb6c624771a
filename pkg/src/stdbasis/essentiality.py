"""Essential and inessential elements of standard bases.

An element ``f`` of a standard basis ``B`` is *inessential* when it lies in
the saturation of the ideal ``H`` generated by the other elements, i.e. some
``f * M^t`` lands in ``H`` (``M`` the irrelevant ideal); otherwise it is
*essential*.  This module classifies elements, changes bases to flip the
nature of an element, and builds e-maximal, e-minimal and E-bases.

Randomized searches take an explicit :class:`random.Random`; every verdict
they return is re-verified exactly before it is reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .graded import StandardBasis, is_standard_basis
from .groebner import (
    Ideal,
    UnsupportedInput,
    hilbert_data,
    ideal_equal,
    is_regular_for_quotient,
    saturate_form,
    saturate_irrelevant,
    saturate_variable,
)
from .poly import (
    Polynomial,
    Ring,
    dehomogenize_wrt,
    linear_form_coefficients,
    monomials_of_degree,
    small_points,
)

ESSENTIAL = "essential"
INESSENTIAL = "inessential"

SI_CERTIFIED = "si-certified"
SI_LIKELY = "si-likely"
NOT_SI = "not-si"

SE_CERTIFIED = "se-certified"
SE_LIKELY = "se-likely"

RULE_LOWER = "sat-of-lower-degree"
RULE_TOP = "unique-top-degree"
RULE_COLUMN = "column-certified"

DEFAULT_TRIALS = 64
POOL_RADIUS = 3


class CrossCheckError(RuntimeError):
    """Two independent routes disagreed; this signals an engine bug."""


class BudgetExhausted(RuntimeError):
    """A randomized search gave up; ``partial`` carries any progress made."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class SeededRandom(random.Random):
    """``random.Random`` that remembers its seed for reports."""

    def __init__(self, seed: int = 0):
        super().__init__(seed)
        self.seed_value = seed


# ---------------------------------------------------------------------------
# cached saturations

@lru_cache(maxsize=4096)
def _sat_cached(ring: Ring, gens: tuple) -> tuple[Ideal, int]:
    return saturate_irrelevant(Ideal(ring, gens))


def saturation(I: Ideal) -> Ideal:
    return _sat_cached(I.ring, I.generators)[0]


def saturation_exponent(I: Ideal) -> int:
    return _sat_cached(I.ring, I.generators)[1]


def _other(B: StandardBasis, i: int) -> Ideal:
    return B.without([i])


def check_hypothesis(B: StandardBasis) -> None:
    """Reject bases whose ideal saturates to the unit or the irrelevant ideal."""
    S = saturation(B.ideal())
    if S.is_unit():
        raise UnsupportedInput("the saturation of the ideal is the unit ideal")
    if ideal_equal(S, Ideal.irrelevant(B.ring)):
        raise UnsupportedInput("the saturation of the ideal is the irrelevant ideal")


_hyp_ok: dict = {}


def _ensure_hypothesis(B: StandardBasis):
    if _hyp_ok.get(B) is None:
        check_hypothesis(B)
        _hyp_ok[B] = True


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class Verdict:
    """Nature of element ``index`` with its certificate.

    Inessential: ``exponent`` is the least ``t`` with ``f M^t ⊆ H`` and
    ``variable_exponents[k]`` the least ``n`` with ``f y_k^n ∈ H``.
    Essential: ``witness_variable`` is a variable ``N`` with ``f ∉ H : N^inf``.
    """

    index: int
    status: str
    exponent: int | None = None
    variable_exponents: tuple[int, ...] | None = None
    witness_variable: int | None = None

    @property
    def inessential(self) -> bool:
        return self.status == INESSENTIAL

    @property
    def essential(self) -> bool:
        return self.status == ESSENTIAL

    def to_json(self, ring: Ring) -> dict:
        out = {"index": self.index + 1, "status": self.status}
        if self.inessential:
            out["exponent"] = self.exponent
            out["variable_exponents"] = dict(zip(ring.names, self.variable_exponents))
        else:
            out["witness_variable"] = ring.names[self.witness_variable]
        return out


def _power_exponent(f: Polynomial, H: Ideal, bound: int) -> int:
    """Least ``t <= bound`` with ``f * M^t ⊆ H``."""
    n = f.ring.arity
    for t in range(bound + 1):
        if all(H.contains(f.mul_monomial(m)) for m in monomials_of_degree(n, t)):
            return t
    raise CrossCheckError(f"f M^{bound} not contained in H although f lies in the saturation")


def _variable_exponent(f: Polynomial, H: Ideal, k: int, bound: int) -> int:
    e = [0] * f.ring.arity
    for t in range(bound + 1):
        e[k] = t
        if H.contains(f.mul_monomial(tuple(e))):
            return t
    raise CrossCheckError(f"f y_{k}^{bound} not in H although f lies in the saturation")


def classify(B: StandardBasis, i: int) -> Verdict:
    """Decide whether ``B[i]`` is inessential by saturation membership."""
    _ensure_hypothesis(B)
    f = B[i]
    H = _other(B, i)
    n = B.ring.arity
    if H.is_zero():
        return Verdict(i, ESSENTIAL, witness_variable=0)
    Hsat = saturation(H)
    if Hsat.contains(f):
        t = _power_exponent(f, H, saturation_exponent(H))
        ks = tuple(_variable_exponent(f, H, k, t) for k in range(n))
        return Verdict(i, INESSENTIAL, exponent=t, variable_exponents=ks)
    for k in range(n):
        if not saturate_variable(H, k).contains(f):
            return Verdict(i, ESSENTIAL, witness_variable=k)
    raise CrossCheckError("f outside H^sat but inside every H : y_k^inf")


def classify_all(B: StandardBasis) -> list[Verdict]:
    return [classify(B, i) for i in range(len(B))]


def _quick_inessential(B: StandardBasis, i: int) -> bool:
    """Per-variable saturation membership, stopping at the first failure."""
    H = _other(B, i)
    if H.is_zero():
        return False
    f = B[i]
    return all(saturate_variable(H, k).contains(f) for k in range(B.ring.arity))


def recheck_verdict(B: StandardBasis, v: Verdict) -> bool:
    """Replay a certificate using membership tests only."""
    f = B[v.index]
    H = _other(B, v.index)
    n = B.ring.arity
    if v.inessential:
        if not all(H.contains(f.mul_monomial(m)) for m in monomials_of_degree(n, v.exponent)):
            return False
        for k, t in enumerate(v.variable_exponents):
            e = [0] * n
            e[k] = t
            if not H.contains(f.mul_monomial(tuple(e))):
                return False
        return True
    if H.is_zero():
        return True
    return not saturate_variable(H, v.witness_variable).contains(f)


def inessential_by_hilbert(B: StandardBasis, i: int) -> bool:
    """Inessential iff ``S/I`` and ``S/H`` share their Hilbert polynomial."""
    H = _other(B, i)
    if H.is_zero():
        return False
    return hilbert_data(B.ideal()).polynomial == hilbert_data(H).polynomial


def inessential_by_variable_powers(B: StandardBasis, i: int) -> bool:
    """Inessential iff for every variable ``y`` some ``f y^n`` lies in ``H``."""
    H = _other(B, i)
    if H.is_zero():
        return False
    f = B[i]
    return all(saturate_variable(H, k).contains(f) for k in range(B.ring.arity))


@dataclass(frozen=True)
class CrossCheck:
    index: int
    status: str
    hilbert_polynomial_I: tuple
    hilbert_polynomial_H: tuple


def classify_crosscheck(B: StandardBasis, i: int) -> CrossCheck:
    v = classify(B, i)
    H = _other(B, i)
    hpI = hilbert_data(B.ideal()).polynomial
    hpH = hilbert_data(H).polynomial if not H.is_zero() else None
    by_hilbert = hpI == hpH
    if by_hilbert != v.inessential:
        raise CrossCheckError(
            f"element {i}: saturation says {v.status}, Hilbert polynomials say "
            f"{'inessential' if by_hilbert else 'essential'}")
    return CrossCheck(i, v.status, hpI, hpH)


# ---------------------------------------------------------------------------
# essentiality witness

@dataclass(frozen=True)
class EssentialityWitness:
    """Linear forms ``L_1..L_n, N`` spanning ``M_1`` with ``f N^t ∉ J`` for all t."""

    N: Polynomial
    L: tuple[Polynomial, ...]
    J: Ideal
    J_saturated: bool | None  # checked only when the ideal itself is saturated


def _random_linear_form(ring: Ring, rng: random.Random, radius: int) -> Polynomial:
    while True:
        cs = [rng.randint(-radius, radius) for _ in range(ring.arity)]
        if any(cs):
            return _form_from(ring, cs)


def _form_from(ring: Ring, cs) -> Polynomial:
    out = ring.zero()
    for c, g in zip(cs, ring.gens()):
        if c:
            out = out + g.scale(c)
    return out


def essentiality_witness(B: StandardBasis, i: int, rng: random.Random, budget: int = 64) -> EssentialityWitness:
    """Search for the linear-form witness of essentiality of ``B[i]``."""
    v = classify(B, i)
    if not v.essential:
        raise ValueError(f"element {i} is inessential; no essentiality witness exists")
    f = B[i]
    ring = B.ring
    n = ring.arity
    H = _other(B, i)
    I = B.ideal()
    Isat = saturation(I)
    Hsat = saturation(H) if not H.is_zero() else H
    I_saturated = ideal_equal(Isat, I)

    def candidates_N():
        for k in range(n):
            yield ring.var(k)
        for _ in range(budget):
            yield _random_linear_form(ring, rng, POOL_RADIUS)

    tried = 0
    for N in candidates_N():
        if not is_regular_for_quotient(N, Isat):
            continue
        if not Hsat.is_zero() and not is_regular_for_quotient(N, Hsat):
            continue
        c = linear_form_coefficients(N)
        k = next(j for j in range(n) if c[j])
        others = [j for j in range(n) if j != k]
        points = [tuple([0] * (n - 1))] + [p[1:] for p in small_points(n, 2) if p[0] == 1]
        for p in points:
            tried += 1
            if tried > budget:
                raise BudgetExhausted(f"no essentiality witness for element {i} within budget")
            Ls = tuple(ring.var(j) - N.scale(a) for j, a in zip(others, p))
            J = Ideal(ring, list(H.generators) + [L * f for L in Ls])
            if saturate_form(J, N).contains(f):
                continue
            J_sat = None
            if I_saturated:
                J_sat = ideal_equal(saturation(J), J)
            return EssentialityWitness(N, Ls, J, J_sat)
    raise BudgetExhausted(f"no essentiality witness for element {i} within budget")


def nature_invariance_check(B: StandardBasis, i: int, h: Polynomial) -> bool:
    """Adding ``h ∈ H`` of the same degree to ``B[i]`` keeps its nature."""
    f = B[i]
    if not h.is_zero() and h.degree() != f.degree():
        raise ValueError("h must have the degree of the element")
    if not h.is_zero() and not _other(B, i).contains(h):
        raise ValueError("h must lie in the ideal of the other elements")
    B2 = B.replace({i: f + h})
    return classify(B, i).status == classify(B2, i).status


# ---------------------------------------------------------------------------
# basis changes

def random_form(ring: Ring, degree: int, rng: random.Random, radius: int = POOL_RADIUS) -> Polynomial:
    """Dense form of ``degree`` with integer coefficients in ``[-radius, radius]``."""
    terms = {m: rng.randint(-radius, radius) for m in monomials_of_degree(ring.arity, degree)}
    return Polynomial(ring, terms)


def _pool_radius(trial: int) -> int:
    return POOL_RADIUS + 2 * (trial // 32)


def modifiable(B: StandardBasis, i: int) -> list[int]:
    """Indices ``j != i`` whose element can absorb multiples of ``B[i]``."""
    d = B[i].degree()
    return [j for j in range(len(B)) if j != i and B[j].degree() >= d]


def shift_by(B: StandardBasis, i: int, coeffs: dict) -> StandardBasis:
    """Replace ``B[j]`` by ``B[j] + coeffs[j] * B[i]``."""
    f = B[i]
    return B.replace({j: B[j] + a * f for j, a in coeffs.items() if not a.is_zero()})


def _random_shift(B: StandardBasis, i: int, rng: random.Random, trial: int) -> dict | None:
    d = B[i].degree()
    r = _pool_radius(trial)
    coeffs = {j: random_form(B.ring, B[j].degree() - d, rng, r) for j in modifiable(B, i)}
    if all(a.is_zero() for a in coeffs.values()):
        return None
    return coeffs


def _point_trick(B: StandardBasis, i: int, height: int = 3):
    """Bases making ``B[i]`` essential via a rational point where only it survives."""
    ring = B.ring
    f = B[i]
    d = f.degree()
    lower = [g for g in B if g.degree() < d]
    for P in small_points(ring.arity, height):
        fP = f.evaluate(P)
        if not fP or any(g.evaluate(P) for g in lower):
            continue
        k = next(j for j, x in enumerate(P) if x)
        z = ring.var(k)
        coeffs = {}
        for j in modifiable(B, i):
            t = B[j].degree() - d
            a = -B[j].evaluate(P) / (fP * P[k] ** t)
            coeffs[j] = (z ** t).scale(a)
        yield P, coeffs


@dataclass(frozen=True)
class SiVerdict:
    """Strong-inessentiality status of an inessential element."""

    index: int
    status: str
    rule: str | None = None
    trials: int = 0
    seed: int | None = None
    witness: StandardBasis | None = None

    @property
    def is_si(self) -> bool:
        return self.status in (SI_CERTIFIED, SI_LIKELY)

    @property
    def certainty(self) -> str:
        return f"monte-carlo({self.trials})" if self.status == SI_LIKELY else "exact"

    def to_json(self) -> dict:
        out = {"index": self.index + 1, "status": self.status, "certainty": self.certainty}
        if self.rule:
            out["rule"] = self.rule
        if self.status == SI_LIKELY:
            out["trials"] = self.trials
            out["seed"] = self.seed
        if self.witness is not None:
            out["witness_basis"] = [str(g) for g in self.witness]
        return out


def _seed_of(rng: random.Random):
    return getattr(rng, "seed_value", None)


def si_rule(B: StandardBasis, i: int) -> str | None:
    """Degree-frozen certificates of strong inessentiality, if any applies."""
    f = B[i]
    d = f.degree()
    if not modifiable(B, i):
        return RULE_TOP
    lower = [g for g in B if g.degree() < d]
    if lower and saturation(Ideal(B.ring, lower)).contains(f):
        return RULE_LOWER
    return None


def strongly_inessential(B: StandardBasis, i: int, trials: int, rng: random.Random) -> SiVerdict:
    """Certify, refute (with a witness basis) or sample strong inessentiality."""
    if not classify(B, i).inessential:
        raise ValueError(f"element {i} is essential")
    rule = si_rule(B, i)
    if rule:
        return SiVerdict(i, SI_CERTIFIED, rule=rule)
    for _, coeffs in _point_trick(B, i):
        B2 = shift_by(B, i, coeffs)
        if classify(B2, i).essential:
            return SiVerdict(i, NOT_SI, witness=B2)
    for trial in range(trials):
        coeffs = _random_shift(B, i, rng, trial)
        if coeffs is None:
            continue
        B2 = shift_by(B, i, coeffs)
        if not _quick_inessential(B2, i) and classify(B2, i).essential:
            return SiVerdict(i, NOT_SI, witness=B2)
    return SiVerdict(i, SI_LIKELY, trials=trials, seed=_seed_of(rng))


def recheck_si(B: StandardBasis, v: SiVerdict) -> bool:
    if v.status == NOT_SI:
        W = v.witness
        return (W is not None and len(W) == len(B) and W[v.index] == B[v.index]
                and is_standard_basis(W.elements) and ideal_equal(W.ideal(), B.ideal())
                and classify(W, v.index).essential)
    if v.status == SI_CERTIFIED:
        return si_rule(B, v.index) == v.rule
    return classify(B, v.index).inessential


def make_essential(B: StandardBasis, i: int, budget: int, rng: random.Random) -> StandardBasis:
    """A basis ``(f_j + a_j f_i)`` with respect to which ``f_i`` is essential."""
    if not classify(B, i).inessential:
        raise ValueError(f"element {i} is already essential")
    if not modifiable(B, i):
        raise BudgetExhausted(f"element {i} cannot be changed for degree reasons")
    for _, coeffs in _point_trick(B, i):
        B2 = shift_by(B, i, coeffs)
        if classify(B2, i).essential:
            return B2
    for trial in range(budget):
        coeffs = _random_shift(B, i, rng, trial)
        if coeffs is None:
            continue
        B2 = shift_by(B, i, coeffs)
        if not _quick_inessential(B2, i) and classify(B2, i).essential:
            return B2
    raise BudgetExhausted(f"element {i} stayed inessential for {budget} random bases")


def make_inessential(B: StandardBasis, i: int, budget: int, rng: random.Random) -> StandardBasis:
    """A basis ``(f_j + a_j f_i)`` with respect to which ``f_i`` is inessential."""
    if not classify(B, i).essential:
        raise ValueError(f"element {i} is already inessential")
    if not modifiable(B, i):
        raise BudgetExhausted(f"element {i} cannot be changed for degree reasons")
    for trial in range(budget):
        coeffs = _random_shift(B, i, rng, trial)
        if coeffs is None:
            continue
        B2 = shift_by(B, i, coeffs)
        if _quick_inessential(B2, i) and classify(B2, i).inessential:
            return B2
    raise BudgetExhausted(f"element {i} stayed essential for {budget} random bases")


# ---------------------------------------------------------------------------
# e-maximal and e-minimal bases

@dataclass
class EssentialityProfile:
    basis: StandardBasis
    verdicts: list[Verdict]
    si_verdicts: dict = field(default_factory=dict)
    se_verdicts: dict = field(default_factory=dict)
    nu_e_per_degree: dict | None = None
    mu_e_per_degree: dict | None = None
    steps: int = 0

    @property
    def essential(self) -> list[int]:
        return [v.index for v in self.verdicts if v.essential]

    @property
    def inessential(self) -> list[int]:
        return [v.index for v in self.verdicts if v.inessential]

    def essential_per_degree(self) -> dict[int, int]:
        out = {d: 0 for d in self.basis.degrees}
        for v in self.verdicts:
            if v.essential:
                out[self.basis[v.index].degree()] += 1
        return dict(sorted(out.items()))

    @property
    def certainty(self) -> str:
        tags = [s.status for s in self.si_verdicts.values()] + list(self.se_verdicts.values())
        if any(t in (SI_LIKELY, SE_LIKELY) for t in tags):
            return "monte-carlo"
        return "exact"


def _by_degree(B: StandardBasis, idx: Iterable[int]) -> list[int]:
    return sorted(idx, key=lambda j: (B[j].degree(), j))


def build_e_maximal(B: StandardBasis, trials: int, rng: random.Random) -> EssentialityProfile:
    """Flip inessential, non strongly inessential elements until none is left."""
    cur = B
    steps = 0
    while True:
        verdicts = classify_all(cur)
        si = {}
        flipped = None
        for i in _by_degree(cur, (v.index for v in verdicts if v.inessential)):
            sv = strongly_inessential(cur, i, trials, rng)
            if sv.status == NOT_SI:
                flipped = sv.witness
                break
            si[i] = sv
        if flipped is None:
            prof = EssentialityProfile(cur, verdicts, si_verdicts=si, steps=steps)
            prof.nu_e_per_degree = prof.essential_per_degree()
            return prof
        before = sum(v.essential for v in verdicts)
        after = sum(v.essential for v in classify_all(flipped))
        if after <= before:
            raise CrossCheckError("a basis change lowered the number of essential elements")
        cur = flipped
        steps += 1


def strongly_essential_rule(B: StandardBasis, i: int) -> bool:
    return not modifiable(B, i)


def build_e_minimal(B: StandardBasis, trials: int, rng: random.Random) -> EssentialityProfile:
    """Randomized dual of :func:`build_e_maximal`: turn essential elements inessential."""
    cur = B
    steps = 0
    while True:
        verdicts = classify_all(cur)
        se = {}
        flipped = None
        for i in _by_degree(cur, (v.index for v in verdicts if v.essential)):
            if strongly_essential_rule(cur, i):
                se[i] = SE_CERTIFIED
                continue
            try:
                flipped = make_inessential(cur, i, trials, rng)
                break
            except BudgetExhausted:
                se[i] = SE_LIKELY
        if flipped is None:
            prof = EssentialityProfile(cur, verdicts, se_verdicts=se, steps=steps)
            prof.mu_e_per_degree = prof.essential_per_degree()
            return prof
        before = sum(v.essential for v in verdicts)
        after = sum(v.essential for v in classify_all(flipped))
        if after >= before:
            raise CrossCheckError("a basis change raised the number of essential elements")
        cur = flipped
        steps += 1


# ---------------------------------------------------------------------------
# inessential sets and E-bases

@dataclass(frozen=True)
class InessentialSet:
    indices: tuple[int, ...]
    maximal: bool = False

    @property
    def cardinality(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i):
        return i in self.indices


def is_inessential_set(B: StandardBasis, T: Iterable[int]) -> bool:
    """``sat(B - T) == sat(B)``."""
    T = set(T)
    if not T:
        return True
    rest = B.without(T)
    if rest.is_zero():
        return False
    return ideal_equal(saturation(rest), saturation(B.ideal()))


def greedy_maximal_inessential_set(B: StandardBasis) -> InessentialSet:
    """Descending scan: keep ``c_i`` when it lies in the saturation of the rest minus later picks."""
    ines = [v.index for v in classify_all(B) if v.inessential]
    V: list[int] = []
    for c in reversed(ines):
        rest = B.without([c] + V)
        if not rest.is_zero() and saturation(rest).contains(B[c]):
            V.append(c)
    V.sort()
    if not is_inessential_set(B, V):
        raise CrossCheckError(f"greedy set {V} is not inessential")
    for c in ines:
        if c not in V and is_inessential_set(B, V + [c]):
            raise CrossCheckError(f"greedy set {V} is not maximal: {c} can join")
    return InessentialSet(tuple(V), maximal=True)


def maximum_inessential_subsets(B: StandardBasis, bound: int = 20) -> list[InessentialSet]:
    """All inessential sets of maximum cardinality (exhaustive search)."""
    ines = [v.index for v in classify_all(B) if v.inessential]
    if len(ines) > bound:
        raise ValueError(f"{len(ines)} inessential elements exceed the search bound {bound}")
    for size in range(len(ines), 0, -1):
        found = [InessentialSet(T, maximal=True) for T in combinations(ines, size)
                 if is_inessential_set(B, T)]
        if found:
            return found
    return [InessentialSet((), maximal=True)]


def is_e_basis(B: StandardBasis) -> bool:
    """The essential elements alone have the saturation of the whole ideal."""
    ess = [v.index for v in classify_all(B) if v.essential]
    E = Ideal(B.ring, [B[j] for j in ess])
    if E.is_zero():
        return False
    return ideal_equal(saturation(E), saturation(B.ideal()))


def build_e_basis(B: StandardBasis, trials: int, rng: random.Random) -> StandardBasis:
    """Repair inessential elements outside the greedy set until ``B`` is an E-basis.

    Each repair adds multiples of an inessential ``c`` outside the greedy set
    ``V`` to the members of ``V``. Some bases admit no such repair; then the
    e-maximal construction is used instead, and the result must keep every
    originally essential element.
    """
    cur = B
    keep = [v.index for v in classify_all(B) if v.essential]
    while True:
        verdicts = classify_all(cur)
        ines = [v.index for v in verdicts if v.inessential]
        if is_inessential_set(cur, ines):
            break
        V = greedy_maximal_inessential_set(cur).indices
        c = next(i for i in ines if i not in V)
        targets = [v for v in V if cur[v].degree() >= cur[c].degree()]
        repaired = None
        for trial in range(trials if targets else 0):
            r = _pool_radius(trial)
            coeffs = {v: random_form(cur.ring, cur[v].degree() - cur[c].degree(), rng, r) for v in targets}
            if all(a.is_zero() for a in coeffs.values()):
                continue
            B2 = shift_by(cur, c, coeffs)
            if not _quick_inessential(B2, c) and classify(B2, c).essential:
                repaired = B2
                break
        if repaired is None:
            cur = build_e_maximal(cur, trials, rng).basis
            break
        old_ess = {v.index for v in verdicts if v.essential}
        new_ess = {v.index for v in classify_all(repaired) if v.essential}
        if not old_ess < new_ess:
            raise CrossCheckError("E-basis repair lost an essential element")
        cur = repaired
    if not is_e_basis(cur):
        raise CrossCheckError("E-basis construction ended without an E-basis")
    if any(cur[i] != B[i] or not classify(cur, i).essential for i in keep):
        raise CrossCheckError("E-basis construction changed an essential element")
    return cur


# ---------------------------------------------------------------------------
# dehomogenization

def _dehom_parts(B: StandardBasis, T: Iterable[int], L: Polynomial):
    if L.is_zero():
        raise ValueError("L must be a nonzero linear form")
    T = set(T)
    kept = [dehomogenize_wrt(g, L) for j, g in enumerate(B) if j not in T]
    removed = [dehomogenize_wrt(g, L) for j, g in enumerate(B) if j in T]
    return kept, removed


def dehomogenized_basis_check(B: StandardBasis, T: Iterable[int], L: Polynomial) -> bool:
    """Dehomogenized ``B - T`` generates the dehomogenized ideal."""
    kept, removed = _dehom_parts(B, T, L)
    if not removed:
        return True
    if not kept:
        return all(r.is_zero() for r in removed)
    J = Ideal(kept[0].ring, kept)
    return all(J.contains(r) for r in removed)


def dehomogenized_is_minimal(B: StandardBasis, T: Iterable[int], L: Polynomial) -> bool:
    """No dehomogenized element of ``B - T`` is redundant among the others."""
    kept, _ = _dehom_parts(B, T, L)
    for j in range(len(kept)):
        rest = kept[:j] + kept[j + 1:]
        if not rest:
            return not kept[j].is_constant() or kept[j].is_zero()
        if Ideal(kept[0].ring, rest).contains(kept[j]):
            return False
    return True
