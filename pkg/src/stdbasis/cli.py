"""Command line front end: read a JSON problem file, run one command, emit a report.

Exit codes: 0 success, 1 internal cross-check failure, 2 unsupported input,
3 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from . import essentiality as ess
from . import hilbert_burch as hb
from .graded import StandardBasis, extract_standard_basis, is_standard_basis
from .groebner import UnsupportedInput, hilbert_data, saturate_irrelevant
from .poly import MonomialOrder, ParseError, Ring

COMMANDS = ("classify", "emax", "emin", "sets", "ebasis", "matrix", "sat", "std-basis")
FIXTURES = ("cubics", "unique_top", "regularity_trap", "five_columns", "inessential_pair")

EXIT_OK, EXIT_CROSSCHECK, EXIT_UNSUPPORTED, EXIT_PARSE = 0, 1, 2, 3


class ProblemError(ValueError):
    """Malformed problem file (reported with exit code 3)."""


def _schema(name: str) -> dict:
    return json.loads(resources.files("stdbasis").joinpath("schemas", name).read_text())


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("stdbasis").joinpath("fixtures", f"{name}.json")))


def load_problem_data(source: str) -> dict:
    """Read a problem file; bare fixture names resolve to the bundled examples."""
    p = Path(source)
    if not p.exists() and source in FIXTURES:
        p = fixture_path(source)
    try:
        data = json.loads(p.read_text())
    except FileNotFoundError:
        raise ProblemError(f"{source}: no such file or fixture")
    except json.JSONDecodeError as exc:
        raise ProblemError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    import jsonschema

    try:
        jsonschema.validate(data, _schema("problem.schema.json"))
    except jsonschema.ValidationError as exc:
        where = "/".join(map(str, exc.absolute_path)) or "<root>"
        raise ProblemError(f"{source}: {where}: {exc.message}")
    data.setdefault("name", p.stem)
    return data


class Problem:
    """Parsed problem: ring, standard basis and the optional matrix, subset and form."""

    def __init__(self, data: dict):
        self.data = data
        self.name = data["name"]
        self.ring = Ring(tuple(data["ring"]))
        self.matrix = None
        self.extracted = False
        if "matrix" in data:
            rows = [[self._parse(s, f"matrix[{i}][{j}]") for j, s in enumerate(r)]
                    for i, r in enumerate(data["matrix"])]
            try:
                self.matrix = hb.HilbertMatrix(self.ring, rows)
                self.basis = hb.basis_from_matrix(self.matrix)
            except hb.MatrixError as exc:
                raise UnsupportedInput(str(exc))
        else:
            gens = [self._parse(s, f"generators[{i}]") for i, s in enumerate(data["generators"])]
            if any(not g.is_homogeneous() for g in gens if not g.is_zero()):
                raise UnsupportedInput("generators must be homogeneous")
            ordered = sorted((g for g in gens if not g.is_zero()), key=lambda g: g.degree())
            if ordered and is_standard_basis(ordered):
                self.basis = StandardBasis(self.ring, ordered)
            else:
                self.basis = extract_standard_basis(gens, self.ring)
                self.extracted = True
        self.subset = data.get("subset")
        self.L = self._parse(data["L"], "L") if "L" in data else None

    def _parse(self, text: str, where: str):
        try:
            return self.ring(text)
        except ValueError as exc:
            raise ProblemError(f"{self.name}: {where}: {exc}")

    def parse_form(self, text: str):
        return self._parse(text, "--dehom")


# ---------------------------------------------------------------------------
# report pieces

def _counts(d: dict) -> dict:
    return {str(k): v for k, v in sorted(d.items())}


def _verdict_json(B: StandardBasis, v) -> dict:
    out = v.to_json(B.ring)
    out["element"] = str(B[v.index])
    return out


def _classify_one(args) -> dict:
    B, i = args
    v = ess.classify(B, i)
    hil = ess.inessential_by_hilbert(B, i)
    var = ess.inessential_by_variable_powers(B, i)
    if hil != v.inessential or var != v.inessential:
        raise ess.CrossCheckError(f"element {i + 1}: verdict routes disagree")
    out = _verdict_json(B, v)
    out["hilbert_route"] = ess.INESSENTIAL if hil else ess.ESSENTIAL
    out["variable_route"] = ess.INESSENTIAL if var else ess.ESSENTIAL
    return out


def _map(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _verdict_from_json(d: dict, ring: Ring) -> ess.Verdict:
    i = d["index"] - 1
    if d["status"] == ess.INESSENTIAL:
        ks = tuple(d["variable_exponents"][n] for n in ring.names)
        return ess.Verdict(i, ess.INESSENTIAL, exponent=d["exponent"], variable_exponents=ks)
    return ess.Verdict(i, ess.ESSENTIAL, witness_variable=ring.index(d["witness_variable"]))


class Runner:
    def __init__(self, problem: Problem, args):
        self.p = problem
        self.args = args
        self.trials = args.trials if args.trials is not None else problem.data.get("trials", ess.DEFAULT_TRIALS)
        self.seed = args.seed if args.seed is not None else problem.data.get("seed", 0)
        self.order = MonomialOrder.parse(args.order or problem.data.get("order", "degrevlex"))
        self.rng = ess.SeededRandom(self.seed)
        self.monte_carlo = False
        self.checks: list[bool] = []
        self.subset = self._subset()
        self.L = problem.parse_form(args.dehom) if args.dehom else problem.L
        if self.L is not None and (not self.L.is_homogeneous() or self.L.degree() != 1):
            raise UnsupportedInput(f"{self.L} is not a linear form")

    def _subset(self):
        raw = self.args.subset
        if raw is not None:
            try:
                idx = [int(s) for s in raw.split(",") if s.strip()]
            except ValueError:
                raise ProblemError(f"--subset expects comma separated indices, got {raw!r}")
        else:
            idx = self.p.subset
        if idx is None:
            return None
        n = len(self.p.basis)
        if any(not 1 <= i <= n for i in idx):
            raise ProblemError(f"subset indices must lie in 1..{n}")
        return sorted({i - 1 for i in idx})

    def header(self, command: str) -> dict:
        B = self.p.basis
        out = {"command": command, "problem": self.p.name, "ring": list(self.p.ring.names),
               "seed": self.seed, "trials": self.trials, "order": str(self.order),
               "basis": [str(g) for g in B], "degrees": list(B.degrees)}
        if self.p.extracted:
            out["extracted_from_generators"] = True
        return out

    def certainty(self) -> str:
        return f"monte-carlo({self.trials})" if self.monte_carlo else "exact"

    def note_si(self, status: str):
        if status in (ess.SI_LIKELY, ess.SE_LIKELY):
            self.monte_carlo = True

    def recheck(self, ok: bool):
        if self.args.recheck:
            self.checks.append(bool(ok))

    # commands --------------------------------------------------------------

    def classify(self, rep: dict):
        B = self.p.basis
        ess.check_hypothesis(B)
        rep["verdicts"] = _map(_classify_one, [(B, i) for i in range(len(B))], self.args.jobs)
        for d in rep["verdicts"]:
            self.recheck(ess.recheck_verdict(B, _verdict_from_json(d, B.ring)))
        if self.L is not None:
            for d in rep["verdicts"]:
                rep.setdefault("dehom_in_rest", []).append(
                    ess.dehomogenized_basis_check(B, [d["index"] - 1], self.L))
            rep["dehom_form"] = str(self.L)
        counts = {d: 0 for d in B.degrees}
        for d, g in zip(rep["verdicts"], B):
            counts[g.degree()] += d["status"] == ess.ESSENTIAL
        rep["essential_per_degree"] = _counts(counts)
        rep["betti"] = _counts(B.betti())

    def _profile(self, rep: dict, prof: ess.EssentialityProfile, key: str, counts: dict):
        B = prof.basis
        rep["basis"] = [str(g) for g in B]
        rep["degrees"] = list(B.degrees)
        rep["verdicts"] = [_verdict_json(B, v) for v in prof.verdicts]
        rep["steps"] = prof.steps
        rep[key] = _counts(counts)
        for v in prof.verdicts:
            self.recheck(ess.recheck_verdict(B, v))

    def emax(self, rep: dict):
        B = self.p.basis
        ess.check_hypothesis(B)
        prof = ess.build_e_maximal(B, self.trials, self.rng)
        self._profile(rep, prof, "nu_e", prof.nu_e_per_degree)
        rep["si_verdicts"] = []
        for i, sv in sorted(prof.si_verdicts.items()):
            self.note_si(sv.status)
            rep["si_verdicts"].append(sv.to_json())
            self.recheck(ess.recheck_si(prof.basis, sv))

    def emin(self, rep: dict):
        B = self.p.basis
        ess.check_hypothesis(B)
        prof = ess.build_e_minimal(B, self.trials, self.rng)
        self._profile(rep, prof, "mu_e", prof.mu_e_per_degree)
        rep["si_verdicts"] = []
        for i, status in sorted(prof.se_verdicts.items()):
            self.note_si(status)
            entry = {"index": i + 1, "status": status,
                     "certainty": f"monte-carlo({self.trials})" if status == ess.SE_LIKELY else "exact"}
            if status == ess.SE_CERTIFIED:
                entry["rule"] = "unique-top-degree"
            rep["si_verdicts"].append(entry)

    def sets(self, rep: dict):
        B = self.p.basis
        ess.check_hypothesis(B)
        rep["verdicts"] = [_verdict_json(B, v) for v in ess.classify_all(B)]
        greedy = ess.greedy_maximal_inessential_set(B)
        rep["greedy_maximal_set"] = [i + 1 for i in greedy.indices]
        self.recheck(ess.is_inessential_set(B, greedy.indices))
        try:
            best = ess.maximum_inessential_subsets(B)
            rep["maximum_sets"] = [[i + 1 for i in s.indices] for s in best]
            rep["maximum_cardinality"] = best[0].cardinality
        except ValueError as exc:
            rep["maximum_sets_skipped"] = str(exc)
        if self.subset is not None:
            ok = ess.is_inessential_set(B, self.subset)
            rep["subset"] = {"indices": [i + 1 for i in self.subset], "inessential_set": ok}
        if self.L is not None:
            rep["dehom_form"] = str(self.L)
            rep["dehom_generates"] = ess.dehomogenized_basis_check(B, greedy.indices, self.L)
            rep["dehom_minimal"] = ess.dehomogenized_is_minimal(B, greedy.indices, self.L)

    def ebasis(self, rep: dict):
        B = self.p.basis
        ess.check_hypothesis(B)
        try:
            E = ess.build_e_basis(B, self.trials, self.rng)
        except ess.BudgetExhausted as exc:
            rep["budget_exhausted"] = str(exc)
            E = exc.partial or B
            self.monte_carlo = True
        rep["basis"] = [str(g) for g in E]
        rep["degrees"] = list(E.degrees)
        rep["verdicts"] = [_verdict_json(E, v) for v in ess.classify_all(E)]
        rep["is_e_basis"] = ess.is_e_basis(E)
        self.recheck(rep["is_e_basis"] or "budget_exhausted" in rep)

    def matrix(self, rep: dict):
        M = self._need_matrix()
        B = self.p.basis
        ess.check_hypothesis(B)
        check = hb.verify_matrix(M, B)
        rep["matrix_verified"] = check.ok
        if not check.ok:
            rep["matrix_diagnostic"] = check.diagnostic
        rep["column_degrees"] = list(M.column_degrees)
        rep["row_degrees"] = list(M.row_degrees)
        cols = []
        for j in range(M.size):
            v = hb.column_criterion(M, j)
            if v.inessential:
                v = hb.si_column_test(M, j, self.trials, self.rng)
                self.note_si(v.si_status)
            self.recheck(hb.recheck_column_verdict(M, v))
            cols.append(v.to_json(M.column_ideal(j)))
        rep["columns"] = cols
        counts = {d: 0 for d in B.degrees}
        for c, g in zip(cols, B):
            if c["status"] == "essential" or c.get("si_status") == ess.NOT_SI:
                counts[g.degree()] += 1
        rep["nu_e"] = _counts(counts)

    def sat(self, rep: dict):
        B = self.p.basis
        S, k = saturate_irrelevant(B.ideal())
        rep["saturation"] = [str(g) for g in S.groebner(self.order)]
        rep["saturation_exponent"] = k
        rep["saturated"] = S == B.ideal()
        if self.subset is not None:
            ok = ess.is_inessential_set(B, self.subset)
            rest = ess.saturation(B.without(self.subset))
            rep["subset"] = {"indices": [i + 1 for i in self.subset], "inessential_set": ok,
                             "complement_saturation": [str(g) for g in rest.groebner(self.order)],
                             "complement_saturation_equals_ideal": rest == B.ideal()}
            if self.p.matrix is not None:
                sv = hb.inessential_set_column_test(self.p.matrix, self.subset, self.trials, self.rng)
                rep["subset"]["column_test"] = sv.to_json()
                self.recheck(sv.inessential == ok)

    def std_basis(self, rep: dict):
        B = self.p.basis
        h = hilbert_data(B.ideal())
        rep["betti"] = _counts(B.betti())
        rep["initial_degree"] = B.initial_degree
        rep["count"] = len(B)
        rep["hilbert_numerator"] = list(h.numerator)
        rep["hilbert_polynomial"] = [str(c) for c in h.polynomial]
        rep["krull_dimension"] = h.dimension
        rep["groebner_basis"] = [str(g) for g in B.ideal().groebner(self.order)]
        if self.p.matrix is not None:
            rep["dubreil_bound_holds"] = len(B) <= B.initial_degree + 1

    def _need_matrix(self):
        if self.p.matrix is None:
            raise UnsupportedInput("this command needs a problem file with a matrix")
        return self.p.matrix

    def run(self, command: str) -> dict:
        rep = self.header(command)
        start = time.perf_counter()
        getattr(self, command.replace("-", "_"))(rep)
        rep["certainty"] = self.certainty()
        if self.args.recheck:
            rep["recheck"] = {"ok": all(self.checks), "checked": len(self.checks)}
        rep["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
        return rep


def validate_report(rep: dict) -> None:
    import jsonschema

    jsonschema.validate(rep, _schema("report.schema.json"))


def summary(rep: dict) -> str:
    lines = [f"{rep['command']} {rep['problem']}  [{rep['certainty']}]"]
    for d in rep.get("verdicts", []):
        cert = f"t={d['exponent']}" if d["status"] == ess.INESSENTIAL else f"N={d['witness_variable']}"
        lines.append(f"  g{d['index']} = {d['element']}: {d['status']} ({cert})")
    for c in rep.get("columns", []):
        extra = f" t={c['exponent']} {c.get('si_status', '')}" if c["status"] == "inessential" else ""
        lines.append(f"  column {c['column']} ({', '.join(c['column_ideal'])}): {c['status']}{extra}")
    for s in rep.get("si_verdicts", []):
        lines.append(f"  g{s['index']}: {s['status']}" + (f" ({s['rule']})" if s.get("rule") else ""))
    for key in ("nu_e", "mu_e", "betti", "greedy_maximal_set", "maximum_sets", "subset",
                "saturation", "saturation_exponent", "budget_exhausted", "recheck"):
        if key in rep:
            lines.append(f"  {key}: {json.dumps(rep[key])}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stdbasis", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("file", help="problem file (JSON) or a bundled fixture name: " + ", ".join(FIXTURES))
    ap.add_argument("--order", default=None, help="monomial order: degrevlex (default), lex, elim:K")
    ap.add_argument("--trials", type=int, default=None, help=f"random trials (default {ess.DEFAULT_TRIALS})")
    ap.add_argument("--seed", type=int, default=None, help="random seed (default 0)")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for classification")
    ap.add_argument("--json", action="store_true", help="print the full JSON report")
    ap.add_argument("--output", "-o", default=None, help="also write the JSON report to this file")
    ap.add_argument("--recheck", action="store_true", help="replay every certificate after the run")
    ap.add_argument("--subset", default=None, help="comma separated 1-based element indices")
    ap.add_argument("--dehom", default=None, metavar="FORM", help="linear form to dehomogenize with")
    return ap


def run(command: str, source: str, args: argparse.Namespace | None = None, **flags) -> dict:
    """Library entry point: return the report dictionary for ``command``."""
    if args is None:
        args = build_parser().parse_args([command, source])
        for k, v in flags.items():
            setattr(args, k, v)
    problem = Problem(load_problem_data(source))
    return Runner(problem, args).run(command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep = run(args.command, args.file, args)
        validate_report(rep)
    except (ParseError, ProblemError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedInput as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ess.CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    text = json.dumps(rep, indent=2, sort_keys=True)
    if args.output:
        Path(args.output).write_text(text + "\n")
    print(text if args.json else summary(rep))
    if args.recheck and not rep["recheck"]["ok"]:
        return EXIT_CROSSCHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
