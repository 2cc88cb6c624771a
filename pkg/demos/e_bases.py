"""E-maximal, e-minimal and E-bases of one ideal, with their per-degree counts."""

import argparse

from stdbasis import SeededRandom, build_e_basis, build_e_maximal, build_e_minimal
from stdbasis.cli import FIXTURES, Problem, load_problem_data
from stdbasis.essentiality import greedy_maximal_inessential_set


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("fixture", nargs="?", default="five_columns", choices=FIXTURES)
    ap.add_argument("--trials", type=int, default=32)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    B = Problem(load_problem_data(args.fixture)).basis
    print("betti:", B.betti())
    hi = build_e_maximal(B, args.trials, SeededRandom(args.seed))
    print("e-maximal essential counts:", hi.nu_e_per_degree, f"({hi.steps} basis changes)")
    lo = build_e_minimal(B, args.trials, SeededRandom(args.seed))
    print("e-minimal essential counts:", lo.mu_e_per_degree, f"({lo.steps} basis changes)")
    print("greedy inessential set of the e-minimal basis:",
          [i + 1 for i in greedy_maximal_inessential_set(lo.basis).indices])
    E = build_e_basis(lo.basis, 2 * args.trials, SeededRandom(args.seed))
    print("E-basis built from it:", E)


if __name__ == "__main__":
    main()
