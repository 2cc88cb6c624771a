"""Column ideals of a Hilbert matrix and strong inessentiality by sampling."""

import argparse

from stdbasis import SeededRandom, column_criterion, si_column_test
from stdbasis.cli import FIXTURES, Problem, load_problem_data


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("fixture", nargs="?", default="five_columns", choices=FIXTURES)
    ap.add_argument("--trials", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    M = Problem(load_problem_data(args.fixture)).matrix
    rng = SeededRandom(args.seed)
    for j in range(M.size):
        v = column_criterion(M, j)
        line = f"column {j + 1}: ideal ({', '.join(str(a) for a in M.column(j) if not a.is_zero())})"
        if v.inessential:
            s = si_column_test(M, j, args.trials, rng)
            line += f" contains M^{v.exponent}; {s.si_status}" + (f" [{s.rule}]" if s.rule else "")
        else:
            line += " contains no power of M"
        print(line)


if __name__ == "__main__":
    main()
