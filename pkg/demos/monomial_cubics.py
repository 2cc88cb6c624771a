"""Four cubic monomials: one inessential element, then a basis where it is essential."""

from stdbasis import SeededRandom, classify_all, make_essential
from stdbasis.cli import Problem, load_problem_data
from stdbasis.hilbert_burch import column_criterion


def main():
    p = Problem(load_problem_data("cubics"))
    B, M = p.basis, p.matrix
    print("basis:", B)
    for v in classify_all(B):
        extra = f"M^{v.exponent} f lies in the rest" if v.inessential else \
            f"witness variable {B.ring.names[v.witness_variable]}"
        print(f"  g{v.index + 1} = {B[v.index]}: {v.status} ({extra})")
    for j in range(M.size):
        col = ", ".join(str(a) for a in M.column(j) if not a.is_zero())
        print(f"  column {j + 1} ({col}): {'inessential' if column_criterion(M, j).inessential else 'essential'}")
    B2 = make_essential(B, 3, 16, SeededRandom(0))
    print("after moving f into the other elements:", B2)
    print("  statuses:", [v.status for v in classify_all(B2)])


if __name__ == "__main__":
    main()
