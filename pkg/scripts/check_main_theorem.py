"""Compare 2^n Phi_T with the seminormal F_T for every standard bi-tableau up to --max-n."""
import argparse
import time

from hookfusion import fusion, seminormal
from hookfusion.bitableaux import bipartitions, standard_bitableaux


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--tol", type=float, default=1e-8)
    args = parser.parse_args()

    print(f"{'n':>2} {'shape':<24} {'dim':>4} {'max |diff|':>11} {'seconds':>8}")
    for n in range(1, args.max_n + 1):
        for sh in bipartitions(n):
            start = time.perf_counter()
            worst = 0.0
            tabs = standard_bitableaux(sh)
            for T in tabs:
                c = seminormal.compare(fusion.diagonal_matrix_element(T), seminormal.oracle_F(T), args.tol)
                worst = max(worst, c.max_abs_diff)
            flag = "" if worst <= args.tol else "  FAIL"
            print(f"{n:>2} {str(sh):<24} {len(tabs):>4} {worst:>11.2e} {time.perf_counter() - start:>8.2f}{flag}")


if __name__ == "__main__":
    main()
