"""Time hook fusion on the hook bi-tableau of every shape of size n."""
import argparse
import time
from fractions import Fraction

from hookfusion import fusion, wreath
from hookfusion.bitableaux import bipartitions, hook_bitableau


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5)
    args = parser.parse_args()

    n = args.n
    print(f"{'shape':<24} {'singular':>8} {'orders':>8} {'support':>8} {'seconds':>8}")
    for sh in bipartitions(n):
        T = hook_bitableau(sh)
        start = time.perf_counter()
        r = fusion.hook_fusion(T)
        elapsed = time.perf_counter() - start
        assert r.phi[wreath.identity(n)] == Fraction(1, 2**n)
        print(f"{str(sh):<24} {len(fusion.singularities(T)):>8} {f'{r.num_order},{r.den_order}':>8} "
              f"{len(r.phi):>8} {elapsed:>8.2f}")


if __name__ == "__main__":
    main()
