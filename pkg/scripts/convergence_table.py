"""Print F_k / H(a_k) and h(a_k) - H(a_k) for several bases.

    python scripts/convergence_table.py --bases 2 3 10 --kmax 200 --every 20
"""

import argparse

from hyperexp.envelope import convergence_report


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--bases", type=int, nargs="+", default=[2, 3, 10])
    p.add_argument("--kmax", type=int, default=200)
    p.add_argument("--every", type=int, default=10)
    p.add_argument("--dps", type=int, default=40)
    args = p.parse_args()

    for b in args.bases:
        print(f"b = {b}")
        print(f"{'k':>5} {'F_k/H(a_k) - 1':>24} {'h(a_k) - H(a_k)':>24}  s(a_k)=F_k")
        for row in convergence_report(b, args.kmax, dps=args.dps):
            if row.k % args.every and row.k != args.kmax:
                continue
            dev = row.ratio_to_H.mid - 1
            print(f"{row.k:>5} {float(dev):>24.6e} {float(row.h_minus_H.mid):>24.6e}  {row.s_matches}")
        print()


if __name__ == "__main__":
    main()
