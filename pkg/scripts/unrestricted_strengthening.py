"""Measure s_b(m) <= h(m - b/(b+1)) on m = b+1 (mod b^2) *without* the
zero-one digit restriction. Reported only; nothing is asserted.

    python scripts/unrestricted_strengthening.py --bases 3 4 5 --max 1000000
"""

import argparse

from hyperexp.envelope import verify_strengthening
from hyperexp.stern import s_range


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--bases", type=int, nargs="+", default=[3, 4, 5, 10])
    p.add_argument("--max", dest="n_max", type=int, default=10**6)
    args = p.parse_args()

    for b in args.bases:
        r = verify_strengthening(b, args.n_max, values=s_range(b, args.n_max))
        print(f"b={b}: zero-one class {r.total_checked} checked, {len(r.violations)} violations; "
              f"other residues {r.notes['unrestricted_checked']} checked, "
              f"{r.notes['unrestricted_exceed']} exceed the shifted bound")


if __name__ == "__main__":
    main()
