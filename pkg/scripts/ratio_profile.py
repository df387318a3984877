"""Where s_b(m)/H(m) peaks on each block [b^(k-2), b^(k-1)).

Shows the ratio at the block maximum approaching 1 from above at even
record positions and from below at odd ones.

    python scripts/ratio_profile.py --base 2 --max 1000000
"""

import argparse

from hyperexp.envelope import normalized_ratios
from hyperexp.stern import s_range


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--max", dest="n_max", type=int, default=10**6)
    args = p.parse_args()
    b = args.base

    values = s_range(b, args.n_max)
    ratios = normalized_ratios(b, values)
    k = 2
    while b ** (k - 1) - 1 <= args.n_max:
        lo, hi = b ** (k - 2), b ** (k - 1)
        m = max(range(lo, hi), key=lambda i: (ratios[i], -i))
        print(f"k={k:>3}  argmax={m:>10}  s={values[m]:>8}  s/H-1={ratios[m] - 1:+.3e}")
        k += 1


if __name__ == "__main__":
    main()
