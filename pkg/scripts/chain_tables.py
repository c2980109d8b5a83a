"""Multichain counts from the z-system next to the closed forms (k+1)^(n-k-1) P_k(n), as CSV."""

import argparse
import csv
import sys

from hochschild import enumeration as en


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--brute-force-n", type=int, default=4, help="also count by brute force up to this n")
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["variant", "k", "n", "z_total", "closed_form", "brute_force"])
    for variant in ("tr", "mu"):
        for k in range(1, args.k_max + 1):
            for n in range(1, args.n_max + 1):
                total = en.z_counts(n, k, variant)[1]
                closed = en.closed_form_count(n, k, variant) if k <= 5 else ""
                brute = en.count_multichains(n, k, variant) if n <= args.brute_force_n else ""
                w.writerow([variant, k, n, total, closed, brute])
    for variant in ("tr", "mu"):
        for k in range(1, args.k_max + 1):
            print(f"# P_{k} ({variant}) = {en.chain_polynomial(k, variant).pretty('n')}", file=sys.stderr)


if __name__ == "__main__":
    main()
