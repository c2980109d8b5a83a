"""Recompute f_n for Tr(n), factor it, and compare with the tabulated rows and the exponent rule.

    python3 scripts/coxeter_table.py --n-max 6
    python3 scripts/coxeter_table.py --n-max 7 --method hessenberg --json out.json
"""

import argparse
import time

from hochschild import coxeter


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--method", default="auto", choices=["auto", "exact", "modular", "hessenberg"])
    ap.add_argument("--json", help="write all reports to this file")
    args = ap.parse_args()

    reports = []
    for n in range(1, args.n_max + 1):
        start = time.perf_counter()
        rep = coxeter.analyse(n, args.method)
        print(f"{rep.line()}  [{time.perf_counter() - start:.1f}s]", flush=True)
        reports.append(rep)
    for n in sorted(coxeter.TABLE):
        if n > args.n_max:
            rep = coxeter.table_only(n)
            print(rep.line())
            reports.append(rep)
    print(coxeter.NOT_RECOMPUTED)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(coxeter.reports_to_json(reports) + "\n")


if __name__ == "__main__":
    main()
