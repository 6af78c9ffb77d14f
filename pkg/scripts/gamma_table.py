#!/usr/bin/env python3
"""Sweep Morita Gamma values and print a CSV table.

Example:
    python scripts/gamma_table.py -p 7 -N 3 --stop 50 > gamma7.csv
"""

import argparse

from padiclift.gamma import gamma_p_integer


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-p", type=int, default=5)
    ap.add_argument("-N", type=int, default=3)
    ap.add_argument("--start", type=int, default=0)
    ap.add_argument("--stop", type=int, default=30)
    args = ap.parse_args()

    print("m,value,digits")
    for m in range(args.start, args.stop):
        v = gamma_p_integer(m, args.p, args.N)
        print(f"{m},{v.value},{'|'.join(str(d) for d in v.digits)}")


if __name__ == "__main__":
    main()
