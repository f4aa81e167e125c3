"""Classify every torus T_{n,m} in a range: index, diameter and distance-regularity."""

import argparse

from hrg.families import TORUS_EXCEPTIONS, classify_graph, torus


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=8, help="largest cycle length")
    args = parser.parse_args()

    drg = set()
    print(f"{'n':>3} {'m':>3} {'order':>6} {'diam':>5} {'index':>6}  drg")
    for n in range(2, args.max + 1):
        for m in range(n, args.max + 1):
            rec, _ = classify_graph(torus(n, m))
            if rec.drg_direct:
                drg.add((n, m))
            print(f"{n:>3} {m:>3} {n * m:>6} {rec.diameter:>5} {rec.index:>6}  {rec.drg_direct}")
    print(f"distance-regular: {sorted(drg)}")
    print(f"matches the four exceptions: {drg == {nm for nm in TORUS_EXCEPTIONS if nm[1] <= args.max}}")


if __name__ == "__main__":
    main()
