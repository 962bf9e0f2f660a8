#!/usr/bin/env python3
"""Sweep the transmission-price maximization question over n.

Small orders are settled exhaustively; larger ones get hill-climbing
runs compared against the best known family value (cycle below the
crossover, extremal bag above it).
"""
import argparse
import json
import sys

from symprice import families, formulas
from symprice.search import DIGRAPH_ORDER_CAP, hill_climb, verify_conjecture


def known_best(n: int) -> int:
    if n <= 10:
        return formulas.pos_cycle(n)
    return formulas.pos_hnk(n, families.k_star(n).k_star)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--budget", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    records = []
    beaten = False
    for n in range(args.min_n, args.max_n + 1):
        target = known_best(n)
        if n <= DIGRAPH_ORDER_CAP:
            r = verify_conjecture(n)
            rec = {"n": n, "mode": "exhaustive", "best": r.best_value,
                   "target": target, "classes": r.classes_checked,
                   "unique_cycle": r.ok}
        else:
            out = hill_climb(n, "sigma", budget=args.budget, seed=args.seed)
            rec = {"n": n, "mode": "heuristic", "best": out.best_value,
                   "target": target, "visited": out.graphs_visited,
                   "elapsed": round(out.elapsed, 2)}
        if rec["best"] > target:
            rec["note"] = "EXCEEDS KNOWN FAMILY VALUE - investigate"
            beaten = True
        records.append(rec)
        if not args.json:
            print(" ".join(f"{k}={v}" for k, v in rec.items()), flush=True)

    if args.json:
        print(json.dumps({"schema": "symprice/1", "sweep": records}, indent=2))
    return 3 if beaten else 0


if __name__ == "__main__":
    sys.exit(main())
