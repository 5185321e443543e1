#!/usr/bin/env python3
"""Classify all 35 orders of moduli for the sign pattern with runs (1,2,3,2).

The root-sum forcing test proves 14 orders non-realizable; the wide/narrow
mixture search finds certified witnesses for the remaining 21.
"""

import argparse

from polyrealize import report
from polyrealize.sampler import Mixture, SearchConfig
from polyrealize.signpatterns import from_runs
from polyrealize.sweeps import FORCED, REALIZED, sweep_moduli


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--narrow-scale", type=float, default=0.05)
    ap.add_argument("--json", dest="json_path", default=None)
    args = ap.parse_args()

    sigma = from_runs((1, 2, 3, 2))
    cfg = SearchConfig(
        n=args.budget, seed=args.seed,
        strategy=Mixture(narrow_scale=args.narrow_scale),
    )
    rpt = sweep_moduli(sigma, cfg)

    for row in rpt.rows:
        bracket = list(row.couple.order.bracket)
        if row.status == FORCED:
            print(f"forced({row.forced_direction})  {bracket}  {row.couple.order.word}")
        elif row.status == REALIZED:
            print(f"realized   {bracket}  {row.couple.order.word}  "
                  f"@ attempt {row.attempt_index}")
        else:
            print(f"unresolved {bracket}  {row.couple.order.word}")
    totals = rpt.totals
    print(f"\n{totals['forced']} forced non-realizable, {totals['realized']} realized, "
          f"{totals['unresolved']} unresolved of {len(rpt.rows)}")
    if args.json_path:
        report.write_json(args.json_path, report.sweep_report_json("sweep moduli", rpt))
        print(f"report written to {args.json_path}")


if __name__ == "__main__":
    main()
