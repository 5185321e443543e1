#!/usr/bin/env python3
"""Hunt critical-gap classes of hyperbolic polynomials.

Degree 6 realizes the rare L-R+ class within a few attempts; at degree 5 the
same search exhausts its budget (evidence, not proof, that no degree-5
polynomial realizes it).
"""

import argparse

from polyrealize import report
from polyrealize.criticalgaps import GAP_CLASSES
from polyrealize.sampler import SearchConfig, search_gap_class


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=6)
    ap.add_argument("--class", dest="target", choices=GAP_CLASSES, default="L-R+")
    ap.add_argument("--n", type=int, default=10**5)
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--json", dest="json_path", default=None)
    args = ap.parse_args()

    cfg = SearchConfig(n=args.n, seed=args.seed)
    out = search_gap_class(args.degree, args.target, cfg)
    if out.found:
        rpt = out.gap
        print(f"found at attempt {out.attempt_index} ({out.seconds:.2f} s)")
        print(f"roots: {list(rpt.x)}")
        print(f"critical points: {list(rpt.xi)}")
        print(f"m(mid)={rpt.m_tilde}  M(mid)={rpt.M_tilde}")
        print(f"m(crit)={rpt.m_prime}  M(crit)={rpt.M_prime}")
        print(f"class {rpt.gap_class}, exact certificate: "
              f"{out.certificate.claim if out.certificate else 'disabled'}")
    else:
        print(f"exhausted {out.attempts} attempts ({out.seconds:.1f} s); "
              f"no {args.target} configuration found at degree {args.degree}")
    if args.json_path:
        query = {"degree": args.degree, "class": args.target}
        report.write_json(args.json_path,
                          report.search_report("search gaps", cfg, query, out))
        print(f"report written to {args.json_path}")


if __name__ == "__main__":
    main()
