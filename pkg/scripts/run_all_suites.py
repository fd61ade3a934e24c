#!/usr/bin/env python3
"""Run every registered verification suite and write the JSON reports.

Usage:
    python scripts/run_all_suites.py [--out reports/] [--seed N] [--samples M]

Exit status: 0 when everything passes, 3 when the only disagreements are
the documented ones, 1 otherwise.
"""

import argparse
import dataclasses
import pathlib
import sys
import time

from wcosym.cli import report_to_json
from wcosym.verify import SUITES, check_registry, default_config, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--samples", type=int)
    args = parser.parse_args()

    check_registry()
    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    worst = 0
    for suite_id in sorted(SUITES):
        cfg = default_config(suite_id)
        if args.seed is not None:
            cfg = dataclasses.replace(cfg, seed=args.seed)
        if args.samples is not None:
            cfg = dataclasses.replace(cfg, samples=args.samples)
        t0 = time.time()
        report = run_suite(suite_id, cfg)
        (out_dir / f"{suite_id}.json").write_text(report_to_json(report))
        s = report.summary
        status = {0: "ok", 3: "known-discrepancy"}.get(report.exit_status, "FAIL")
        print(
            f"{suite_id:24s} {status:18s} pass={s['pass']:4d} fail={s['fail']:3d} "
            f"inconclusive={s['inconclusive']:3d} discrepancy={s['discrepancy']:3d} "
            f"[{time.time() - t0:5.1f}s]"
        )
        if report.exit_status == 1:
            worst = 1
        elif report.exit_status == 3 and worst == 0:
            worst = 3
    print(f"reports written to {out_dir}/")
    return worst


if __name__ == "__main__":
    sys.exit(main())
