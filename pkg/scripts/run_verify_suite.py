"""Run the identity catalogue and print one line per case with timings.

    python scripts/run_verify_suite.py [--pattern 'cw-*'] [--max-strands 16]
"""

import argparse
import fnmatch
import time

from bpmono import harness


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pattern", default="*")
    ap.add_argument("--max-strands", type=int, default=harness.DEFAULT_MAX_STRANDS)
    args = ap.parse_args()

    rows, reports = [], []
    for case in harness.catalogue():
        if not fnmatch.fnmatchcase(case.id, args.pattern):
            continue
        t0 = time.perf_counter()
        r = harness.run_identity(case, args.max_strands)
        reports.append(r)
        rows.append((case.id, case.expected, r.verdict, time.perf_counter() - t0))

    width = max(len(r[0]) for r in rows)
    for cid, expected, verdict, dt in rows:
        print(f"{cid:<{width}}  {expected:<9} {verdict:<18} {dt * 1000:7.1f} ms")
    print("suite", "ok" if harness.suite_ok(reports) else "FAILED")


if __name__ == "__main__":
    main()
