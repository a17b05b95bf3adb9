#!/usr/bin/env python3
"""Print the acceptance table with per-row timings."""
import argparse

from brauerkit.verify import VerifyConfig, format_table, run_verification


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--level", choices=("quick", "full"), default="full")
    ap.add_argument("--seed", type=int, default=VerifyConfig.seed)
    ap.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    args = ap.parse_args()
    rows = run_verification(VerifyConfig(args.level, args.seed), set(args.only) if args.only else None)
    print(format_table(rows), end="")
    for r in rows:
        print(f"  criterion {r.number}: {r.elapsed_ms} ms")
    return 0 if all(r.passed for r in rows) else 5


if __name__ == "__main__":
    raise SystemExit(main())
