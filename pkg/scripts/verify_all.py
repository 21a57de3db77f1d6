"""Run every catalog check and print a compact report. Exit 1 if anything fails."""
import argparse
import sys
import time

from dp4aut import catalog


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=list(catalog.NAMES))
    ap.add_argument("-v", "--verbose", action="store_true", help="show check details")
    args = ap.parse_args(argv)

    bad = 0
    for name in args.names:
        t0 = time.perf_counter()
        checks = catalog.verify(catalog.get(name))
        dt = time.perf_counter() - t0
        ok = catalog.all_passed(checks)
        bad += not ok
        print(f"{name:16s} {'ok' if ok else 'FAILED':6s} {len(checks):2d} checks  {dt:5.2f}s")
        for c in checks:
            if args.verbose or not c.ok:
                print(f"    [{'PASS' if c.ok else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else ""))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
