"""Command-line front end.

Exit codes: 0 success, 1 parse/type error, 2 step budget exhausted,
3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .repl import DEFAULT_SCRIPT_BUDGET, default_registry, repl, run_script


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="repl",
        description="Interactive logic-programming REPL over the bundled "
                    "natural-number and list predicates.",
    )
    parser.add_argument("--script", metavar="FILE",
                        help="run queries from FILE (one per line, 'NEXT' "
                             "requests the next solution) instead of "
                             "starting an interactive session")
    parser.add_argument("--max-steps", type=int, metavar="N", default=None,
                        help="bound on solver node expansions per query "
                             "(default: unlimited interactively, 1e6 in "
                             "script mode)")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress the startup banner")
    args = parser.parse_args(argv)

    registry = default_registry()
    if args.script is not None:
        budget = args.max_steps if args.max_steps is not None else DEFAULT_SCRIPT_BUDGET
        try:
            return run_script(args.script, registry, max_steps=budget)
        except OSError as err:
            print(f"error: {err}", file=sys.stderr)
            return 3
    try:
        repl(registry, max_steps=args.max_steps, quiet=args.quiet)
    except KeyboardInterrupt:
        pass
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
