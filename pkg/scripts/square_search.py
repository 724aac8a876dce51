"""Open search target: does the unit square with weights 1 force a vertex value?

Tries growing budgets over Q and a few quadratic fields and reports what each
run found.  A failed run says nothing about the plane; it only means the
finite fragment explored admits no certificate.

Run: python scripts/square_search.py [max_placements ...]
"""

import sys
import time

from pompeiu.exactfield import QQ, ComplexElem, Field
from pompeiu.geometry import point
from pompeiu.search import Problem, SearchBudget, witness_search


def square(f):
    base = tuple(point(f, *xy) for xy in ((0, 0), (1, 0), (1, 1), (0, 1)))
    return Problem(base, tuple(ComplexElem(1, 0, f) for _ in base), point(f, 0, 0))


def main(budgets=(25, 50)) -> None:
    for f in (QQ, Field(2), Field(3), Field(5)):
        for cap in budgets:
            t0 = time.perf_counter()
            out = witness_search(square(f), SearchBudget(cap, 4 * cap, 8))
            dt = time.perf_counter() - t0
            verdict = "forced" if out.found else f"none ({out.reason})"
            print(f"{f.name:>7} budget {cap:>4}: {verdict}; rank {out.stats.get('rank')}, {dt:.2f} s")


if __name__ == "__main__":
    main(tuple(int(a) for a in sys.argv[1:]) or (25, 50))
