"""Tabulate integer relations n1 x^r + n2 x^s + n3 x^t = 0 modulo c x^2 + x + c.

Run: python scripts/lemma2_table.py [max_c] [max_exponent]
"""

import itertools
import math
import sys

from pompeiu.polyring import lemma2_relation


def main(max_c: int = 5, top: int = 4) -> None:
    print(f"{'c':>3} {'(r, s, t)':>11}  relation{'':24} gcd(sum, c)")
    for c in range(2, max_c + 1):
        for r, s, t in itertools.combinations(range(top + 1), 3):
            n = lemma2_relation(c, r, s, t)
            print(f"{c:>3} {str((r, s, t)):>11}  {str(n):<32} {math.gcd(sum(n), c)}")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))
