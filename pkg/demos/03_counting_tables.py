#!/usr/bin/env python3
"""Brute-force counts against the closed forms.

Parking functions of length n number (n+1)^(n-1); the prime ones number
(n-1)^(n-1).  Both are verified here by scanning every word of the space.
"""

from parkfunc import count_parking_functions, count_prime_parking_functions

print(f"{'n':>2} {'words':>9} {'parking':>8} {'(n+1)^(n-1)':>11} "
      f"{'prime':>6} {'(n-1)^(n-1)':>11}")
for n in range(1, 7):
    pf = count_parking_functions(n)
    ppf = count_prime_parking_functions(n)
    assert pf.agrees and ppf.agrees
    print(f"{n:>2} {pf.total_words:>9} {pf.matching:>8} {pf.formula_value:>11} "
          f"{ppf.matching:>6} {ppf.formula_value:>11}")

print("\nboth brute-force tallies agree with their formulas")
