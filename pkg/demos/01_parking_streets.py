#!/usr/bin/env python3
"""Park fifteen cars on three different streets.

The same preference word parks successfully on the standard street 1..n, and
its prime part parks on the street labeled 1,1,2,...,n-1.  Rotating the
prime street's labels to start at the decomposition shift k makes the
ORIGINAL word park again, with the cars landing in exactly the same order.
"""

from parkfunc import (
    decompose,
    parse_word,
    prime_street,
    rotated_street,
    simulate,
    standard_street,
)
from parkfunc.cli import render_street

word = parse_word("3,13,6,3,7,3,2,1,10,11,6,7,14,10,11")
n = len(word)

print(f"preference word: {word}\n")

out = simulate(word, standard_street(n))
print("standard street:")
print(render_street(out.assignment, standard_street(n)))

k, b = decompose(word)
print(f"\ndecomposition: shift k={k}, prime part b={b}\n")

out = simulate(b, prime_street(n))
print("prime part on the street 1,1,2,...,14:")
print(render_street(out.assignment, prime_street(n)))

out = simulate(word, rotated_street(n, k))
print(f"\noriginal word on the street rotated to start at {k}:")
print(render_street(out.assignment, rotated_street(n, k)))

print("\nNote the last two car rows coincide: rotating the labels by k")
print("is the street-level view of subtracting k-1 from every preference.")

# No other rotation works for this word:
winners = [kk for kk in range(1, n) if simulate(word, rotated_street(n, kk)).success]
print(f"rotations that park everyone: {winners}")
