#!/usr/bin/env python3
"""Uniform sampling of prime parking functions.

Drawing a uniform word of [n-1]^n and keeping the prime part of its shift
decomposition gives an exactly uniform prime parking function, because the
decomposition is a bijection [n-1]^n <-> [n-1] x PPF_n.
"""

from collections import Counter

from parkfunc import all_words, is_prime_parking_function, sample_primes

n, draws, seed = 4, 27000, 7
words = sample_primes(n, seed, draws)
counts = Counter(words)

space = sorted(w for w in all_words(n - 1, n) if is_prime_parking_function(w))
target = draws / len(space)
sigma = (draws * (1 / len(space)) * (1 - 1 / len(space))) ** 0.5

print(f"{draws} draws at n={n}; {len(space)} prime words; "
      f"expected {target:.0f} each (sigma {sigma:.1f})\n")
for w in space:
    c = counts[w]
    bar = "#" * round(c / 25)
    print(f"{''.join(map(str, w))}  {c:>5}  {bar}")

worst = max(abs(counts[w] - target) for w in space)
print(f"\nlargest deviation: {worst:.0f} ({worst / sigma:.2f} sigma)")
