"""Constants attached to the degree-N Fermat curve x^N + y^N = 1.

Differential forms on the curve are indexed by residue pairs (a, b) with
a, b, a+b all nonzero mod N; the form is holomorphic when a + b < N after
reduction to 1..N.  The building blocks here are the period integrals
B(a/N, b/N)/N, the character sums mu, and the Hodge test for wedge pairs.
"""

import math

from fermatreg import FormIndex, WedgeIndex, genus, is_hodge, mu, mu_half, period

N = 13
print(f"genus of the degree-{N} curve: {genus(N)}")

holo = [
    FormIndex(N, a, b)
    for a in range(1, N)
    for b in range(1, N)
    if (a + b) % N != 0 and a + b < N
]
print(f"{len(holo)} holomorphic labels (half of {2 * genus(N)} total)")
print()

idx = FormIndex(N, 1, 2)
print(f"period of {idx}: {period(idx):.15f}")
print(f"period of (1,1) mod 3: {period(FormIndex(3, 1, 1)):.15f}")
print()

# mu(a, b) is a quadratic expression in N-th roots of unity; it is always
# purely imaginary
z = mu(1, 1, 3)
print(f"mu(1,1) mod 3     = {z:.6f}   (equals -9 sqrt(3) i: {-9 * math.sqrt(3):.6f})")

# the mixed regulator uses the same expression built from 2N-th roots;
# both normalizations are exposed since they differ by more than scaling
zh = mu_half(1, 2, 13)
print(f"mu_half(1,2) mod 13 = {zh:.6f}")
print()

# a wedge of two holomorphic forms spans a Hodge class exactly when the
# two index triples {a, b, N-a-b} agree as multisets (prime N)
pairs = [
    ((1, 4), (1, 8)),   # 1 + 4 + 8 = 13: shifted copy of itself
    ((1, 3), (1, 9)),
    ((1, 2), (1, 4)),
]
for (ab, cd) in pairs:
    w = WedgeIndex(FormIndex(N, *ab), FormIndex(N, *cd))
    print(f"wedge {ab} ^ {cd} mod {N}: hodge = {is_hodge(w)}")
