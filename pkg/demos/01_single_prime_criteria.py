"""
Single-number primality criteria
================================

Each criterion turns a number p into a congruence c == 0 (mod p) that
holds exactly when p is prime.
"""

from simulprime import balanced_k, leibniz, simionov, smarandache_factorial, wilson

###############################################################################
# Wilson: (p-1)! + 1 is divisible by p. ``exact=True`` keeps the unreduced
# value so we can look at it.
print(wilson(7, exact=True))       # c = 721 = 7 * 103
print(wilson(9).holds)             # 8! + 1 leaves remainder 1 mod 9

###############################################################################
# Simionov's family works for every k in [1, p]; the verdict never depends
# on k. The balanced choice keeps (p-k)! (k-1)! smallest.
p = 13
print([simionov(p, k).holds for k in range(1, p + 1)])
print("balanced k for", p, "is", balanced_k(p))

###############################################################################
# Two more criteria in the same shape.
for q in (5, 7, 9, 11):
    print(q, leibniz(q).holds, smarandache_factorial(q).holds)
