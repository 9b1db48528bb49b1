"""
Twin primes four ways
=====================

Clement's theorem and three further congruences each decide whether
p and p + 2 are both prime.
"""

from simulprime import clement, scan, twin_a, twin_b, twin_sum

###############################################################################
# All four agree on every odd base.
for p in range(3, 40, 2):
    verdicts = {clement(p).holds, twin_a(p).holds, twin_b(p).holds, twin_sum(p).holds}
    assert len(verdicts) == 1
    if verdicts.pop():
        print(p, p + 2)

###############################################################################
# The integer-sum form with its exact witness: 25/5 + 49/7 = 12.
print(twin_sum(5, exact=True))

###############################################################################
# Scanning a range, split across two worker processes.
print(scan("twin-b", 3, 500, jobs=2))
