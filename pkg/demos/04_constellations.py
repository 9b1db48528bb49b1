"""
Pairs, triples and quadruplets
==============================

The same machinery characterizes prime pairs (p, p + k), triples
(p - 2, p, p + 4) and quadruplets (p, p + 2, p + 6, p + 8).
"""

from simulprime import (
    TuplePattern,
    get_form,
    pair_cucurezeanu,
    pair_smarandache,
    quadruplet,
    scan,
    triple_patrizio,
    triple_smarandache,
)

###############################################################################
# Pairs at distance 4.
print(pair_smarandache(3, 4, exact=True), pair_cucurezeanu(7, 4).holds)

###############################################################################
# Cucurezeanu's congruence needs p coprime to k!: 9 divides 8!, so the
# bare congruence wrongly accepts (9, 17).
print(pair_cucurezeanu(9, 8, require_coprime_factorial=False).holds)

###############################################################################
# Quadruplets via the integer-sum form; p = 5 gives 5 + 7 + 1571 + 74437.
print(quadruplet(5, exact=True).witness)
print(scan("quad", 3, 2000))

###############################################################################
# Two characterizations of the (p - 2, p, p + 4) triple at p = 7.
print(triple_smarandache(7, exact=True).witness, triple_patrizio(7, exact=True).witness)

###############################################################################
# Any pattern can be tested by combining Simionov conditions per target.
form = get_form("W", pattern=TuplePattern((0, 4, 6)), k="balanced")
print(scan(form, 2, 300))
