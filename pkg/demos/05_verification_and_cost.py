"""
Checking against the oracle, and what it costs
==============================================

Every form is compared with plain trial-division primality, and its
running time with a sieve that answers the same question.
"""

import time

from simulprime import verify_equivalence
from simulprime.oracle import sieve_tuple_bases
from simulprime.constellations import scan

###############################################################################
for form_id in ("clement", "twin-sum", "pair-c:6", "quad", "triple-p"):
    report = verify_equivalence(form_id, 2, 1500)
    print(f"{form_id:10s} checked {report.checked:5d}  true {report.true_count:4d}  "
          f"mismatches {len(report.mismatches)}")

###############################################################################
# The factorial-based test is far slower than sieving; the point is
# equivalence, not speed.
start = time.perf_counter()
found = scan("twin-a", 3, 5000)
form_time = time.perf_counter() - start
start = time.perf_counter()
expected = sieve_tuple_bases((0, 2), 3, 5000)
sieve_time = time.perf_counter() - start
assert found == expected
print(f"twin-a {form_time:.3f}s, sieve {sieve_time:.5f}s, ratio {form_time / sieve_time:.0f}")
