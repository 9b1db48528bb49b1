"""Ground-truth primality, independent of any factorial or Wilson logic.

The forms elsewhere in the package are checked against :func:`is_prime`,
so nothing here may import the criteria or constellation evaluators at
module level.
"""
import math
import time
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

LIMIT = 1 << 64

# Wheel of circumference 30 starting at 7.
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)

# Strong probable-prime bases that are deterministic for n < 2**64.
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class OutOfRange(ValueError):
    pass


class BadRange(ValueError):
    pass


def _trial(n):
    for q in (2, 3, 5):
        if n % q == 0:
            return n == q
    q, i, root = 7, 0, math.isqrt(n)
    while q <= root:
        if n % q == 0:
            return False
        q += _WHEEL[i]
        i = (i + 1) & 7
    return True


def _miller_rabin(n):
    for q in MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int, method: str = "trial") -> bool:
    """Exact primality for ``0 <= n < 2**64``.

    ``method`` is ``"trial"`` (wheel trial division) or ``"mr"`` (strong
    probable-prime tests over :data:`MR_BASES`, deterministic below 2**64).
    """
    if n >= LIMIT:
        raise OutOfRange(f"{n} is outside the oracle range [0, 2**64)")
    if n < 2:
        return False
    if method == "trial":
        return _trial(n)
    if method == "mr":
        return _miller_rabin(n)
    raise ValueError(f"unknown oracle method {method!r}")


def prime_sieve(limit: int) -> bytearray:
    """Sieve of Eratosthenes: ``flags[n] == 1`` iff ``n`` is prime, ``n <= limit``."""
    flags = bytearray([1]) * (limit + 1)
    flags[:2] = b"\x00" * min(2, limit + 1)
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q::q] = bytes(len(range(q * q, limit + 1, q)))
    return flags


def tuple_is_prime(p: int, offsets: Sequence[int], method: str = "trial") -> bool:
    """True iff every ``p + offset`` is prime."""
    return all(is_prime(p + o, method) for o in offsets)


def sieve_tuple_bases(offsets: Sequence[int], lo: int, hi: int) -> List[int]:
    """Bases in ``[lo, hi]`` whose whole pattern is prime, found by sieving."""
    lo = max(lo, -min(offsets))
    if hi < lo:
        return []
    flags = prime_sieve(hi + max(offsets))
    return [p for p in range(lo, hi + 1) if all(flags[p + o] for o in offsets)]


@dataclass
class VerificationReport:
    """Agreement of a characterization with the oracle over a base range.

    ``mismatches`` holds ``(p, form_verdict, oracle_verdict)`` in ascending
    ``p`` and is empty iff the two agreed on every in-domain base.
    """

    form: str
    pattern: Tuple[int, ...]
    lo: int
    hi: int
    checked: int = 0
    true_count: int = 0
    mismatches: List[Tuple[int, bool, bool]] = field(default_factory=list)
    elapsed: float = 0.0
    jobs: int = 1

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self):
        # big integers as decimal strings
        return {
            "form": self.form,
            "pattern": [str(o) for o in self.pattern],
            "lo": str(self.lo),
            "hi": str(self.hi),
            "checked": self.checked,
            "true_count": self.true_count,
            "mismatches": [{"p": str(p), "form": f, "oracle": o}
                           for p, f, o in self.mismatches],
            "elapsed": round(self.elapsed, 6),
            "jobs": self.jobs,
        }


def _verify_chunk(form, lo, hi):
    checked = true_count = 0
    mismatches = []
    for p in range(lo, hi + 1):
        if not form.in_domain(p):
            continue
        verdict = form.evaluate(p).holds
        truth = tuple_is_prime(p, form.pattern.offsets)
        checked += 1
        true_count += verdict
        if verdict != truth:
            mismatches.append((p, verdict, truth))
    return checked, true_count, mismatches


def verify_equivalence(form, lo: int, hi: int, jobs: int = 1) -> VerificationReport:
    """Compare ``form`` against :func:`tuple_is_prime` on every in-domain base.

    ``form`` is a form object from :mod:`simulprime.constellations` or its
    id string. Work is split across ``jobs`` processes and merged in
    ascending base order.
    """
    from .constellations import get_form, run_chunks

    if isinstance(form, str):
        form = get_form(form)
    if hi < lo:
        raise BadRange(f"empty range {lo}..{hi}")
    start = time.perf_counter()
    report = VerificationReport(form.id, form.pattern.offsets, lo, hi, jobs=jobs)
    for checked, true_count, mismatches in run_chunks(_verify_chunk, form, lo, hi, jobs):
        report.checked += checked
        report.true_count += true_count
        report.mismatches.extend(mismatches)
    report.elapsed = time.perf_counter() - start
    return report
