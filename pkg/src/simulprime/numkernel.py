"""Integer and modular arithmetic used by every criterion and combined form.

Python ints are already arbitrary precision, so "Natural" and "Int" are
plain ints validated at the boundaries. Congruences are evaluated in
reduced residues; exact factorials exist only for witnesses and tests.
"""
import math
from dataclasses import dataclass

DEFAULT_FACTORIAL_CAP = 5000

# Number of consecutive factors multiplied in C before each reduction.
_CHUNK = 64


class ZeroModulus(ValueError):
    """Raised when a modulus or divisor of zero is supplied."""


class CapExceeded(ValueError):
    """Raised when an exact factorial is requested above the configured cap."""


@dataclass(frozen=True)
class Residue:
    """A canonical residue ``value mod modulus`` with ``0 <= value < modulus``."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ZeroModulus(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def _check_modulus(m: int) -> None:
    if m < 1:
        raise ZeroModulus(f"modulus must be >= 1, got {m}")


def mod_reduce(x: int, m: int) -> Residue:
    """Reduce ``x`` into ``[0, m)``."""
    _check_modulus(m)
    return Residue(x % m, m)


def factorial_mod(n: int, m: int) -> int:
    """Return ``n! mod m`` using incremental modular products.

    The full factorial is never built; factors are multiplied in short
    chunks and reduced after each chunk.
    """
    _check_modulus(m)
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if m == 1 or n >= m:
        # m divides m! and hence n!
        return 0
    acc = 1
    for start in range(2, n + 1, _CHUNK):
        stop = min(start + _CHUNK, n + 1)
        acc = acc * math.prod(range(start, stop)) % m
        if acc == 0:
            break
    return acc


def factorial_exact(n: int, cap: int = DEFAULT_FACTORIAL_CAP) -> int:
    """Return ``n!`` exactly, refusing arguments above ``cap``."""
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n > cap:
        raise CapExceeded(f"{n}! exceeds the exact-factorial cap of {cap}")
    return math.factorial(n)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def pairwise_coprime(xs) -> bool:
    """True iff every two distinct positions of ``xs`` hold coprime values."""
    xs = list(xs)
    for i, x in enumerate(xs):
        for y in xs[i + 1:]:
            if math.gcd(x, y) != 1:
                return False
    return True


def exact_div(a: int, d: int):
    """Return ``a // d`` when ``d`` divides ``a``, otherwise ``None``.

    ``None`` is the "not divisible" signal; callers testing integrality
    branch on it instead of catching an exception.
    """
    _check_modulus(d)
    q, r = divmod(a, d)
    return q if r == 0 else None


def floor_div(a: int, d: int) -> int:
    _check_modulus(d)
    return a // d


def factorial_floor_div_mod(n: int, d: int, m: int) -> int:
    """Return ``floor(n! / d) mod m`` without building ``n!``.

    Uses ``floor(N / d) mod m == floor((N mod d*m) / d)``.
    """
    _check_modulus(d)
    _check_modulus(m)
    return factorial_mod(n, d * m) // d
