"""Single-number primality criteria of Wilson type.

Each criterion maps ``p`` to a :class:`CongruenceCondition` ``(c, r)``
with ``r = p`` (``r = p + d`` for :func:`offset_wilson`); the condition
holds exactly when ``p`` is prime.

By default ``c`` is returned reduced mod ``r``. Passing ``exact=True``
evaluates the unreduced integer instead (bounded by ``cap``), which is
what the integer-sum witnesses need.
"""
from dataclasses import dataclass
from typing import Callable, Dict

from .numkernel import (
    DEFAULT_FACTORIAL_CAP,
    factorial_exact,
    factorial_mod,
    mod_reduce,
)


class DomainError(ValueError):
    """Raised when an argument lies outside a criterion's validity domain."""


@dataclass(frozen=True)
class CongruenceCondition:
    """The assertion ``c == 0 (mod r)``."""

    c: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"modulus must be >= 1, got {self.r}")

    @property
    def holds(self) -> bool:
        return mod_reduce(self.c, self.r).value == 0

    @property
    def residue(self):
        return mod_reduce(self.c, self.r)


def _fact(n, m, exact, cap):
    return factorial_exact(n, cap) if exact else factorial_mod(n, m)


def _finish(c, r, exact):
    return CongruenceCondition(c if exact else c % r, r)


def simionov(p: int, k: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> CongruenceCondition:
    """``(p-k)! (k-1)! - (-1)^k == 0 (mod p)``, valid for ``1 <= k <= p``."""
    if p < 2:
        raise DomainError(f"p must be >= 2, got {p}")
    if not 1 <= k <= p:
        raise DomainError(f"k must satisfy 1 <= k <= p, got k={k}, p={p}")
    sign = -1 if k % 2 else 1
    c = _fact(p - k, p, exact, cap) * _fact(k - 1, p, exact, cap) - sign
    return _finish(c, p, exact)


def wilson(p: int, **kw) -> CongruenceCondition:
    """``(p-1)! + 1 == 0 (mod p)``."""
    return simionov(p, 1, **kw)


def leibniz(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> CongruenceCondition:
    """``(p-2)! - 1 == 0 (mod p)``."""
    if p < 2:
        raise DomainError(f"p must be >= 2, got {p}")
    return _finish(_fact(p - 2, p, exact, cap) - 1, p, exact)


def smarandache_factorial(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> CongruenceCondition:
    """``(p-3)! - (p-1)/2 == 0 (mod p)`` for odd ``p >= 3``."""
    if p < 3 or p % 2 == 0:
        raise DomainError(f"p must be odd and >= 3, got {p}")
    return _finish(_fact(p - 3, p, exact, cap) - (p - 1) // 2, p, exact)


def balanced_k(p: int) -> int:
    """The ``k`` that balances ``(p-k)!`` against ``(k-1)!``."""
    if p < 2:
        raise DomainError(f"p must be >= 2, got {p}")
    return (p + 1) // 2


def offset_wilson(p: int, d: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> CongruenceCondition:
    """Wilson's criterion for ``p + d`` written in terms of ``(p-1)!``.

    Since ``(p+d-1)! == (-1)^d d! (p-1)! (mod p+d)``, the condition
    ``(-1)^d d! (p-1)! + 1 == 0 (mod p+d)`` holds iff ``p + d`` is prime.
    """
    if d < 0:
        raise DomainError(f"offset must be >= 0, got {d}")
    if p < 1 or p + d < 2:
        raise DomainError(f"need p >= 1 and p + d >= 2, got p={p}, d={d}")
    q = p + d
    sign = -1 if d % 2 else 1
    c = sign * _fact(d, q, exact, cap) * _fact(p - 1, q, exact, cap) + 1
    return _finish(c, q, exact)


@dataclass(frozen=True)
class Criterion:
    """A registry entry: stable name, domain, evaluator and provenance."""

    name: str
    domain: str
    in_domain: Callable[[int], bool]
    evaluate: Callable[..., CongruenceCondition]
    provenance: str

    def __call__(self, p, **kw):
        return self.evaluate(p, **kw)


def _simionov_entry(k):
    # k is either a fixed positive integer or "balanced"
    if k == "balanced":
        return Criterion(
            "simionov:balanced", "2 <= p", lambda p: p >= 2,
            lambda p, **kw: simionov(p, balanced_k(p), **kw),
            "Simionov's criterion with k = floor((p+1)/2)")
    return Criterion(
        f"simionov:{k}", f"2 <= p, 1 <= k <= p (k = {k})",
        lambda p: p >= 2 and 1 <= k <= p,
        lambda p, **kw: simionov(p, k, **kw),
        "Simionov's criterion")


CRITERIA: Dict[str, Criterion] = {
    "wilson": Criterion("wilson", "2 <= p", lambda p: p >= 2, wilson,
                        "Wilson's theorem"),
    "leibniz": Criterion("leibniz", "2 <= p", lambda p: p >= 2, leibniz,
                         "Leibniz's criterion (p-2)! == 1"),
    "smarandache-factorial": Criterion(
        "smarandache-factorial", "odd p >= 3", lambda p: p >= 3 and p % 2 == 1,
        smarandache_factorial, "Smarandache's criterion (p-3)! == (p-1)/2"),
}

_SIMIONOV_LISTING = Criterion("simionov:k", "2 <= p, 1 <= k <= p", lambda p: p >= 2,
                              simionov, "Simionov's criterion")


def list_criteria():
    """Registered criteria in a stable order, with the parametrized Simionov entry."""
    return list(CRITERIA.values()) + [_SIMIONOV_LISTING]


def get_criterion(name: str) -> Criterion:
    """Resolve a stable criterion name such as ``wilson`` or ``simionov:3``."""
    if name in CRITERIA:
        return CRITERIA[name]
    head, _, arg = name.partition(":")
    if head == "simionov" and arg:
        if arg == "balanced":
            return _simionov_entry(arg)
        try:
            k = int(arg)
        except ValueError:
            raise KeyError(name) from None
        if k < 1:
            raise KeyError(name)
        return _simionov_entry(k)
    raise KeyError(name)


def register(criterion: Criterion) -> None:
    """Add a criterion under its name; existing names are not replaced."""
    if criterion.name in CRITERIA or criterion.name.startswith("simionov"):
        raise ValueError(f"criterion {criterion.name!r} already registered")
    CRITERIA[criterion.name] = criterion
