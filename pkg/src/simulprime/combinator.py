"""Fuse several congruence conditions into one simultaneous verdict.

Given groups ``(a_i, c_i, r_i)`` with the ``r_i`` pairwise coprime and
each ``a_i`` invertible mod ``r_i``, every condition ``c_i == 0 (mod r_i)``
holds iff the single integer

    X = sum_i a_i * c_i * (R / r_i),      R = prod_i r_i,

is divisible by ``R``. The weighted-sum, divisor and integer-sum forms
are different presentations of that one test, so they all evaluate the
same reduced ``X``.
"""
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, prod
from typing import Optional, Sequence, Tuple

from .criteria import CongruenceCondition, DomainError, simionov
from .numkernel import Residue, gcd, pairwise_coprime


class EmptyInput(ValueError):
    pass


class DivisorInvalid(ValueError):
    pass


class PreconditionFailed(ValueError):
    """Raised by :func:`combine_as_group` when the groups cannot be fused."""


class Reason(str, enum.Enum):
    OK = "ok"
    NOT_COPRIME_TARGETS = "not_coprime_targets"
    NOT_COPRIME_MODULI = "not_coprime_moduli"
    COEFFICIENT_NOT_COPRIME = "coefficient_not_coprime"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GroupCondition:
    """A condition ``cond`` that characterizes ``targets`` as simultaneously prime.

    ``a`` is the weight this group receives in the combined sum. The
    coprimality of ``a`` and ``cond.r`` is checked by
    :func:`check_preconditions`, not here, so that a bad coefficient
    surfaces as a verdict reason.
    """

    targets: Tuple[int, ...]
    a: int
    cond: CongruenceCondition

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        if not self.targets:
            raise DomainError("a group needs at least one target")
        if min(self.targets) < 2:
            raise DomainError(f"targets must be >= 2, got {self.targets}")

    @property
    def r(self) -> int:
        return self.cond.r

    @property
    def c(self) -> int:
        return self.cond.c


@dataclass(frozen=True)
class CombinedForm:
    variant: str = "weighted_sum"
    D: int = 1

    VARIANTS = ("weighted_sum", "divisor", "integer_sum")

    def __post_init__(self):
        if self.variant not in self.VARIANTS:
            raise ValueError(f"unknown combined form {self.variant!r}")
        if self.D < 1:
            raise DivisorInvalid(f"divisor must be >= 1, got {self.D}")

    @classmethod
    def weighted(cls):
        return cls("weighted_sum")

    @classmethod
    def divisor(cls, D):
        return cls("divisor", D)

    @classmethod
    def integer_sum(cls):
        return cls("integer_sum")

    @classmethod
    def parse(cls, text: str) -> "CombinedForm":
        """Parse ``weighted``, ``divisor:D`` or ``integer-sum``."""
        head, _, arg = text.partition(":")
        if head == "weighted" and not arg:
            return cls.weighted()
        if head == "integer-sum" and not arg:
            return cls.integer_sum()
        if head == "divisor" and arg:
            try:
                return cls.divisor(int(arg))
            except ValueError:
                pass
        raise ValueError(f"cannot parse combined form {text!r}")

    def __str__(self):
        if self.variant == "divisor":
            return f"divisor:{self.D}"
        return "weighted" if self.variant == "weighted_sum" else "integer-sum"


@dataclass(frozen=True)
class CombinedVerdict:
    """Outcome of :func:`combine`.

    ``X`` is the combined sum reduced mod ``R``. For the divisor form
    ``modulus_shown`` is ``R/D`` and ``quotient`` is ``X/D`` reduced mod
    ``R/D`` whenever ``D`` divides ``X``.
    """

    holds: bool
    X: Residue
    modulus_shown: int
    reason: Reason = Reason.OK
    quotient: Optional[int] = None
    targets: Tuple[int, ...] = field(default=())

    @property
    def R(self) -> int:
        return self.X.modulus


def check_preconditions(groups: Sequence[GroupCondition]) -> Reason:
    """Return the first violated precondition, or ``Reason.OK``."""
    if not groups:
        raise EmptyInput("no groups to combine")
    targets = [t for g in groups for t in g.targets]
    if not pairwise_coprime(targets):
        return Reason.NOT_COPRIME_TARGETS
    if not pairwise_coprime(g.r for g in groups):
        return Reason.NOT_COPRIME_MODULI
    for g in groups:
        if gcd(g.a, g.r) != 1:
            return Reason.COEFFICIENT_NOT_COPRIME
    return Reason.OK


def combined_sum(groups: Sequence[GroupCondition]) -> Residue:
    """``sum a_i c_i (R/r_i)`` reduced mod ``R``, with each ``c_i`` reduced first."""
    R = prod(g.r for g in groups)
    x = 0
    for g in groups:
        cofactor = R // g.r
        x = (x + g.a * (g.c % g.r) * cofactor) % R
    return Residue(x, R)


def combine(groups: Sequence[GroupCondition], form: CombinedForm = CombinedForm()) -> CombinedVerdict:
    """Evaluate the combined condition for ``groups`` in the given form.

    Precondition failures give ``holds=False`` with the failing reason;
    a divisor that does not divide ``R`` raises :class:`DivisorInvalid`.
    """
    reason = check_preconditions(groups)
    X = combined_sum(groups)
    R = X.modulus
    targets = tuple(t for g in groups for t in g.targets)

    shown, quotient = R, None
    if form.variant == "divisor":
        if R % form.D:
            raise DivisorInvalid(f"D={form.D} does not divide R={R}")
        shown = R // form.D
        if X.value % form.D == 0:
            quotient = X.value // form.D
    elif form.variant == "integer_sum":
        shown = 1

    holds = reason is Reason.OK and X.value == 0
    return CombinedVerdict(holds, X, shown, reason, quotient, targets)


def combine_as_group(groups: Sequence[GroupCondition], form: CombinedForm = CombinedForm()) -> GroupCondition:
    """Package the combined condition as a new group for a further round."""
    verdict = combine(groups, form)
    if verdict.reason is not Reason.OK:
        raise PreconditionFailed(f"cannot fuse groups: {verdict.reason}")
    return GroupCondition(verdict.targets, 1, CongruenceCondition(verdict.X.value, verdict.R))


def integer_sum_witness(groups: Sequence[GroupCondition]) -> Tuple[int, bool]:
    """Exact value of ``sum a_i c_i / r_i`` as ``(floor, is_integer)``.

    Meaningful as a witness only when the groups carry unreduced ``c_i``
    (criteria called with ``exact=True``); integrality does not depend
    on that choice.
    """
    if not groups:
        raise EmptyInput("no groups to combine")
    total = sum((Fraction(g.a * g.c, g.r) for g in groups), Fraction(0))
    return floor(total), total.denominator == 1


# Simionov-based presets over pairwise-coprime targets.

def simionov_groups(ps: Sequence[int], ks: Sequence[int]):
    if len(ps) != len(ks):
        raise DomainError("ps and ks must have the same length")
    return [GroupCondition((p,), 1, simionov(p, k)) for p, k in zip(ps, ks)]


def form_T(ps, ks) -> CombinedVerdict:
    return combine(simionov_groups(ps, ks), CombinedForm.weighted())


def form_U(ps, ks, s) -> CombinedVerdict:
    """Divide the sum by ``p_{s+1} ... p_n`` and test mod ``p_1 ... p_s``."""
    if not 1 <= s <= len(ps):
        raise DomainError(f"s must be in [1, {len(ps)}], got {s}")
    return combine(simionov_groups(ps, ks), CombinedForm.divisor(prod(ps[s:])))


def form_V(ps, ks, j) -> CombinedVerdict:
    """Test modulo the single target ``p_j`` (1-based)."""
    if not 1 <= j <= len(ps):
        raise DomainError(f"j must be in [1, {len(ps)}], got {j}")
    return combine(simionov_groups(ps, ks), CombinedForm.divisor(prod(ps) // ps[j - 1]))


def form_W(ps, ks) -> CombinedVerdict:
    return combine(simionov_groups(ps, ks), CombinedForm.integer_sum())


def parse_preset(text: str):
    """Parse ``T``, ``U:s``, ``V:j`` or ``W`` into ``(letter, argument)``."""
    head, _, arg = text.partition(":")
    if head in ("T", "W") and not arg:
        return head, None
    if head in ("U", "V") and arg:
        try:
            value = int(arg)
        except ValueError:
            value = 0
        if value >= 1:
            return head, value
    raise ValueError(f"cannot parse preset form {text!r}")


def evaluate_preset(letter, arg, ps, ks) -> CombinedVerdict:
    if letter == "T":
        return form_T(ps, ks)
    if letter == "U":
        return form_U(ps, ks, arg)
    if letter == "V":
        return form_V(ps, ks, arg)
    return form_W(ps, ks)
