"""Named characterizations of prime pairs, triples and quadruplets.

Each form is tied to a :class:`TuplePattern` and decides, for a base
``p`` in its domain, whether all of ``p + offset`` are prime. Forms are
addressed by stable ids (``twin-a``, ``pair-c:4``, ``quad`` ...) so they
can be shipped to worker processes by name.
"""
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

from . import combinator
from .combinator import CombinedForm, GroupCondition, Reason
from .criteria import CongruenceCondition, DomainError, balanced_k, offset_wilson, simionov
from .numkernel import (
    DEFAULT_FACTORIAL_CAP,
    factorial_exact,
    factorial_floor_div_mod,
    factorial_mod,
    pairwise_coprime,
)
from .oracle import BadRange


class UnknownForm(ValueError):
    pass


@dataclass(frozen=True)
class TuplePattern:
    """Strictly increasing offsets whose first entry is 0 or negative."""

    offsets: Tuple[int, ...]

    def __post_init__(self):
        offsets = tuple(int(o) for o in self.offsets)
        object.__setattr__(self, "offsets", offsets)
        if not offsets:
            raise ValueError("a pattern needs at least one offset")
        if any(b <= a for a, b in zip(offsets, offsets[1:])):
            raise ValueError(f"offsets must be strictly increasing: {offsets}")
        if offsets[0] > 0:
            raise ValueError(f"first offset must be 0 or negative: {offsets}")

    @classmethod
    def parse(cls, text: str) -> "TuplePattern":
        return cls(tuple(int(part) for part in text.split(",")))

    def targets(self, p: int) -> Tuple[int, ...]:
        return tuple(p + o for o in self.offsets)

    @property
    def min_base(self) -> int:
        """Smallest base making every target at least 2."""
        return 2 - self.offsets[0]

    def __str__(self):
        return ",".join(str(o) for o in self.offsets)


TWIN = TuplePattern((0, 2))
QUADRUPLET = TuplePattern((0, 2, 6, 8))
TRIPLE = TuplePattern((-2, 0, 4))


@dataclass(frozen=True)
class Verdict:
    """Result of evaluating a form at one base.

    ``residue``/``modulus`` describe the congruence that was tested (the
    combined sum for integrality forms); ``witness`` is the unreduced
    left-hand side, filled only on request.
    """

    holds: bool
    residue: Optional[int] = None
    modulus: Optional[int] = None
    reason: str = "ok"
    witness: Optional[int] = None


def _from_condition(cond: CongruenceCondition, witness=None) -> Verdict:
    res = cond.residue
    return Verdict(res.value == 0, res.value, res.modulus,
                   "ok" if res.value == 0 else "nonzero_residue", witness)


def _odd_base(p):
    if p < 3 or p % 2 == 0:
        raise DomainError(f"p must be odd and >= 3, got {p}")


def _fact(n, m, exact, cap):
    return factorial_exact(n, cap) if exact else factorial_mod(n, m)


# -- twin primes ---------------------------------------------------------

def clement(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> CongruenceCondition:
    """Clement: ``4((p-1)! + 1) + p == 0 (mod p(p+2))``."""
    _odd_base(p)
    r = p * (p + 2)
    c = 4 * (_fact(p - 1, r, exact, cap) + 1) + p
    return CongruenceCondition(c if exact else c % r, r)


def twin_a(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> CongruenceCondition:
    """``(p-1)!(3p+2) + 2p + 2 == 0 (mod p(p+2))``."""
    _odd_base(p)
    r = p * (p + 2)
    c = _fact(p - 1, r, exact, cap) * (3 * p + 2) + 2 * p + 2
    return CongruenceCondition(c if exact else c % r, r)


def twin_b(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> CongruenceCondition:
    """``(p-1)!(p-2) - 2 == 0 (mod p(p+2))``."""
    _odd_base(p)
    r = p * (p + 2)
    c = _fact(p - 1, r, exact, cap) * (p - 2) - 2
    return CongruenceCondition(c if exact else c % r, r)


def _integer_sum(p, offsets, exact, cap) -> Verdict:
    groups = [GroupCondition((p + d,), 1, offset_wilson(p, d)) for d in offsets]
    verdict = combinator.combine(groups, CombinedForm.integer_sum())
    if verdict.reason is not Reason.OK:
        reason = str(verdict.reason)
    else:
        reason = "ok" if verdict.holds else "not_integer"
    witness = None
    if exact:
        exact_groups = [GroupCondition((p + d,), 1, offset_wilson(p, d, exact=True, cap=cap))
                        for d in offsets]
        value, is_integer = combinator.integer_sum_witness(exact_groups)
        witness = value if is_integer else None
    return Verdict(verdict.holds, verdict.X.value, verdict.R, reason, witness)


def twin_sum(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> Verdict:
    """``((p-1)! + 1)/p + (2(p-1)! + 1)/(p+2)`` is an integer."""
    _odd_base(p)
    return _integer_sum(p, (0, 2), exact, cap)


def quadruplet(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> Verdict:
    """``sum over d in {0,2,6,8} of (d!(p-1)! + 1)/(p+d)`` is an integer."""
    _odd_base(p)
    return _integer_sum(p, QUADRUPLET.offsets, exact, cap)


# -- pairs (p, p + k) --------------------------------------------------------

def _pair_domain(p, k):
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if p < 2:
        raise DomainError(f"p must be >= 2, got {p}")
    if math.gcd(p, k) != 1:
        raise DomainError(f"p={p} and p+k={p + k} are not coprime")


def pair_smarandache(p: int, k: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> CongruenceCondition:
    """``(p-1)!(p+k) + (p+k-1)! p + 2p + k == 0 (mod p(p+k))``."""
    _pair_domain(p, k)
    r = p * (p + k)
    c = _fact(p - 1, r, exact, cap) * (p + k) + _fact(p + k - 1, r, exact, cap) * p + 2 * p + k
    return CongruenceCondition(c if exact else c % r, r)


def pair_cucurezeanu(p: int, k: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP,
                     require_coprime_factorial=True) -> CongruenceCondition:
    """Cucurezeanu: ``k k! ((p-1)! + 1) + (k! - (-1)^k) p == 0 (mod p(p+k))``.

    Modulo ``p`` the left side is ``k k! ((p-1)! + 1)``, so a composite
    ``p`` dividing ``k!`` passes spuriously (``p=9, k=8`` with 17 prime).
    The characterization therefore requires ``gcd(p, k!) = 1``; pass
    ``require_coprime_factorial=False`` to evaluate the bare congruence.
    """
    _pair_domain(p, k)
    kf = math.factorial(k)
    if require_coprime_factorial and math.gcd(p, kf) != 1:
        raise DomainError(f"p={p} shares a factor with {k}!")
    r = p * (p + k)
    sign = -1 if k % 2 else 1
    c = k * kf * (_fact(p - 1, r, exact, cap) + 1) + (kf - sign) * p
    return CongruenceCondition(c if exact else c % r, r)


# -- triples (p-2, p, p+4) -------------------------------------------------------

def _triple_domain(p):
    if p < 5:
        raise DomainError(f"p must be >= 5, got {p}")


def triple_smarandache(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> Verdict:
    """``(p-1)! + p((p-3)!+1)/(p-2) + p((p+3)!+1)/(p+4) == -1 (mod p)``.

    Both quotients must be exact; a failed division is reported as a
    false verdict with reason ``not_divisible``.
    """
    _triple_domain(p)
    if not pairwise_coprime(TRIPLE.targets(p)):
        raise DomainError(f"{TRIPLE.targets(p)} are not pairwise coprime")
    if (factorial_mod(p - 3, p - 2) + 1) % (p - 2) or (factorial_mod(p + 3, p + 4) + 1) % (p + 4):
        return Verdict(False, None, p, "not_divisible")
    # the p * quotient terms vanish mod p
    residue = factorial_mod(p - 1, p)
    holds = residue == p - 1
    witness = None
    if exact:
        q1 = (factorial_exact(p - 3, cap) + 1) // (p - 2)
        q2 = (factorial_exact(p + 3, cap) + 1) // (p + 4)
        witness = factorial_exact(p - 1, cap) + p * q1 + p * q2
    return Verdict(holds, residue, p, "ok" if holds else "wrong_residue", witness)


def triple_patrizio(p: int, *, exact=False, cap=DEFAULT_FACTORIAL_CAP) -> Verdict:
    """Patrizio: ``8 floor((p+3)!/(p+4)) + 4 floor((p-3)!/(p-2)) == -11 (mod p)``."""
    _triple_domain(p)
    residue = (8 * factorial_floor_div_mod(p + 3, p + 4, p)
               + 4 * factorial_floor_div_mod(p - 3, p - 2, p)) % p
    holds = residue == -11 % p
    witness = None
    if exact:
        witness = (8 * (factorial_exact(p + 3, cap) // (p + 4))
                   + 4 * (factorial_exact(p - 3, cap) // (p - 2)))
    return Verdict(holds, residue, p, "ok" if holds else "wrong_residue", witness)


# -- form objects -----------------------------------------------------------

@dataclass(frozen=True)
class NamedForm:
    """One of the named characterizations, addressed by a stable id."""

    kind: str
    k: Optional[int] = None

    @property
    def id(self) -> str:
        return f"{self.kind}:{self.k}" if self.k is not None else self.kind

    @property
    def pattern(self) -> TuplePattern:
        if self.kind in ("pair-s", "pair-c"):
            return TuplePattern((0, self.k))
        return _NAMED[self.kind][1]

    def _evaluator(self):
        fn = _NAMED[self.kind][0]
        if self.k is not None:
            return lambda p, **kw: fn(p, self.k, **kw)
        return fn

    def in_domain(self, p: int) -> bool:
        # mirrors the evaluators' DomainError guards without evaluating
        if self.kind in ("clement", "twin-a", "twin-b", "twin-sum", "quad"):
            return p >= 3 and p % 2 == 1
        if self.kind in ("pair-s", "pair-c"):
            if self.k < 1 or p < 2 or math.gcd(p, self.k) != 1:
                return False
            return self.kind == "pair-s" or math.gcd(p, math.factorial(self.k)) == 1
        if self.kind == "triple-s":
            return p >= 5 and pairwise_coprime(TRIPLE.targets(p))
        return p >= 5

    def evaluate(self, p: int, *, witness=False, cap=DEFAULT_FACTORIAL_CAP) -> Verdict:
        fn = self._evaluator()
        result = fn(p)
        if isinstance(result, Verdict):
            return fn(p, exact=True, cap=cap) if witness else result
        return _from_condition(result, fn(p, exact=True, cap=cap).c if witness else None)

    @property
    def domain(self) -> str:
        return _NAMED[self.kind][2]

    @property
    def provenance(self) -> str:
        return _NAMED[self.kind][3]


# kind -> (evaluator, pattern, domain description, provenance)
_NAMED = {
    "clement": (clement, TWIN, "odd p >= 3", "Clement's twin-prime theorem"),
    "twin-a": (twin_a, TWIN, "odd p >= 3", "twin primes, cleared weighted sum"),
    "twin-b": (twin_b, TWIN, "odd p >= 3", "twin primes, second congruence"),
    "twin-sum": (twin_sum, TWIN, "odd p >= 3", "twin primes, integer-sum form"),
    "pair-s": (pair_smarandache, None, "p >= 2, k >= 1, gcd(p, k) = 1",
               "prime pair (p, p+k), Smarandache form"),
    "pair-c": (pair_cucurezeanu, None, "p >= 2, k >= 1, gcd(p, k!) = 1",
               "prime pair (p, p+k), Cucurezeanu's theorem"),
    "quad": (quadruplet, QUADRUPLET, "odd p >= 3",
             "prime quadruplet (p, p+2, p+6, p+8), integer-sum form"),
    "triple-s": (triple_smarandache, TRIPLE, "p >= 5, p-2, p, p+4 pairwise coprime",
                 "prime triple (p-2, p, p+4), Smarandache form"),
    "triple-p": (triple_patrizio, TRIPLE, "p >= 5",
                 "prime triple (p-2, p, p+4), Patrizio's theorem"),
}

NAMED_FORM_IDS = ("clement", "twin-a", "twin-b", "twin-sum", "pair-s:k", "pair-c:k",
                  "quad", "triple-s", "triple-p")


@dataclass(frozen=True)
class RecipeForm:
    """A combined form applied to per-target criteria over a pattern.

    ``combined`` is a combined-form string (``weighted``, ``divisor:D``,
    ``integer-sum``) or a preset (``T``, ``U:s``, ``V:j``, ``W``). Each
    target gets Simionov's criterion with ``k`` (an int or ``"balanced"``),
    with coefficient 1.
    """

    combined: str
    pattern: TuplePattern = TWIN
    k: object = 1

    @property
    def id(self) -> str:
        return self.combined

    def _ks(self, targets):
        if self.k == "balanced":
            return [balanced_k(t) for t in targets]
        return [self.k] * len(targets)

    def in_domain(self, p: int) -> bool:
        targets = self.pattern.targets(p)
        if min(targets) < 2:
            return False
        if self.k != "balanced" and self.k > min(targets):
            return False
        if self.combined.startswith("divisor:"):
            return math.prod(targets) % CombinedForm.parse(self.combined).D == 0
        return True

    @property
    def domain(self) -> str:
        return f"all targets >= 2 and >= k (k = {self.k})"

    def evaluate(self, p: int, *, witness=False, cap=DEFAULT_FACTORIAL_CAP) -> Verdict:
        if not self.in_domain(p):
            raise DomainError(f"base {p} is outside the domain of {self.id} over {self.pattern}")
        targets = self.pattern.targets(p)
        ks = self._ks(targets)
        if self.combined[0] in "TUVW":
            letter, arg = combinator.parse_preset(self.combined)
            verdict = combinator.evaluate_preset(letter, arg, targets, ks)
        else:
            groups = combinator.simionov_groups(targets, ks)
            verdict = combinator.combine(groups, CombinedForm.parse(self.combined))
        w = None
        if witness:
            exact = [GroupCondition((t,), 1, simionov(t, k, exact=True, cap=cap))
                     for t, k in zip(targets, ks)]
            value, is_integer = combinator.integer_sum_witness(exact)
            w = value if is_integer else None
        if verdict.reason is not Reason.OK:
            reason = str(verdict.reason)
        else:
            reason = "ok" if verdict.holds else "nonzero_residue"
        return Verdict(verdict.holds, verdict.X.value, verdict.R, reason, w)


def _parse_k(k):
    if k is None:
        return 1
    if k == "balanced":
        return k
    k = int(k)
    if k < 1:
        raise UnknownForm(f"k must be >= 1, got {k}")
    return k


def get_form(text: str, pattern=None, k=None, d=None):
    """Resolve a form id.

    Named forms: ``clement``, ``twin-a``, ``twin-b``, ``twin-sum``,
    ``pair-s:k``, ``pair-c:k``, ``quad``, ``triple-s``, ``triple-p``
    (optionally prefixed ``named:``; pair forms take ``k`` from the id or
    the ``k`` argument). Anything else is parsed as a combined form or
    preset applied over ``pattern`` (default twin pattern), with
    ``d`` standing in for the divisor of a bare ``divisor``.
    """
    name = text[len("named:"):] if text.startswith("named:") else text
    head, _, arg = name.partition(":")
    if head in ("pair-s", "pair-c"):
        value = arg or (str(k) if k is not None else "")
        try:
            kk = int(value)
        except ValueError:
            raise UnknownForm(f"{head} needs an integer k, got {value!r}") from None
        if kk < 1:
            raise UnknownForm(f"k must be >= 1, got {kk}")
        return NamedForm(head, kk)
    if head in _NAMED and not arg:
        return NamedForm(head)
    if text.startswith("named:"):
        raise UnknownForm(f"unknown named form {text!r}")

    if name == "divisor" and d is not None:
        name = f"divisor:{d}"
    pattern = TWIN if pattern is None else pattern
    if not isinstance(pattern, TuplePattern):
        pattern = TuplePattern(tuple(pattern))
    try:
        kk = _parse_k(k)
    except ValueError as exc:
        raise UnknownForm(str(exc)) from None
    try:
        if name and name[0] in "TUVW":
            letter, value = combinator.parse_preset(name)
            if letter in "UV" and value > len(pattern.offsets):
                raise UnknownForm(f"{name} needs at most {len(pattern.offsets)} targets")
        else:
            CombinedForm.parse(name)
    except ValueError as exc:
        if isinstance(exc, UnknownForm):
            raise
        raise UnknownForm(f"unknown form {text!r}") from None
    return RecipeForm(name, pattern, kk)


def _scan_chunk(form, lo, hi):
    return [p for p in range(lo, hi + 1) if form.in_domain(p) and form.evaluate(p).holds]


def _split(lo, hi, parts):
    size = max(1, -(-(hi - lo + 1) // parts))
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def run_chunks(fn, form, lo, hi, jobs=1):
    """Apply ``fn(form, a, b)`` over sub-ranges of ``[lo, hi]``, results in range order."""
    if jobs <= 1:
        return [fn(form, lo, hi)]
    chunks = _split(lo, hi, jobs * 4)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, [form] * len(chunks), *zip(*chunks)))


def scan(form, lo: int, hi: int, *, pattern=None, k=None, jobs: int = 1):
    """All bases in ``[lo, hi]`` inside the form's domain where it holds, ascending."""
    if isinstance(form, str):
        form = get_form(form, pattern=pattern, k=k)
    elif pattern is not None and TuplePattern(tuple(getattr(pattern, "offsets", pattern))) != form.pattern:
        raise ValueError(f"form {form.id} has pattern {form.pattern}, not {pattern}")
    if hi < lo:
        raise BadRange(f"empty range {lo}..{hi}")
    out = []
    for part in run_chunks(_scan_chunk, form, lo, hi, jobs):
        out.extend(part)
    return out
