"""Congruence characterizations of several numbers being prime simultaneously.

Single-number criteria (Wilson, Leibniz, Simionov, ...) are fused into one
congruence by :mod:`simulprime.combinator`; :mod:`simulprime.constellations`
holds named twin, pair, triple and quadruplet forms, and
:mod:`simulprime.oracle` checks all of them against plain primality.
"""
from .numkernel import (
    CapExceeded,
    Residue,
    ZeroModulus,
    exact_div,
    factorial_exact,
    factorial_mod,
    floor_div,
    gcd,
    mod_reduce,
    pairwise_coprime,
)
from .criteria import (
    CongruenceCondition,
    DomainError,
    balanced_k,
    get_criterion,
    leibniz,
    offset_wilson,
    simionov,
    smarandache_factorial,
    wilson,
)
from .combinator import (
    CombinedForm,
    CombinedVerdict,
    GroupCondition,
    Reason,
    check_preconditions,
    combine,
    combine_as_group,
    form_T,
    form_U,
    form_V,
    form_W,
    integer_sum_witness,
)
from .constellations import (
    TuplePattern,
    Verdict,
    clement,
    get_form,
    pair_cucurezeanu,
    pair_smarandache,
    quadruplet,
    scan,
    triple_patrizio,
    triple_smarandache,
    twin_a,
    twin_b,
    twin_sum,
)
from .oracle import VerificationReport, is_prime, tuple_is_prime, verify_equivalence

__version__ = "0.1.0"
