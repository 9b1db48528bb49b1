"""
Combining conditions into one congruence
========================================

Conditions c_i == 0 (mod r_i) with pairwise coprime moduli fuse into a
single test: X = sum a_i c_i (R / r_i) must vanish mod R = prod r_i.
"""

from simulprime import (
    CombinedForm,
    GroupCondition,
    combine,
    combine_as_group,
    form_T,
    form_U,
    form_V,
    form_W,
    wilson,
)

###############################################################################
# Wilson's condition for 5 and for 7, fused with weights 1 and 3.
groups = [GroupCondition((5,), 1, wilson(5)), GroupCondition((7,), 3, wilson(7))]
verdict = combine(groups)
print(verdict.holds, verdict.X)

###############################################################################
# The divisor and integer-sum presentations give the same verdict.
for form in (CombinedForm.divisor(7), CombinedForm.divisor(35), CombinedForm.integer_sum()):
    v = combine(groups, form)
    print(form, v.holds, "shown mod", v.modulus_shown)

###############################################################################
# A fused condition can be fed back in as one group.
pair = combine_as_group(groups)
print(combine([pair, GroupCondition((11,), 1, wilson(11))]).holds)
print(combine([pair, GroupCondition((121,), 1, wilson(121))]).holds)

###############################################################################
# The Simionov presets T, U, V, W over (3, 5, 7) with mixed k.
ps, ks = [3, 5, 7], [1, 2, 4]
print(form_T(ps, ks).holds, form_U(ps, ks, 2).holds, form_V(ps, ks, 3).holds, form_W(ps, ks).holds)
print(form_T([3, 5, 9], [1, 1, 1]).holds)
