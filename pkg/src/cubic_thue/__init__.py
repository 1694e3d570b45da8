"""Exact tools for cubic Thue equations over cyclic cubic fields."""

__version__ = "0.1.0"

from .forms import (
    BinaryCubicForm,
    BinaryQuadraticForm,
    UnimodularMatrix,
    act,
    discriminant,
    evaluate,
    find_order3_automorphism,
    hessian,
    hessian_cyclic_test,
    is_irreducible,
    is_perfect_square,
)
from .families import (
    FamilyId,
    FamilyInstance,
    balady_form,
    kishi_form,
    simplest_disc_identity,
    simplest_form,
    togbe_washington_form,
)
from .field2adic import (
    MonicCubicModel,
    SplittingType2,
    factor_mod2,
    is_common_index_divisor_2,
    monic_model,
    norm_linear,
    splitting_type_2,
    v2,
)
from .certifier import (
    Certificate,
    HypothesisReport,
    Verdict,
    certify_homogeneous,
    certify_mordell,
    certify_thue,
    check_hypotheses,
)
from .oracle import (
    SolutionSet,
    orbit_check,
    represented_values,
    solve_box,
    verify_valuation_invariant,
)
