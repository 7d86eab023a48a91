"""Exact real algebraic numbers: Sturm-Habicht sequences, root isolation,
sign determination and bivariate system solving over the integers."""

from .bivar import (
    BivariatePolynomial,
    BivarStHaSequence,
    SystemSolution,
    bivar_resultant,
    bivar_sign_at,
    bivar_stha_sequence,
    generic_position_check,
    is_square_free_bivariate,
    naive_solve,
    rur_solve,
    rur_solve_with_shears,
    satisfy_bivariate,
)
from .errors import (
    BaseMismatchError,
    CommonComponentError,
    DivisionByZero,
    DomainError,
    EndpointRootError,
    GenericPositionError,
    ParseError,
    PreconditionError,
    RealRootsError,
    StructureError,
)
from .polycore import (
    NEG_INFINITY,
    POS_INFINITY,
    ExtendedPoint,
    IntPolynomial,
    RatPolynomial,
    bitsize,
    cauchy_root_bound,
    content_and_primitive,
    davenport_mahler_lower_bound,
    derivative,
    eval_at_rational,
    mahler_measure_upper_bound,
    separation_lower_bound,
)
from .realalg import (
    AlgebraicNumber,
    ExtFieldElement,
    IsolatedRoot,
    IsolationStats,
    Order,
    compare,
    extfield_add,
    extfield_element,
    extfield_inverse,
    extfield_mul,
    extfield_sign,
    isolate_real_roots,
    refine,
    satisfy_univariate,
    separating_rationals,
    sign_at,
)
from .stha import (
    QuotientBoot,
    SquareFreeDecomposition,
    SturmHabichtSequence,
    count_real_roots,
    eval_stha_at,
    gcd,
    modified_sign_variations,
    resultant,
    square_free_factorization,
    square_free_part,
    stha_quotient_boot,
    stha_sequence,
    tarski_query,
)
