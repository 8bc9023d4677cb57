"""
Exact arithmetic for the bialgebra of stable Grothendieck polynomials:
structure constants by set-valued tableau counting, independent
polynomial oracles, and Grassmannian K-ring computations.
"""

from .shapes import (
    Partition,
    Perm,
    SkewShape,
    conjugate,
    grassmannian_permutation,
    is_321_avoiding,
    parse_partition,
    parse_perm,
    parse_skew,
    reduced_word,
    rotate180_in_rect,
    skew_to_permutation,
    star,
    straight,
    strip_classify,
)
from .tableaux import (
    Tableau,
    column_word,
    content_of,
    enumerate_tableaux,
    is_lattice,
    superstandard,
    validate,
)
from .insertion import (
    BumpOutcome,
    MarkedProduct,
    factorize,
    insert_set,
    insert_single,
    multiply_box,
    multiply_column,
    reverse_set,
    reverse_single,
    reverse_star,
    reverse_strip,
)
from .polynomial import TruncatedPolynomial
from .hecke import HeckeElement, demazure_word
from .gamma import (
    GammaElement,
    TensorElement,
    TruncatedGammaSeries,
    alpha_skew,
    alpha_skew_all,
    antipode,
    c_coeff,
    classical_lr,
    conjugate_element,
    coproduct,
    coproduct_expansion,
    d_coeff,
    multi_coeff,
    multiply,
    phi_p,
    pieri_coproduct,
    pieri_product,
    product_expansion,
    sslash_expansion,
    t_element,
    t_inverse_mult,
)
from .oracle import (
    alpha_w,
    divided_difference_grothendieck,
    double_grothendieck,
    expand_in_stable_basis,
    g_lambda_mu,
    grothendieck_basis_expand,
    hecke_grothendieck,
    plactic_equivalent,
    schur_G_transition,
    schur_polynomial,
    stable_limit,
    svt_polynomial,
)
from .grassmann import (
    GrassmannContext,
    KClass,
    dual_pairing,
    k_multiply,
    pushforward,
    reduce_to_grassmannian,
    schubert_class,
    triple_intersection,
)

__version__ = "0.1.0"
