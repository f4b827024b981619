"""Exact-arithmetic intersection theory on the moduli of abelian varieties.

Computes in the tautological ring (square-free lambda-monomial basis),
projects Noether-Lefschetz and product cycles into it, packages the
elliptic-homomorphism cycles into Eisenstein q-expansions, evaluates the
closed-form degrees of the level-structure covers with brute-force
enumeration oracles, and runs the sigma-weighted Gromov-Witten predictor.
All arithmetic is exact rational; there is no floating point anywhere.
"""

from .arith import (
    Factorization,
    Rational,
    abs_bernoulli,
    bernoulli,
    dirichlet_convolve,
    divisors,
    factorize,
    is_prime,
    jacobi_totient,
    mobius,
    sigma,
)
from .degrees import (
    DegreeResult,
    ScaledMatrixShape,
    deg_phi,
    deg_phi_crt,
    deg_phi_special,
    deg_phi_stratified,
    deg_pi,
    isotropic_tuple_count,
    nl_composition,
    oracle_index,
    sl2_order_enumerated,
    sp4_f2_order_enumerated,
    sp_order,
    sp_order_prime,
)
from .gw import GWPrediction, conjecture_prediction, gw_tau1_lambda, triple_hodge_integral
from .nl import (
    NLExpression,
    PolarizationType,
    QSeries,
    eisenstein_series,
    nl_constant,
    parse_expression,
    plain_to_tilde,
    taut_nl,
    taut_nl_d_special,
    taut_nl_pair_special,
    taut_nl_tilde,
    taut_product_cycle,
    taut_projection,
    tilde_to_plain,
)
from .ring import (
    LambdaPolynomial,
    PairingMatrix,
    TautClass,
    graded_dimension,
    multiply,
    oracle_reduce,
    pairing_matrix,
    reduce,
    relation,
    socle_pair,
    top_degree,
    total_chern,
    total_chern_dual,
)
from .verify import VerificationFailure, run_suites

__version__ = "0.1.0"
