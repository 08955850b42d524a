"""Exact-arithmetic toolkit for the PBW deformations of S(V) x| G, where G is
the order-p cyclic transvection group acting on F_p^2."""

from .action import Quad2GroupElement, Vector, VGroupElement, act, act_ga, sym_mul, v1, v2
from .chains import (
    BarGroupChain,
    PeriodicChain,
    TwistedCochain2,
    bar_differential,
    iota_chain,
    iota_group,
    periodic_differential,
    pi_group,
    rep_to_params,
    transfer_cochain,
    verify_chain_maps,
)
from .group_algebra import (
    Factorization,
    GroupAlgebraElement,
    NotAUnit,
    TooLarge,
    check_prime,
    gminus1,
    gminus1_power,
)
from .params import (
    CoboundaryData,
    DeformationParams,
    add_coboundary,
    build_candidate,
    closed_form,
    implied_a,
    mu,
    params_to_ab,
)
from .pbw import ConditionReport, check_all
from .rewriting import (
    NCPolynomial,
    NormalWord,
    RuleSet,
    check_associativity,
    check_dimension,
    oracle_multiply,
    reduce,
    rules_from_params,
)
from .solver import (
    CensusRow,
    SolutionRecord,
    a_from_c,
    c_from_ab,
    census,
    enumerate_solutions,
    kernel_basis,
    kernel_bruteforce,
    phi_b,
    system_residual,
)

__version__ = "0.1.0"
