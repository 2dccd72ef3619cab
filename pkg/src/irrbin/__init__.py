"""irrbin: exact counting of irreducible binomials x^t - a over finite fields.

The closed-form count is cross-checked against an exhaustive polynomial
irreducibility oracle, and aggregate census sums over field sizes and
degrees are compared with asymptotic reference curves.
"""

from irrbin.arith import (
    Factorization,
    PrimePower,
    euler_phi,
    factorize,
    is_prime,
    is_squarefree,
    paper_log,
    pi_progression,
    prime_powers_up_to,
    radical,
    radical4,
    rho,
    sieve_primes,
    squarefree_harmonic,
)
from irrbin.ffield import CapExceeded, FiniteField, make_field, poly_is_irreducible
from irrbin.binomials import (
    BinomialCount,
    binomial_irreducible_by_criterion,
    count_bruteforce,
    count_by_criterion,
    count_formula,
)
from irrbin.census import (
    CensusRow,
    TheoremReport,
    double_sum_squarefree,
    run_report,
    sum_over_q,
    sum_over_t,
    thm1_bound,
    thm2_floor,
    thm4_main,
)

__version__ = "0.1.0"
