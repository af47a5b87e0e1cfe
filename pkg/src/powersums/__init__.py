"""Exact-arithmetic toolkit for the power-sum equation (x+1)^k + ... + (lx)^k = y^n.

Modules:

* ``polyring``   exact rational polynomial arithmetic, squarefree
  decomposition, modular reduction
* ``bernoulli``  Bernoulli numbers/polynomials, von Staudt-Clausen denominators
* ``powersum``   the power-sum polynomial and its summation oracle
* ``structure``  zero-multiplicity structure and the superelliptic
  finiteness classifier
* ``pell``       Pell machinery and the k in {1, 3} solution families
* ``search``     bounded exhaustive search and the case-analysis report
* ``cli``        the ``powersums`` command-line tool
"""

from .bernoulli import (
    BernoulliTable,
    bernoulli_number,
    bernoulli_polynomial,
    staudt_clausen_denominator,
    translation_identity_holds,
)
from .pell import (
    FamilyRecord,
    PellProblem,
    PellSolution,
    apply_unit,
    family_k1,
    family_k3,
    fundamental_solution,
    k3_reduction_constants,
    solve_generalized,
    sqrt_cf,
)
from .polyring import (
    ModPoly,
    NEG_INFINITY,
    Poly,
    SquarefreeDecomposition,
    clear_denominators,
    poly_gcd,
    primitive_part,
    reduce_mod,
    squarefree_decompose,
)
from .powersum import (
    PowerSumInstance,
    bernoulli_diff,
    has_two_distinct_zeros,
    power_sum_direct,
    power_sum_poly,
)
from .search import (
    SearchConfig,
    SolutionRecord,
    VerificationError,
    integer_nth_root,
    pipeline_report,
    search_solutions,
)
from .structure import (
    ExceptionalShape,
    MultiplicityProfile,
    StructureReport,
    SuperellipticAssessment,
    assess_superelliptic,
    bound_applies,
    clearing_scale,
    count_coprime_multiplicity_zeros,
    count_odd_multiplicity_zeros,
    multiplicity_profile,
    scaled_diff_mod,
    structure_report,
)

__version__ = "0.1.0"
