"""Verification lab for Berndt-type integrals.

The same quantities are computed along independent routes -- adaptive
quadrature, lattice zeta double sums, Lambert and Eisenstein series, Jacobi
elliptic closed forms, exact moment polynomials -- and cross-checked against
each other and against closed forms.  `berndt_lab.suites.run_suite` drives
the checks; the `berndt-lab` console script wraps them.
"""

from ._kernels import BACKEND
from .barnes import (
    SeriesValue,
    arctan_quarter_pi,
    barnes_zeta2,
    barnes_zeta_repeated,
    dirichlet_Lchi,
    lattice_laplace_sum,
)
from .barnes_poly import (
    appendix_equivalence,
    bernoulli_barnes,
    continuation_neg,
    euler_barnes,
    lemma_g1,
    lemma_g2,
)
from .elliptic import Modulus, jacobi, modulus_from_k, nc_logderiv, theta
from .errors import (
    AccuracyError,
    DomainError,
    InconsistencyError,
    PoleError,
    UnsupportedChiError,
)
from .exact import BivarPoly, GaussRational
from .lambert import (
    LatticeWindow,
    eisenstein_minus,
    eisenstein_plus,
    lambert_sum,
    moment_minus_lambert,
    moment_plus_lambert,
    weierstrass_bridge,
)
from .moments import (
    congruence_mod3,
    congruence_mod10,
    convolution_identity_check,
    cross_identity_check,
    moment_minus_exact,
    moment_minus_recur,
    moment_plus_exact,
    moment_plus_recur,
    p_poly,
    p_poly_alt,
    q_poly,
)
from .numeric import bernoulli_numbers, cpow_principal, euler_at_zero, gamma_real
from .probmodel import DiscreteLaw, build_law, cumulants, mgf
from .quadrature import (
    IntegralSpec,
    QuadResult,
    berndt_integral,
    conclusion_bridge_quad,
    genfun_quad,
    integrate_halfline,
    kuznetsov_moment_quad,
    symmetry_suite,
)
from .suites import SuiteReport, run_suite

__version__ = "0.1.0"
