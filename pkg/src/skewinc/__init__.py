"""Skew derivations of finite incidence algebras and twisted poset cohomology.

Everything is exact: rationals via ``fractions.Fraction`` or residues mod p.
"""

from .errors import *  # noqa: F401,F403
from .fields import QQ, GF, Field, FieldElement, PrimeField, Rationals, field_from_spec
from .poset import (Poset, PosetAutomorphism, automorphisms, chain, check_vanishing_condition,
                    count_multichains, identity_automorphism, multichains, poset_from_covers,
                    validate_automorphism)
from .incidence import (AutomorphismSpec, IncidenceElement, MultiplicativeElement, apply_phi,
                        apply_psi, apply_psi_inverse, are_equivalent, delta_identity, e, hadamard,
                        invert, is_fractional, make_spec, multiplicative_from_covers,
                        multiplicative_zeta, multiply, zeta)
from .derivations import (AdditiveElement, LinearEndomorphism, L_tau, additive_basis,
                          additive_derivation_space, decompose, derivation_space, inner_derivation,
                          inner_space, is_phi_derivation, is_potential, tau_from_epsilon,
                          transport_by_beta, validate_additive)
from .cohomology import (CohomologyResult, cochain_basis, cohomology, differential_matrix,
                         face_matrix, h1_cross_check, order_complex_h1)

__version__ = "0.1.0"
