"""Exact computations for skew Howe duality between U_q(gl(p)) and U_q(gl(m|n)) over Q(q)."""

from .qarith import (LaurentPoly, RatFuncQ, render, parse_q, quantum_integer, quantum_factorial,
                     quantum_binomial, chuse, specialize_q1)
from .linalg import LinearMapQ
from .superrep import GLmnGenerator, wedge_basis, straighten, apply_generator, check_superalgebra_relations
from .hook import HookAlgebra, hook_algebra
from .ladder import (RungOp, LadderWord, LadderElement, word, eval_ladder, verify_ladder_relations,
                     commutant_check, commutant_dimension, predicted_commutant_dimension)
from .projector import build_projector, verify_idempotent_system, verify_gl_m1_completeness, gl11_two_term
from .braid import (BraidWord, parse_braid, braiding_element, braiding_matrix, check_braid_relations,
                    link_invariant, kauffman_jones)
from .klr import (ScalarChoice, KLRElement, PolyRepVector, klr_multiply, poly_rep_apply,
                  verify_klr_relations, cyclotomic_graded_dim, weight_multiplicity)
from .cli import parse_ladder, format_ladder, run

__version__ = "0.1.0"
