"""Wada's invariant, genus and splitting-rank bounds, and HNN splittings of presented groups."""

from .errors import (AlphabetError, BudgetExceeded, ColumnError, InvariantViolation, KnotsplitError,
                     ParseError, PresentationError, ZeroInvariantError)
from .freegroup import (FreeGroup, SubgroupGraph, Word, contains, cyclic_reduce, free_hom_injective,
                        index, is_basis, rank, stallings_fold)
from .laurent import GF, QQ, ExactField, LaurentPoly, PolyMatrix, RationalFunction, determinant, equal_up_to_unit, gcd
from .presentation import (AbelianizationResult, Epimorphism, Presentation, abelianize, abelianized_image,
                           eliminate_generator, epimorphism_to_Z, introduce_generator, is_primitive_vector,
                           smith_normal_form)
from .foxcalc import GroupRingElement, fox_derivative, fox_jacobian
from .reps import Representation, evaluate_fox_matrix, search_homs, tensor_eval, trivial_rep, verify
from .wada import (WadaResult, genus_lower_bound, splitting_rank_lower_bound, verify_column_independence,
                   wada_invariant)
from .hnn import (SplittingData, amalgam_presentation, degree_bound_check, hnn_presentation, induced_splitting,
                  shift_levels, verify_fox_block_structure)
from .knotio import KnotFixture, PDCode, builtin, wirtinger_from_pd
from .dsl import format_presentation, parse_presentation, parse_word

__version__ = "0.1.0"
