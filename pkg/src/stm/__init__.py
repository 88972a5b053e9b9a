"""Square-tiled surfaces: Veech groups, homology actions, isotypic
decomposition of the automorphism representation, and certified bounds on
the Zariski closure of the hidden monodromy.

All arithmetic is exact (integers and fractions.Fraction); results are
certificates, not floating-point estimates.
"""

from .affine import (AffineElement, affine_action, letter_chain_map,
                     monodromy_generators)
from .autgroup import AutGroup, aut_action, automorphisms, hom_rep
from .errors import (Disconnected, IrrationalEigenvalue,
                     DecompositionIncomplete, NonCommutingGenerators,
                     NonCycleInput, NotABijection, NotAnAutomorphism,
                     NotCertified, NotInSpan, NotIrreducible, NotUnipotent,
                     OrbitTooLarge, StmError, UnknownName,
                     UnsupportedAlgebraType, WordDoesNotStabilize)
from .homology import (HomologyBasis, Holonomy, SurfaceBasis, auto_basis,
                       build_homology, express_in_basis, holonomy,
                       intersection_form, paper_basis, straight_curve,
                       surface_basis, zero_holonomy_basis)
from .isotypic import (IsotypicComponent, IsotypicReport, Rep,
                       division_algebra_type, intertwiner_space,
                       isotypic_decomposition, myz_upper_bound,
                       simultaneous_eigenspaces, spin_invariant_subspace)
from .orbits import (GroupWord, OrbitGraph, act_word, apply_letter,
                     matrix_to_word, orbit, subgroup_equals, veech_generators,
                     word_matrix)
from .perms import (Origami, canonical_form, catalog, genus, make_origami,
                    origami_from_json, singularity_profile)
from .zariski import (LieSpan, Verdict, conjugation_span, find_unipotents,
                      is_unipotent, unipotent_exp, unipotent_log,
                      zariski_verdict)

__version__ = '0.1.0'

__all__ = [
    'AffineElement', 'AutGroup', 'GroupWord', 'Holonomy', 'HomologyBasis',
    'IsotypicComponent', 'IsotypicReport', 'LieSpan', 'OrbitGraph',
    'Origami', 'Rep', 'SurfaceBasis', 'Verdict',
    'act_word', 'affine_action', 'apply_letter', 'aut_action', 'auto_basis',
    'automorphisms', 'build_homology', 'canonical_form', 'catalog',
    'conjugation_span', 'division_algebra_type', 'express_in_basis',
    'find_unipotents', 'genus', 'hom_rep', 'holonomy', 'intersection_form',
    'intertwiner_space', 'is_unipotent', 'isotypic_decomposition',
    'letter_chain_map', 'make_origami', 'matrix_to_word',
    'monodromy_generators', 'myz_upper_bound', 'orbit', 'origami_from_json',
    'paper_basis', 'simultaneous_eigenspaces', 'singularity_profile',
    'spin_invariant_subspace', 'straight_curve', 'subgroup_equals',
    'surface_basis', 'unipotent_exp', 'unipotent_log', 'veech_generators',
    'word_matrix', 'zariski_verdict', 'zero_holonomy_basis',
    'StmError', 'NotABijection', 'Disconnected', 'UnknownName',
    'OrbitTooLarge', 'WordDoesNotStabilize', 'NonCycleInput', 'NotInSpan',
    'NotAnAutomorphism', 'NonCommutingGenerators', 'IrrationalEigenvalue',
    'NotIrreducible', 'DecompositionIncomplete', 'UnsupportedAlgebraType',
    'NotUnipotent', 'NotCertified',
]
