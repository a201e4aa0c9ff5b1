"""Exact computations with modules over Smith algebras that are free over k[h]."""

from .exactpoly import Poly, poly_divexact, poly_from_roots, poly_shift, rational_roots
from .rankone import (RankOneModule, act, build, canonical_form, composition_series_all,
                      is_simple, k0_decompose, lattice_member, length, maximal_submodules,
                      minimal_elements, socle, submodule_lattice, twist)
from .rankn import (ExpModule, PolyMatrix, WeylElement, exp_matrices, exp_simple_sufficient,
                    identify_rank_one, khbasis_reduce, verify_central, verify_relations,
                    weyl_act)
from .rootorder import RootMultiset, chain_decompose, ell, phi, precedes, star
from .smith import (CentralCharacterData, SmithAlgebra, central_character, g_from_u,
                    simple_dim, u_from_g)

__version__ = "0.1.0"
