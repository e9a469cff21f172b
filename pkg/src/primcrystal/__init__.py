"""Exact computations with the level-1 perfect crystal of type A_{n-1}^(1).

Energy functions, generalised Primc / Capparelli / grounded partitions, and
character formulas as truncated multivariate series.
"""

from .capparelli import (CapparelliSpec, alternative_spec, canonical_spec, capparelli_ok,
                         enumerate_capparelli, gf_capparelli, validate_cond1, validate_cond2)
from .characters import (VerificationReport, char_from_gp, char_kp, char_positive, gp_ct,
                         gp_lattice, gp_theta, principal_spec, shifted_gp, verify_all)
from .crystal import (BoxVertex, DualCrystal, PairVertex, TensorCrystal, VectorCrystal,
                      box_crystal, box_data, cartan_matrix, pair_crystal, pair_graph)
from .energy import Colour, EnergyTable, colours, delta, energy_table, min_last_part, verify_theorem
from .errors import *  # noqa: F401,F403
from .partitions import (ColouredPart, GroundedPartition, enumerate_grounded, gf_grounded,
                         grounded, merge_phi, part, partition_to_path, path_to_partition,
                         primc_ok, split_phi)
from .series import (AlphaMonomial, Monomial, Series, const_term_x, euler_inverse, from_alpha,
                     poch_expand, q_poch, series_add, series_mul, subst, to_alpha)

__version__ = "0.1.0"
