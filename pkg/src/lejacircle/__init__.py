"""Greedy (Leja) energy sequences on the unit circle and their energy asymptotics."""

from .asymptotics import (ExtremalEstimate, ThetaVector, enumerate_theta, extremal_search,
                          h_function, k_function, limsup_target, theta_of)
from .dyadic import (BinaryDecomposition, decompose, tau, tau_cumulative_fast,
                     tau_cumulative_naive)
from .energy import (EnergyStat, InfiniteEnergyError, equally_spaced_energy, fast_energy,
                     log_stat_rewrite, normalized_stat, pairwise_energy)
from .leja import (DyadicAngle, LejaSection, canonical_section, chord_distance,
                   empirical_distribution, greedy_oracle_extend, randomized_section)
from .specfun import (LimitTarget, equilibrium_energy, euler_gamma, gamma_fn, limit_constant,
                      zeta)

__version__ = "0.1.0"
