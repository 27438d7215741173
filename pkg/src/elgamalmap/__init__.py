"""Randomness diagnostics for the permutation x -> g**x over prime fields.

Library layout:

- numth: primes, factorization, totient, modular arithmetic, primitive roots
- elgamal: the exponentiation permutation and an ElGamal sign/verify pair
- permstat: cycle statistics and the exact random-permutation baseline
- sidon: the map's graph as a Sidon set; character and exponential sums
- discrepancy: box counting and the deviation bound 50 sqrt(p) ln(p)^2
- render: SVG cycle diagrams
- cli: the `elgamalmap` command-line harness
"""

from .discrepancy import Box, BoxRecord, DiscrepancyReport, count_in_box, sweep, theorem_bound
from .elgamal import Permutation, Signature, elgamal_permutation, sign, verify
from .numth import (
    FactoredInteger,
    GroupParams,
    all_generators,
    euler_phi,
    factorize,
    is_prime,
    mod_inverse,
    mod_pow,
    smallest_generator,
)
from .permstat import (
    CycleCountDistribution,
    CycleStructure,
    FamilyStatistics,
    count_cycles,
    count_k_cycles,
    cycle_decompose,
    expected_cycles,
    expected_k_cycles,
    family_statistics,
    fixed_point_sweep,
    random_permutation,
    stirling_cycle_distribution,
)
from .render import cycle_diagram_svg
from .sidon import (
    CharacterIndex,
    SidonCheck,
    SidonGraph,
    build_graph,
    character_sum,
    difference_set_size,
    incomplete_exponential_sum_profile,
    incomplete_exponential_sum_total,
    max_nontrivial_character_sum,
    point_set,
    polya_vinogradov_bound,
    sidon_character_bound,
    verify_sidon,
)

__version__ = "0.1.0"
