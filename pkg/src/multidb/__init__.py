"""Counting, enumeration, uniform sampling and EBWT bijections for multi
de Bruijn sequences: words in which every k-mer over a q-letter alphabet
occurs exactly m times."""

from .counting import (
    count_cyclic,
    count_cyclic_order,
    count_eulerian_fixed_edge,
    count_linear,
    count_linearized,
    count_linearized_starting,
    count_linearized_starting_order,
    count_multicyclic,
    count_spanning_trees,
    count_W,
)
from .ebwt import bwt, ebwt, inverse_bwt, inverse_ebwt, is_nod, power_word, standard_permutation
from .enumeration import (
    SearchBudget,
    enumerate_cyclic,
    enumerate_linear,
    enumerate_linearized_starting,
    enumerate_multicyclic,
)
from .randomgen import make_rng, random_cyclic, random_linear, random_linearized, random_multicyclic
from .sequences import Params, canonical_cycle, is_member, parse_word, format_word

__version__ = "0.1.0"
