"""Heegaard Floer d-invariants of branched covers and primary-splitting obstructions."""
from .alexpoly import (
    IntLaurentPoly,
    cyclotomic,
    cyclotomic_split,
    homology_order,
    pretzel_alexander,
    torus2_alexander,
)
from .dinv import DTable, IntegralityError, SpincLabel, d_surgery, d_table, delta, label_of_group_element, lens_term, psi
from .obstruct import Metabolizer, SplitGrid, linking_form, metabolizer_obstruction, split_obstruction
from .staircase import (
    BifiltGen,
    Staircase,
    StaircaseError,
    consecutive_torus_staircase,
    load_staircase,
    pareto_min,
    tensor,
    torus_14_15,
    unit_staircase,
    whitehead_sum_22,
)

__version__ = "0.1.0"
