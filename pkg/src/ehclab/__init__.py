"""Exact verification of e-Harish-Chandra series, blocks and chain identities for small GL_n / SL_n."""

__version__ = "0.1.0"

from .exact import CyclotomicNumber, UniPoly, cyclotomic_polynomial, ell_valuation, factor_into_cyclotomics
from .rootdatum import build_group, classify_prime, hypothesis_3_3_check, multiplicative_order_e
from .levi import enumerate_chains, enumerate_e_split_levis, gl_closed_form_levis, rederive
from .groups import materialise
from .chartable import character_table
from .blocks import block_data, brauer_induced_block
from .gencharacters import generic_table, match_tables
from .instance import rank_one_instance
from .unipotent import e_core, e_quotient, series_count_identity, unipotent_block_partition, unipotent_degree, unipotent_defect
from .verify import RunConfig, run

__all__ = [
    "CyclotomicNumber", "UniPoly", "cyclotomic_polynomial", "ell_valuation", "factor_into_cyclotomics",
    "build_group", "classify_prime", "hypothesis_3_3_check", "multiplicative_order_e",
    "enumerate_chains", "enumerate_e_split_levis", "gl_closed_form_levis", "rederive",
    "materialise", "character_table", "block_data", "brauer_induced_block",
    "generic_table", "match_tables", "rank_one_instance",
    "e_core", "e_quotient", "series_count_identity", "unipotent_block_partition",
    "unipotent_degree", "unipotent_defect", "RunConfig", "run",
]
