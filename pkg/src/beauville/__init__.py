"""Finite-group tooling for building and checking mixed Beauville
structures: permutation groups with stabilizer chains, hyperbolic triple
bookkeeping, the dicyclic-twisted product construction, and a CLI."""

from .report import TOOL_VERSION as __version__

from .bsgs import GroupHandle, build_bsgs, conj_class, is_perfect
from .catalog import CatalogRow, RowResult, load_catalog, run_catalog, run_row
from .errors import BeauvilleError, ParseError
from .families import (
    FoundTriple,
    RealizedStructure,
    SecondTriples,
    StructureRecipe,
    ZsigmondyQuery,
    alt_mixable,
    alt_product_mixable,
    alt_second_triples,
    count_triples_of_type,
    psl2_class_count_qplus,
    psl2_mixable,
    search_triple,
    structure_constant,
    totient,
    verify_totient_bound,
    zsigmondy,
)
from .groupfile import load_group_file, resolve_group_spec, save_group_file
from .groups import (
    alternating_group,
    cyclic_group,
    dicyclic_permutation_group,
    dihedral_group,
    symmetric_group,
)
from .perm import Permutation, parse_cycles
from .product import (
    MixedQuadruple,
    MixedReport,
    build_mixed,
    generic_verify_mixed,
    verify_mixed,
)
from .psl2 import psl2_group
from .report import GroupIdentity, Report, ReportCondition
from .triples import (
    MixableStructure,
    TripleType,
    is_hyperbolic_triple,
    is_mixable,
    lift_coprime_triple,
    sigma_set,
    triple_type,
)
from .words import evaluate, parse_word

__all__ = [
    "BeauvilleError",
    "CatalogRow",
    "FoundTriple",
    "GroupHandle",
    "GroupIdentity",
    "MixableStructure",
    "MixedQuadruple",
    "MixedReport",
    "ParseError",
    "Permutation",
    "RealizedStructure",
    "Report",
    "ReportCondition",
    "RowResult",
    "SecondTriples",
    "StructureRecipe",
    "TripleType",
    "ZsigmondyQuery",
    "__version__",
    "alt_mixable",
    "alt_product_mixable",
    "alt_second_triples",
    "alternating_group",
    "build_bsgs",
    "build_mixed",
    "conj_class",
    "count_triples_of_type",
    "cyclic_group",
    "dicyclic_permutation_group",
    "dihedral_group",
    "evaluate",
    "generic_verify_mixed",
    "is_hyperbolic_triple",
    "is_mixable",
    "is_perfect",
    "lift_coprime_triple",
    "load_catalog",
    "load_group_file",
    "parse_cycles",
    "parse_word",
    "psl2_class_count_qplus",
    "psl2_group",
    "psl2_mixable",
    "resolve_group_spec",
    "run_catalog",
    "run_row",
    "save_group_file",
    "search_triple",
    "sigma_set",
    "structure_constant",
    "symmetric_group",
    "totient",
    "triple_type",
    "verify_mixed",
    "verify_totient_bound",
    "zsigmondy",
]
