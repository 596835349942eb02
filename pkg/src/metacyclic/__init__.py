"""Verification, derivation, and exhaustive classification of finite
metacyclic group actions on closed orientable surfaces.

Public API re-exports: group parameters and arithmetic, cyclic and
metacyclic data sets with their validators, derivation of cyclic factors,
per-genus classification, and the application procedures (order bound,
dicyclic characterization, split lifts).
"""

from .groups import (GroupParameterError, GroupParams, MetacyclicGroup,
                     group_of, make_group)
from .cyclic import (CyclicDataSet, CyclicValidation, MalformedDataSetError,
                     free_data_set, validate_cyclic)
from .meta import (MetacyclicDataSet, ValidationReport, WitnessBundle,
                   validate_meta_literal, validate_meta_oracle,
                   verify_witness_bundle)
from .notation import (JSON_SCHEMA, ParseError, cyclic_from_json,
                       cyclic_to_json, format_cyclic, format_meta,
                       meta_from_json, meta_to_json, parse_any, parse_cyclic,
                       parse_meta)
from .derive import (DerivationError, DerivedFactors, derive_DF, derive_DG,
                     derive_DGbar, derive_factors, fixed_point_count)
from .classify import (ClassificationTable, ClassRow, EquivalenceWitness,
                       candidate_groups, classes_for_group, enumerate_meta,
                       equivalent, query_pair, signatures)
from .applications import (BoundReport, DicyclicReport, LiftResult,
                           bound_check, dicyclic_bound_data_set,
                           dicyclic_exists, factors_via_split, lift_to_split)
from .sweep import SweepReport, dual_validator_sweep

__version__ = "0.1.0"

__all__ = [
    "GroupParameterError", "GroupParams", "MetacyclicGroup", "group_of",
    "make_group",
    "CyclicDataSet", "CyclicValidation", "MalformedDataSetError",
    "free_data_set", "validate_cyclic",
    "MetacyclicDataSet", "ValidationReport", "WitnessBundle",
    "validate_meta_literal", "validate_meta_oracle", "verify_witness_bundle",
    "JSON_SCHEMA", "ParseError", "cyclic_from_json", "cyclic_to_json",
    "format_cyclic", "format_meta", "meta_from_json", "meta_to_json",
    "parse_any", "parse_cyclic", "parse_meta",
    "DerivationError", "DerivedFactors", "derive_DF", "derive_DG",
    "derive_DGbar", "derive_factors", "fixed_point_count",
    "ClassificationTable", "ClassRow", "EquivalenceWitness",
    "candidate_groups", "classes_for_group", "enumerate_meta", "equivalent",
    "query_pair", "signatures",
    "BoundReport", "DicyclicReport", "LiftResult", "bound_check",
    "dicyclic_bound_data_set", "dicyclic_exists", "factors_via_split",
    "lift_to_split",
    "SweepReport", "dual_validator_sweep",
    "__version__",
]
