"""Exact Burnside-ring computations for small finite groups.

The package builds concrete groups from a small spec grammar, enumerates
their full subgroup lattices, and does all ring arithmetic over the exact
rationals. Its centerpiece is the mark-matching lift from the Burnside
ring of a cyclic group of the same order, together with mechanical checks
of when that lift commutes with induction, tensor induction, restriction,
inflation, deflation, and fixed points.
"""

from .burnside import (
    BurnsideElement,
    GSet,
    basis_element,
    coset_space,
    decompose_gset,
    deflate,
    deflate_gset,
    deflate_idempotent,
    deflation_coefficient,
    element_from_json,
    element_from_marks,
    element_to_json,
    fixed_points,
    format_element,
    format_rational,
    idempotent,
    identity_element,
    induce,
    inflate,
    is_integral,
    map_space_gset,
    marks_of,
    multiply,
    parse_rational,
    product_gset,
    restrict,
    table_of_marks,
    tensor_induce,
    transport_element,
    zero,
)
from .errors import (
    AlgebraError,
    CapExceededError,
    InvalidParameterError,
    PreconditionError,
    SpecParseError,
)
from .fw import (
    CommutativityReport,
    FwContext,
    OPERATIONS,
    check_commutes,
    check_def_necessary,
    check_integrality,
    check_m_equality,
    check_prime_kernel_sufficient,
    fw_apply,
    fw_context,
    fw_transitive_image,
    r_constant,
    t_constant,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    Embedding,
    Group,
    QuotientMap,
    Subgroup,
    construct_group,
    cyclic_group,
    cyclic_isomorphism,
    direct_product,
    parse_group_spec,
    quotient_group,
    subgroup_embedding,
)
from .lattice import (
    GCD_METHODS,
    SubgroupLattice,
    check_divisor_lemma,
    check_gcd_property,
    double_cosets,
    is_generalized_quaternion,
    m_constant,
    m_cyclic,
    subgroup_lattice,
    totient,
)
from .survey import SURVEY_COLUMNS, SurveyConfig, full_catalog, survey_rows, write_survey_csv

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BurnsideElement",
    "CapExceededError",
    "CommutativityReport",
    "DEFAULT_ORDER_CAP",
    "Embedding",
    "FwContext",
    "GCD_METHODS",
    "GSet",
    "Group",
    "InvalidParameterError",
    "OPERATIONS",
    "PreconditionError",
    "QuotientMap",
    "SURVEY_COLUMNS",
    "SpecParseError",
    "Subgroup",
    "SubgroupLattice",
    "SurveyConfig",
    "basis_element",
    "check_commutes",
    "check_def_necessary",
    "check_divisor_lemma",
    "check_gcd_property",
    "check_integrality",
    "check_m_equality",
    "check_prime_kernel_sufficient",
    "construct_group",
    "coset_space",
    "cyclic_group",
    "cyclic_isomorphism",
    "decompose_gset",
    "deflate",
    "deflate_gset",
    "deflate_idempotent",
    "deflation_coefficient",
    "direct_product",
    "double_cosets",
    "element_from_json",
    "element_from_marks",
    "element_to_json",
    "fixed_points",
    "format_element",
    "format_rational",
    "full_catalog",
    "fw_apply",
    "fw_context",
    "fw_transitive_image",
    "idempotent",
    "identity_element",
    "induce",
    "inflate",
    "is_generalized_quaternion",
    "is_integral",
    "m_constant",
    "m_cyclic",
    "map_space_gset",
    "marks_of",
    "multiply",
    "parse_group_spec",
    "parse_rational",
    "product_gset",
    "quotient_group",
    "r_constant",
    "restrict",
    "subgroup_embedding",
    "subgroup_lattice",
    "survey_rows",
    "t_constant",
    "table_of_marks",
    "tensor_induce",
    "totient",
    "transport_element",
    "write_survey_csv",
    "zero",
]
