"""Exact-arithmetic toolkit for derivation-cocycle embeddings of SL_m(k) into
SL_{n+1}(k[t, t^-1]), degree-valuation boundedness, and bounded generation
of SL2 over number fields."""

__version__ = "0.1.0"

from .adjoint_cocycle import (
    EmbeddingSpec,
    LieBasis,
    SemidirectElement,
    adjoint_matrix,
    derivation_cocycle,
    embed_element,
    right_cocycle,
    semidirect_multiply,
    torus_probe,
)
from .boundedness import (
    DegreeProfile,
    GrowthReport,
    UnboundednessWitness,
    certify_unbounded_embedding,
    cyclic_boundedness,
    degree_profile,
    growth_explore,
)
from .matrices import (
    ElementaryWord,
    Matrix,
    bruhat_decompose_sl2,
    m_matrix,
    matrix_arithmetic,
    s_matrix,
    sl2_generators,
    torus,
    u_minus,
    u_plus,
)
from .number_fields import (
    DecompositionCertificate,
    NFElement,
    NumberField,
    decompose_3N0,
    double_embedding_orbit,
    even_power_coordinates,
    is_primitive,
    primitive_power_search,
    vandermonde_span_solve,
)
from .parsing import parse_matrix, parse_scalar_expression
from .rings import (
    K,
    KT,
    QQ,
    Derivation,
    LaurentPolynomial,
    MultiPolynomial,
    RationalFunction,
    field_arithmetic,
    laurent_degrees,
    laurent_t,
    partial_derivative,
    support_variables,
    t,
)
