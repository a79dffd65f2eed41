"""Exact computations on numerical semigroups and faces of the Kunz polyhedron."""

from .common import (
    INF,
    DimensionError,
    KunzError,
    NotAFace,
    NotAnElement,
    NotInPolyhedron,
    NotNumerical,
    NotOnFace,
    NotSemigroupFace,
    Trade,
)
from .exactmath import IntMatrix, kernel_basis, rank, rowspan_contains
from .facetools import Face, FacePosition, Verdict, face_of_semigroup, find_semigroup_on_face, on_face
from .kunzposet import KunzPoset, embedding_dimension, evaluate, nil_add, poset_type
from .presentation import (
    OuterBetti,
    ParametricPresentation,
    ParametricTrade,
    betti_matrix,
    dimension,
    enumerate_cardinalities,
    evaluate_parametric,
    m_centric_presentation,
    min_pres_poset,
    outer_betti,
    parametric_presentation,
    presentation_cardinality,
)
from .semigroup import (
    AperyTuple,
    KunzTuple,
    NumericalSemigroup,
    apery,
    apery_of_kunz,
    contains,
    factorizations,
    kunz_tuple,
    normalize,
    semigroup_of_kunz,
)

__version__ = "0.1.0"
