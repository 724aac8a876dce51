"""Exact certificate engine for discrete Pompeiu problems."""

from .exactfield import QQ, ComplexElem, Field, FieldElem, parse_complex, parse_real
from .geometry import Point, PointStore, RigidMotion, RotationMatrix, cayley_rotation, embed_planar_rotation, gamma
from .linsys import (
    EliminationState,
    ForcingCertificate,
    GenSystem,
    SparseRow,
    infeasible_core,
    prop1_force,
    vandermonde_det,
    verify_certificate,
)
from .polyring import IntPolynomial, has_rational_root, lemma2_relation, primitive_part, quot_power
from .search import Problem, SearchBudget, minimize_witness, rotation_pool, witness_search
from .combinat import CopySystem, color_search, steinhaus_1d_count, transversal_search

__version__ = "0.1.0"
