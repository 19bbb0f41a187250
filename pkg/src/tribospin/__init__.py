"""Exact generalized Tribonacci sequences, split quaternions and hyperbolic spinors."""

from .errors import (
    MathError,
    NotFound,
    PreconditionViolated,
    RepeatedRoots,
    TribospinError,
    ZeroDenominator,
    ZeroDivisor,
)
from .families import FamilyDescriptor, family_lookup, registry
from .gtn import (
    BinetWeights,
    CharacteristicRoots,
    SequenceParams,
    binet_term,
    binet_weights,
    characteristic_roots,
    det_term_cereceda,
    det_term_hessenberg,
    sum_even,
    sum_first,
    sum_odd,
    sum_special_s1,
    term,
    term_by_matrix,
    terms,
)
from .quaternion import SplitQuaternion, gtn_quaternion, sq_conjugate, sq_mul, sq_norm
from .ring import ComplexHyperbolic, HyperbolicNumber, Polynomial, hyp_inverse, hyp_mul, poly_eval
from .spinor import (
    ConjugationKind,
    HSpinor,
    conjugate,
    egf_check,
    f_map,
    generating_function_check,
    pgf_check,
    spinor_binet,
    spinor_det_cereceda,
    spinor_det_hessenberg,
    spinor_norm,
    spinor_sums,
    spinor_term,
    spinor_term_by_matrix,
)
from .identities import verify_all, verify_conjugation_identities
from .poly_spinor import PolyHSpinor, PolySequenceParams, poly_spinor_term

__version__ = "0.1.0"
