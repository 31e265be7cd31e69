"""Exact-arithmetic reduction certificates for moduli stacks of vector
bundles on curves: Euler-form arithmetic, weight bookkeeping, the
window-equation solver, the recursive reduction tree, and an independent
certificate verifier."""

from .affine import DegreeAffineMap, IDENTITY_MAP, compose_det
from .diophantine import (
    LemmaSolution,
    reduction_measure,
    solve_lemma,
    solve_lemma_bruteforce,
)
from .errors import (
    BaseCaseReached,
    BaseMismatch,
    BunredError,
    CertificateInvalid,
    DomainError,
    HypothesisNotMet,
    InternalInvariantViolation,
    InvalidArgument,
    InvalidSplitting,
    InvalidType,
    NotCovered,
    ParseError,
    TheoremContradicted,
)
from .euler import bun_stack_dim, euler_form, ext_relative_dim, ext_stack_dim
from .generic_hom import (
    GenericHomReport,
    MorphismKind,
    SplittingScanReport,
    excess_identity,
    generic_hom,
    generic_morphism_kind,
    no_bad_splitting_scan,
)
from .grassmann import (
    GrassmannBundleDescriptor,
    HeckeRoute,
    check_gr_rational,
    check_map_precondition,
    gr_total_dim,
    hecke_det_shift,
    parabolic_dim,
)
from .reduction import (
    BaseStep,
    CheckResult,
    CompositeStep,
    ReductionTrace,
    StepNode,
    VerificationReport,
    node_affine_total,
    node_composite_det,
    node_depth,
    reduce,
    verify_trace,
)
from .serialize import SCHEMA_VERSION, dump, dumps, load, loads, trace_from_dict, trace_to_dict
from .types import (
    GenusContext,
    SheafType,
    SlopeOrder,
    ZERO_TYPE,
    add_types,
    hcf_of_type,
    scale_type,
    slope_cmp,
)
from .weights import (
    WeightedBundleDescriptor,
    fixed_bundle,
    minimal_rank_divisor,
    rank_divisibility_check,
    trivial_bundle,
    universal_fiber,
    weight_of_dual,
    weight_of_hom,
)

__version__ = "0.1.0"
