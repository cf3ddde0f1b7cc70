"""qec: exact computer algebra for the quantum torus K<z^±1, s^±1>, s z = q z s,
and its category of modules finitely generated over K[z, z^-1].

Everything is exact rational arithmetic; theorems about division, duality,
cohomology, and ranks ship with executable certificates (see the suites
module and the CLI `qec verify`).
"""

from .aq import (
    AqElement,
    Degrees,
    degrees,
    epsilon,
    fourier,
    from_z_form,
    good_normal_coeffs,
    parse,
    sigma_conj,
    sigma_divide,
    to_str,
    to_z_form,
    unit_normalize,
    z_divide,
)
from .cohomology import (
    CohomologyReport,
    cohomology,
    dim_hom,
    euler_form,
    fixed_space,
    stabilized_h0,
)
from .duality import (
    GoodNormalForm,
    PairingTable,
    annihilation_sum,
    closed_form_value,
    composition_sums,
    double_dual_check,
    double_dual_twist,
    dual_certificate,
    first_mixed_good,
    good_dual,
    left_partition_sum,
    mixed_good_element,
    normalize_good,
    pi_product,
    right_partition_sum,
)
from .errors import (
    NonSplitSpectrum,
    ParseError,
    PreconditionViolation,
    QecError,
    SearchExhausted,
    UnknownSuite,
    ZeroInput,
)
from .ideals import (
    DEFAULT_BOUNDS,
    CyclicResult,
    IdealPresentation,
    SearchBounds,
    annihilator_in_good,
    annihilator_space,
    cyclic_search,
    line_subbundle_probe,
    membership_principal,
    minimal_annihilator_width,
)
from .laurent import (
    LaurentMatrix,
    LaurentPoly,
    det,
    det_and_inverse,
    divexact,
    laurent_from_str,
    laurent_to_str,
    qshift,
)
from .modules import (
    Good,
    LineBundle,
    MatrixModule,
    PicClass,
    SigmaMatrix,
    Torsion,
    Unknown,
    aq_act,
    dual,
    ev_pairing,
    extension_fixture,
    hom,
    jordan_structure,
    module_from_json,
    module_to_json,
    pic_class,
    pic_eq,
    pic_inv,
    pic_mul,
    pic_trivial,
    rank_A,
    rank_S,
    rigidity_check,
    sigma_apply,
    tensor,
    to_matrix,
    torsion_tensor_rank_check,
)
from .scalars import (
    QParam,
    Scalar,
    get_q,
    get_qparam,
    q_power_class,
    qpow,
    scalar_from_str,
    scalar_to_str,
    set_q,
    using_q,
)
from .suites import suite_names, verify_suite

__version__ = "0.1.0"

__all__ = [
    "AqElement",
    "CohomologyReport",
    "CyclicResult",
    "DEFAULT_BOUNDS",
    "Degrees",
    "Good",
    "GoodNormalForm",
    "IdealPresentation",
    "LaurentMatrix",
    "LaurentPoly",
    "LineBundle",
    "MatrixModule",
    "NonSplitSpectrum",
    "PairingTable",
    "ParseError",
    "PicClass",
    "PreconditionViolation",
    "QParam",
    "QecError",
    "Scalar",
    "SearchBounds",
    "SearchExhausted",
    "SigmaMatrix",
    "Torsion",
    "Unknown",
    "UnknownSuite",
    "ZeroInput",
    "annihilation_sum",
    "annihilator_in_good",
    "annihilator_space",
    "aq_act",
    "closed_form_value",
    "cohomology",
    "composition_sums",
    "cyclic_search",
    "degrees",
    "det",
    "det_and_inverse",
    "dim_hom",
    "divexact",
    "double_dual_check",
    "double_dual_twist",
    "dual",
    "dual_certificate",
    "epsilon",
    "euler_form",
    "ev_pairing",
    "extension_fixture",
    "first_mixed_good",
    "fixed_space",
    "fourier",
    "from_z_form",
    "get_q",
    "get_qparam",
    "good_dual",
    "good_normal_coeffs",
    "hom",
    "jordan_structure",
    "laurent_from_str",
    "laurent_to_str",
    "left_partition_sum",
    "line_subbundle_probe",
    "membership_principal",
    "minimal_annihilator_width",
    "mixed_good_element",
    "module_from_json",
    "module_to_json",
    "normalize_good",
    "parse",
    "pi_product",
    "pic_class",
    "pic_eq",
    "pic_inv",
    "pic_mul",
    "pic_trivial",
    "q_power_class",
    "qpow",
    "qshift",
    "rank_A",
    "rank_S",
    "right_partition_sum",
    "rigidity_check",
    "scalar_from_str",
    "scalar_to_str",
    "set_q",
    "sigma_apply",
    "sigma_conj",
    "sigma_divide",
    "stabilized_h0",
    "suite_names",
    "tensor",
    "to_matrix",
    "to_str",
    "to_z_form",
    "torsion_tensor_rank_check",
    "unit_normalize",
    "using_q",
    "verify_suite",
    "z_divide",
]
