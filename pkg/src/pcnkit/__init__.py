"""c-differential analysis of functions over finite fields."""

__version__ = "0.1.0"

from .errors import (
    ArgumentError,
    BudgetExceeded,
    ClosedFormMismatch,
    FieldDivisionByZero,
    FieldValidationError,
    ParseError,
    PcnkitError,
    PreconditionError,
    UnsupportedOperation,
)
from .field import Field, FieldElement, FieldSpec, get_field
from .functions import (
    AffineMap,
    DOQuadratic,
    Lut,
    Monomial,
    Univariate,
    compose,
    invert,
    is_permutation,
    scalar_mul,
    to_lut,
)
from .parse import parse_affine, parse_function
from .ddt import c_spectrum, c_uniformity, cddt, classical_class, ddt, ddt_via_autocorrelation
from .pcn import enumerate_pcn, is_pcn_ddt, is_pcn_naive, pcn_report, pcn_set_naive
from .shifts import bad_shifts, monomial_dichotomy_audit
from .spectral import autocorrelation, nonlinearity, walsh
from .trinomial import linearized_trinomial_roots

__all__ = [name for name in dir() if not name.startswith("_")]
