"""Cup products, pairings and the Legendre derivative of Frobenius for
genus-1 curves over finite fields F_q with q = 1 mod ell."""

from .cohomology import (H1Class, H2Class, cup_product, cup_with_constant,
                         eval_hom, h1_constant, h1_new, normalized_cup_span,
                         triple_product)
from .curve import (BudgetError, CurveError, EllipticCurve, GroupStructure,
                    Point, curve_new)
from .field import (ExtensionCapError, FieldContext, FieldElement, FieldError,
                    MuRoot, canonical_mu_generator, chi, embed, make_context,
                    mu_dlog, unembed)
from .frobenius import (FrobeniusData, PicHom, artin_same_class, artin_vector,
                        frobenius_data, legendre_derivative, legendre_matrix,
                        pic_hom_basis, restrict_hom)
from .genus2 import (AdmissibilityReport, CounterexampleReport,
                     admissible_prime, scan, verify_counterexample)
from .pairing import PairingError, miller_eval, tate_pairing, weil_pairing

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport", "BudgetError", "CounterexampleReport", "CurveError",
    "EllipticCurve", "ExtensionCapError", "FieldContext", "FieldElement",
    "FieldError", "FrobeniusData", "GroupStructure", "H1Class", "H2Class",
    "MuRoot", "PairingError", "PicHom", "Point", "admissible_prime",
    "artin_same_class", "artin_vector", "canonical_mu_generator", "chi",
    "cup_product", "cup_with_constant", "curve_new", "embed", "eval_hom",
    "frobenius_data", "h1_constant", "h1_new", "legendre_derivative",
    "legendre_matrix", "make_context", "miller_eval", "mu_dlog",
    "normalized_cup_span", "pic_hom_basis", "restrict_hom", "scan",
    "tate_pairing", "triple_product", "unembed", "verify_counterexample",
    "weil_pairing",
]
