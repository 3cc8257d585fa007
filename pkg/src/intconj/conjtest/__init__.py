"""Decision procedures for conjugacy of integral matrices."""

from .certificate import (
    CONJUGATE,
    INCONCLUSIVE,
    NOT_CONJUGATE,
    ConjCertificate,
    ObstructionTranscript,
    check_conjugator,
    verify_certificate,
)
from .exttest import test_ext
from .padic import MethodDisagreement, artin_rees_exponent, test_local, test_zp
from .split import norm_polynomial, split_obstruction, unit_parameters
from .ztest import test_z

__all__ = [
    "CONJUGATE",
    "INCONCLUSIVE",
    "NOT_CONJUGATE",
    "ConjCertificate",
    "MethodDisagreement",
    "ObstructionTranscript",
    "artin_rees_exponent",
    "check_conjugator",
    "norm_polynomial",
    "split_obstruction",
    "test_ext",
    "test_local",
    "test_z",
    "test_zp",
    "unit_parameters",
    "verify_certificate",
]
