"""Number fields, lattices in them, and principality tests."""

from .algebra import QQ, NFElem, NumberField, RelativeAlgebra, is_irreducible_over_q
from .extension import (
    DEFAULT_BOUND_FACTOR,
    ExtLattice,
    NotIrreducible,
    extend_order,
    extend_scalars,
    is_irreducible_over,
    is_principal_extended,
    root_in,
    t2_gram,
)
from .module import Order, RankError, ZModule, colon, module_norm, multiplicator_ring
from .quadratic import (
    are_equivalent,
    class_number,
    class_reps_quadratic,
    is_principal_quadratic,
    overorders,
    quadratic_integral_basis,
)
from .verdicts import Found, NotFoundWithinBound, NotPrincipal, PrincipalityVerdict

__all__ = [
    "DEFAULT_BOUND_FACTOR",
    "ExtLattice",
    "Found",
    "NFElem",
    "NotFoundWithinBound",
    "NotIrreducible",
    "NotPrincipal",
    "NumberField",
    "Order",
    "PrincipalityVerdict",
    "QQ",
    "RankError",
    "RelativeAlgebra",
    "ZModule",
    "are_equivalent",
    "class_number",
    "class_reps_quadratic",
    "colon",
    "extend_order",
    "extend_scalars",
    "is_irreducible_over",
    "is_irreducible_over_q",
    "is_principal_extended",
    "is_principal_quadratic",
    "module_norm",
    "multiplicator_ring",
    "overorders",
    "quadratic_integral_basis",
    "root_in",
    "t2_gram",
]
