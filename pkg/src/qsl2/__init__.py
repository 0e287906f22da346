"""Exact symbolic workbench for quantum subgroups of SL2 at roots of unity."""

from .cyclo import CycRat, cyclotomic_polynomial, multiplicative_order
from .hopf import FiniteModel, check_axioms, grouplikes, named_algebra
from .presentations import (classical_sl2, o_minus1_sl2, oq_sl2, psl2_model,
                            quotient_ideal, sl2_algebra)
from .rewrite import (check_confluence, dimension, enumerate_basis,
                      normal_form, quotient_presentation)
from .subgroups import (GroupSpec, SubgroupDatum, construct_quotient,
                        datum_equiv, minus_one_classify)

__version__ = "0.1.0"

__all__ = [
    "CycRat", "cyclotomic_polynomial", "multiplicative_order",
    "FiniteModel", "check_axioms", "grouplikes", "named_algebra",
    "classical_sl2", "o_minus1_sl2", "oq_sl2", "psl2_model",
    "quotient_ideal", "sl2_algebra",
    "check_confluence", "dimension", "enumerate_basis", "normal_form",
    "quotient_presentation",
    "GroupSpec", "SubgroupDatum", "construct_quotient", "datum_equiv",
    "minus_one_classify",
]
