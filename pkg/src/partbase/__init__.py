"""Base sizes of Sym(ab) and Alt(ab) acting on (a,b)-regular partitions.

Closed-form answers live in :mod:`partbase.formulas`, explicit witnesses in
:mod:`partbase.constructions` and :mod:`partbase.dispatch`, and exact base
tests in :mod:`partbase.verifier`.
"""

from .core import (ALT, SYM, CodeSet, ColumnPerm, DomainError, Params, RegularPartition,
                   ShapeError, RegularityError, WitnessCertificate, codeset_to_partitions,
                   partitions_to_codeset)
from .formulas import base_size_alt, base_size_sym
from .verifier import is_alt_base, is_base, is_sym_base
from .dispatch import dispatch_alt_witness, dispatch_sym_witness

__all__ = [
    "ALT", "SYM", "CodeSet", "ColumnPerm", "DomainError", "Params", "RegularPartition",
    "RegularityError", "ShapeError", "WitnessCertificate", "base_size_alt", "base_size_sym",
    "codeset_to_partitions", "dispatch_alt_witness", "dispatch_sym_witness", "is_alt_base",
    "is_base", "is_sym_base", "partitions_to_codeset",
]
