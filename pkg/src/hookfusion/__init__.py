"""Exact hook fusion procedure for the hyperoctahedral group Z2 wr S_n."""
from .algebra import AlgebraElement
from .bitableaux import BiPartition, BiTableau, hook_bitableau, standard_bitableaux
from .fusion import diagonal_matrix_element, hook_fusion, primitive_idempotent
from .wreath import GroupElement

__all__ = [
    "AlgebraElement",
    "BiPartition",
    "BiTableau",
    "GroupElement",
    "diagonal_matrix_element",
    "hook_bitableau",
    "hook_fusion",
    "primitive_idempotent",
    "standard_bitableaux",
]
