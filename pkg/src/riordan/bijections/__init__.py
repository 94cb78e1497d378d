"""Constructive correspondences between paths, trees and permutations."""

from .dyck import dyck_pair_decode, dyck_pair_encode, insert_wavy, remove_wavy
from .psi import (
    ABCLabelled, NumLabelled, PsiDomainElement, StarredPath, UnlabelledCopy,
    psi, psi_codomain, psi_domain, psi_inverse,
)
from .strip import phi, phi_inverse, strip_decompose, strip_insert

__all__ = [
    "dyck_pair_encode", "dyck_pair_decode", "remove_wavy", "insert_wavy",
    "strip_decompose", "strip_insert", "phi", "phi_inverse",
    "UnlabelledCopy", "ABCLabelled", "NumLabelled", "PsiDomainElement",
    "StarredPath", "psi", "psi_inverse", "psi_domain", "psi_codomain",
]
