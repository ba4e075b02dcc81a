"""Search and certification of superspecial curves of genus 4, 5 and 6.

Thin wrapper over the C++ core. Field elements are (c0, c1) coordinate
pairs with respect to the basis {1, zeta} of F_{p^2}.
"""

from ._core import (
    CertError,
    FieldContext,
    appendix_verify_all,
    deuring_polynomial,
    g_polynomial,
    h_polynomial,
    search,
    tables,
    verify,
)

__all__ = [
    "CertError",
    "FieldContext",
    "appendix_verify_all",
    "deuring_polynomial",
    "g_polynomial",
    "h_polynomial",
    "search",
    "tables",
    "verify",
]
