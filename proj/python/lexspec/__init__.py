"""Spectra and characteristic polynomials of lexicographic graph products."""

from lexspec._core import (
    Graph,
    NumericalError,
    ParseError,
    SizeError,
    char_poly,
    corollary_check,
    factor_check,
    from_edge_list,
    from_graph6,
    generate,
    is_connected,
    is_regular,
    lex_char_poly,
    lex_product,
    lex_spectrum,
    lex_spectrum_regular,
    main_poly,
    oracle_spectrum,
    power_char_poly,
    power_main_poly,
    power_spectrum,
    spectrum,
    to_graph6,
    verify_power,
    verify_product,
)

__all__ = [
    "Graph",
    "NumericalError",
    "ParseError",
    "SizeError",
    "char_poly",
    "corollary_check",
    "factor_check",
    "from_edge_list",
    "from_graph6",
    "generate",
    "is_connected",
    "is_regular",
    "lex_char_poly",
    "lex_product",
    "lex_spectrum",
    "lex_spectrum_regular",
    "main_poly",
    "oracle_spectrum",
    "power_char_poly",
    "power_main_poly",
    "power_spectrum",
    "spectrum",
    "to_graph6",
    "verify_power",
    "verify_product",
]
