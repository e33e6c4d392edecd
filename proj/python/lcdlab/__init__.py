"""Binary LCD codes: families, bounds, classification and search."""

from ._lcdlab import (
    Code,
    bounds,
    census,
    classify,
    closed_form_bound,
    decode_octal,
    family_code,
    family_report,
    gram_det,
    griesmer_dmax,
    reproduce,
    search_lcd,
    symbolic_weight_enumerator,
)

__all__ = [
    "Code",
    "bounds",
    "census",
    "classify",
    "closed_form_bound",
    "decode_octal",
    "family_code",
    "family_report",
    "gram_det",
    "griesmer_dmax",
    "reproduce",
    "search_lcd",
    "symbolic_weight_enumerator",
]
