"""F-purity, F-pure thresholds and test ideals over F_p."""

from ._core import (
    DomainError,
    Error,
    Ideal,
    ParseError,
    Polynomial,
    ResourceCapError,
    Ring,
    UnsupportedError,
    bracket_power,
    closure,
    colon,
    fedder,
    fpt,
    fpt_bounds,
    lemma_audit,
    nu,
    root_power,
    sharp_fedder,
    strong_fedder,
    test_ideal,
)

__all__ = [
    "DomainError",
    "Error",
    "Ideal",
    "ParseError",
    "Polynomial",
    "ResourceCapError",
    "Ring",
    "UnsupportedError",
    "bracket_power",
    "closure",
    "colon",
    "fedder",
    "fpt",
    "fpt_bounds",
    "lemma_audit",
    "nu",
    "root_power",
    "sharp_fedder",
    "strong_fedder",
    "test_ideal",
]
