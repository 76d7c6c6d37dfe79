"""Java coding-style metrics: Checkstyle-compatible checks, CSS similarity,
residual-attribute datasets and a toy multi-user style adapter."""

from .attributes import AttributeCatalog, StyleAttribute
from .checks import CheckReport, Violation, extract_attributes, run_all, run_check
from .css import UnparseableSource, css, js_divergence, kl_divergence, normalize, style_vector
from .lexer import LexError, Token, tokenize

__version__ = "0.1.0"

__all__ = [
    "AttributeCatalog", "CheckReport", "LexError", "StyleAttribute", "Token", "UnparseableSource",
    "Violation", "css", "extract_attributes", "js_divergence", "kl_divergence", "normalize",
    "run_all", "run_check", "style_vector", "tokenize",
]
