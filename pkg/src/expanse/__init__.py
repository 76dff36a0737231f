"""Weighted rational expressions, their expansions and derived-term automata."""

from .automaton import DEFAULT_STATE_CAP, Automaton, build, build_lazy
from .errors import (DivisionByZero, EmptyInput, ExpanseError, MalformedWeight, MixedDomains,
                     NotDivisible, NotProper, NotStarrable, ParseError, StateCapExceeded,
                     UnknownLetter)
from .expand import (clear_caches, constant_term, derive, derive_polynomial, derive_word,
                     expand, is_valid, polynomial_constant, validate)
from .expansion import Expansion
from .oracle import assert_equiv, automaton_via_derivation, word_weight
from .polynomial import Polynomial
from .semiring import B, Q, Z, get_domain
from .syntax import Context, Expr, Kind, compare, has_kind, parse, size, subterms, to_text, width

__version__ = "0.1.0"

__all__ = [
    "Automaton", "B", "Context", "DEFAULT_STATE_CAP", "DivisionByZero", "EmptyInput",
    "ExpanseError", "Expansion", "Expr", "Kind", "MalformedWeight", "MixedDomains",
    "NotDivisible", "NotProper", "NotStarrable", "ParseError", "Polynomial", "Q",
    "StateCapExceeded", "UnknownLetter", "Z", "assert_equiv", "automaton_via_derivation",
    "build", "build_lazy", "clear_caches", "compare", "constant_term", "derive",
    "derive_polynomial", "derive_word", "expand", "get_domain", "has_kind", "is_valid",
    "parse", "polynomial_constant", "size", "subterms", "to_text", "validate", "width",
    "word_weight",
]
