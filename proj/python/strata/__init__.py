"""Strategic first-order term rewriting."""

from ._strata import (
    ComposeError,
    FuelExhausted,
    InvalidPosition,
    ParseError,
    StrataError,
    Term,
    Theory,
    all_redexes,
    apply_subst,
    canonical_proof,
    check_invariant,
    check_proof,
    choose,
    derive,
    eval,
    infer,
    load_theory,
    match,
    normal_forms,
    parse_theory,
    positions,
    replace_at,
    rewrite_at,
    run_cli,
    subterm_at,
)

__all__ = [
    "ComposeError",
    "FuelExhausted",
    "InvalidPosition",
    "ParseError",
    "StrataError",
    "Term",
    "Theory",
    "all_redexes",
    "apply_subst",
    "canonical_proof",
    "check_invariant",
    "check_proof",
    "choose",
    "derive",
    "eval",
    "infer",
    "load_theory",
    "match",
    "normal_forms",
    "parse_theory",
    "positions",
    "replace_at",
    "rewrite_at",
    "run_cli",
    "subterm_at",
]
