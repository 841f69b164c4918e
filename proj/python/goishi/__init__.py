"""Seeded mex tables and perfect play for linear two-player goishi hiroi."""

from ._goishi import (
    CapacityError,
    Convention,
    Engine,
    Move,
    Outcome,
    Position,
    SeedKind,
    ValueTable,
    block_symmetric,
    build_table,
    canonicalize,
    in_A,
    in_B,
    mex,
    misere_two_pile_outcome,
    moves,
    nim_grundy,
    nim_outcome_normal,
    oracle_goishi_outcome,
    verify,
)

__all__ = [
    "CapacityError",
    "Convention",
    "Engine",
    "Move",
    "Outcome",
    "Position",
    "SeedKind",
    "ValueTable",
    "block_symmetric",
    "build_table",
    "canonicalize",
    "in_A",
    "in_B",
    "mex",
    "misere_two_pile_outcome",
    "moves",
    "nim_grundy",
    "nim_outcome_normal",
    "oracle_goishi_outcome",
    "verify",
]
