"""Coset partitions of free groups through Schreier automata."""

import json

from ._fgcover import (
    BudgetExceeded,
    FgcoverError,
    InfiniteIndex,
    InvalidLetter,
    NotAPartition,
    NotTransitive,
    ParseError,
    Subgroup,
    cli,
    z_verify,
)
from . import _fgcover

__all__ = [
    "BudgetExceeded", "FgcoverError", "InfiniteIndex", "InvalidLetter", "NotAPartition",
    "NotTransitive", "ParseError", "Subgroup", "analyze", "cli", "generate", "load_subgroup",
    "verify", "z_verify",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def analyze(doc, series_depth=20, oracle=False, numeric_residues=False):
    """Analyse a subgroup, partition or residue-class document (str or dict); returns the report dict."""
    return json.loads(_fgcover.analyze_json(_text(doc), series_depth, oracle, numeric_residues))


def verify(doc):
    """Exact partition verdict; member numbers in "overlap" are 1-based."""
    return _fgcover.verify_json(_text(doc))


def generate(rank, depth, seed):
    """A random partition by iterated refinement, as a document dict."""
    return json.loads(_fgcover.generate_json(rank, depth, seed))


def load_subgroup(doc):
    return _fgcover.parse_subgroup(_text(doc))
