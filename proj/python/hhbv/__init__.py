"""Hochschild homology and BV structures of small graded algebras."""

import json

from . import _core
from ._core import (
    JSONError,
    NotFinitelyGenerated,
    SchemaError,
    TruncationEscape,
    WindowNonConclusive,
    WindowTooSmall,
)

__all__ = [
    "JSONError",
    "NotFinitelyGenerated",
    "SchemaError",
    "TruncationEscape",
    "WindowNonConclusive",
    "WindowTooSmall",
    "automorphisms",
    "compare",
    "hh",
    "reduce",
    "sphere_model",
    "thread_count",
    "verify",
]


def _text(table):
    return table if isinstance(table, str) else json.dumps(table)


def sphere_model(kind, n=2, bound=6, ring="Z", eps=1, lambda_=0, eps0=-1):
    """Table of a sphere model as a dict in the BVTable schema."""
    return json.loads(_core.sphere_model(kind, n, bound, ring, eps, lambda_, eps0))


def hh(algebra, ring="Z", max_word=10, degrees=None):
    """Groups and Δ of the dual Hochschild complex; algebra is "sphere:n" or an algebra dict.

    Raises WindowTooSmall unless every degree in the inclusive range is certified.
    """
    spec = algebra if isinstance(algebra, str) else json.dumps(algebra)
    return json.loads(_core.hh(spec, ring, max_word, degrees))


def verify(table):
    return json.loads(_core.verify(_text(table)))


def compare(table1, table2, mode="bv"):
    return json.loads(_core.compare(_text(table1), _text(table2), mode))


def automorphisms(table):
    return json.loads(_core.automorphisms(_text(table)))


def reduce(table, p, reference=None):
    ref = None if reference is None else _text(reference)
    return json.loads(_core.reduce(_text(table), p, ref))


def thread_count():
    return _core.thread_count()
