"""Weyl characters, Borel-Weil-Bott cohomology and exceptional-collection checks.

Weights are sequences of integers in the fundamental-weight basis. ``crossed``
is the 1-based node of the maximal parabolic; for ``dim``, ``character`` and
``tensor`` it selects the Levi subgroup, and omitting it means the whole group.
"""

import json

from . import _core
from ._core import BottError, NotDominant, ParseError, RankMismatch, presets, set_cache_enabled

__all__ = [
    "BottError",
    "NotDominant",
    "ParseError",
    "RankMismatch",
    "branch",
    "builtin_ledger",
    "c1",
    "character",
    "check_identity",
    "cohomology",
    "dim",
    "dual",
    "ext",
    "presets",
    "set_cache_enabled",
    "tensor",
    "verify",
]

DEFAULT_PRESET = "E6-paper"


def dim(weight, preset=DEFAULT_PRESET, crossed=None):
    return int(_core.dim(preset, list(weight), crossed))


def character(weight, preset=DEFAULT_PRESET, crossed=None):
    return json.loads(_core.character(preset, list(weight), crossed))


def tensor(a, b, preset=DEFAULT_PRESET, crossed=None):
    return json.loads(_core.tensor(preset, list(a), list(b), crossed))


def branch(weight, preset=DEFAULT_PRESET, crossed=1):
    return json.loads(_core.branch(preset, list(weight), crossed))


def cohomology(weight, preset=DEFAULT_PRESET, crossed=1):
    return json.loads(_core.cohomology(preset, list(weight), crossed))


def ext(a, b, preset=DEFAULT_PRESET, crossed=1):
    return json.loads(_core.ext(preset, list(a), list(b), crossed))


def c1(weight, preset=DEFAULT_PRESET, crossed=1):
    return _core.c1(preset, list(weight), crossed)


def dual(weight, preset=DEFAULT_PRESET, crossed=1):
    return _core.dual(preset, list(weight), crossed)


def verify(target, jobs=0):
    """Strong-exceptionality report for "cayley27", "kapranovQ7" or a collection file."""
    return json.loads(_core.verify(str(target), jobs))


def check_identity(text, preset=DEFAULT_PRESET, crossed=1):
    """Character-level check of "A == B" or "0 -> A -> B -> ... -> 0"."""
    return json.loads(_core.check_identity(text, preset, crossed))


def builtin_ledger():
    return json.loads(_core.builtin_ledger())
