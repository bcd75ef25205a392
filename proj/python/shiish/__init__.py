"""Python bindings for the shiish enumeration engine.

Words are plain lists of 1-based integers. Functions returning records give
back dicts and lists decoded from the engine's JSON output.
"""

import json

from ._core import (
    BudgetError,
    centre,
    count_tail_parkers,
    is_g_parking,
    is_ish_parking,
    is_k_partial,
    is_parking_function,
    parks_all_tail,
    sigma,
    sort_tail,
    tree_to_word,
)
from . import _core


def classify(word, ks=None):
    """Parking, Ish and k-partial status, centre and sigma for each k."""
    if ks is None:
        ks = range(2, len(word) + 1)
    return json.loads(_core._classify(list(word), list(ks)))


def burn(word, k):
    """Run the depth-first burning algorithm on the rooted graph for (n, k)."""
    return json.loads(_core._burn(list(word), k))


def regions(n, k, cap=6):
    """Every region of A^k_n with its sign vector, description and label."""
    return json.loads(_core._regions(n, k, cap))


def cross_validate(n, k, workers=1):
    """Compare all characterizations of the labels of A^k_n."""
    return json.loads(_core._cross_validate(n, k, workers))


def reproduce_tables():
    """Expected and computed values for the worked examples."""
    return json.loads(_core._reproduce_tables())


__all__ = [
    "BudgetError",
    "burn",
    "centre",
    "classify",
    "count_tail_parkers",
    "cross_validate",
    "is_g_parking",
    "is_ish_parking",
    "is_k_partial",
    "is_parking_function",
    "parks_all_tail",
    "regions",
    "reproduce_tables",
    "sigma",
    "sort_tail",
    "tree_to_word",
]
