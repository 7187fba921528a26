"""Small named posets and automorphisms used throughout the examples and tests.

Elements are the strings "1", "2", ... so that problems built from these
objects serialize unchanged.
"""

from __future__ import annotations

from .fields import Field
from .incidence import MultiplicativeElement, multiplicative_from_covers
from .poset import Poset, poset_from_covers, validate_automorphism


def _tokens(*xs):
    return [str(x) for x in xs]


def two_crown() -> Poset:
    """1, 2 below 3, 4."""
    return poset_from_covers(_tokens(1, 2, 3, 4),
                             [("1", "3"), ("1", "4"), ("2", "3"), ("2", "4")])


def two_crown_swap(p: Poset):
    return validate_automorphism(p, {"1": "2", "2": "1", "3": "4", "4": "3"})


def v_poset() -> Poset:
    """1 below both 2 and 3."""
    return poset_from_covers(_tokens(1, 2, 3), [("1", "2"), ("1", "3")])


def v_swap(p: Poset):
    return validate_automorphism(p, {"1": "1", "2": "3", "3": "2"})


FOUR_CROWN_COVERS = [("1", "5"), ("2", "5"), ("2", "6"), ("3", "6"),
                     ("3", "7"), ("4", "7"), ("4", "8"), ("1", "8")]

FOUR_CROWN_ROTATION = {"1": "3", "2": "4", "3": "1", "4": "2",
                       "5": "7", "6": "8", "7": "5", "8": "6"}


def four_crown() -> Poset:
    """Minimal elements 1-4, maximal 5-8, Hasse diagram an 8-cycle."""
    return poset_from_covers(_tokens(*range(1, 9)), FOUR_CROWN_COVERS)


def four_crown_rotation(p: Poset):
    mapping = dict(FOUR_CROWN_ROTATION)
    if "0" in p:
        mapping["0"] = "0"
    return validate_automorphism(p, mapping)


def four_crown_with_bottom() -> Poset:
    return four_crown().adjoin_bottom("0")


def two_crown_sigma(field: Field, top_right="2") -> MultiplicativeElement:
    """sigma = 1 on the covers (1,3), (1,4), (2,3) and ``top_right`` on (2,4).

    With the default value the alternating product around the 4-cycle is 2,
    so sigma is not fractional whenever 2 != 1 in the field.
    """
    return multiplicative_from_covers(two_crown(), field, {
        ("1", "3"): 1, ("1", "4"): 1, ("2", "3"): 1, ("2", "4"): field.coerce(top_right)})
