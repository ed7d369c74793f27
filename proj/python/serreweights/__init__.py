"""Explicit Serre-weight sets of tame local mod-l representations and
adequacy of finite matrix subgroups of GL_n over finite fields."""

try:
    from ._core import (
        SerreError,
        adequacy,
        adequacy_named,
        det_weight_set,
        find_witness,
        verify_paper,
        weight_set,
        weights_equivalent,
    )
except ImportError:  # in-tree test layout: the module sits next to the build
    from _core import (
        SerreError,
        adequacy,
        adequacy_named,
        det_weight_set,
        find_witness,
        verify_paper,
        weight_set,
        weights_equivalent,
    )

__all__ = [
    "SerreError",
    "adequacy",
    "adequacy_named",
    "det_weight_set",
    "find_witness",
    "verify_paper",
    "weight_set",
    "weights_equivalent",
]
