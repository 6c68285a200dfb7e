"""coxkit: exact combinatorics of finite (signed) permutation groups.

The package realizes the three classical families of reflection groups on
integer windows and builds, with exact integer/rational arithmetic:

* descent sets, parabolic cosets, and the induction/restriction maps on
  group modules (:mod:`coxkit.systems`, :mod:`coxkit.groupmaps`);
* the descent-class span, its dual, and the conjugacy-class bases at the
  symmetric-function level (:mod:`coxkit.descents`);
* standardization maps and shuffle-style (co)products
  (:mod:`coxkit.words`);
* partial root systems and truncated power-series realizations
  (:mod:`coxkit.roots`, :mod:`coxkit.series`, :mod:`coxkit.qsym`);
* degenerate Hecke algebra representation calculus (:mod:`coxkit.hecke`);
* a command-line interface with machine-checkable verification suites
  (:mod:`coxkit.cli`, :mod:`coxkit.verify`).
"""

from .freemodule import FormalVector
from .systems import (
    CapExceededError,
    CoxeterSystem,
    Element,
    all_subsets,
    composition_from_descents,
    descent_class,
    descents_of_composition,
    elements,
    longest_element,
    min_coset_reps,
    parabolic_conjugacy_classes,
    parabolic_decompose_left,
    parabolic_decompose_right,
    parabolic_elements,
)

__all__ = [
    "CapExceededError",
    "CoxeterSystem",
    "Element",
    "FormalVector",
    "all_subsets",
    "composition_from_descents",
    "descent_class",
    "descents_of_composition",
    "elements",
    "longest_element",
    "min_coset_reps",
    "parabolic_conjugacy_classes",
    "parabolic_decompose_left",
    "parabolic_decompose_right",
    "parabolic_elements",
]

__version__ = "0.1.0"
