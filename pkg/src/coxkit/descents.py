"""The descent-class span inside the group module, its dual, and the
symmetric-function-level quotient.

Vectors here are keyed by generator subsets.  Three roles appear:

* "sigma": spanned by descent classes D_I (each class identified with the
  sum of its elements),
* "sigma_star": the dual basis D*_I,
* "sym": the image of sigma under chi' (keys are still subsets, but the
  spanning vectors are no longer independent in general).

Closed combinatorial formulas are provided for inducing/restricting in
all three roles, together with the bilinear forms and the conjugacy-class
bases at the sym level.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .freemodule import FormalVector
from .systems import (
    CoxeterSystem,
    Element,
    all_subsets,
    descent_class,
    elements,
    longest_element,
    min_coset_reps,
    parabolic_class_size,
    parabolic_conjugacy_classes,
    parabolic_elements,
    subset_sort_key,
)

SIGMA = "sigma"
SIGMA_STAR = "sigma_star"
SYM = "sym"


def sigma_basis(subset: frozenset[int]) -> FormalVector:
    return FormalVector.basis(subset, kind=SIGMA)


def sigma_star_basis(subset: frozenset[int]) -> FormalVector:
    return FormalVector.basis(subset, kind=SIGMA_STAR)


def sym_basis(subset: frozenset[int]) -> FormalVector:
    return FormalVector.basis(subset, kind=SYM)


def embed_sigma(system: CoxeterSystem, x: FormalVector,
                within: Optional[frozenset[int]] = None) -> FormalVector:
    """iota: replace each subset key by the sum of its descent class."""
    return x.map_to_vectors(
        lambda I: FormalVector.from_keys(descent_class(system, I, within)),
        kind="element",
    )


def collect_by_descents(system: CoxeterSystem, x: FormalVector,
                        within: Optional[frozenset[int]] = None) -> FormalVector:
    """Express an element vector in descent classes; error if not constant on them.

    This is the inverse of :func:`embed_sigma` on its image and serves as
    the brute-force oracle for the closed formulas below.
    """
    buckets: dict[frozenset[int], dict] = {}
    for w, c in x.terms.items():
        buckets.setdefault(w.descent_set(), {})[w] = c
    out = FormalVector(kind=SIGMA)
    for I, seen in buckets.items():
        cls = descent_class(system, I, within)
        coeffs = {seen.get(w, 0) for w in cls}
        if len(coeffs) != 1:
            raise ValueError(f"vector is not constant on the descent class of {sorted(I)}")
        out = out + FormalVector.basis(I, coeffs.pop(), kind=SIGMA)
    return out


# -- closed formulas -----------------------------------------------------------


def sigma_induce(system: CoxeterSystem, subset: frozenset[int], x: FormalVector,
                 within: Optional[frozenset[int]] = None) -> FormalVector:
    """Induce descent classes: D_J of the parabolic goes to sum of D_{J'} with
    J' meeting ``subset`` exactly in J."""
    ambient = all_subsets(system) if within is None else [
        I for I in all_subsets(system) if I <= within
    ]
    def one(J: frozenset[int]) -> FormalVector:
        if not J <= subset:
            raise ValueError(f"key {sorted(J)} does not lie inside {sorted(subset)}")
        return FormalVector.from_keys(
            [Jp for Jp in ambient if Jp & subset == J], kind=SIGMA
        )
    return x.map_to_vectors(one, kind=SIGMA)


def interval_bounds(z: Element, subset: frozenset[int], target: frozenset[int]
                    ) -> tuple[frozenset[int], frozenset[int]]:
    """Bounds (low, high) such that for u in the parabolic on ``subset``,
    D(u z) = target iff low <= D(u) <= high, given the two side conditions
    of :func:`is_class_rep`.  Both bounds are subsets of ``subset``.
    """
    system = z.system
    zinv = z.inverse()
    dz = z.descent_set()
    low: frozenset[int] = frozenset()
    high = subset
    for s in system.generators:
        if s in dz:
            continue
        ds_zinv = (system.generator(s) * zinv).descent_set()
        if s in target:
            low = low | (ds_zinv & subset)
        else:
            high = high & (subset - ds_zinv)
    return low, high


def is_class_rep(z: Element, subset: frozenset[int], target: frozenset[int]) -> bool:
    """Whether z is the minimal-coset part of some w with D(w) = target.

    Requires z to be a minimal right-coset representative for ``subset``.
    The three conditions: descents of z lie in the target; generators
    whose product with z^{-1} stays a minimal representative must avoid
    the target; and the interval bounds must be consistent.
    """
    system = z.system
    zinv = z.inverse()
    if z.left_descent_set() & subset:
        raise ValueError("z is not a minimal right-coset representative")
    dz = z.descent_set()
    if not dz <= target:
        return False
    for s in system.generators:
        if s in dz:
            continue
        ds_zinv = (system.generator(s) * zinv).descent_set()
        if ds_zinv.isdisjoint(subset) and s in target:
            return False
    low, high = interval_bounds(z, subset, target)
    return low <= high


def sigma_restrict(system: CoxeterSystem, subset: frozenset[int], x: FormalVector,
                   within: Optional[frozenset[int]] = None) -> FormalVector:
    """Restrict descent classes by the double sum over class representatives
    and the descent interval they bound."""
    reps = min_coset_reps(system, subset, "right", within)
    sub_subsets = [I for I in all_subsets(system) if I <= subset]

    def one(K: frozenset[int]) -> FormalVector:
        out = FormalVector(kind=SIGMA)
        for z in reps:
            if not is_class_rep(z, subset, K):
                continue
            low, high = interval_bounds(z, subset, K)
            out = out + FormalVector.from_keys(
                [Kp for Kp in sub_subsets if low <= Kp <= high], kind=SIGMA
            )
        return out

    return x.map_to_vectors(one, kind=SIGMA)


def sigma_star_restrict(system: CoxeterSystem, subset: frozenset[int], x: FormalVector,
                        within: Optional[frozenset[int]] = None) -> FormalVector:
    """Dual restriction: D*_K goes to D*_{K & subset}."""
    del system, within
    return x.map_keys(lambda K: K & subset, kind=SIGMA_STAR)


def sigma_star_induce(system: CoxeterSystem, subset: frozenset[int], x: FormalVector,
                      within: Optional[frozenset[int]] = None) -> FormalVector:
    """Dual induction: D*_J goes to the sum of D*_{D(u z)} over minimal reps z.

    The descent set D(u z) depends on u only through D(u) = J, so the
    longest element of the J-parabolic serves as the representative.
    """
    reps = min_coset_reps(system, subset, "right", within)

    def one(J: frozenset[int]) -> FormalVector:
        if not J <= subset:
            raise ValueError(f"key {sorted(J)} does not lie inside {sorted(subset)}")
        u = longest_element(system, J)
        return FormalVector(((((u * z).descent_set()), 1) for z in reps), kind=SIGMA_STAR)

    return x.map_to_vectors(one, kind=SIGMA_STAR)


def sym_induce(system: CoxeterSystem, subset: frozenset[int], x: FormalVector,
               within: Optional[frozenset[int]] = None) -> FormalVector:
    """Sym-level induction follows the same subset formula as sigma_induce."""
    out = sigma_induce(system, subset, FormalVector(x.terms, kind=SIGMA), within)
    return FormalVector(out.terms, kind=SYM)


def sym_restrict(system: CoxeterSystem, subset: frozenset[int], x: FormalVector,
                 within: Optional[frozenset[int]] = None) -> FormalVector:
    """Sym-level restriction follows the same double sum as sigma_restrict."""
    out = sigma_restrict(system, subset, FormalVector(x.terms, kind=SIGMA), within)
    return FormalVector(out.terms, kind=SYM)


def sym_to_sigma_star(system: CoxeterSystem, x: FormalVector,
                      within: Optional[frozenset[int]] = None) -> FormalVector:
    """Expand sym-level spanning vectors in dual-descent coordinates:
    the I-th spanning vector is the sum of D*_{D(w^{-1})} over the class of I."""
    def one(I: frozenset[int]) -> FormalVector:
        return FormalVector(
            ((w.inverse().descent_set(), 1) for w in descent_class(system, I, within)),
            kind=SIGMA_STAR,
        )
    return x.map_to_vectors(one, kind=SIGMA_STAR)


# -- bilinear forms ------------------------------------------------------------


@lru_cache(maxsize=None)
def mutual_descent_count(system: CoxeterSystem, row: frozenset[int], col: frozenset[int]) -> int:
    """#{w : D(w^{-1}) = row and D(w) = col}; the sym-level Gram entry."""
    return sum(1 for w in descent_class(system, col) if w.inverse().descent_set() == row)


def c_matrix(system: CoxeterSystem) -> list[list[int]]:
    subs = all_subsets(system)
    return [[mutual_descent_count(system, I, J) for J in subs] for I in subs]


@lru_cache(maxsize=None)
def weak_descent_count(system: CoxeterSystem, row: frozenset[int], col: frozenset[int]) -> int:
    """#{w : D(w) <= row and D(w^{-1}) <= col}; equals the double-coset count."""
    return sum(
        1
        for w in elements(system)
        if w.descent_set() <= row and w.inverse().descent_set() <= col
    )


def double_coset_count(system: CoxeterSystem, left: frozenset[int], right: frozenset[int]) -> int:
    """Number of (W_left, W_right) double cosets, by BFS orbit decomposition."""
    unassigned = set(elements(system))
    count = 0
    while unassigned:
        seed = unassigned.pop()
        frontier = [seed]
        while frontier:
            w = frontier.pop()
            for s in left:
                v = w.system.generator(s) * w
                if v in unassigned:
                    unassigned.remove(v)
                    frontier.append(v)
            for s in right:
                v = w * w.system.generator(s)
                if v in unassigned:
                    unassigned.remove(v)
                    frontier.append(v)
        count += 1
    return count


# -- conjugacy-class bases at the sym level ------------------------------------


def h_in_monomial_coordinates(system: CoxeterSystem, subset: frozenset[int]) -> FormalVector:
    """The complete-homogeneous sym element attached to a subset, written in
    monomial coordinates (keyed by subsets): coefficient at J counts
    {w : D(w) <= subset, D(w^{-1}) <= J}."""
    return FormalVector(
        ((J, weak_descent_count(system, subset, J)) for J in all_subsets(system)),
        kind="monomial",
    )


def conjugacy_class_of(system: CoxeterSystem, subset: frozenset[int]) -> tuple[frozenset[int], ...]:
    for cls in parabolic_conjugacy_classes(system):
        if subset in cls:
            return cls
    raise KeyError(subset)


def class_label(cls: tuple[frozenset[int], ...]) -> frozenset[int]:
    """Canonical representative subset of a conjugacy class."""
    return min(cls, key=subset_sort_key)


def h_class_basis(system: CoxeterSystem) -> dict[frozenset[int], FormalVector]:
    """One h vector per parabolic conjugacy class, in monomial coordinates.

    Asserts that members of a class share the same expansion before
    collapsing them to a single representative.
    """
    out: dict[frozenset[int], FormalVector] = {}
    for cls in parabolic_conjugacy_classes(system):
        vecs = [h_in_monomial_coordinates(system, I) for I in cls]
        for v in vecs[1:]:
            if v != vecs[0]:
                raise AssertionError(f"h vectors differ within class {cls}")
        out[class_label(cls)] = vecs[0]
    return out


def m_class_basis(system: CoxeterSystem) -> dict[frozenset[int], FormalVector]:
    """m vector per class: the sum of the monomial keys in the class."""
    return {
        class_label(cls): FormalVector.from_keys(cls, kind="monomial")
        for cls in parabolic_conjugacy_classes(system)
    }


def class_index(system: CoxeterSystem, subset: frozenset[int]) -> Fraction:
    """|W^{J^c}| divided by the number of conjugates of the parabolic W_{J^c}."""
    comp = system.generator_set - subset
    reps = min_coset_reps(system, comp, "left")
    return Fraction(len(reps), parabolic_class_size(system, comp))


def p_class_basis(system: CoxeterSystem) -> dict[frozenset[int], FormalVector]:
    """Power-sum analogues: over representatives I, sum the class m-vectors of
    all J <= I weighted by the class index.  Rational in general."""
    m_vecs = m_class_basis(system)
    out = {}
    for cls in parabolic_conjugacy_classes(system):
        I = class_label(cls)
        acc = FormalVector(kind="monomial")
        for J in all_subsets(system):
            if J <= I:
                label = class_label(conjugacy_class_of(system, J))
                acc = acc + m_vecs[label].scale(class_index(system, J))
        out[I] = acc
    return out


def h_gram_matrix(system: CoxeterSystem) -> tuple[list[frozenset[int]], list[list[int]]]:
    """Gram matrix of the class h basis under the weak-descent-count form."""
    labels = [class_label(cls) for cls in parabolic_conjugacy_classes(system)]
    gram = [[weak_descent_count(system, a, b) for b in labels] for a in labels]
    return labels, gram
