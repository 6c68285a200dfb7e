"""Finite Coxeter systems of types A, B, D realized as (signed) permutation groups.

Type A with window size n is the symmetric group on {1..n} (generators
s_1..s_{n-1}), type B is the group of signed permutations (generators
s_0..s_{n-1} where s_0 negates the first entry), and type D is the
subgroup of B with an even number of negative window entries (s_0 swaps
and negates the first two entries).

Elements are stored as full windows; equality is window equality.  All
objects are immutable, and whole-group enumerations, coset
representatives and descent classes are cached per system.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import factorial
from typing import Iterable, Optional

FAMILIES = ("A", "B", "D")

#: Enumeration refuses groups larger than this unless overridden via the
#: COXKIT_MAX_ORDER environment variable or :func:`set_max_order`.
DEFAULT_MAX_ORDER = 10**6

_max_order_override: Optional[int] = None


class CapExceededError(RuntimeError):
    """Raised when a whole-group enumeration would exceed the size cap."""


def set_max_order(limit: Optional[int]) -> None:
    """Override the enumeration cap in-process (None restores the default)."""
    global _max_order_override
    _max_order_override = limit


def max_order() -> int:
    if _max_order_override is not None:
        return _max_order_override
    env = os.environ.get("COXKIT_MAX_ORDER")
    return int(env) if env else DEFAULT_MAX_ORDER


@dataclass(frozen=True, order=True)
class CoxeterSystem:
    """A realized Coxeter system, identified by family and window size.

    ``n`` is the window size: A gives the symmetric group S_n (rank n-1),
    B gives the signed permutation group of order 2^n n! (rank n), and D
    the even-signed subgroup (rank n, requires n >= 2).
    """

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise ValueError("window size must be nonnegative")
        if self.family == "D" and self.n < 2:
            raise ValueError("family D requires rank >= 2")

    @classmethod
    def of_rank(cls, family: str, rank: int) -> "CoxeterSystem":
        """Build from the generator count: A_rank has window size rank+1."""
        if family == "A":
            return cls("A", rank + 1)
        return cls(family, rank)

    @property
    def rank(self) -> int:
        return max(self.n - 1, 0) if self.family == "A" else self.n

    @property
    def generators(self) -> tuple[int, ...]:
        if self.family == "A":
            return tuple(range(1, self.n))
        return tuple(range(self.n))

    @property
    def generator_set(self) -> frozenset[int]:
        return frozenset(self.generators)

    def order(self) -> int:
        if self.family == "A":
            return factorial(self.n)
        if self.family == "B":
            return 2**self.n * factorial(self.n)
        return 2 ** (self.n - 1) * factorial(self.n)

    def coxeter_order(self, s: int, t: int) -> int:
        """Order m_st of the product of two distinct generators."""
        if s == t:
            return 1
        s, t = min(s, t), max(s, t)
        if self.family == "A":
            return 3 if t - s == 1 else 2
        if self.family == "B":
            if (s, t) == (0, 1):
                return 4
            return 3 if (t - s == 1 and s >= 1) else 2
        if s == 0:
            return 3 if t == 2 else 2
        return 3 if t - s == 1 else 2

    def identity(self) -> "Element":
        return Element(self, tuple(range(1, self.n + 1)))

    def generator(self, i: int) -> "Element":
        if i not in self.generator_set:
            raise ValueError(f"no generator {i} in {self}")
        w = list(range(1, self.n + 1))
        if i == 0:
            if self.family == "B":
                w[0] = -1
            else:
                w[0], w[1] = -2, -1
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return Element(self, tuple(w))

    def element(self, window: Iterable[int]) -> "Element":
        return Element(self, tuple(window))

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.family!r}, {self.n})"


def _validate_window(system: CoxeterSystem, window: tuple[int, ...]) -> None:
    n = system.n
    if len(window) != n:
        raise ValueError(f"window length {len(window)} != {n}")
    if frozenset(abs(x) for x in window) != frozenset(range(1, n + 1)):
        raise ValueError(f"not a signed permutation window: {window}")
    negatives = sum(1 for x in window if x < 0)
    if system.family == "A" and negatives:
        raise ValueError("type A windows must be positive")
    if system.family == "D" and negatives % 2:
        raise ValueError("type D windows need an even number of signs")


@dataclass(frozen=True)
class Element:
    """A group element in window notation ``(w(1), ..., w(n))``."""

    system: CoxeterSystem
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate_window(self.system, self.window)

    # -- basic group structure ------------------------------------------------

    def __mul__(self, other: "Element") -> "Element":
        if self.system != other.system:
            raise ValueError("elements from different systems")
        w = self.window
        return Element(
            self.system,
            tuple(w[v - 1] if v > 0 else -w[-v - 1] for v in other.window),
        )

    def inverse(self) -> "Element":
        inv = [0] * len(self.window)
        for i, v in enumerate(self.window, start=1):
            if v > 0:
                inv[v - 1] = i
            else:
                inv[-v - 1] = -i
        return Element(self.system, tuple(inv))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.system.n + 1))

    def value(self, i: int) -> int:
        """w(i) for i in [-n..n], with the type-specific w(0) convention."""
        if i > 0:
            return self.window[i - 1]
        if i < 0:
            return -self.window[-i - 1]
        if self.system.family == "B":
            return 0
        if self.system.family == "D":
            return -self.window[1]
        raise ValueError("w(0) is undefined in type A")

    # -- length and descents --------------------------------------------------

    def length(self) -> int:
        w = self.window
        n = len(w)
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        if self.system.family == "A":
            return inv
        nsp = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
        if self.system.family == "D":
            return inv + nsp
        return inv + sum(1 for x in w if x < 0) + nsp

    def descent_set(self) -> frozenset[int]:
        """Right descents {s : length(w*s) < length(w)} via window comparisons."""
        w = self.window
        if not w:
            return frozenset()
        out = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
        if self.system.family == "B" and w[0] < 0:
            out.append(0)
        elif self.system.family == "D" and -w[1] > w[0]:
            out.append(0)
        return frozenset(out)

    def left_descent_set(self) -> frozenset[int]:
        return self.inverse().descent_set()

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word, peeling the smallest right descent greedily."""
        word: list[int] = []
        w = self
        while True:
            des = w.descent_set()
            if not des:
                break
            s = min(des)
            w = w * w.system.generator(s)
            word.append(s)
        return tuple(reversed(word))

    def apply_to_root(self, root: tuple[int, ...]) -> tuple[int, ...]:
        """Push a coordinate vector through w (e_i goes to sign * e_{|w(i)|})."""
        out = [0] * len(root)
        for i, c in enumerate(root):
            if c:
                v = self.window[i]
                if v > 0:
                    out[v - 1] += c
                else:
                    out[-v - 1] -= c
        return tuple(out)

    def __repr__(self) -> str:
        return f"{self.system.family}{self.system.n}[{format_window(self.window)}]"


def format_window(window: tuple[int, ...]) -> str:
    return ",".join(str(x) for x in window)


def parse_window(system: CoxeterSystem, text: str) -> Element:
    text = text.strip()
    if not text:
        return system.identity()
    return system.element(int(part) for part in text.split(","))


def prod(system: CoxeterSystem, elements: Iterable[Element]) -> Element:
    return reduce(lambda a, b: a * b, elements, system.identity())


def from_word(system: CoxeterSystem, word: Iterable[int]) -> Element:
    return prod(system, (system.generator(s) for s in word))


# -- whole-group machinery ----------------------------------------------------


@lru_cache(maxsize=None)
def elements(system: CoxeterSystem) -> tuple[Element, ...]:
    """All group elements, sorted by (length, window) for determinism."""
    if system.order() > max_order():
        raise CapExceededError(
            f"|W| = {system.order()} exceeds cap {max_order()}"
        )
    out = []
    for perm in itertools.permutations(range(1, system.n + 1)):
        if system.family == "A":
            out.append(Element(system, perm))
            continue
        for signs in itertools.product((1, -1), repeat=system.n):
            if system.family == "D" and signs.count(-1) % 2:
                continue
            out.append(Element(system, tuple(s * v for s, v in zip(signs, perm))))
    return tuple(sorted(out, key=lambda w: (w.length(), w.window)))


def subset_sort_key(subset: frozenset[int]) -> tuple:
    return (len(subset), tuple(sorted(subset)))


@lru_cache(maxsize=None)
def all_subsets(system: CoxeterSystem) -> tuple[frozenset[int], ...]:
    gens = system.generators
    subs = [
        frozenset(c)
        for r in range(len(gens) + 1)
        for c in itertools.combinations(gens, r)
    ]
    return tuple(sorted(subs, key=subset_sort_key))


@lru_cache(maxsize=None)
def parabolic_elements(system: CoxeterSystem, subset: frozenset[int]) -> tuple[Element, ...]:
    """Elements of the standard parabolic subgroup generated by ``subset``."""
    return tuple(
        w for w in elements(system) if frozenset(w.reduced_word()) <= subset
    )


def in_parabolic(w: Element, subset: frozenset[int]) -> bool:
    return frozenset(w.reduced_word()) <= subset


def longest_element(system: CoxeterSystem, subset: frozenset[int]) -> Element:
    """The longest element of the parabolic subgroup, by greedy ascent."""
    w = system.identity()
    des = w.descent_set()
    while True:
        up = [s for s in sorted(subset) if s not in des]
        if not up:
            return w
        w = w * system.generator(up[0])
        des = w.descent_set()


def parabolic_decompose_left(w: Element, subset: frozenset[int]) -> tuple[Element, Element]:
    """Split w = c * p with p in the parabolic and c of minimal coset length.

    The representative c has no right descent inside ``subset`` and
    lengths add: length(w) = length(c) + length(p).
    """
    system = w.system
    word: list[int] = []
    v = w
    while True:
        des = v.descent_set() & subset
        if not des:
            break
        s = min(des)
        v = v * system.generator(s)
        word.append(s)
    return v, from_word(system, reversed(word))


def parabolic_decompose_right(w: Element, subset: frozenset[int]) -> tuple[Element, Element]:
    """Split w = p * c with p parabolic and c of minimal length, mirror-wise."""
    system = w.system
    word: list[int] = []
    v = w
    while True:
        des = v.left_descent_set() & subset
        if not des:
            break
        s = min(des)
        v = system.generator(s) * v
        word.append(s)
    return from_word(system, word), v


@lru_cache(maxsize=None)
def min_coset_reps(
    system: CoxeterSystem,
    subset: frozenset[int],
    side: str = "left",
    within: Optional[frozenset[int]] = None,
) -> tuple[Element, ...]:
    """Minimal-length representatives of the ``subset``-parabolic cosets.

    side="left" gives {w : D(w) disjoint from subset} (representatives of
    left cosets w*W_subset); side="right" uses inverse descents.  With
    ``within`` the ambient group is the parabolic on that generator set.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    pool = elements(system) if within is None else parabolic_elements(system, within)
    if within is not None and not subset <= within:
        raise ValueError("subset must lie inside the ambient generator set")
    out = []
    for w in pool:
        des = w.descent_set() if side == "left" else w.left_descent_set()
        if not des & subset:
            out.append(w)
    return tuple(out)


@lru_cache(maxsize=None)
def descent_class(system: CoxeterSystem, subset: frozenset[int],
                  within: Optional[frozenset[int]] = None) -> tuple[Element, ...]:
    """All elements with descent set exactly ``subset``."""
    pool = elements(system) if within is None else parabolic_elements(system, within)
    return tuple(w for w in pool if w.descent_set() == subset)


def class_maximum(system: CoxeterSystem, subset: frozenset[int]) -> Element:
    """The longest element whose descent set is contained in ``subset``."""
    complement = system.generator_set - subset
    reps = min_coset_reps(system, complement, "left")
    return max(reps, key=lambda w: (w.length(), w.window))


# -- compositions and pseudo-compositions -------------------------------------


def descents_of_composition(alpha: tuple[int, ...]) -> frozenset[int]:
    """Partial sums of all but the last part (0 included when alpha_1 = 0)."""
    total, out = 0, []
    for part in alpha[:-1]:
        total += part
        out.append(total)
    if alpha and alpha[0] == 0:
        out.append(0)
    return frozenset(out)


def composition_from_descents(system: CoxeterSystem, subset: frozenset[int]) -> tuple[int, ...]:
    """Inverse of the descent-set bijection for the system's index family."""
    n = system.n
    if n == 0:
        return ()
    prev, parts = 0, []
    for cut in sorted(subset) + [n]:
        parts.append(cut - prev)
        prev = cut
    return tuple(parts)


def is_valid_composition(system: CoxeterSystem, alpha: tuple[int, ...]) -> bool:
    if sum(alpha) != system.n:
        return False
    if any(p < 0 for p in alpha):
        return False
    if system.family == "A":
        return all(p > 0 for p in alpha)
    return all(p > 0 for p in alpha[1:])


def all_compositions(system: CoxeterSystem) -> tuple[tuple[int, ...], ...]:
    return tuple(
        composition_from_descents(system, I) for I in all_subsets(system)
    )


def near_concat_compositions(alpha: tuple[int, ...], beta: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Join alpha and beta by fusing the boundary parts; None if either is empty."""
    if not alpha or not beta:
        return None
    return alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]


def refines(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    """True when beta refines alpha (same size, descents of alpha included)."""
    return sum(alpha) == sum(beta) and descents_of_composition(alpha) <= descents_of_composition(beta)


def shape_of_composition(system: CoxeterSystem, alpha: tuple[int, ...]) -> tuple[int, ...]:
    """Sorting invariant: full sort for A, tail sort after the first part for B/D."""
    if system.family == "A":
        return tuple(sorted(alpha, reverse=True))
    if not alpha:
        return ()
    return (alpha[0],) + tuple(sorted(alpha[1:], reverse=True))


def composition_prefix_split(alpha: tuple[int, ...], i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split alpha at total size i into a prefix (same family) and an A-suffix.

    The prefix and suffix are the unique pieces whose plain or fused
    concatenation recovers alpha.
    """
    n = sum(alpha)
    if not 0 <= i <= n:
        raise ValueError("split point out of range")
    des = descents_of_composition(alpha)
    pre = _parts_from_descents(frozenset(d for d in des if d < i), i, pseudo=True)
    post = _parts_from_descents(frozenset(d - i for d in des if d > i), n - i, pseudo=False)
    return pre, post


def _parts_from_descents(subset: frozenset[int], size: int, pseudo: bool) -> tuple[int, ...]:
    if size == 0:
        return ()
    parts = [0] if (pseudo and 0 in subset) else []
    prev = 0
    for c in sorted(d for d in subset if d > 0) + [size]:
        parts.append(c - prev)
        prev = c
    return tuple(parts)


# -- conjugacy of parabolic subgroups ------------------------------------------


@lru_cache(maxsize=None)
def _parabolic_conjugates(system: CoxeterSystem, subset: frozenset[int]) -> frozenset[frozenset[tuple[int, ...]]]:
    """All subgroups conjugate to the standard parabolic on ``subset``."""
    base = frozenset(w.window for w in parabolic_elements(system, subset))
    seen = set()
    for w in elements(system):
        wi = w.inverse()
        seen.add(frozenset((w * system.element(x) * wi).window for x in base))
    return frozenset(seen)


def parabolic_class_size(system: CoxeterSystem, subset: frozenset[int]) -> int:
    return len(_parabolic_conjugates(system, subset))


@lru_cache(maxsize=None)
def parabolic_conjugacy_classes(system: CoxeterSystem) -> tuple[tuple[frozenset[int], ...], ...]:
    """Classes of subsets I, where I ~ J iff W_{I^c} and W_{J^c} are conjugate.

    Brute force: two parabolics are equivalent when one lies in the
    conjugation orbit of the other.
    """
    S = system.generator_set
    orbit_of = {
        I: _parabolic_conjugates(system, S - I) for I in all_subsets(system)
    }
    classes: list[list[frozenset[int]]] = []
    for I in all_subsets(system):
        base = frozenset(w.window for w in parabolic_elements(system, S - I))
        for cls in classes:
            if base in orbit_of[cls[0]]:
                cls.append(I)
                break
        else:
            classes.append([I])
    return tuple(tuple(cls) for cls in classes)
