"""Truncated noncommutative power series over an integer alphabet window.

A series of degree n over window m is a sparse integer combination of
length-n words with letters in [-m, m].  The generating functions of
partial root systems live here, together with the word-sum bases indexed
by group elements, subsets and (pseudo-)compositions, and the projections
to commutative polynomials.

Truncation policy: identities of degree n are checked at window n + 1.
Equality of truncations refutes an identity conclusively; the identities
asserted by the verification suites are theorems, so truncation equality
is the expected outcome rather than numerical evidence.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

from .freemodule import FormalVector
from .qsym import CPoly
from .roots import chamber, lattice_points, parabolic_positive_roots
from .systems import (
    CoxeterSystem,
    Element,
    descent_class,
    descents_of_composition,
    elements,
)
from .words import (
    shuffle_a,
    shuffle_b,
    shuffle_d,
    shuffle_bb,
    standardize,
    standardize_even_left,
    standardize_signed,
)

Word = tuple[int, ...]


class WindowError(ValueError):
    """A truncated-series operation was attempted outside its trusted window."""


class NCSeries:
    """Sparse integer combination of equal-length words over [-window, window]."""

    __slots__ = ("degree", "window", "terms")

    def __init__(self, degree: int, window: int, terms=None):
        self.degree = degree
        self.window = window
        data: dict[Word, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, coeff in items:
                if len(word) != degree:
                    raise ValueError(f"word {word} has length != {degree}")
                if any(abs(x) > window for x in word):
                    raise WindowError(f"letter outside window in {word}")
                if coeff:
                    acc = data.get(word, 0) + coeff
                    if acc:
                        data[word] = acc
                    else:
                        del data[word]
        self.terms = data

    @classmethod
    def from_words(cls, degree: int, window: int, words: Iterable[Word]) -> "NCSeries":
        return cls(degree, window, ((w, 1) for w in words))

    def __add__(self, other: "NCSeries") -> "NCSeries":
        self._compat(other)
        return NCSeries(
            self.degree, self.window,
            itertools.chain(self.terms.items(), other.terms.items()),
        )

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "NCSeries":
        return NCSeries(self.degree, self.window, ((w, c * v) for w, v in self.terms.items()))

    def _compat(self, other: "NCSeries") -> None:
        if self.degree != other.degree or self.window != other.window:
            raise ValueError("degree/window mismatch")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, NCSeries)
            and self.degree == other.degree
            and self.window == other.window
            and self.terms == other.terms
        )

    def __mul__(self, other: "NCSeries") -> "NCSeries":
        """Word concatenation.  Trusted only when the window dominates the
        total degree; refuse otherwise rather than risk truncation bias."""
        if self.window != other.window:
            raise ValueError("window mismatch")
        total = self.degree + other.degree
        if self.window < total + 1:
            raise WindowError(
                f"window {self.window} too small for a degree-{total} product"
            )
        return NCSeries(
            total, self.window,
            ((w1 + w2, c1 * c2)
             for w1, c1 in self.terms.items()
             for w2, c2 in other.terms.items()),
        )

    def support(self) -> list[Word]:
        return sorted(self.terms)

    def __repr__(self) -> str:
        return f"NCSeries(degree={self.degree}, window={self.window}, {len(self.terms)} terms)"


# -- generating functions ---------------------------------------------------------


def parset_series(system: CoxeterSystem, parset, window: int) -> NCSeries:
    """Word sum over the lattice points of a partial root system."""
    return NCSeries.from_words(system.n, window, lattice_points(system, parset, window))


@lru_cache(maxsize=None)
def _standardization_fibers(system: CoxeterSystem, window: int) -> dict[Element, tuple[Word, ...]]:
    st = {
        "A": standardize,
        "B": standardize_signed,
        "D": standardize_even_left,
    }[system.family]
    fibers: dict[Element, list[Word]] = {w: [] for w in elements(system)}
    for f in itertools.product(range(-window, window + 1), repeat=system.n):
        fibers[st(f)].append(f)
    return {w: tuple(v) for w, v in fibers.items()}


def s_series(w: Element, window: int) -> NCSeries:
    """Word sum over the standardization fiber of w (the chamber of w^{-1})."""
    fibers = _standardization_fibers(w.system, window)
    return NCSeries.from_words(w.system.n, window, fibers[w])


def f_series(w: Element, window: int) -> NCSeries:
    """Generating function of the chamber of w."""
    return s_series(w.inverse(), window)


def f_series_by_roots(w: Element, window: int) -> NCSeries:
    """Same series computed from the root-system definition (test oracle)."""
    return parset_series(w.system, chamber(w), window)


# -- word-sum bases ---------------------------------------------------------------


def s_basis(system: CoxeterSystem, alpha: tuple[int, ...], window: int) -> NCSeries:
    """Sum of s_series over the descent class of alpha."""
    subset = descents_of_composition(alpha)
    out = NCSeries(system.n, window)
    for w in descent_class(system, subset):
        out = out + s_series(w, window)
    return out


def s_basis_by_fillings(system: CoxeterSystem, alpha: tuple[int, ...], window: int) -> NCSeries:
    """Same basis element by direct enumeration of ribbon fillings.

    A word is kept when it rises weakly inside the rows of alpha and drops
    strictly across row boundaries, with the extra type-B/D cell read as 0
    or as minus the second letter.
    """
    des = descents_of_composition(alpha)
    n = system.n

    def keep(f: Word) -> bool:
        for j in range(1, n):
            if (f[j - 1] > f[j]) != (j in des):
                return False
        if system.family == "B":
            head = 0 > f[0]
        elif system.family == "D":
            head = -f[1] > f[0]
        else:
            return True
        return head == (0 in des)

    return NCSeries.from_words(
        n, window,
        (f for f in itertools.product(range(-window, window + 1), repeat=n) if keep(f)),
    )


def h_basis(system: CoxeterSystem, alpha: tuple[int, ...], window: int) -> NCSeries:
    """Complete-homogeneous analogue: the generating function of the positive
    roots of the parabolic complementary to the descents of alpha."""
    subset = system.generator_set - descents_of_composition(alpha)
    return parset_series(system, parabolic_positive_roots(system, subset), window)


def h_block(family: str, k: int, window: int) -> NCSeries:
    """Degree-k one-block piece: weakly increasing words, from 0 up for the
    signed families and unrestricted for type A."""
    lo = 0 if family in ("B", "D") else -window
    words = (
        f
        for f in itertools.product(range(-window, window + 1), repeat=k)
        if all(f[i] <= f[i + 1] for i in range(k - 1)) and (not f or f[0] >= lo)
    )
    return NCSeries.from_words(k, window, words)


# -- projections to commutative polynomials ----------------------------------------


def project_positive(x: NCSeries) -> CPoly:
    """Relabel the window order-isomorphically onto 1..2m+1 and abelianize."""
    shift = x.window + 1
    return CPoly(
        ((tuple(sorted(letter + shift for letter in w)), c) for w, c in x.terms.items())
    )


def project_absolute(x: NCSeries) -> CPoly:
    """Letter-wise absolute value, then abelianize (monoid homomorphism)."""
    return CPoly(
        ((tuple(sorted(abs(letter) for letter in w)), c) for w, c in x.terms.items())
    )


def project_signed_min(x: NCSeries) -> CPoly:
    """Absolute values sorted, with the minimal slot carrying the sign parity
    of the word.  Linear but not multiplicative."""
    out = []
    for w, c in x.terms.items():
        mono = sorted(abs(letter) for letter in w)
        if sum(1 for letter in w if letter < 0) % 2 and mono:
            mono[0] = -mono[0]
        out.append((tuple(mono), c))
    return CPoly(out)


def projection(family: str):
    return {"A": project_positive, "B": project_absolute, "D": project_signed_min}[family]


# -- module action and coaction on the series level ---------------------------------


_SHUFFLES = {"A": shuffle_a, "B": shuffle_b, "D": shuffle_d, "BB": shuffle_bb}


def f_action(u: Element, v: Element, window: int, flavor: str | None = None) -> FormalVector:
    """Right action on the chamber basis: returns the label vector of the
    product, cross-checked against literal series multiplication."""
    flavor = flavor or u.system.family
    labels = _SHUFFLES[flavor](u, v)
    literal = f_series(u, window) * f_series(v, window)
    total = NCSeries(u.system.n + v.system.n, window)
    for w in labels.terms:
        total = total + f_series(w, window)
    if total != literal:
        raise AssertionError("shuffle expansion disagrees with series product")
    return labels


def f_coaction(u: Element, flavor: str | None = None) -> FormalVector:
    """Coaction on the chamber basis: standardized (prefix, suffix) splits."""
    from . import words

    flavor = flavor or u.system.family
    op = {"A": words.unshuffle_a, "B": words.unshuffle_b,
          "D": words.unshuffle_d, "BB": words.unshuffle_bb}[flavor]
    return op(u)


def s_coaction(u: Element, flavor: str | None = None) -> FormalVector:
    """Coaction on the fiber basis: letter-value splits with standardized tails."""
    from . import words

    flavor = flavor or u.system.family
    op = {"A": words.cap_a, "B": words.cap_b,
          "D": words.cap_d, "BB": words.cap_bb}[flavor]
    return op(u)


def graded_pieces(vec: FormalVector) -> dict[int, FormalVector]:
    out: dict[int, FormalVector] = {}
    for (w1, w2), c in vec.terms.items():
        piece = out.setdefault(w1.system.n, FormalVector(kind="pair"))
        piece.terms[(w1, w2)] = piece.terms.get((w1, w2), 0) + c
    return out
