"""Commutative polynomial truncations: quasisymmetric-style bases in
variables indexed by an integer window.

Monomial keys are ascending tuples of variable indices.  Type A bases use
indices 1..K, type B uses 0..K, and the type D bases allow one negative
index of minimal absolute value.  All coefficients are exact.
"""

from __future__ import annotations

import itertools
from typing import Iterable

Monomial = tuple[int, ...]


class CPoly:
    """Sparse integer polynomial keyed by sorted variable-index tuples."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[Monomial, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, coeff in items:
                if coeff:
                    key = tuple(sorted(mono))
                    acc = data.get(key, 0) + coeff
                    if acc:
                        data[key] = acc
                    else:
                        del data[key]
        self.terms = data

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff=1) -> "CPoly":
        return cls({tuple(sorted(indices)): coeff})

    @classmethod
    def one(cls) -> "CPoly":
        return cls({(): 1})

    def __add__(self, other: "CPoly") -> "CPoly":
        return CPoly(itertools.chain(self.terms.items(), other.terms.items()))

    def __sub__(self, other: "CPoly") -> "CPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "CPoly":
        return CPoly(((m, c * v) for m, v in self.terms.items()))

    def __mul__(self, other: "CPoly") -> "CPoly":
        return CPoly(
            ((m1 + m2, c1 * c2)
             for m1, c1 in self.terms.items()
             for m2, c2 in other.terms.items())
        )

    def __pow__(self, k: int) -> "CPoly":
        out = CPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CPoly) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> list[Monomial]:
        return sorted(self.terms)

    def __repr__(self) -> str:
        return f"CPoly({len(self.terms)} terms)"


def _weak_chains(lo: int, hi: int, length: int, floor_first=None):
    """Ascending-or-equal index chains i_1 <= ... <= i_length in [lo, hi]."""
    if length == 0:
        yield ()
        return
    start = lo if floor_first is None else floor_first
    for i in range(start, hi + 1):
        for rest in _weak_chains(i, hi, length - 1):
            yield (i,) + rest


# -- type A -------------------------------------------------------------------


def monomial_qsym(alpha: tuple[int, ...], K: int) -> CPoly:
    """Sum of x_{i_1}^{a_1} ... x_{i_l}^{a_l} over 0 < i_1 < ... < i_l <= K."""
    ell = len(alpha)
    out = []
    for idx in itertools.combinations(range(1, K + 1), ell):
        mono = tuple(i for i, a in zip(idx, alpha) for _ in range(a))
        out.append((mono, 1))
    return CPoly(out)


def fundamental_qsym(alpha: tuple[int, ...], K: int) -> CPoly:
    """Weakly increasing index words with strict rises at the descents."""
    n = sum(alpha)
    from .systems import descents_of_composition

    des = descents_of_composition(alpha)
    out = []
    for chain in _weak_chains(1, K, n):
        if all(chain[j - 1] < chain[j] for j in des):
            out.append((chain, 1))
    return CPoly(out)


def complete_homogeneous(k: int, K: int, lo: int = 1) -> CPoly:
    return CPoly(((chain, 1) for chain in _weak_chains(lo, K, k)))


def sym_h(lam: tuple[int, ...], K: int) -> CPoly:
    out = CPoly.one()
    for part in lam:
        out = out * complete_homogeneous(part, K)
    return out


def sym_m(lam: tuple[int, ...], K: int) -> CPoly:
    rearrangements = set(itertools.permutations(lam))
    out = CPoly()
    for alpha in rearrangements:
        out = out + monomial_qsym(alpha, K)
    return out


def sym_p(lam: tuple[int, ...], K: int) -> CPoly:
    out = CPoly.one()
    for part in lam:
        out = out * CPoly((((i,) * part, 1) for i in range(1, K + 1)))
    return out


# -- type B (nonnegative indices, x_0 distinguished) ---------------------------


def x0_power(k: int) -> CPoly:
    return CPoly.monomial((0,) * k)


def monomial_qsym_b(alpha: tuple[int, ...], K: int) -> CPoly:
    if not alpha:
        return CPoly.one()
    return x0_power(alpha[0]) * monomial_qsym(alpha[1:], K)


def fundamental_qsym_b(alpha: tuple[int, ...], K: int) -> CPoly:
    n = sum(alpha)
    from .systems import descents_of_composition

    des = descents_of_composition(alpha)
    out = []
    for chain in _weak_chains(0, K, n):
        full = (0,) + chain
        if all(full[j] < full[j + 1] for j in des):
            out.append((chain, 1))
    return CPoly(out)


def sym_h_b_block(k: int, K: int) -> CPoly:
    """One signed-family h block: weakly increasing chains from 0."""
    return complete_homogeneous(k, K, lo=0)


def folded_h_block(k: int, K: int) -> CPoly:
    """Absolute-value image of the full-alphabet degree-k block: weakly
    increasing integer chains folded by |.|, i.e. sum of h_a x_0^b h_c
    over a + b + c = k."""
    out = CPoly()
    for a in range(k + 1):
        for b in range(k - a + 1):
            c = k - a - b
            out = out + (
                complete_homogeneous(a, K) * x0_power(b) * complete_homogeneous(c, K)
            )
    return out


def sym_h_b(alpha: tuple[int, ...], K: int) -> CPoly:
    """Block product: the first part uses the 0-anchored block, later parts
    the folded full-alphabet blocks."""
    if not alpha:
        return CPoly.one()
    out = sym_h_b_block(alpha[0], K)
    for part in alpha[1:]:
        out = out * folded_h_block(part, K)
    return out


def sym_m_b(lam: tuple[int, ...], K: int) -> CPoly:
    if not lam:
        return CPoly.one()
    return x0_power(lam[0]) * sym_m(lam[1:], K)


# -- type D (one signed minimal index) ------------------------------------------


def _d_chains(n: int, K: int):
    """Chains -i_2 <= i_1 <= i_2 <= ... <= i_n within [-K, K]."""
    if n < 2:
        raise ValueError("type D truncations need degree >= 2")
    for tail in _weak_chains(0, K, n - 1):
        i2 = tail[0]
        for i1 in range(-i2, i2 + 1):
            if i1 <= i2:
                yield (i1,) + tail


def monomial_qsym_d(alpha: tuple[int, ...], K: int) -> CPoly:
    from .systems import descents_of_composition

    n = sum(alpha)
    des = descents_of_composition(alpha)
    out = []
    for chain in _d_chains(n, K):
        full = (-chain[1],) + chain
        if all((full[j] < full[j + 1]) == (j in des) for j in range(n)):
            out.append((chain, 1))
    return CPoly(out)


def fundamental_qsym_d(alpha: tuple[int, ...], K: int) -> CPoly:
    from .systems import descents_of_composition

    n = sum(alpha)
    des = descents_of_composition(alpha)
    out = []
    for chain in _d_chains(n, K):
        full = (-chain[1],) + chain
        if all(full[j] < full[j + 1] for j in des):
            out.append((chain, 1))
    return CPoly(out)


# -- coproduct splitting at the polynomial level ---------------------------------


def split_fundamental_b(alpha: tuple[int, ...]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (prefix, suffix) composition splits of a signed-family index."""
    from .systems import composition_prefix_split

    n = sum(alpha)
    return [composition_prefix_split(alpha, i) for i in range(n + 1)]


def split_fundamental_d(alpha: tuple[int, ...]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    from .systems import composition_prefix_split

    n = sum(alpha)
    return [composition_prefix_split(alpha, i) for i in range(2, n + 1)]


def split_monomial_b(alpha: tuple[int, ...]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    return [(alpha[:j], alpha[j:]) for j in range(1, len(alpha) + 1)]


def split_monomial_d(alpha: tuple[int, ...]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    k = 1
    while sum(alpha[:k]) < 2:
        k += 1
    return [(alpha[:j], alpha[j:]) for j in range(k, len(alpha) + 1)]
