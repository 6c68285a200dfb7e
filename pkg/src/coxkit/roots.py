"""Root systems for the three families, partial root systems, and the
lattice-point machinery behind the generating-function realizations.

Roots are integer coordinate vectors.  A partial root system is a root
subset P with no opposite pair that contains every root lying in the
positive cone of P.  Its lattice points over a finite alphabet window,
together with the chamber decomposition, drive the series module.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

from .linalg import solve
from .systems import CoxeterSystem, Element, elements

Root = tuple[int, ...]


def _unit(n: int, i: int, sign: int = 1) -> Root:
    v = [0] * n
    v[i] = sign
    return tuple(v)


def _pair(n: int, j: int, i: int, sign_i: int) -> Root:
    v = [0] * n
    v[j] = 1
    v[i] = sign_i
    return tuple(v)


@lru_cache(maxsize=None)
def simple_roots(system: CoxeterSystem) -> dict[int, Root]:
    """Simple root attached to each generator label."""
    n = system.n
    out: dict[int, Root] = {}
    for s in system.generators:
        if s == 0 and system.family == "B":
            out[s] = _unit(n, 0)
        elif s == 0:
            v = [0] * n
            v[0] = v[1] = 1
            out[s] = tuple(v)
        else:
            v = [0] * n
            v[s] = 1
            v[s - 1] = -1
            out[s] = tuple(v)
    return out


@lru_cache(maxsize=None)
def positive_roots(system: CoxeterSystem) -> frozenset[Root]:
    n = system.n
    out: set[Root] = set()
    for j in range(n):
        if system.family == "B":
            out.add(_unit(n, j))
        for i in range(j):
            out.add(_pair(n, j, i, -1))
            if system.family in ("B", "D"):
                out.add(_pair(n, j, i, 1))
    return frozenset(out)


@lru_cache(maxsize=None)
def all_roots(system: CoxeterSystem) -> frozenset[Root]:
    pos = positive_roots(system)
    return pos | frozenset(tuple(-c for c in r) for r in pos)


def is_positive_root(root: Root) -> bool:
    """Positivity: the highest nonzero coordinate is positive (all families)."""
    for c in reversed(root):
        if c:
            return c > 0
    raise ValueError("zero vector is not a root")


def negate(root: Root) -> Root:
    return tuple(-c for c in root)


def inner(root: Root, f: Iterable[int]) -> int:
    return sum(a * b for a, b in zip(root, f))


@lru_cache(maxsize=None)
def chamber(w: Element) -> frozenset[Root]:
    """The parset w * (positive roots)."""
    return frozenset(w.apply_to_root(a) for a in positive_roots(w.system))


@lru_cache(maxsize=None)
def parabolic_positive_roots(system: CoxeterSystem, subset: frozenset[int]) -> frozenset[Root]:
    """Positive roots that are nonnegative combinations of the subset's simples."""
    simples = [simple_roots(system)[s] for s in sorted(subset)]
    out = set()
    for root in positive_roots(system):
        if not simples:
            continue
        rows = [[simples[k][i] for k in range(len(simples))] for i in range(system.n)]
        x = solve(rows, list(root))
        if x is not None and all(c >= 0 for c in x):
            out.add(root)
    return frozenset(out)


# -- partial root systems --------------------------------------------------------


def _cone_contains(generators: tuple[Root, ...], target: Root, dim: int) -> bool:
    """Whether target lies in the nonnegative span of the generators.

    By the cone version of Caratheodory's theorem it suffices to scan
    subsets of size at most ``dim``; solutions are found exactly.
    """
    gens = list(dict.fromkeys(generators))
    for size in range(1, min(dim, len(gens)) + 1):
        for subset in itertools.combinations(gens, size):
            rows = [[subset[k][i] for k in range(size)] for i in range(dim)]
            x = solve(rows, list(target))
            if x is not None and all(c >= 0 for c in x):
                return True
    return False


def is_parset(system: CoxeterSystem, roots: Iterable[Root]) -> bool:
    """Check the no-opposite-pair and positive-cone-closure axioms."""
    P = frozenset(roots)
    if not P <= all_roots(system):
        return False
    for r in P:
        if negate(r) in P:
            return False
    gens = tuple(P)
    for beta in all_roots(system) - P:
        if _cone_contains(gens, beta, system.n):
            return False
    return True


def parset_closure(system: CoxeterSystem, roots: Iterable[Root]) -> frozenset[Root] | None:
    """Add all roots in the positive cone; None if an opposite pair appears."""
    gens = tuple(roots)
    closed = set(gens)
    if gens:
        for beta in all_roots(system):
            if beta not in closed and _cone_contains(gens, beta, system.n):
                closed.add(beta)
    for r in closed:
        if negate(r) in closed:
            return None
    return frozenset(closed)


def lattice_points(system: CoxeterSystem, parset: Iterable[Root], window: int) -> list[tuple[int, ...]]:
    """All integer vectors f in [-window, window]^n weakly on the nonnegative
    side of every parset root, strictly for the negative parset roots."""
    P = list(parset)
    strict = [r for r in P if not is_positive_root(r)]
    out = []
    for f in itertools.product(range(-window, window + 1), repeat=system.n):
        if all(inner(r, f) >= 0 for r in P) and all(inner(r, f) > 0 for r in strict):
            out.append(f)
    return out


def linear_extension_set(system: CoxeterSystem, parset: Iterable[Root]) -> list[Element]:
    """All w whose chamber contains the parset."""
    P = frozenset(parset)
    return [w for w in elements(system) if P <= chamber(w)]


def random_parset(system: CoxeterSystem, rng, max_seed: int = 4) -> frozenset[Root]:
    """A uniform-ish valid parset: close a random seed set, retry on conflict."""
    roots = sorted(all_roots(system))
    while True:
        k = rng.randint(0, min(max_seed, len(roots)))
        seed = rng.sample(roots, k) if k else []
        closed = parset_closure(system, seed)
        if closed is not None:
            return closed
