"""Degenerate Hecke algebra representations over the rationals.

A module is given by one square matrix per acting generator for the
nilpotent-style generators (square equals minus themselves); the
idempotent generators are recovered by adding the identity.  Matrices are
dense lists of exact numbers (ints or Fractions).

The module constructors mirror the combinatorial structure theory: the
regular module on the group basis, one-dimensional simples indexed by
generator subsets, cyclic projectives seeded inside the regular module,
and induction along a parabolic via the three-case rewrite of generator
action on coset representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .freemodule import FormalVector
from .systems import (
    CoxeterSystem,
    Element,
    all_subsets,
    descent_class,
    elements,
    longest_element,
    min_coset_reps,
    subset_sort_key,
)

Matrix = list[list]


class NonProjectiveError(ValueError):
    """Multiplicity bookkeeping detected a non-projective module."""


# -- small exact matrix helpers -------------------------------------------------


def zero_matrix(n: int) -> Matrix:
    return [[0] * n for _ in range(n)]


def identity_matrix(n: int) -> Matrix:
    out = zero_matrix(n)
    for i in range(n):
        out[i][i] = 1
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Row-sparse product: skips zero entries of ``a``."""
    n, m = len(a), len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i, row in enumerate(a):
        acc = out[i]
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
    return out


def mat_apply(a: Matrix, v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def mat_transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def alternating_product(a: Matrix, b: Matrix, m: int) -> Matrix:
    """(a b a ...) with m factors."""
    out = identity_matrix(len(a))
    for i in range(m):
        out = mat_mul(out, a if i % 2 == 0 else b)
    return out


@dataclass
class HModule:
    """A finite-dimensional module: one matrix per acting generator."""

    system: CoxeterSystem
    acting: frozenset[int]
    mats: dict[int, Matrix]
    labels: Optional[tuple] = None

    @property
    def dim(self) -> int:
        return len(next(iter(self.mats.values()))) if self.mats else 0

    def idempotent_matrix(self, s: int) -> Matrix:
        return mat_add(self.mats[s], identity_matrix(self.dim))

    def validate(self) -> None:
        """Quadratic relations X^2 = -X and all pairwise braid relations."""
        for s, X in self.mats.items():
            if mat_mul(X, X) != mat_scale(X, -1):
                raise AssertionError(f"quadratic relation fails for generator {s}")
        acting = sorted(self.acting)
        for i, s in enumerate(acting):
            for t in acting[i + 1:]:
                m = self.system.coxeter_order(s, t)
                lhs = alternating_product(self.mats[s], self.mats[t], m)
                rhs = alternating_product(self.mats[t], self.mats[s], m)
                if lhs != rhs:
                    raise AssertionError(f"braid relation fails for ({s}, {t})")

    def act_word(self, word: Iterable[int], v: Sequence, bar: bool = True) -> list:
        """Apply the product of generators along a word to a vector.

        The word is read as a product of operators applied left to right
        on the left, so the last letter acts first.
        """
        out = list(v)
        for s in reversed(tuple(word)):
            mat = self.mats[s] if bar else self.idempotent_matrix(s)
            out = mat_apply(mat, out)
        return out


# -- module constructors ----------------------------------------------------------


def regular_module(system: CoxeterSystem, carrier: Optional[frozenset[int]] = None) -> HModule:
    """Left multiplication on the group basis: basis vector at w is sent to
    the one at sw when the length rises and to minus itself otherwise.

    With ``carrier`` the module is the regular module of the parabolic
    subalgebra, on the subgroup basis.
    """
    carrier = system.generator_set if carrier is None else carrier
    from .systems import parabolic_elements

    basis = parabolic_elements(system, carrier)
    index = {w: i for i, w in enumerate(basis)}
    mats: dict[int, Matrix] = {}
    for s in carrier:
        g = system.generator(s)
        X = zero_matrix(len(basis))
        for j, w in enumerate(basis):
            sw = g * w
            if sw.length() > w.length():
                X[index[sw]][j] = 1
            else:
                X[j][j] = -1
        mats[s] = X
    return HModule(system, carrier, mats, labels=basis)


def simple_module(system: CoxeterSystem, subset: frozenset[int],
                  acting: Optional[frozenset[int]] = None) -> HModule:
    """One-dimensional module: generators in ``subset`` act by -1, others by 0."""
    acting = system.generator_set if acting is None else acting
    if not subset <= acting:
        raise ValueError("label must consist of acting generators")
    return HModule(
        system, acting, {s: [[-1 if s in subset else 0]] for s in acting}
    )


def _echelon_insert(rows: list[tuple[int, list]], vec: list) -> bool:
    """Reduce vec against an RREF row list (pivot, row); insert if independent."""
    v = [Fraction(x) for x in vec]
    for pivot, row in rows:
        if v[pivot]:
            c = v[pivot]
            v = [a - c * b for a, b in zip(v, row)]
    lead = next((i for i, x in enumerate(v) if x), None)
    if lead is None:
        return False
    inv = 1 / v[lead]
    v = [x * inv for x in v]
    for k, (pivot, row) in enumerate(rows):
        if row[lead]:
            c = row[lead]
            rows[k] = (pivot, [a - c * b for a, b in zip(row, v)])
    rows.append((lead, v))
    rows.sort(key=lambda pr: pr[0])
    return True


def submodule_coordinates(ambient: HModule, seeds: Sequence[Sequence]) -> HModule:
    """The submodule generated by the seed vectors, in its own coordinates."""
    rows: list[tuple[int, list]] = []
    frontier = [list(v) for v in seeds]
    added = []
    while frontier:
        v = frontier.pop()
        if _echelon_insert(rows, v):
            added.append([Fraction(x) for x in v])
            for s in ambient.acting:
                frontier.append(mat_apply(ambient.mats[s], v))
    # express images of the echelon basis in that basis
    basis = [row for _, row in rows]
    pivots = [p for p, _ in rows]

    def coords(v: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in v]
        out = []
        for pivot, row in rows:
            c = v[pivot]
            out.append(c)
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        if any(v):
            raise ValueError("vector is outside the submodule")
        return out

    mats = {}
    for s in ambient.acting:
        cols = [coords(mat_apply(ambient.mats[s], b)) for b in basis]
        mats[s] = [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]
    return HModule(ambient.system, ambient.acting, mats)


def _generator_product_vector(reg: HModule, word: Iterable[int], v: Sequence, bar: bool) -> list:
    return reg.act_word(word, v, bar=bar)


def _seeded_cyclic(reg: HModule, subset: frozenset[int], idem: frozenset[int]) -> HModule:
    system = reg.system
    e = [0] * reg.dim
    e[reg.labels.index(system.identity())] = 1
    seed = reg.act_word(longest_element(system, idem).reduced_word(), e, bar=False)
    seed = reg.act_word(longest_element(system, subset).reduced_word(), seed, bar=True)
    return submodule_coordinates(reg, [seed])


def projective_module(system: CoxeterSystem, subset: frozenset[int],
                      carrier: Optional[frozenset[int]] = None) -> HModule:
    """Projective indecomposable attached to ``subset``: the cyclic module
    seeded at (nilpotent product over the longest element of ``subset``)
    times (idempotent product over the longest element of its complement),
    inside the regular module of the carrier parabolic."""
    carrier = system.generator_set if carrier is None else carrier
    if not subset <= carrier:
        raise ValueError("subset must lie in the carrier")
    return _seeded_cyclic(regular_module(system, carrier), subset, carrier - subset)


def mixed_projective_module(system: CoxeterSystem, subset: frozenset[int],
                            within: frozenset[int]) -> HModule:
    """Cyclic module over the full algebra seeded with the idempotent part
    over ``within`` minus ``subset`` only; its dimension counts elements w
    with subset <= D(w) <= (complement of within) union subset."""
    return _seeded_cyclic(regular_module(system), subset, within - subset)


def expected_mixed_projective_dim(system: CoxeterSystem, subset: frozenset[int],
                                  within: frozenset[int]) -> int:
    hi = (system.generator_set - within) | subset
    return sum(1 for w in elements(system) if subset <= w.descent_set() <= hi)


def stated_projective_basis(system: CoxeterSystem, subset: frozenset[int],
                            within: Optional[frozenset[int]] = None) -> list[list]:
    """The expected basis vectors: nilpotent product over w times the seed
    idempotent, for every w in the descent-condition set (regular coordinates)."""
    S = system.generator_set
    within = S if within is None else within
    reg = regular_module(system)
    e = [0] * reg.dim
    e[reg.labels.index(system.identity())] = 1
    tail = reg.act_word(longest_element(system, within - subset).reduced_word(), e, bar=False)
    hi = (S - within) | subset
    return [
        reg.act_word(w.reduced_word(), tail, bar=True)
        for w in elements(system)
        if subset <= w.descent_set() <= hi
    ]


def induce(module: HModule) -> HModule:
    """Induction to the full algebra along the parabolic on the acting set.

    Basis pairs (z, m) over minimal left-coset representatives z; a
    generator s sends (z, m) to minus itself when s is a left descent of
    z, to (sz, m) when sz is again a representative, and otherwise acts
    through the conjugated generator inside the parabolic.
    """
    system = module.system
    I = module.acting
    reps = min_coset_reps(system, I, "left")
    rep_index = {z: i for i, z in enumerate(reps)}
    gen_label = {system.generator(s): s for s in I}
    d = module.dim
    dim = len(reps) * d

    def idx(zi: int, mi: int) -> int:
        return zi * d + mi

    mats: dict[int, Matrix] = {}
    for s in system.generators:
        g = system.generator(s)
        X = zero_matrix(dim)
        for zi, z in enumerate(reps):
            sz = g * z
            if sz.length() < z.length():
                for mi in range(d):
                    X[idx(zi, mi)][idx(zi, mi)] = -1
            elif sz in rep_index:
                ti = rep_index[sz]
                for mi in range(d):
                    X[idx(ti, mi)][idx(zi, mi)] = 1
            else:
                r = gen_label[z.inverse() * g * z]
                R = module.mats[r]
                for mi in range(d):
                    for out_i in range(d):
                        if R[out_i][mi]:
                            X[idx(zi, out_i)][idx(zi, mi)] = R[out_i][mi]
        mats[s] = X
    labels = tuple((z, mi) for z in reps for mi in range(d))
    return HModule(system, system.generator_set, mats, labels=labels)


def restrict(module: HModule, subset: frozenset[int]) -> HModule:
    if not subset <= module.acting:
        raise ValueError("can only restrict to a subset of the acting generators")
    return HModule(
        module.system, subset, {s: module.mats[s] for s in subset}, module.labels
    )


# -- composition series and multiplicities ----------------------------------------


def _stacked_nullspace(mats: list[Matrix]) -> list[list[Fraction]]:
    from .linalg import nullspace

    rows: list[list] = []
    for m in mats:
        rows.extend(m)
    return nullspace(rows)


def _eigen_patterns(acting: frozenset[int]):
    subs = [
        frozenset(c)
        for r in range(len(acting) + 1)
        for c in __import__("itertools").combinations(sorted(acting), r)
    ]
    return sorted(subs, key=subset_sort_key)


def common_eigenvectors(module: HModule, pattern: frozenset[int]) -> list[list[Fraction]]:
    """Vectors on which each acting generator acts by -1 (inside the pattern)
    or 0 (outside)."""
    d = module.dim
    shifted = []
    for s in module.acting:
        lam = -1 if s in pattern else 0
        shifted.append(
            mat_add(module.mats[s], mat_scale(identity_matrix(d), -lam))
        )
    return _stacked_nullspace(shifted)


def _quotient_by_line(module: HModule, v: Sequence) -> HModule:
    p = next(i for i, x in enumerate(v) if x)
    keep = [i for i in range(module.dim) if i != p]
    vp = Fraction(v[p])
    mats = {}
    for s, X in module.mats.items():
        mats[s] = [
            [X[i][j] - X[p][j] * Fraction(v[i]) / vp for j in keep] for i in keep
        ]
    return HModule(module.system, module.acting, mats)


def composition_factors(module: HModule) -> FormalVector:
    """Multiset of simple factors, by iterated extraction of minimal
    one-dimensional submodules (every nonzero module has one)."""
    out = FormalVector(kind="g0")
    current = module
    while current.dim:
        for pattern in _eigen_patterns(current.acting):
            vecs = common_eigenvectors(current, pattern)
            if vecs:
                out = out + FormalVector.basis(pattern, kind="g0")
                current = _quotient_by_line(current, vecs[0])
                break
        else:
            raise AssertionError("no one-dimensional submodule found")
    return out


def hom_to_simple_dim(module: HModule, pattern: frozenset[int]) -> int:
    """Dimension of the space of maps onto the simple with the given pattern."""
    d = module.dim
    shifted = []
    for s in module.acting:
        lam = -1 if s in pattern else 0
        t = mat_transpose(module.mats[s])
        shifted.append(mat_add(t, mat_scale(identity_matrix(d), -lam)))
    return len(_stacked_nullspace(shifted))


def projective_multiplicities(module: HModule, assert_projective: bool = True) -> FormalVector:
    """Multiplicity of each projective indecomposable among the acting set,
    with a dimension audit that flags non-projective inputs."""
    out = FormalVector(kind="k0")
    total = 0
    for pattern in _eigen_patterns(module.acting):
        m = hom_to_simple_dim(module, pattern)
        if m:
            out = out + FormalVector.basis(pattern, m, kind="k0")
            total += m * len(descent_class(module.system, pattern, module.acting))
    if assert_projective and total != module.dim:
        raise NonProjectiveError(
            f"projective dims sum to {total}, module dim is {module.dim}"
        )
    return out


def hom_dim(source: HModule, target: HModule) -> int:
    """Dimension of the intertwiner space (small modules only)."""
    from .linalg import nullspace

    ds, dt = source.dim, target.dim
    rows = []
    for s in source.acting:
        A, B = source.mats[s], target.mats[s]
        for i in range(dt):
            for j in range(ds):
                row = [0] * (dt * ds)
                for k in range(ds):
                    if A[k][j]:
                        row[i * ds + k] += A[k][j]
                for k in range(dt):
                    if B[i][k]:
                        row[k * ds + j] -= B[i][k]
                rows.append(row)
    return len(nullspace(rows))


# -- characteristic maps ------------------------------------------------------------


def simple_characteristic(system: CoxeterSystem, g0: FormalVector) -> FormalVector:
    """Image of a simple-factor vector in fundamental coordinates (keys are
    descent subsets)."""
    return FormalVector(g0.terms, kind="fundamental")


def projective_characteristic(system: CoxeterSystem, k0: FormalVector) -> FormalVector:
    """Image of a projective vector in ribbon coordinates."""
    return FormalVector(k0.terms, kind="ribbon")


def characteristic_polynomial(system: CoxeterSystem, g0: FormalVector, K: int):
    """Expand Ch of a simple-factor vector as a commutative truncation."""
    from .qsym import fundamental_qsym, fundamental_qsym_b, fundamental_qsym_d, CPoly
    from .systems import composition_from_descents

    fund = {
        "A": fundamental_qsym,
        "B": fundamental_qsym_b,
        "D": fundamental_qsym_d,
    }[system.family]
    out = CPoly()
    for subset, coeff in g0.terms.items():
        out = out + fund(composition_from_descents(system, subset), K).scale(coeff)
    return out


# -- sorting operators ---------------------------------------------------------------


def sorting_operator(family: str, s: int, word: tuple[int, ...]) -> tuple[int, ...]:
    """Idempotent word operators realizing the generators on integer words."""
    a = list(word)
    if s == 0:
        if family == "B":
            if a and a[0] > 0:
                a[0] = -a[0]
        elif family == "D":
            if len(a) >= 2 and a[0] + a[1] > 0:
                a[0], a[1] = -a[1], -a[0]
        else:
            raise ValueError("type A has no generator 0")
    else:
        if s >= len(a):
            raise ValueError("generator index out of range")
        if a[s - 1] < a[s]:
            a[s - 1], a[s] = a[s], a[s - 1]
    return tuple(a)
