from fractions import Fraction

import pytest

from coxkit.descents import (
    c_matrix,
    class_index,
    class_label,
    collect_by_descents,
    conjugacy_class_of,
    double_coset_count,
    embed_sigma,
    h_class_basis,
    h_gram_matrix,
    h_in_monomial_coordinates,
    interval_bounds,
    is_class_rep,
    m_class_basis,
    mutual_descent_count,
    p_class_basis,
    sigma_basis,
    sigma_induce,
    sigma_restrict,
    sigma_star_basis,
    sigma_star_induce,
    sigma_star_restrict,
    sym_basis,
    sym_induce,
    sym_restrict,
    sym_to_sigma_star,
    weak_descent_count,
)
from coxkit.freemodule import FormalVector
from coxkit.groupmaps import induce_left, restrict_right
from coxkit.linalg import express_in_basis, matrix_rank
from coxkit.qsym import CPoly, monomial_qsym, sym_p
from coxkit.systems import (
    CoxeterSystem,
    all_subsets,
    composition_from_descents,
    descent_class,
    elements,
    min_coset_reps,
    parabolic_conjugacy_classes,
    parabolic_elements,
)

A3 = CoxeterSystem("A", 3)
A4 = CoxeterSystem("A", 4)
B2 = CoxeterSystem("B", 2)
B3 = CoxeterSystem("B", 3)
D3 = CoxeterSystem("D", 3)


class TestClosedFormulas:
    @pytest.mark.parametrize("system", (A4, B3, D3))
    def test_induction_formula_vs_oracle(self, system):
        for I in all_subsets(system):
            for J in (X for X in all_subsets(system) if X <= I):
                closed = sigma_induce(system, I, sigma_basis(J))
                oracle = collect_by_descents(
                    system, induce_left(system, I, embed_sigma(system, sigma_basis(J), within=I)))
                assert closed.terms == oracle.terms

    @pytest.mark.parametrize("system", (A4, B3, D3))
    def test_restriction_formula_vs_oracle(self, system):
        for I in all_subsets(system):
            for K in all_subsets(system):
                closed = sigma_restrict(system, I, sigma_basis(K))
                oracle = collect_by_descents(
                    system, restrict_right(system, I, embed_sigma(system, sigma_basis(K))),
                    within=I)
                assert closed.terms == oracle.terms

    def test_induction_concatenation_shape(self):
        # one-block times one-block: plain and fused concatenations appear
        s2 = CoxeterSystem("A", 2)
        out = sigma_induce(s2, frozenset(), sigma_basis(frozenset()))
        assert out.terms == {frozenset(): 1, frozenset([1]): 1}

    def test_full_subset_is_identity(self):
        for K in all_subsets(B3):
            assert sigma_restrict(B3, B3.generator_set, sigma_basis(K)) == sigma_basis(K)
            assert sigma_induce(B3, B3.generator_set, sigma_basis(K)).terms == {K: 1}


class TestIntervalCriterion:
    def test_identity_rep(self):
        for I in all_subsets(B3):
            for K in (X for X in all_subsets(B3) if X <= I):
                low, high = interval_bounds(B3.identity(), I, K)
                assert low == K and high == K

    def test_full_subset_case(self):
        S = B3.generator_set
        assert list(min_coset_reps(B3, S, "right")) == [B3.identity()]
        for K in all_subsets(B3):
            assert is_class_rep(B3.identity(), S, K)

    def test_exhaustive_interval_criterion(self):
        for I in all_subsets(B3):
            WI = parabolic_elements(B3, I)
            for z in min_coset_reps(B3, I, "right"):
                for K in all_subsets(B3):
                    actual = {u for u in WI if (u * z).descent_set() == K}
                    if is_class_rep(z, I, K):
                        low, high = interval_bounds(z, I, K)
                        assert low <= high
                        predicted = {u for u in WI if low <= u.descent_set() <= high}
                    else:
                        predicted = set()
                    assert actual == predicted


class TestDualFormulas:
    def test_restrict_is_intersection(self):
        for I in all_subsets(B3):
            for K in all_subsets(B3):
                out = sigma_star_restrict(B3, I, sigma_star_basis(K))
                assert out.terms == {K & I: 1}

    def test_star_induce_term_count(self):
        for I in all_subsets(B3):
            out = sigma_star_induce(B3, I, sigma_star_basis(frozenset()))
            assert out.coefficient_sum() == len(min_coset_reps(B3, I, "right"))

    def test_star_induce_rep_independent(self):
        for I in all_subsets(B3):
            reps = min_coset_reps(B3, I, "right")
            for J in (X for X in all_subsets(B3) if X <= I):
                target = sigma_star_induce(B3, I, sigma_star_basis(J))
                for u in descent_class(B3, J, within=I):
                    direct = FormalVector(
                        (((u * z).descent_set(), 1) for z in reps), kind="sigma_star")
                    assert direct == target

    def test_adjunction_b2(self):
        for I in all_subsets(B2):
            for J in (X for X in all_subsets(B2) if X <= I):
                for K in all_subsets(B2):
                    lhs = sigma_induce(B2, I, sigma_basis(J)).pairing(
                        FormalVector.basis(K, kind="sigma"))
                    rhs = FormalVector(
                        sigma_star_restrict(B2, I, sigma_star_basis(K)).terms,
                        kind="sigma").pairing(sigma_basis(J))
                    assert lhs == rhs


class TestSymLevel:
    @pytest.mark.parametrize("system", (B3,))
    def test_sym_maps_commute_with_dual_expansion(self, system):
        for I in all_subsets(system):
            for J in (X for X in all_subsets(system) if X <= I):
                lhs = sym_to_sigma_star(system, sym_induce(system, I, sym_basis(J)))
                rhs = sigma_star_induce(
                    system, I, sym_to_sigma_star(system, sym_basis(J), within=I))
                assert lhs == rhs
            for K in all_subsets(system):
                lhs = sym_to_sigma_star(system, sym_restrict(system, I, sym_basis(K)), within=I)
                rhs = sigma_star_restrict(system, I, sym_to_sigma_star(system, sym_basis(K)))
                assert lhs == rhs

    def test_sym_restrict_type_a_instance(self):
        # restriction along the block subset mirrors the cap on class level
        system = A4
        I = frozenset([1, 3])
        for K in all_subsets(system):
            out = sym_restrict(system, I, sym_basis(K))
            oracle = collect_by_descents(
                system, restrict_right(system, I, embed_sigma(system, sigma_basis(K))),
                within=I)
            assert out.terms == oracle.terms


class TestPairCountForm:
    def test_trivial_entry(self):
        assert mutual_descent_count(B3, frozenset(), frozenset()) == 1

    def test_two_routes_around_the_diamond(self):
        # projecting the embedded class sum = expanding the sym vector
        from coxkit.groupmaps import descent_projection_inv

        for I in all_subsets(B3):
            via_group = descent_projection_inv(B3, embed_sigma(B3, sigma_basis(I)))
            via_sym = sym_to_sigma_star(B3, sym_basis(I))
            assert via_group == via_sym

    def test_embedding_adjoint_to_projection(self):
        # dual coordinates of the sym vectors ARE the pair counts
        for I in all_subsets(B3):
            expanded = sym_to_sigma_star(B3, sym_basis(I))
            for J in all_subsets(B3):
                assert expanded[J] == mutual_descent_count(B3, I, J)

    @pytest.mark.parametrize("system", (A3, B2, B3))
    def test_symmetric(self, system):
        for I in all_subsets(system):
            for J in all_subsets(system):
                assert mutual_descent_count(system, I, J) == mutual_descent_count(system, J, I)

    def test_s3_matrix_margins(self):
        s3 = CoxeterSystem("A", 3)
        subs = all_subsets(s3)
        mat = c_matrix(s3)
        for i, I in enumerate(subs):
            assert sum(mat[i]) == len(descent_class(s3, I))
            assert sum(row[i] for row in mat) == len(descent_class(s3, I))

    @pytest.mark.parametrize("system", (A3, B2, B3))
    def test_rank_equals_span_dimension(self, system):
        # Gram of a spanning family: nondegenerate on the span means the
        # rank matches the dimension of the spanned subspace
        vecs = [sym_to_sigma_star(system, sym_basis(I)) for I in all_subsets(system)]
        keys = sorted({k for v in vecs for k in v.terms}, key=repr)
        span_dim = matrix_rank([[v.terms.get(k, 0) for k in keys] for v in vecs])
        assert matrix_rank(c_matrix(system)) == span_dim
        assert span_dim == len(parabolic_conjugacy_classes(system))

    def test_b2_full_rank(self):
        from coxkit.linalg import determinant
        assert determinant(c_matrix(B2)) != 0


class TestDoubleCosets:
    @pytest.mark.parametrize("system", (A3, B3))
    def test_weak_count_equals_double_cosets(self, system):
        S = system.generator_set
        for I in all_subsets(system):
            for J in all_subsets(system):
                assert weak_descent_count(system, I, J) \
                    == double_coset_count(system, S - I, S - J)


class TestClassBases:
    @pytest.mark.parametrize("system,count", [(A4, 5), (B3, 7), (B2, 4)])
    def test_h_basis_size(self, system, count):
        assert len(h_class_basis(system)) == count

    @pytest.mark.parametrize("system", (A4, B3))
    def test_h_constant_exactly_on_classes(self, system):
        vec = {I: h_in_monomial_coordinates(system, I) for I in all_subsets(system)}
        for I in all_subsets(system):
            for J in all_subsets(system):
                same_class = conjugacy_class_of(system, I) == conjugacy_class_of(system, J)
                assert (vec[I] == vec[J]) == same_class

    @pytest.mark.parametrize("system", (A4, B3))
    def test_h_linearly_independent(self, system):
        hs = list(h_class_basis(system).values())
        keys = sorted({k for v in hs for k in v.terms}, key=repr)
        assert matrix_rank([[v.terms.get(k, 0) for k in keys] for v in hs]) == len(hs)

    @pytest.mark.parametrize("system", (A4, B3))
    def test_h_m_duality_over_rationals(self, system):
        # express each m in the h's, pair with the weak-count Gram: identity
        labels = [class_label(c) for c in parabolic_conjugacy_classes(system)]
        hs = h_class_basis(system)
        ms = m_class_basis(system)
        gram = {(a, b): weak_descent_count(system, a, b) for a in labels for b in labels}
        basis = [hs[l] for l in labels]
        for j, mu in enumerate(labels):
            coeffs = express_in_basis(ms[mu], basis)
            for i, lam in enumerate(labels):
                pairing = sum(c * gram[(lam, nu)] for c, nu in zip(coeffs, labels))
                assert pairing == (1 if i == j else 0), (lam, mu)

    def _p_as_polynomial(self, system, vec, K):
        poly = CPoly()
        for I, coeff in vec.items():
            assert coeff.denominator == 1
            poly = poly + monomial_qsym(
                composition_from_descents(system, I), K).scale(int(coeff))
        return poly

    def test_power_sums_type_a_small_classes(self):
        # the weighted-subset sum reproduces the classical power sums on the
        # coarsest classes and on every class of the two-letter group
        s2 = CoxeterSystem("A", 2)
        K = 4
        ps = p_class_basis(s2)
        assert self._p_as_polynomial(s2, ps[frozenset()], K) == sym_p((2,), K)
        assert self._p_as_polynomial(s2, ps[frozenset([1])], K) == sym_p((1, 1), K)
        s3 = CoxeterSystem("A", 3)
        ps3 = p_class_basis(s3)
        assert self._p_as_polynomial(s3, ps3[frozenset()], K) == sym_p((3,), K)
        assert self._p_as_polynomial(s3, ps3[frozenset([1])], K) == sym_p((2, 1), K)

    def test_power_sum_extreme_weights(self):
        # weight 1 on the empty subset, group order on the full subset
        for system in (CoxeterSystem("A", 3), B2):
            assert class_index(system, frozenset()) == 1
            assert class_index(system, system.generator_set) == system.order()

    def test_power_sum_weight_is_representative_dependent(self):
        # the subset sum genuinely depends on the chosen class member (equal
        # shapes do not see the same sub-classes), so a canonical
        # representative is fixed; pin its output as a regression value
        system = A4
        reps = (frozenset([1, 2]), frozenset([1, 3]))
        sums = []
        for I in reps:
            acc = FormalVector(kind="monomial")
            from coxkit.descents import m_class_basis
            m_vecs = m_class_basis(system)
            for J in all_subsets(system):
                if J <= I:
                    acc = acc + m_vecs[class_label(conjugacy_class_of(system, J))].scale(
                        class_index(system, J))
            sums.append(acc)
        assert sums[0] != sums[1]
        assert p_class_basis(system)[class_label(conjugacy_class_of(system, reps[0]))] == sums[0]

    def test_b2_power_sums_rational(self):
        ps = p_class_basis(B2)
        assert all(isinstance(c, Fraction) for v in ps.values() for c in v.terms.values())

    @pytest.mark.parametrize("system", (A4, B3))
    def test_gram_equals_double_cosets(self, system):
        labels, gram = h_gram_matrix(system)
        S = system.generator_set
        for i, a in enumerate(labels):
            for j, b in enumerate(labels):
                assert gram[i][j] == double_coset_count(system, S - a, S - b)
