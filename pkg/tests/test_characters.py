import itertools

from utchar.algebra import (GroupElement, NilAlgebra, NilMatrix, Pattern,
                            Subspace, trunc_exp)
from utchar.chain import chain_compute
from utchar.characters import (ClassFunction, GroupTable, abelian_dual,
                               constituents_of_induced_linear, exp_kirillov,
                               field_of_values, homomorphism_defect, induce,
                               inner_product, is_character_linear, kirillov,
                               restrict, supercharacter, theta_lambda, xi)
from utchar.duals import Functional, orbit, orbit_keys
from utchar.exotic import constant_diagonal_algebra, corner_functional
from utchar.scalars import CyclotomicNumber, field_make

from oracles import random_functional

F2 = field_make(2)
F3 = field_make(3)
ONE = CyclotomicNumber.one()
ZERO = CyclotomicNumber.zero()

U32 = NilAlgebra.pattern_algebra(Pattern.full(3), F2)
G32 = GroupTable.from_algebra(U32)
U33 = NilAlgebra.pattern_algebra(Pattern.full(3), F3)
G33 = GroupTable.from_algebra(U33)
U42 = NilAlgebra.pattern_algebra(Pattern.full(4), F2)
G42 = GroupTable.from_algebra(U42)


def all_functionals(alg):
    q = alg.field.q
    return [Functional(alg, v)
            for v in itertools.product(range(q), repeat=alg.dim)]


def test_theta_basics():
    lam0 = Functional.zero(U32)
    assert all(v == ONE for v in theta_lambda(G32, lam0).values)
    u2 = NilAlgebra.pattern_algebra(Pattern.full(2), F2)
    g2 = GroupTable.from_algebra(u2)
    th = theta_lambda(g2, Functional.from_entries(u2, {(1, 2): 1}))
    assert th(GroupElement(NilMatrix.elementary(Pattern.full(2), F2, 1, 2))) \
        == CyclotomicNumber.rational(-1)


def test_theta_orthonormality_exhaustive_u3():
    for group in (G32, G33):
        lams = all_functionals(group.algebra)
        thetas = [theta_lambda(group, lam) for lam in lams]
        for i, f in enumerate(thetas):
            for j, g in enumerate(thetas):
                assert f.inner(g) == (ONE if i == j else ZERO)


def test_kirillov_frozen_values_ut32():
    lam = Functional.from_entries(U32, {(1, 3): 1})
    psi = kirillov(G32, lam)
    assert psi.degree == CyclotomicNumber.rational(2)
    e13 = GroupElement(NilMatrix.elementary(Pattern.full(3), F2, 1, 3))
    assert psi(e13) == CyclotomicNumber.rational(-2)
    assert sum(1 for v in psi.values if not v.is_zero()) == 2


def test_kirillov_degree_is_sqrt_orbit(rng):
    for alg, group in ((U42, G42), (U33, G33)):
        for _ in range(8):
            lam = random_functional(rng, alg)
            psi = kirillov(group, lam)
            size = len(orbit(lam, "coadjoint"))
            assert psi.degree * psi.degree == CyclotomicNumber.rational(size)


def test_kirillov_orthonormal_on_class_functions():
    for group, alg in ((G32, U32), (G33, U33)):
        reps = {}
        for lam in all_functionals(alg):
            key = min(orbit_keys(orbit(lam, "coadjoint")))
            reps.setdefault(key, lam)
        psis = [kirillov(group, lam) for lam in reps.values()]
        assert len(psis) == len(reps)
        for i, f in enumerate(psis):
            assert f.is_constant_on_conjugacy_samples()
            for j, g in enumerate(psis):
                assert f.inner(g) == (ONE if i == j else ZERO)


def test_exp_kirillov_orthonormal_on_class_functions():
    reps = {}
    for v in itertools.product(range(3), repeat=3):
        lam = Functional(U33, v)
        reps.setdefault(min(orbit_keys(orbit(lam, "coadjoint"))), lam)
    psis = [exp_kirillov(G33, lam) for lam in reps.values()]
    for i, f in enumerate(psis):
        for j, g in enumerate(psis):
            assert f.inner(g) == (ONE if i == j else ZERO)


def test_exp_kirillov_equals_kirillov_in_char2():
    for lam in all_functionals(U32):
        assert exp_kirillov(G32, lam) == kirillov(G32, lam)


def test_exp_kirillov_is_kirillov_through_exp():
    u4 = NilAlgebra.pattern_algebra(Pattern.full(4), F3)
    g4 = GroupTable.from_algebra(u4)
    lam = Functional.from_entries(u4, {(1, 3): 1, (2, 4): 2})
    psi = kirillov(g4, lam)
    psi_exp = exp_kirillov(g4, lam)
    for mat in u4.span.enumerate_matrices():
        assert psi_exp(trunc_exp(mat)) == psi(GroupElement(mat))


def test_supercharacter_values_and_norm():
    lam = Functional.from_entries(U32, {(1, 3): 1})
    chi = supercharacter(G32, lam)
    assert chi.degree == CyclotomicNumber.rational(2)
    assert inner_product(chi, chi) == ONE
    lam0 = Functional.zero(U32)
    assert all(v == ONE for v in supercharacter(G32, lam0).values)


def test_supercharacter_inner_products_on_quasimonomials():
    from utchar.duals import is_quasi_monomial
    qms = [lam for lam in all_functionals(U42) if is_quasi_monomial(lam)]
    assert len(qms) == 15  # one per set partition of [4]
    chis = {lam.key(): supercharacter(G42, lam) for lam in qms}
    for lam in qms:
        two_sided = orbit_keys(orbit(lam, "two-sided"))
        left = orbit_keys(orbit(lam, "left"))
        right = orbit_keys(orbit(lam, "right"))
        expected = CyclotomicNumber.rational(len(left & right))
        for mu in qms:
            got = inner_product(chis[lam.key()], chis[mu.key()])
            if mu.key() in two_sided:
                assert got == expected
            else:
                assert got == ZERO


def test_xi_equals_induced_and_equals_chi_when_irreducible():
    lam = Functional.from_entries(U32, {(1, 3): 1})
    data = xi(U32, lam, group=G32)
    assert data.degree_exponent == 1 and data.norm_exponent == 0
    assert data.is_irreducible
    assert data.table == supercharacter(G32, lam)
    assert data.table == kirillov(G32, lam)


def test_xi_equals_supercharacter_when_s_bar_is_everything():
    for entries in ({}, {(1, 2): 1}, {(2, 3): 1}, {(1, 2): 1, (2, 3): 1}):
        lam = Functional.from_entries(U32, entries)
        data = xi(U32, lam, group=G32)
        if data.chain.s_bar == U32.span:
            assert data.table == supercharacter(G32, lam)


def test_xi_without_group_returns_structural_data_only():
    lam = Functional.from_entries(U42, {(1, 4): 1})
    data = xi(U42, lam)
    assert data.table is None
    assert data.degree_exponent == 2 and data.norm_exponent == 0
    # the structural report survives a cap too small for the subgroup table
    capped = xi(U42, lam, group=G42, cap=2)
    assert capped.table is None
    assert capped.degree_exponent == 2


def test_xi_formula_as_orbit_sum():
    from utchar.characters import xi_set
    lam = Functional.from_entries(U42, {(1, 4): 1, (2, 3): 1})
    data = xi(U42, lam, group=G42)
    ch = data.chain
    functionals = xi_set(G42, lam, ch.s_bar)
    size_expected = 2 ** (2 * U42.dim - ch.l_bar.dim - ch.s_bar.dim)
    assert len(functionals) == size_expected
    th = G42.theta
    from fractions import Fraction
    scale = Fraction(2 ** ch.s_bar.dim, G42.size)
    for g, value in zip(G42.elements, data.table.values):
        acc = CyclotomicNumber.zero()
        for mu in functionals:
            acc = acc + th(mu.evaluate_group(g))
        assert acc.scale(scale) == value


def test_xi_inner_products():
    lam = Functional.from_entries(U42, {(1, 4): 1, (2, 3): 1})
    mu = Functional.from_entries(U42, {(1, 3): 1})
    data_l = xi(U42, lam, group=G42)
    data_m = xi(U42, mu, group=G42)
    norm = inner_product(data_l.table, data_l.table)
    assert norm == CyclotomicNumber.rational(2 ** data_l.norm_exponent)
    from utchar.characters import xi_set
    in_xi = mu.key() in {f.key() for f in
                         xi_set(G42, lam, data_l.chain.s_bar)}
    cross = inner_product(data_l.table, data_m.table)
    if in_xi:
        assert cross == norm
    else:
        assert cross == ZERO


def test_induce_from_trivial_subgroup_gives_regular_character():
    u2 = NilAlgebra.pattern_algebra(Pattern.full(2), F2)
    g2 = GroupTable.from_algebra(u2)
    triv = GroupTable.from_subspace(u2, Subspace.zero(Pattern.full(2), F2))
    reg = induce(ClassFunction(triv, [ONE]), g2)
    assert reg.degree == CyclotomicNumber.rational(2)
    nonid = [v for g, v in zip(g2.elements, reg.values)
             if not g.is_identity()]
    assert all(v == ZERO for v in nonid)


def test_frobenius_reciprocity(rng):
    span = Subspace.from_matrices(
        Pattern.full(3), F2,
        [NilMatrix.elementary(Pattern.full(3), F2, 1, 3),
         NilMatrix.elementary(Pattern.full(3), F2, 2, 3)])
    sub = GroupTable.from_subspace(U32, span)
    values = [ONE, CyclotomicNumber.rational(-1), ZERO,
              CyclotomicNumber.rational(2)]
    for _ in range(8):
        f = ClassFunction(sub, [rng.choice(values) for _ in range(sub.size)])
        g = kirillov(G32, random_functional(rng, U32))
        assert induce(f, G32).inner(g) == f.inner(restrict(g, sub))


def test_induction_transitivity():
    p4 = Pattern.full(4)
    h_span = Subspace.from_matrices(
        p4, F2, [NilMatrix.elementary(p4, F2, *pos)
                 for pos in ((1, 3), (1, 4), (2, 4), (3, 4))])
    k_span = Subspace.from_matrices(
        p4, F2, [NilMatrix.elementary(p4, F2, *pos)
                 for pos in ((1, 4), (2, 4))])
    H = GroupTable.from_subspace(U42, h_span)
    K = GroupTable.from_subspace(U42, k_span)
    f = theta_lambda(K, Functional.from_entries(U42, {(1, 4): 1}))
    assert induce(induce(f, H), G42) == induce(f, G42)


def test_abelian_dual_a32():
    a3 = constant_diagonal_algebra(3, F2)
    A3 = GroupTable.from_algebra(a3)
    assert A3.is_abelian() and A3.size == 4
    dual = abelian_dual(A3)
    assert len(dual) == 4
    assert dual.modulus == 4 and dual.structure == [4]
    x = GroupElement(NilMatrix(Pattern.full(3), F2,
                               {(1, 2): 1, (2, 3): 1}))
    values_at_x = [psi(x) for psi in dual.characters]
    for k in range(4):
        assert sum(1 for v in values_at_x
                   if v == CyclotomicNumber.zeta(4, k)) == 1
    for i, f in enumerate(dual.characters):
        for j, g in enumerate(dual.characters):
            assert f.inner(g) == (ONE if i == j else ZERO)


def test_abelian_dual_klein_group():
    p4 = Pattern(4, [(1, 2), (3, 4)])
    alg = NilAlgebra.pattern_algebra(p4, F2)
    group = GroupTable.from_algebra(alg)
    dual = abelian_dual(group)
    assert len(dual) == 4
    assert sorted(dual.structure) == [2, 2]
    for psi in dual.characters:
        assert all(v == ONE or v == CyclotomicNumber.rational(-1)
                   for v in psi.values)


def test_abelian_dual_a2q_is_field_additive_group():
    for field in (F2, F3):
        u2 = NilAlgebra.pattern_algebra(Pattern.full(2), field)
        group = GroupTable.from_algebra(u2)
        dual = abelian_dual(group)
        assert len(dual) == field.q
        assert all(is_character_linear(psi) for psi in dual.characters)


def test_constituents_of_corner_supercharacter():
    a3 = constant_diagonal_algebra(3, F2)
    A3 = GroupTable.from_algebra(a3)
    kappa = corner_functional(a3)
    ch = chain_compute(a3, kappa)
    assert ch.l_bar.dim == 1 and ch.s_bar == a3.span
    L = GroupTable.from_subspace(a3, ch.l_bar)
    theta_l = theta_lambda(L, kappa)
    dual = abelian_dual(A3)
    cons = constituents_of_induced_linear(dual, L, theta_l)
    assert len(cons) == 2
    total = cons[0] + cons[1]
    assert total == induce(theta_l, A3)
    x = GroupElement(NilMatrix(Pattern.full(3), F2, {(1, 2): 1, (2, 3): 1}))
    assert {str(c(x).coeffs) for c in cons} == \
        {str(CyclotomicNumber.zeta(4).coeffs),
         str(CyclotomicNumber.zeta(4, 3).coeffs)}
    # full-group restriction: single constituent
    cons_all = constituents_of_induced_linear(
        dual, A3, dual.characters[1])
    assert cons_all == [dual.characters[1]]


def test_kirillov_equals_theta_on_abelian_groups():
    from utchar.characters import kirillov_equals_theta_on_abelian
    a3 = constant_diagonal_algebra(3, F2)
    A3 = GroupTable.from_algebra(a3)
    kappa = corner_functional(a3)
    assert kirillov_equals_theta_on_abelian(A3, kappa) == kirillov(A3, kappa)
    assert kirillov(A3, kappa) == theta_lambda(A3, kappa)


def test_is_character_linear_and_witnesses():
    u2 = NilAlgebra.pattern_algebra(Pattern.full(2), F3)
    A2 = GroupTable.from_algebra(u2)
    k2 = Functional.from_entries(u2, {(1, 2): 1})
    assert is_character_linear(kirillov(A2, k2))
    a3 = constant_diagonal_algebra(3, F2)
    A3 = GroupTable.from_algebra(a3)
    psi = kirillov(A3, corner_functional(a3))
    assert not is_character_linear(psi)
    g, h = homomorphism_defect(psi)
    assert psi(g * h) != psi(g) * psi(h)


def test_exp_kirillov_character_threshold_on_constant_diagonal():
    # character iff n <= p
    a33 = constant_diagonal_algebra(3, F3)
    A33 = GroupTable.from_algebra(a33)
    assert is_character_linear(
        exp_kirillov(A33, corner_functional(a33)))
    a43 = constant_diagonal_algebra(4, F3)
    A43 = GroupTable.from_algebra(a43)
    assert not is_character_linear(
        exp_kirillov(A43, corner_functional(a43)))


def test_field_of_values():
    triv = ClassFunction(G32, [ONE] * G32.size)
    fov = field_of_values(triv)
    assert fov.conductor == 1 and fov.min_level == 0
    a3 = constant_diagonal_algebra(3, F2)
    A3 = GroupTable.from_algebra(a3)
    dual = abelian_dual(A3)
    levels = sorted(
        (field_of_values(c).conductor, field_of_values(c).min_level)
        for c in dual.characters)
    assert levels == [(1, 0), (2, 0), (4, 2), (4, 2)]


def test_field_of_values_conductor9():
    a4 = constant_diagonal_algebra(4, F3)
    A4 = GroupTable.from_algebra(a4)
    dual = abelian_dual(A4)
    conductors = {field_of_values(c).conductor for c in dual.characters}
    assert 9 in conductors
    hot = [c for c in dual.characters
           if field_of_values(c).conductor == 9]
    assert all(field_of_values(c).min_level == 2 for c in hot)


def test_inflation_identities_u42():
    p4 = Pattern.full(4)
    sub_span = Subspace.from_matrices(
        p4, F2, [NilMatrix.elementary(p4, F2, *pos)
                 for pos in ((1, 2), (1, 3), (2, 3))])
    ideal = Subspace.from_matrices(
        p4, F2, [NilMatrix.elementary(p4, F2, i, 4) for i in (1, 2, 3)])
    from utchar.algebra import quotient_project
    proj = quotient_project(U42, sub_span, ideal)
    sub_alg = NilAlgebra.from_subspace(sub_span, F2)
    A = GroupTable.from_algebra(sub_alg)
    for entries in ({(1, 3): 1}, {(1, 2): 1}, {(1, 3): 1, (2, 3): 1},
                    {(1, 2): 1, (2, 3): 1}):
        lam = Functional.from_entries(U42, entries)
        mu = Functional.from_entries(sub_alg, entries)
        psi_lam = kirillov(G42, lam)
        psi_mu = kirillov(A, mu)
        chi_lam = supercharacter(G42, lam)
        chi_mu = supercharacter(A, mu)
        psi_exp_lam = exp_kirillov(G42, lam)
        psi_exp_mu = exp_kirillov(A, mu)
        xi_lam = xi(U42, lam, group=G42)
        xi_mu = xi(sub_alg, mu, group=A)
        for g in G42.elements:
            image = proj.project_group(g)
            assert psi_lam(g) == psi_mu(image)
            assert chi_lam(g) == chi_mu(image)
            assert psi_exp_lam(g) == psi_exp_mu(image)
            assert xi_lam.table(g) == xi_mu.table(image)
        # l_bar and s_bar pull back through the projection
        lam_chain = xi_lam.chain
        mu_chain = xi_mu.chain
        pulled_l = mu_chain.l_bar.sum_with(ideal)
        pulled_s = mu_chain.s_bar.sum_with(ideal)
        assert lam_chain.l_bar == pulled_l
        assert lam_chain.s_bar == pulled_s


def test_induce_rejects_nothing_but_class_functions_silently():
    # restriction then induction satisfies the exact Frobenius formula
    span = Subspace.from_matrices(
        Pattern.full(3), F2,
        [NilMatrix.elementary(Pattern.full(3), F2, 1, 3)])
    sub = GroupTable.from_subspace(U32, span)
    lam = Functional.from_entries(U32, {(1, 3): 1})
    th = theta_lambda(sub, lam)
    ind = induce(th, G32)
    assert ind.degree == CyclotomicNumber.rational(4)
