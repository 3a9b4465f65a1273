import pytest

from utchar.algebra import NilAlgebra, Pattern
from utchar.chain import quasimonomial_kernels
from utchar.duals import is_quasi_monomial, orbit_keys, orbit, shape
from utchar.exotic import (abelian_quotient_split, build_regions,
                           constant_diagonal_algebra, corner_functional,
                           corner_character_analysis, exotic_functional,
                           exotic_functional_parts, exotic_quasimonomial,
                           exotic_report, exotic_shape,
                           torus_shape_transitivity,
                           verify_chain_closed_forms)
from utchar.scalars import field_make

F2 = field_make(2)
F3 = field_make(3)
F4 = field_make(2, 2)


def test_functional_entries_r2():
    lam = exotic_functional(2, F2)
    entries = lam.entries()
    minus = {(1, 3), (2, 4), (3, 8), (4, 9)}
    plus = {(1, 5), (2, 6), (3, 10), (4, 11), (5, 7), (6, 8), (7, 9),
            (8, 12), (9, 13)}
    assert set(entries) == minus | plus
    assert len(entries) == 13
    lam3 = exotic_functional(2, F3).entries()
    assert all(lam3[p] == F3.neg(1) for p in minus)
    assert all(lam3[p] == 1 for p in plus)


def test_functional_counts_and_quasimonomial_part():
    for r in (2, 3, 4):
        lam = exotic_functional(r, F2)
        assert len(lam.entries()) == 6 * r + 1
        plus, minus = exotic_functional_parts(r, F2)
        assert is_quasi_monomial(plus)
        assert not set(plus.entries()) & set(minus.entries())
    with pytest.raises(ValueError):
        exotic_functional(1, F2)


def test_functional_lies_in_right_orbit_of_quasimonomial_part():
    # the defining functional differs from its quasi-monomial part by
    # entries supported on the first-step obstruction positions
    for r in (2, 3):
        lam = exotic_functional(r, F2)
        lamp = exotic_quasimonomial(r, F2)
        alg = lam.algebra
        qk = quasimonomial_kernels(alg, lamp)
        diff = (lam - lamp).entries()
        assert set(diff) <= qk.right_orbit_positions


def test_regions_r2_frozen():
    atlas = build_regions(2)
    assert atlas.A == frozenset({(4, 8)})
    assert atlas.B == frozenset({(3, 4)})
    assert atlas.C == frozenset({(2, 3)})
    assert atlas.D == frozenset({(1, 2), (2, 5)})
    assert atlas.Ap == frozenset({(7, 8)})
    assert atlas.Bp == frozenset({(6, 7)})
    assert atlas.Cp == frozenset({(5, 6)})
    assert atlas.mirror[(4, 8)] == (7, 8)
    assert len(atlas.Z) == 12 and len(atlas.D) == 2
    assert atlas.Z1 == frozenset({(3, 5), (3, 6), (4, 5), (4, 6),
                                  (3, 7), (4, 7)})
    orbits = atlas.mirror_orbits_on_d()
    assert len(orbits) == 1 and set(orbits[0]) == {(1, 2), (2, 5)}


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6, 7, 8])
def test_region_invariants(r):
    atlas = build_regions(r)
    assert atlas.validate()
    assert len(atlas.Z1) == r * r + r
    assert len(atlas.Z2) == len(atlas.Z4) == (r * r - r) // 2
    assert len(atlas.Z3) == r * r


def test_first_step_obstructions_match_regions():
    for r in (2, 3, 4):
        atlas = build_regions(r)
        alg = NilAlgebra.pattern_algebra(Pattern.full(6 * r + 1), F2)
        qk = quasimonomial_kernels(alg, exotic_quasimonomial(r, F2))
        assert qk.perp_l == atlas.lettered | atlas.Z | atlas.Zp
        assert qk.perp_s == atlas.Z


def test_shape():
    shp = exotic_shape(2, 13)
    assert shp.sorted_parts() == [[1, 5, 7, 9, 13], [2, 6, 8, 12],
                                  [3, 10], [4, 11]]
    assert len(shp) == 13 - 8 - 1
    padded = exotic_shape(2, 15)
    assert padded.sorted_parts()[-2:] == [[14], [15]]
    assert len(padded) == 15 - 8 - 1
    for r in (2, 3, 4):
        assert shape(exotic_quasimonomial(r, F2)) == exotic_shape(r)
    with pytest.raises(ValueError):
        exotic_shape(2, 12)


@pytest.mark.parametrize("r,field", [(2, F2), (2, F3), (2, F4), (3, F2),
                                     (4, F2)])
def test_verify_chain_closed_forms(r, field):
    tech, ch, atlas = verify_chain_closed_forms(r, field)
    assert tech.ok
    assert tech.dim_s_bar == 13 * r * r + 5 * r
    assert tech.dim_l_bar == tech.dim_s_bar - (r - 1)
    assert tech.dim_ambient - tech.dim_l_bar == 5 * r * r - r - 1
    assert tech.dim_ambient - tech.dim_s_bar == 5 * r * r - 2 * r
    assert tech.stabilization == 4


def test_exotic_chain_satisfies_ideal_laws():
    _, ch, _ = verify_chain_closed_forms(2, F2)
    assert ch.validate()


def test_chain_matches_dense_oracle_at_r2():
    from oracles import dense_chain, subspace_dense_rows
    for field in (F2, F3):
        tech, ch, _ = verify_chain_closed_forms(2, field)
        assert tech.ok
        l_steps, s_steps = dense_chain(ch.algebra, ch.functional)
        assert len(l_steps) == len(ch.l_list) - 1
        for i, dense in enumerate(l_steps, start=1):
            assert subspace_dense_rows(ch.l_list[i]) == dense
        for i, dense in enumerate(s_steps, start=1):
            assert subspace_dense_rows(ch.s_list[i]) == dense


def test_quotient_split_r2():
    for field in (F2, F3):
        _, ch, _ = verify_chain_closed_forms(2, field)
        split = abelian_quotient_split(2, field, ch)
        assert split.ok
        assert split.a_span.dim == 2  # isomorphic image has dimension r
        assert split.h_span.dim == ch.s_bar.dim - 2


def test_quotient_split_r3():
    _, ch, _ = verify_chain_closed_forms(3, F2)
    split = abelian_quotient_split(3, F2, ch)
    assert split.ok
    assert split.a_span.dim == 3


def test_constant_diagonal_algebra():
    a3 = constant_diagonal_algebra(3, F2)
    assert a3.dim == 2 and a3.is_commutative()
    assert len(list(a3.enumerate_group())) == 4
    a43 = constant_diagonal_algebra(4, F3)
    assert a43.dim == 3 and a43.is_commutative()
    kappa = corner_functional(a43)
    assert len(orbit_keys(orbit(kappa, "coadjoint"))) == 1


@pytest.mark.parametrize("n,q,psi_char,psi_exp_char", [
    (2, 2, True, True),
    (3, 2, False, False),
    (2, 3, True, True),
    (3, 3, False, True),
    (4, 3, False, False),
    (3, 4, False, False),
])
def test_corner_analysis_character_flags(n, q, psi_char, psi_exp_char):
    rep = corner_character_analysis(n, field_make(q) if q != 4 else F4)
    assert rep.kirillov_is_character is psi_char
    assert rep.exp_kirillov_is_character is psi_exp_char
    assert rep.constituent_count == q ** (n - 2)
    assert rep.chi_degree == q ** (n - 2)
    assert rep.chi_formula_matches
    assert rep.constituents_distinct and rep.constituents_sum_matches


def test_corner_analysis_conductors():
    # the maximal constituent conductor is p times the largest power of p
    # below n, which is also the maximal element order
    for n, q, cond in ((2, 2, 2), (3, 2, 4), (4, 2, 4), (5, 2, 8),
                       (2, 3, 3), (3, 3, 3), (4, 3, 9)):
        rep = corner_character_analysis(n, field_make(q))
        assert rep.max_constituent_conductor == cond
        assert rep.max_element_order == cond


def test_exotic_report_r2_q2():
    rep = exotic_report(2, F2)
    assert rep.ok
    assert rep.n == 13
    assert rep.dim_s_bar == 62 and rep.dim_l_bar == 61
    assert rep.xi_degree_exponent == 17
    assert rep.xi_norm_exponent == 1
    assert rep.constituent_count == 2
    assert rep.constituent_degree_exponent == 16
    assert rep.kirillov_degree_exponent == 16
    assert rep.xi_set_size_exponent == 2 * 16 + 1
    assert rep.value_field_conductor == 4
    assert rep.value_field_min_level == 2
    assert rep.kirillov_is_character is False
    assert rep.exp_kirillov_is_character is False
    assert rep.shape.sorted_parts()[0] == [1, 5, 7, 9, 13]
    assert rep.provenance["value_field_on_full_group"].startswith("lifted")


def test_exotic_report_r2_q3_flips_exp_kirillov():
    rep = exotic_report(2, F3)
    assert rep.ok
    assert rep.kirillov_is_character is False
    assert rep.exp_kirillov_is_character is True  # r = 2 < p = 3
    assert rep.xi_degree_exponent == 17


def test_exotic_report_padding():
    rep = exotic_report(2, F2, n=15)
    assert rep.n == 15
    assert rep.xi_degree_exponent == 17
    assert len(rep.shape) == 15 - 8 - 1


def test_torus_shape_transitivity():
    ok, size, expected = torus_shape_transitivity(2, F2)
    assert ok and size == expected == 1
    ok, size, expected = torus_shape_transitivity(2, F3)
    assert ok
    assert size == expected == 2 ** 9
