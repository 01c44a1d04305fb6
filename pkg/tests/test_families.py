from fractions import Fraction

import pytest

from spectheta.enumeration import canonical_form
from spectheta.families import (
    FamilySpec,
    closed_form_rho,
    f_poly,
    g4_partition,
    make_G4,
    make_S,
    make_S_minus,
    make_complete_split,
    make_double_star,
    make_graph,
    make_star,
    make_star_matching,
    make_theta,
    parse_family_spec,
    s_minus_partition,
    s_partition,
    split_partition,
)
from spectheta.polynomials import Polynomial
from spectheta.quadratic import QuadExt
from spectheta.spectral import NonEquitableWitness, is_equitable, spectral_radius


def test_join_family_shape():
    g = make_S(10, 3)
    assert g.n == 10 and g.m == 3 + 3 * 7
    assert all(g.has_edge(u, v) for u in range(3) for v in range(3, 10))
    assert not g.has_edge(3, 4)
    with pytest.raises(ValueError):
        make_S(3, 3)
    with pytest.raises(ValueError):
        make_S(5, 0)


def test_join_family_minus_edge():
    g = make_S_minus(10, 2)
    base = make_S(10, 2)
    assert g.m == base.m - 1
    assert not g.has_edge(9, 1)
    assert g.has_edge(9, 0)
    assert g.m == 2 * 10 - 4
    with pytest.raises(ValueError):
        make_S_minus(3, 2)


def test_star_and_matching_families():
    assert make_star(0).n == 1
    assert make_star(6).m == 6
    g = make_star_matching(9, 3)
    assert g.n == 9 and g.m == 8 + 3
    assert g.has_edge(1, 2) and g.has_edge(3, 4) and g.has_edge(5, 6)
    assert not g.has_edge(7, 8)
    with pytest.raises(ValueError):
        make_star_matching(6, 3)  # needs 2k <= n-1
    with pytest.raises(ValueError):
        make_star(-1)


def test_double_star_shape():
    g = make_double_star(2, 4)
    assert g.n == 8 and g.m == 7
    assert g.has_edge(0, 1)
    assert g.degree(0) == 3 and g.degree(1) == 5
    with pytest.raises(ValueError):
        make_double_star(0, 3)


def test_theta_builder_shape():
    g = make_theta(3, 3)
    assert g.n == 6 and g.m == 7
    assert g.has_edge(0, 1)
    assert g.degree(0) == g.degree(1) == 3
    with pytest.raises(ValueError):
        make_theta(1, 3)
    with pytest.raises(ValueError):
        make_theta(3, 2)


def test_complete_split_shape():
    g = make_complete_split(3, 4)
    assert g == make_S(7, 3)
    with pytest.raises(ValueError):
        make_complete_split(0, 2)
    with pytest.raises(ValueError):
        make_complete_split(2, 0)


def test_apex_family_shape():
    g = make_G4(5, 3)
    assert g.n == 5 + 3 + 2 and g.m == 2 * 5 + 3 + 1
    assert g.degree(0) == 5 + 3 + 1  # apex sees everything but itself
    assert g.degree(1) == 6
    assert all(g.degree(v) == 2 for v in range(2, 7))
    assert all(g.degree(v) == 1 for v in range(7, 10))
    with pytest.raises(ValueError):
        make_G4(0, 1)
    with pytest.raises(ValueError):
        make_G4(3, -1)


def test_apex_family_matches_join_minus_edge():
    for r in (1, 2, 5, 9):
        assert canonical_form(make_G4(r, 1)) == canonical_form(make_S_minus(r + 3, 2))


def test_parse_family_spec():
    assert parse_family_spec("S,n=10,k=2") == FamilySpec("S", {"n": 10, "k": 2})
    assert parse_family_spec("s-, n=9, k=2") == FamilySpec("S-", {"n": 9, "k": 2})
    assert parse_family_spec("G4,r=4,t=0").tag == "G4"
    with pytest.raises(ValueError):
        parse_family_spec("unknown,n=3")
    with pytest.raises(ValueError):
        parse_family_spec("S,n=10")  # missing k
    with pytest.raises(ValueError):
        parse_family_spec("S,n=10,k=2,n=11")  # duplicate
    with pytest.raises(ValueError):
        parse_family_spec("S,n=ten,k=2")
    with pytest.raises(ValueError):
        parse_family_spec("S,n=10,z=1")


def test_make_graph_dispatch():
    assert make_graph(parse_family_spec("star,r=5")) == make_star(5)
    assert make_graph(parse_family_spec("D,a=2,b=3")) == make_double_star(2, 3)
    assert make_graph(parse_family_spec("theta,p=2,q=4")) == make_theta(2, 4)
    assert make_graph(parse_family_spec("split,k=3,s=2")) == make_complete_split(3, 2)


def test_quartic_coefficients():
    p = f_poly(92, 1)
    assert p.coeffs == (45, -90, -92, 0, 1)
    assert not p.doubled
    q = f_poly(12, 3)
    assert q.coeffs == (12, -8, -12, 0, 1)
    with pytest.raises(ValueError):
        f_poly(10, -1)
    with pytest.raises(ValueError):
        f_poly(4, 3)  # m < t + 3
    with pytest.raises(ValueError):
        f_poly(8, 2)  # m - t - 1 = 5 is odd


def test_quartic_sign_at_comparison_point_is_always_minus_quarter():
    # exact evaluation at (1 + sqrt(4m-5))/2 collapses to the rational -1/4,
    # independent of m; this is what makes the sign sweep exact and cheap
    for m in (6, 14, 92, 500, 1998):
        bound = QuadExt(Fraction(1, 2), Fraction(1, 2), 4 * m - 5)
        assert f_poly(m, 1).eval_quad(bound) == QuadExt(Fraction(-1, 4))


def test_partitions_are_equitable():
    checks = [
        (make_S(9, 2), s_partition(9, 2)),
        (make_S_minus(9, 2), s_minus_partition(9, 2)),
        (make_complete_split(3, 4), split_partition(3, 4)),
        (make_G4(4, 2), g4_partition(4, 2)),
        (make_G4(4, 0), g4_partition(4, 0)),
    ]
    for g, part in checks:
        assert not isinstance(is_equitable(g, part), NonEquitableWitness), part


def test_closed_form_values_match_iteration():
    cases = [
        "star,r=7",
        "S,n=9,k=1",
        "S,n=23,k=2",
        "split,k=4,s=6",
        "G4,r=6,t=2",
        "G4,r=6,t=0",
        "S-,n=12,k=2",
    ]
    for text in cases:
        spec = parse_family_spec(text)
        desc = closed_form_rho(spec)
        rho = spectral_radius(make_graph(spec)).rho
        assert desc.value == pytest.approx(rho, abs=1e-9), text
        if desc.exact is not None:
            assert float(desc.exact) == pytest.approx(rho, abs=1e-9)
        if desc.poly is not None:
            assert abs(desc.poly(rho)) < 1e-6


def test_closed_form_exact_values():
    assert closed_form_rho(parse_family_spec("S,n=23,k=2")).exact == QuadExt(7)
    assert closed_form_rho(parse_family_spec("star,r=9")).exact == QuadExt(3)
    golden_plus = closed_form_rho(parse_family_spec("split,k=2,s=2")).exact
    assert golden_plus == QuadExt(Fraction(1, 2), Fraction(1, 2), 17)


def test_closed_form_unsupported():
    with pytest.raises(ValueError):
        closed_form_rho(parse_family_spec("S,n=9,k=3"))
    with pytest.raises(ValueError):
        closed_form_rho(parse_family_spec("D,a=2,b=2"))
    with pytest.raises(ValueError):
        closed_form_rho(parse_family_spec("theta,p=3,q=3"))


def test_s_minus_partition_only_defined_for_k2():
    with pytest.raises(ValueError):
        s_minus_partition(9, 3)


def test_pendant_family_quartic_is_its_char_poly_factor():
    from spectheta.polynomials import divides_exactly
    from spectheta.spectral import adjacency_char_poly

    g = make_S_minus(10, 2)
    assert divides_exactly(f_poly(16, 1), adjacency_char_poly(g))
