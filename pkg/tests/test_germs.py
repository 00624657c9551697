import pytest

from germlab import (
    IdealPresentation,
    MapGerm,
    NotFlatError,
    Poly,
    UnitIdealError,
    analyze_germ,
    cm_certify,
    determinacy_order,
    dimension_at_origin,
    fibre_ideal,
    flatness_check,
    parse_poly,
    tangent_cone_ideal,
    tangent_cones_equal,
)


def p(text, n=2):
    return parse_poly(text, n)


def ideal(*texts, n=2):
    return IdealPresentation(n, [parse_poly(t, n) for t in texts])


def test_dimension_examples():
    assert dimension_at_origin(ideal("x1", "x2"), 1).dim == 0
    assert dimension_at_origin(ideal("x1*x2"), 1).dim == 1
    assert dimension_at_origin(IdealPresentation(2, []), 1).dim == 2
    with pytest.raises(UnitIdealError):
        dimension_at_origin(ideal("1 + x1"), 1)


def test_dimension_reseed_invariance():
    for texts, expected in [
        (("x1*x2",), 1),
        (("x1^2 - x2^3",), 1),
        (("x1", "x2"), 0),
    ]:
        I = ideal(*texts)
        results = [dimension_at_origin(I, seed).dim for seed in range(5)]
        assert results == [expected] * 5


def test_dimension_axis_arithmetic():
    res = dimension_at_origin(ideal("x1*x2"), 3)
    assert res.dim + res.axis_count == 2
    assert res.stabilized


def test_map_germ_validation():
    with pytest.raises(ValueError):
        MapGerm(2, (p("1 + x1"),))
    with pytest.raises(ValueError):
        MapGerm(2, ())
    germ = MapGerm(2, (p("x1 - x2"),))
    assert germ.m == 1


def test_cm_certify_examples():
    res = cm_certify(ideal("x1^2 - x2^3"), 6, 1)
    assert res.certified and res.l == 1 and res.k == 1
    free = cm_certify(IdealPresentation(2, []), 6, 1)
    assert free.certified
    artinian = cm_certify(ideal("x1", "x2"), 6, 1)
    assert artinian.certified
    mixed = cm_certify(
        IdealPresentation(3, [parse_poly("x1*x2", 3), parse_poly("x1*x3", 3)]), 4, 1
    )
    assert mixed.status == "not-certified" and mixed.l is None


def test_flatness_worked_examples():
    I = ideal("x1*x2")
    flat = flatness_check(I, MapGerm(2, (p("x1 - x2"),)), 7)
    assert flat.flat and flat.fibre_dimension == 0 and flat.expected == 0
    assert flat.fibre_diagram.vertices == frozenset({(1, 0), (0, 2)})

    not_flat = flatness_check(I, MapGerm(2, (p("x1"),)), 7)
    assert not not_flat.flat and not_flat.fibre_dimension == 1

    free = flatness_check(IdealPresentation(2, []), MapGerm(2, (p("x1"),)), 7)
    assert free.flat and free.fibre_dimension == 1


def test_flatness_too_many_components():
    verdict = flatness_check(
        ideal("x1", "x2"), MapGerm(2, (p("x1 - x2"),)), 7
    )
    assert not verdict.flat and verdict.expected < 0


def test_fibre_hs_finite_iff_dim_matches():
    # flat with fibre dimension 0: complement eventually stabilizes
    flat = flatness_check(ideal("x1*x2"), MapGerm(2, (p("x1 - x2"),)), 7)
    hs = flat.fibre_hs.to_list()
    assert hs[-1] == hs[-2]
    # flat with fibre dimension 1: complement keeps growing
    free = flatness_check(IdealPresentation(2, []), MapGerm(2, (p("x1"),)), 7)
    hs2 = free.fibre_hs.to_list()
    assert hs2[-1] > hs2[-2]


def test_determinacy_order_examples():
    bound = determinacy_order(ideal("x1*x2"), MapGerm(2, (p("x1 - x2"),)), 7)
    assert bound.mu0 == 2

    free3 = IdealPresentation(3, [])
    germ = MapGerm(3, tuple(parse_poly(f"x{i+1}", 3) for i in range(2)))
    assert determinacy_order(free3, germ, 7).mu0 == 1

    cusp = determinacy_order(ideal("x1^2 - x2^3"), MapGerm(2, (p("x2"),)), 7)
    assert cusp.mu0 == 2
    assert set(cusp.fibre_vertices) == {(2, 0), (0, 1)}

    with pytest.raises(NotFlatError):
        determinacy_order(ideal("x1*x2"), MapGerm(2, (p("x1"),)), 7)


def test_tangent_cone_examples():
    assert tangent_cone_ideal(ideal("x1^2 - x2^3")) == [p("x1^2")]
    cone = tangent_cone_ideal(ideal("x1^2 - x2^3", "x1*x2"))
    assert cone == [p("x1^2"), p("x1*x2"), p("x2^4")]
    assert tangent_cone_ideal(ideal("x1", "x2")) == [p("x1"), p("x2")]
    for g in cone:
        assert g.total_degree() == g.min_total_degree()


def test_tangent_cones_equal_examples():
    I = ideal("x1^2 - x2^3")
    assert tangent_cones_equal(I, I)
    assert tangent_cones_equal(I, ideal("x1^2 + x2^5"))
    assert not tangent_cones_equal(ideal("x1"), ideal("x2"))


def test_fibre_ideal_drops_zero_components():
    I = ideal("x1*x2")
    fib = fibre_ideal(I, MapGerm(2, (p("x1 - x2"),)))
    assert len(fib.generators) == 2


def test_analyze_germ_report():
    report = analyze_germ(ideal("x1^2 - x2^3"), 5, l_max=4, eta_max=6)
    assert report.dimension == 1
    assert report.cm.certified
    assert report.hs.to_list() == [1, 3, 5, 7, 9, 11, 13]
    payload = report.as_dict()
    assert payload["dimension"] == 1 and payload["cm"]["status"] == "certified"