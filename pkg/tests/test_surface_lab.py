"""Pencil surfaces: point search, degenerate members, symbol audits.

The point-search oracle is plain box enumeration; the pencil quintic is
checked against a symbolic determinant; the audit expectations are the
worked examples' published behaviours, frozen as exact value tallies.
"""

import random
import types
from fractions import Fraction
from functools import lru_cache

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from opendp4 import surface_lab as lab
from opendp4.residue_symbols import PlaceQ, sqrt5_norm, sqrt5_sign

F = Fraction
ALL_QUARTERS = {F(0), F(1, 4), F(1, 2), F(3, 4)}


@lru_cache(maxsize=None)
def _audited(fixture_id, recipe_name=None, height=60):
    fix = lab.fixture(fixture_id)
    recipe = lab.fixture_recipe(fixture_id, recipe_name)
    return lab.audit(fix.surface, recipe, height,
                     extra_points=fix.listed_points)


def _brute_force(surface, height):
    found = set()
    rng = range(-height, height + 1)
    for x0 in range(height + 1):
        for x1 in rng:
            for x2 in rng:
                for x3 in rng:
                    for x4 in rng:
                        x = (x0, x1, x2, x3, x4)
                        if any(x) and surface.contains(x):
                            found.add(lab.RatPoint(x))
    return found


# ---------------------------------------------------------------------------
# forms, points, surfaces


def test_monomials_enumerate_upper_pairs():
    assert lab.MONOMIALS == tuple((i, j) for i in range(5)
                                  for j in range(i, 5))


def test_form_value_against_gram():
    rng = random.Random(7)
    for _ in range(40):
        coeffs = [rng.randrange(-4, 5) for _ in range(15)]
        if not any(coeffs):
            coeffs[0] = 1
        m = lab.doubled_gram(coeffs)
        assert all(m[i][j] == m[j][i] for i in range(5) for j in range(5))
        x = [rng.randrange(-6, 7) for _ in range(5)]
        quad = sum(x[i] * m[i][j] * x[j]
                   for i in range(5) for j in range(5))
        assert quad == 2 * lab.form_value(coeffs, x)


def test_pencil_surface_rejects_bad_forms():
    good = lab.fixture("ex418").surface
    with pytest.raises(ValueError, match="15 coefficients"):
        lab.PencilSurface(good.q1[:14], good.q2)
    with pytest.raises(ValueError, match="zero form"):
        lab.PencilSurface([0] * 15, good.q2)
    diag = [0] * 15
    for k in (0, 5, 9, 12, 14):
        diag[k] = 1
    with pytest.raises(ValueError, match="repeated root"):
        lab.PencilSurface(diag, diag)
    rank_one = [0] * 15
    rank_one[0] = 1
    with pytest.raises(ValueError, match="repeated root at infinity"):
        lab.PencilSurface(rank_one, diag)


def test_pencil_surface_document_roundtrip():
    surface = lab.fixture("ex423").surface
    doc = surface.document()
    assert doc["kind"] == "pencil-surface"
    assert doc["fixture"] == "ex423"
    back = lab.PencilSurface.from_document(doc)
    assert back.q1 == surface.q1 and back.q2 == surface.q2
    assert back.fixture_id == "ex423"
    with pytest.raises(ValueError, match="pencil-surface"):
        lab.PencilSurface.from_document({"kind": "something-else"})


def test_rat_point_normalization():
    assert lab.RatPoint((2, 4, 6, 8, 10)).coords == (1, 2, 3, 4, 5)
    assert lab.RatPoint((0, -2, 4, 0, -6)).coords == (0, 1, -2, 0, 3)
    assert lab.RatPoint((-3, 0, 0, 0, 3)).coords == (1, 0, 0, 0, -1)
    assert lab.RatPoint((1, 1, 0, 1, 0)).is_integral
    assert not lab.RatPoint((2, 1, 0, 0, 0)).is_integral
    assert lab.RatPoint((0, 1, 0, 0, 0)).on_hyperplane
    assert repr(lab.RatPoint((1, 1, -2, -3, -2))) == "(1:1:-2:-3:-2)"
    assert lab.RatPoint((2, 2, 0, 2, 0)) == lab.RatPoint((1, 1, 0, 1, 0))
    assert len({lab.RatPoint((1, 0, 0, 0, 0)),
                lab.RatPoint((2, 0, 0, 0, 0))}) == 1
    with pytest.raises(ValueError, match="zero tuple"):
        lab.RatPoint((0, 0, 0, 0, 0))
    with pytest.raises(ValueError, match="5 coordinates"):
        lab.RatPoint((1, 2, 3))


@given(st.lists(st.integers(min_value=-30, max_value=30),
                min_size=5, max_size=5),
       st.integers(min_value=-9, max_value=9))
def test_rat_point_scaling_invariance(coords, scalar):
    assume(any(coords) and scalar != 0)
    scaled = [scalar * c for c in coords]
    assert lab.RatPoint(scaled) == lab.RatPoint(coords)


# ---------------------------------------------------------------------------
# point search


@pytest.mark.parametrize("fixture_id", lab.FIXTURE_IDS)
def test_find_points_matches_enumeration(fixture_id):
    surface = lab.fixture(fixture_id).surface
    assert set(lab.find_points(surface, 4)) == _brute_force(surface, 4)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=-2, max_value=2),
                min_size=15, max_size=15),
       st.lists(st.integers(min_value=-2, max_value=2),
                min_size=15, max_size=15))
def test_find_points_matches_enumeration_random(q1, q2):
    try:
        surface = lab.PencilSurface(q1, q2)
    except ValueError:
        assume(False)
    assert set(lab.find_points(surface, 2)) == _brute_force(surface, 2)


@pytest.mark.parametrize("fixture_id", lab.FIXTURE_IDS)
def test_find_points_contains_small_listed_points(fixture_id):
    fix = lab.fixture(fixture_id)
    points = set(lab.find_points(fix.surface, 6))
    small = [x for x in fix.listed_points
             if max(abs(c) for c in x.coords) <= 6]
    assert small and all(x in points for x in small)


def test_find_points_height_validation():
    surface = lab.fixture("ex418").surface
    with pytest.raises(ValueError, match="height"):
        lab.find_points(surface, 0)


def test_find_points_falls_back_without_x4():
    # a pencil with no X4 dependence has an identically zero quintic and
    # cannot be a PencilSurface, so the fallback is fed a bare stand-in
    q1, q2 = [0] * 15, [0] * 15
    q1[1] = 1   # X0*X1
    q2[10] = 1  # X2*X3
    stub = types.SimpleNamespace(
        q1=tuple(q1), q2=tuple(q2),
        contains=lambda x: (lab.form_value(q1, x) == 0
                            and lab.form_value(q2, x) == 0))
    with pytest.warns(UserWarning, match="full enumeration"):
        points = lab.find_points(stub, 2)
    assert lab.RatPoint((0, 1, 0, 1, 0)) in points
    assert lab.RatPoint((1, 0, 1, 0, 2)) in points
    assert all(stub.contains(x.coords) for x in points)


def test_quadratic_x4_roots():
    assert lab._quadratic_x4_roots(0, 0, 0) is None
    assert lab._quadratic_x4_roots(0, 0, 3) == []
    assert lab._quadratic_x4_roots(0, 2, -6) == [3]
    assert lab._quadratic_x4_roots(0, 2, 3) == []
    assert lab._quadratic_x4_roots(1, -5, 6) == [2, 3]
    assert lab._quadratic_x4_roots(1, 0, -2) == []
    assert lab._quadratic_x4_roots(1, 0, 1) == []
    assert lab._quadratic_x4_roots(2, -4, 2) == [1]


# ---------------------------------------------------------------------------
# the pencil quintic and its degenerate members


@pytest.mark.parametrize("fixture_id", lab.FIXTURE_IDS)
def test_pencil_quintic_against_symbolic_det(fixture_id):
    surface = lab.fixture(fixture_id).surface
    t = sympy.Symbol("t")
    m1 = sympy.Matrix(lab.doubled_gram(surface.q1))
    m2 = sympy.Matrix(lab.doubled_gram(surface.q2))
    poly = sympy.Poly((t * m1 + m2).det(), t)
    expected = [0] * (5 - poly.degree()) + [int(c) for c in poly.all_coeffs()]
    assert list(surface.quintic) == expected


def test_pencil_quintic_fixture_members():
    pq = lab.pencil_quintic(lab.fixture("ex515").surface)
    assert [m.root for m in pq.members] == [(1, 0)]
    member = pq.members[0]
    assert member.rank == 4
    assert member.cusp == lab.RatPoint((1, -1, 0, 0, 0))
    assert lab.rank4_discriminant(member.form) == 5

    pq = lab.pencil_quintic(lab.fixture("ex418").surface)
    assert [m.root for m in pq.members] == [(0, 1)]
    assert pq.members[0].rank == 4
    assert lab.rank4_discriminant(pq.members[0].form) == 1

    pq = lab.pencil_quintic(lab.fixture("ex423").surface)
    assert [m.root for m in pq.members] == [(1, -1)]
    assert lab.rank4_discriminant(pq.members[0].form) == 17

    assert lab.pencil_quintic(lab.fixture("ex421").surface).members == ()


def test_pencil_quintic_split_pencil():
    q1, q2 = [0] * 15, [0] * 15
    for rank, k in enumerate((0, 5, 9, 12, 14), start=1):
        q1[k] = rank
        q2[k] = 1
    pq = lab.pencil_quintic(lab.PencilSurface(q1, q2))
    assert [m.root for m in pq.members] == [(1, -5), (1, -4), (1, -3),
                                            (1, -2), (1, -1)]
    for member, axis in zip(pq.members, (4, 3, 2, 1, 0)):
        assert member.rank == 4
        expected = [0] * 5
        expected[axis] = 1
        assert member.cusp == lab.RatPoint(expected)


def test_rank4_discriminant_validation():
    full_rank = [0] * 15
    for k in (0, 5, 9, 12, 14):
        full_rank[k] = 1
    with pytest.raises(ValueError, match="rank 4"):
        lab.rank4_discriminant(full_rank)
    rank_three = [0] * 15
    for k in (0, 5, 9):
        rank_three[k] = 1
    with pytest.raises(ValueError, match="rank 4"):
        lab.rank4_discriminant(rank_three)
    diag = [0] * 15
    for k, c in zip((0, 5, 9, 12), (1, 1, 1, 1)):
        diag[k] = c
    assert lab.rank4_discriminant(diag) == 1
    diag[5] = 2
    assert lab.rank4_discriminant(diag) == 2


# ---------------------------------------------------------------------------
# evaluation recipes


def test_ev_2tors_type1_values():
    p5 = PlaceQ.finite(5)
    assert lab.ev_2tors_typeI((10, 0, 0, 0, 0), 5,
                              (1, 0, 0, 0, 0), p5) == F(1, 2)
    # a square second entry makes every symbol trivial
    for v in (PlaceQ.real(), PlaceQ.finite(2), PlaceQ.finite(3)):
        assert lab.ev_2tors_typeI((0, 0, 1, 1, 0), 4,
                                  (1, 1, -1, 2, -1), v) == 0
    with pytest.raises(ValueError, match="vanishes"):
        lab.ev_2tors_typeI((0, 1, 0, 0, 0), 5, (1, 0, 1, 1, 1), p5)
    with pytest.raises(ValueError, match="hyperplane"):
        lab.ev_2tors_typeI((1, 0, 0, 0, 0), 5, (0, 1, 0, 0, 0), p5)


def test_ev_2tors_type2_values():
    t = ((0, 3, 4, 0, 0), (0, 1, 0, 0, 0))
    d = (4, 2)
    # d = 4 + 2*sqrt(5) is positive at the first embedding only
    assert sqrt5_sign(d, 0) == 1 and sqrt5_sign(d, 1) == -1
    assert lab.ev_2tors_typeII(t, d, (1, 1, 0, 1, 0), PlaceQ.real()) == 0
    assert lab.ev_2tors_typeII(t, d, (1, 1, -2, -3, -2),
                               PlaceQ.real()) == F(1, 2)
    for v in (PlaceQ.real(), PlaceQ.finite(2), PlaceQ.finite(5),
              PlaceQ.finite(11)):
        ev = lab.ev_2tors_typeII(t, d, (1, 1, -2, -3, -2), v)
        assert ev in (F(0), F(1, 2))
    with pytest.raises(ValueError, match="vanishes"):
        lab.ev_2tors_typeII(t, d, (1, 0, 0, 1, 1), PlaceQ.real())


def test_ev_4tors_cyclic_values():
    assert lab.ev_4tors_cyclic(2, lab.ZETA5, PlaceQ.finite(2)) == F(3, 4)
    assert lab.ev_4tors_cyclic(-3, lab.ZETA5, PlaceQ.real()) == F(1, 2)
    assert lab.ev_4tors_cyclic(3, lab.ZETA5, PlaceQ.real()) == 0
    assert lab.ev_4tors_cyclic(3, lab.ZETA5, PlaceQ.finite(7)) == 0
    # the real subfield of conductor 17 does not see the sign
    assert lab.ev_4tors_cyclic(-3, lab.ZETA17_REAL, PlaceQ.real()) == 0
    assert lab.ev_4tors_cyclic(3, lab.ZETA17_REAL, PlaceQ.real()) == 0
    with pytest.raises(ValueError, match="vanishes"):
        lab.ev_4tors_cyclic(0, lab.ZETA5, PlaceQ.real())


def test_cyclotomic_descriptors():
    assert (lab.ZETA5.conductor, lab.ZETA5.subgroup,
            lab.ZETA5.generator) == (5, (1,), 2)
    assert (lab.ZETA17_REAL.conductor, lab.ZETA17_REAL.subgroup,
            lab.ZETA17_REAL.generator) == (17, (1, 16), 3)


def test_class_recipe_interface():
    with pytest.raises(ValueError, match="unknown recipe kind"):
        lab.ClassRecipe("x", "3tors", ())
    recipe = lab.fixture_recipe("ex515")
    assert recipe.kind == "2tors-I"
    assert recipe.t == (0, 0, 1, 1, 0) and recipe.d == 5
    x = (1, 1, -1, 2, -1)
    assert recipe.value(x) == F(1)
    assert recipe.defined_at(x)
    support = recipe.support(x)
    assert support[0].is_real
    assert support == sorted(support, key=lambda p: (not p.is_real, p.p or 0))
    for p in recipe.bad_primes:
        assert PlaceQ.finite(p) in support
    quad = lab.fixture_recipe("ex423", "q1")
    y = (2, 0, 2, 2, 4)
    assert quad.value(y) == F(lab.form_value(quad.numerator, y), 4)
    lin = lab.fixture_recipe("ex421")
    assert lin.value((1, 0, 2, -1, -2)) == F(35 - 38 + 2 - 10)


# ---------------------------------------------------------------------------
# audits of the four worked examples


def test_audit_rejects_off_surface_extra_point():
    fix = lab.fixture("ex515")
    with pytest.raises(ValueError, match="not on the surface"):
        lab.audit(fix.surface, fix.recipes["2alpha"], 2,
                  extra_points=[(1, 1, 1, 1, 1)])


def test_audit_bookkeeping_partition():
    # a recipe whose defining function vanishes on visible points
    surface = lab.fixture("ex423").surface
    recipe = lab.ClassRecipe("x1-over-x0", "2tors-I", (5,),
                             t=(0, 1, 0, 0, 0), d=5)
    report = lab.audit(surface, recipe, 3)
    assert report.skipped
    assert lab.RatPoint((1, 0, 1, 1, 2)) in report.skipped
    covered = (len(report.rows) + len(report.skipped)
               + len(report.hyperplane))
    assert covered == len(report.points)
    assert not set(report.skipped) & set(report.rows)


def test_audit_ex421_quarter_values_at_5():
    report = _audited("ex421")
    assert (len(report.points), len(report.rows)) == (28, 24)
    assert len(report.hyperplane) == 4 and not report.skipped
    assert not report.reciprocity_failures
    assert report.values_at(2) == {F(0)}
    assert report.values_at(5) == ALL_QUARTERS
    assert report.values_at(5, integral_only=True) & {F(1, 4), F(3, 4)} \
        == set()
    assert report.verdicts[PlaceQ.finite(5)]
    assert report.values_at(31) == {F(0)}
    assert report.values_at(251) == {F(0)}


def test_audit_ex423_two_recipes_agree():
    first = _audited("ex423", "q1")
    second = _audited("ex423", "q2")
    assert (len(first.points), len(first.rows)) == (251, 239)
    assert first.points == second.points
    for x, row in first.rows.items():
        other = second.rows[x]
        for place in set(row) | set(other):
            assert row.get(place, F(0)) == other.get(place, F(0))
    for report in (first, second):
        assert not report.reciprocity_failures
        assert report.values_at(PlaceQ.real()) == {F(0)}
        assert report.values_at(2) == {F(0)}
        assert report.values_at(17) == ALL_QUARTERS
        assert report.values_at(17, integral_only=True) == {F(0)}
        assert report.verdicts[PlaceQ.finite(17)]


def test_audit_ex418_real_sign_rule():
    report = _audited("ex418")
    recipe = lab.fixture_recipe("ex418")
    assert (len(report.points), len(report.rows)) == (605, 589)
    assert len(report.hyperplane) == 16
    assert not report.reciprocity_failures
    real = PlaceQ.real()
    # the second entry of d = 4 + 2*sqrt(5) is the negative embedding,
    # so the real invariant is 1/2 exactly when t(x) is negative there
    for x, row in report.rows.items():
        negative = sqrt5_sign(recipe.value(x), 1) == -1
        assert row[real] == (F(1, 2) if negative else F(0))
    pairs = {(row[real], row[PlaceQ.finite(2)])
             for x, row in report.rows.items() if x.is_integral}
    assert pairs == {(F(0), F(0)), (F(1, 2), F(1, 2))}
    assert report.values_at(5) == {F(0)}


def test_audit_ex515_constancy_and_verdict():
    report = _audited("ex515")
    assert (len(report.points), len(report.rows)) == (33, 31)
    assert not report.reciprocity_failures
    assert report.values_at(3) == {F(0)}
    assert report.values_at(7) == {F(0)}
    assert report.values_at(5) == {F(0), F(1, 2)}
    assert report.values_at(5, integral_only=True) == {F(0)}
    assert report.verdicts[PlaceQ.finite(5)]
    assert not report.verdicts[PlaceQ.finite(3)]


def test_audit_rows_sum_to_zero():
    for fixture_id in lab.FIXTURE_IDS:
        report = _audited(fixture_id)
        for x, row in list(report.rows.items())[:40]:
            assert sum(row.values()) % 1 == 0


def test_report_summary_text():
    report = _audited("ex421")
    text = report.summary()
    assert "surface ex421" in text
    assert "reciprocity sum 0 at every evaluated point" in text
    assert "strong approximation violated" in text


# ---------------------------------------------------------------------------
# structural properties of the evaluations


GOOD_PRIMES = (3, 7, 11, 13, 23, 29, 37, 41, 43, 47)


def _unit_value_at(recipe, x, p):
    """True when the recipe's defining value is a unit above p."""
    val = recipe.value(x)
    if recipe.kind == "2tors-II":
        norm = sqrt5_norm(val)
        return norm.numerator % p != 0 and norm.denominator % p != 0
    val = F(val)
    return val.numerator % p != 0 and val.denominator % p != 0


@pytest.mark.parametrize("fixture_id", lab.FIXTURE_IDS)
def test_unit_values_evaluate_to_zero_at_good_primes(fixture_id):
    recipe = lab.fixture_recipe(fixture_id)
    report = _audited(fixture_id)
    conductor = recipe.field.conductor if recipe.field else 0
    rows = [x for x in report.rows if x.is_integral][:30]
    for p in GOOD_PRIMES:
        if p in recipe.bad_primes or p == conductor:
            continue
        place = PlaceQ.finite(p)
        for x in rows:
            if _unit_value_at(recipe, x, p):
                assert recipe.evaluate(x, place) == 0


@pytest.mark.parametrize("fixture_id,p", [("ex418", 5), ("ex421", 5),
                                          ("ex423", 17), ("ex515", 5)])
def test_congruent_points_evaluate_alike(fixture_id, p):
    # at odd p a unit-valued symbol only sees the point modulo p, so
    # points in the same residue class must share their invariant
    recipe = lab.fixture_recipe(fixture_id)
    report = _audited(fixture_id)
    place = PlaceQ.finite(p)
    classes = {}
    for x, row in report.rows.items():
        if x.coords[0] % p == 0 or not _unit_value_at(recipe, x, p):
            continue
        unit = pow(x.coords[0], -1, p)
        key = tuple(c * unit % p for c in x.coords)
        classes.setdefault(key, []).append(row[place])
    assert any(len(values) >= 2 for values in classes.values())
    for values in classes.values():
        assert len(set(values)) == 1


# ---------------------------------------------------------------------------
# fixtures and their index groups


def test_fixture_errors():
    with pytest.raises(ValueError, match="unknown fixture id"):
        lab.fixture("ex999")
    with pytest.raises(ValueError, match="no recipe"):
        lab.fixture_recipe("ex418", "missing")
    assert lab.fixture_recipe("ex418", "default").name == "ex418/tangent"


def test_fixture_listed_points_lie_on_surfaces():
    for fixture_id in lab.FIXTURE_IDS:
        fix = lab.fixture(fixture_id)
        for x in fix.listed_points:
            assert fix.surface.contains(x.coords)
            assert x.is_integral


def test_fixture_galois_groups_match_brauer_targets():
    from opendp4 import weyl_d5
    expected = {"ex418": (8, (2,), "none"),
                "ex421": (12, (4,), "typeI"),
                "ex423": (8, (4,), "typeII"),
                "ex515": (64, (4,), "typeII")}
    for fixture_id, (order, torsion, label) in expected.items():
        fix = lab.fixture(fixture_id)
        group = lab.fixture_galois_group(fixture_id)
        assert group.order == order
        assert weyl_d5.h1_full(group).group.torsion == torsion
        assert fix.brauer_torsion == torsion
        assert weyl_d5.classify_4torsion(group) == label
