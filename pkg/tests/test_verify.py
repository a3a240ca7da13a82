"""The verification suite itself: closed forms, components, oracles, reports."""

import pytest

from permahank import (
    Case,
    Ideal,
    ShapeClass,
    alphas,
    buchberger,
    classify_embedded,
    closed_form_gb,
    colon,
    decomposition_summary,
    default_grid,
    embedded_j,
    equal,
    inter_reduce,
    intersect,
    minimal_primes,
    normal_form,
    parse,
    permanent_generators,
    q1,
    q2,
    rewrite_monomial_indices,
    run_all,
    run_case,
    verify_associated_maximal,
    verify_bound_lemma,
    verify_decomposition,
    verify_gb,
    verify_membership_lemmas,
    verify_primary_properties,
    verify_reduction_lemma,
)
from permahank.verify import VerificationReport, _report


def test_case_validation():
    with pytest.raises(ValueError, match="prime"):
        Case(2, 2)
    with pytest.raises(ValueError):
        Case(1, 7)
    c = Case(5, 3)
    assert (c.m, c.n) == (3, 5)
    assert c.nvars == 7 and c.r == 6


def test_shape_classes():
    assert Case(2, 9).shape_class is ShapeClass.TWO_BY_N
    assert Case(3, 3).shape_class is ShapeClass.THREE_THREE
    assert Case(3, 4).shape_class is ShapeClass.THREE_FOUR_OR_FOUR_FOUR
    assert Case(4, 4).shape_class is ShapeClass.THREE_FOUR_OR_FOUR_FOUR
    assert Case(3, 5).shape_class is ShapeClass.GENERAL
    assert Case(6, 7).shape_class is ShapeClass.GENERAL


def test_closed_form_counts():
    for (m, n), count in [
        ((2, 3), 7),
        ((2, 4), 13),
        ((3, 3), 13),
        ((3, 4), 18),
        ((4, 4), 25),
        ((3, 5), 29),
    ]:
        assert len(closed_form_gb(Case(m, n))) == count


def test_closed_form_2x3_is_literal_reduced_basis():
    case = Case(2, 3)
    cf = closed_form_gb(case)
    reduced = buchberger(permanent_generators(case.matrix)).elements
    assert set(cf) == set(reduced)


def test_closed_form_3x3_is_literal_reduced_basis():
    case = Case(3, 3)
    cf = closed_form_gb(case)
    reduced = buchberger(permanent_generators(case.matrix)).elements
    assert set(cf) == set(reduced)


def test_closed_form_2x4_differs_from_reduced_basis():
    # the listed set is a Groebner basis of the right ideal but is not the
    # reduced basis: it keeps x1*x5 + x2*x4 where reduction replaces the
    # tail, giving x1*x5 - x3^2
    case = Case(2, 4)
    cf = closed_form_gb(case)
    reduced = buchberger(permanent_generators(case.matrix)).elements
    R = case.ring
    assert parse("x1*x5 + x2*x4", R) in cf
    assert parse("x1*x5 - x3^2", R) in reduced
    assert set(cf) != set(reduced)
    assert len(cf) == len(reduced) == 13
    assert set(inter_reduce(cf)) == set(reduced)


def test_closed_form_3x4_is_not_minimal():
    # two listed elements share the leading monomial x1*x5, so
    # interreduction shrinks the set from 18 to 16
    case = Case(3, 4)
    cf = closed_form_gb(case)
    reduced = buchberger(permanent_generators(case.matrix)).elements
    R = case.ring
    assert parse("x1*x5 + x2*x4", R) in cf and parse("x1*x5 + x3^2", R) in cf
    assert len(cf) == 18 and len(reduced) == 16
    assert set(inter_reduce(cf)) == set(reduced)


def test_q2_is_the_mirror_of_q1():
    for m, n in [(2, 3), (3, 4), (3, 5), (4, 6)]:
        case = Case(m, n)
        ring = case.ring
        mirrored = {
            ring.poly([(c, exps[::-1]) for c, exps in g.terms()])
            for g in q1(case).generators
        }
        assert mirrored == set(q2(case).generators)


def test_q1_structure():
    case = Case(3, 5)
    gens = [str(g) for g in q1(case).generators]
    assert gens == [
        "x1",
        "x2",
        "x3",
        "x4^2",
        "x4*x5",
        "x4*x6",
        "x4*x7 + x5*x6",
        "x5^2",
        "x5*x7 + x6^2",
    ]


def test_minimal_primes_are_consecutive_spans():
    case = Case(3, 4)
    P1, P2prime = minimal_primes(case)
    assert [str(g) for g in P1.generators] == ["x1", "x2", "x3", "x4", "x5"]
    assert [str(g) for g in P2prime.generators] == ["x2", "x3", "x4", "x5", "x6"]


def test_embedded_j_generators():
    case = Case(2, 3)
    J = embedded_j(case)
    R = case.ring
    assert parse("x1^2", R) in set(J.generators)
    assert parse("x4^2", R) in set(J.generators)


def test_alpha_lists():
    R33 = Case(3, 3).ring
    assert [str(a) for a in alphas(Case(3, 3))] == ["x1*x3*x5"]
    assert [str(a) for a in alphas(Case(3, 4))] == ["x2*x5", "x3*x4"]
    assert [str(a) for a in alphas(Case(4, 4))] == [
        "x2*x5",
        "x3*x4",
        "x3*x6",
        "x4*x5",
    ]
    assert [str(a) for a in alphas(Case(2, 4))] == ["x2*x4"]
    assert [str(a) for a in alphas(Case(2, 5))] == [
        "x2*x4",
        "x2*x5",
        "x3*x4",
        "x3*x5",
    ]
    assert [str(a) for a in alphas(Case(4, 6))] == ["x5"]
    for shape in [(2, 3), (3, 5), (3, 6), (4, 5)]:
        assert alphas(Case(*shape)) is None


def test_alpha_witness_behavior():
    # x1*x3*x5 sits outside the 3x3 ideal, every variable multiple inside
    case = Case(3, 3)
    a = alphas(case)[0]
    p2 = case.p2
    assert a not in p2
    for k in range(1, 6):
        assert case.x(k) * a in p2
    assert equal(colon(p2, a), case.maximal_ideal)


def test_rewrite_oracle_pairs():
    # quadratic states walk to the balanced middle, flipping sign each step
    assert rewrite_monomial_indices(3, 3, (1, 5)) == (-1, (3, 3))
    assert rewrite_monomial_indices(3, 3, (1, 4)) == (-1, (2, 3))
    assert rewrite_monomial_indices(3, 3, (2, 3)) == (1, (2, 3))
    assert rewrite_monomial_indices(3, 3, (3, 3)) == (1, (3, 3))


def test_rewrite_oracle_triples():
    assert rewrite_monomial_indices(3, 3, (1, 1, 5)) == (1, (2, 2, 3))
    # x1*x3*x5 is outside the ideal yet still rewrites: three flips to -x3^3
    assert rewrite_monomial_indices(3, 3, (1, 3, 5)) == (-1, (3, 3, 3))
    # two steps: {1,5} -> {3,3}, then {3,5} -> {4,4}; two sign flips
    assert rewrite_monomial_indices(3, 3, (1, 5, 5)) == (1, (3, 4, 4))


def test_rewrite_oracle_matches_engine():
    case = Case(3, 4)
    H = permanent_generators(case.matrix)
    R = case.ring
    for idx in [(1, 6), (1, 5), (2, 6), (1, 1, 6), (1, 4, 6), (2, 2, 6)]:
        sign, final = rewrite_monomial_indices(3, 4, idx)
        exps = [0] * 6
        for i in idx:
            exps[i - 1] += 1
        fexps = [0] * 6
        for i in final:
            fexps[i - 1] += 1
        nf = normal_form(R.monomial(tuple(exps)), H)
        assert nf == R.monomial(tuple(fexps), sign)


def test_decomposition_summary_2x3():
    s = decomposition_summary(Case(2, 3))
    assert s["q1_stab"] == 2
    assert s["q2_stab"] == 1
    assert s["j_redundant"] is True
    case = Case(2, 3)
    assert equal(s["q1"], q1(case))
    assert equal(s["q2"], q2(case))


def test_decomposition_summary_3x3():
    s = decomposition_summary(Case(3, 3))
    assert s["q1_stab"] == 2
    assert s["q2_stab"] == 2
    assert s["j_redundant"] is False


def test_triple_intersection_recovers_ideal():
    for shape in [(2, 3), (2, 4), (3, 3), (3, 5)]:
        case = Case(*shape)
        triple = intersect(case.q1q2, embedded_j(case))
        assert equal(triple, case.p2)


def test_classification_spot_checks():
    for shape, expected in [
        ((2, 3), False),
        ((3, 5), False),
        ((3, 6), False),
        ((4, 5), False),
        ((2, 4), True),
        ((3, 3), True),
        ((3, 4), True),
        ((4, 6), True),
    ]:
        assert classify_embedded(Case(*shape)) is expected


def test_classification_matches_alpha_availability():
    for m, n in default_grid():
        case = Case(m, n)
        assert (alphas(case) is None) == (not classify_embedded(case))


def test_individual_checks_pass():
    for shape in [(2, 3), (3, 3), (3, 4)]:
        case = Case(*shape)
        assert verify_gb(case).passed
        assert verify_decomposition(case).passed
        assert verify_primary_properties(case, samples=2).passed
        assert verify_reduction_lemma(case).passed
        assert verify_membership_lemmas(case).passed
        assert verify_bound_lemma(case).passed
    rep = verify_associated_maximal(Case(3, 3))
    assert rep.passed and rep.detail == "alpha=x1*x3*x5"
    assert verify_associated_maximal(Case(2, 3)) is None


def test_report_shape():
    rep = verify_gb(Case(2, 3))
    d = rep.to_dict()
    assert d["claim"] == "gb.2xn"
    assert (d["m"], d["n"]) == (2, 3)
    assert d["status"] == "pass"
    assert "witness" not in d
    assert d["detail"] == "closed_form=7 reduced=7 literal_reduced=yes"
    assert isinstance(d["millis"], int)


def test_report_failure_path():
    rep = _report("gb.2xn", Case(2, 3), 0.0, [{"kind": "boom"}], "d")
    assert rep.status == "fail" and not rep.passed
    assert rep.to_dict()["witness"] == {"kind": "boom"}
    multi = _report("gb.2xn", Case(2, 3), 0.0, [{"kind": "a"}, {"kind": "b"}])
    assert multi.witness == {"failures": [{"kind": "a"}, {"kind": "b"}]}


def test_run_case_claim_order():
    reports = run_case(Case(3, 3))
    assert [r.claim for r in reports] == [
        "gb.3x3",
        "decomp.main",
        "primary.components",
        "assoc.maximal",
        "lemma.reduction",
        "lemma.membership",
        "lemma.bound",
    ]
    # no associated-prime claim where no alpha exists
    assert [r.claim for r in run_case(Case(2, 3))] == [
        "gb.2xn",
        "decomp.main",
        "primary.components",
        "lemma.reduction",
        "lemma.membership",
        "lemma.bound",
    ]


def test_run_case_check_filter():
    reports = run_case(Case(2, 3), checks=["gb"])
    assert [r.claim for r in reports] == ["gb.2xn"]
    reports = run_case(Case(2, 3), checks=["lemmas"])
    assert len(reports) == 3
    with pytest.raises(ValueError):
        run_case(Case(2, 3), checks=["spectral"])


def test_default_grid():
    grid = default_grid()
    assert len(grid) == 29
    assert grid[0] == (2, 3) and (6, 7) in grid
    assert all(m <= n and 5 <= m + n <= 13 for m, n in grid)
    small = default_grid(6)
    assert all(m + n <= 7 for m, n in small)
    assert grid == sorted(grid)


def test_run_all_small_grid_char_p():
    reports = run_all(grid=[(3, 3), (2, 3)], char=3)
    assert all(r.passed for r in reports)
    # sorted by shape regardless of input order
    assert [(r.m, r.n) for r in reports] == [(2, 3)] * 6 + [(3, 3)] * 7


def test_verification_report_dataclass():
    rep = VerificationReport("x", 2, 3, "pass")
    assert rep.witness is None and rep.detail == "" and rep.millis == 0
    assert rep.to_dict() == {"claim": "x", "m": 2, "n": 3, "status": "pass", "millis": 0}
