import pytest

from cupcurve import cohomology as coh
from cupcurve import modmatrix, pairing
from cupcurve.cohomology import (CohomologyError, cup_product,
                                 cup_with_constant, eval_hom, h1_constant,
                                 h1_new, normalized_cup_span, triple_product)
from cupcurve.frobenius import legendre_derivative, pic_hom_basis, restrict_hom


def test_h1_class_validation(quotient_curve):
    E = quotient_curve
    h = h1_new(E, E.point(0, 3), 2)
    assert not h.is_normalized and not h.is_constant
    assert h1_new(E, E.infinity(), 0).is_trivial
    assert h1_constant(E, 1).is_constant
    with pytest.raises(CohomologyError):
        h1_new(E, E.lift_point(E.point(0, 3), E.ext_ctx(2)), 0)  # not rational
    from cupcurve.curve import curve_new
    from cupcurve.field import make_context
    E18 = curve_new(make_context(13, 3, 1), -2, 0)
    bad = next(P for P in E18.enumerate_points()
               if not E18.mul(3, P).is_infinity)
    with pytest.raises(CohomologyError):
        h1_new(E18, bad, 0)  # not an ell-torsion point


def test_constant_constant_cup_vanishes(ell3_curves, ell2_curves):
    for E in ell3_curves + ell2_curves:
        for r in range(E.ell):
            for s in range(E.ell):
                assert cup_product(E, h1_constant(E, r), h1_constant(E, s)).is_zero


def test_normalized_self_cup_vanishes_odd(ell3_curves):
    for E in ell3_curves:
        for P in coh.rational_ell_torsion(E):
            h = h1_new(E, P)
            assert cup_product(E, h, h).is_zero


def test_cup_basis_pair_example(quotient_curve):
    # deg part = dlog e_3((0,3),(3,1)) != 0, pic0 part = 0
    E = quotient_curve
    _, P1, P2 = E.torsion_basis(1)
    h2 = cup_product(E, h1_new(E, P1), h1_new(E, P2))
    w = pairing.weil_pairing(E, P1, P2).exp
    assert h2.deg_coeff == w != 0
    assert not any(h2.pic0)


def _cup_table(E):
    classes = coh.all_h1_classes(E)
    return classes, {
        (ha.point, ha.const_exp, hb.point, hb.const_exp): cup_product(E, ha, hb)
        for ha in classes for hb in classes}


def test_cup_bilinear_anticommutative_degcompat(ell3_curves, ell2_curves):
    for E in ell3_curves + ell2_curves:
        classes, cups = _cup_table(E)
        for ha in classes:
            for hb in classes:
                ab = cups[(ha.point, ha.const_exp, hb.point, hb.const_exp)]
                ba = cups[(hb.point, hb.const_exp, ha.point, ha.const_exp)]
                assert (ab + ba).is_zero
                assert ab.deg_coeff == pairing.weil_pairing(E, ha.point, hb.point).exp
        for ha in classes:
            for hb in classes:
                for hc in classes:
                    hs = ha + hb
                    lhs = cups[(hs.point, hs.const_exp, hc.point, hc.const_exp)]
                    rhs = cups[(ha.point, ha.const_exp, hc.point, hc.const_exp)] \
                        + cups[(hb.point, hb.const_exp, hc.point, hc.const_exp)]
                    assert lhs == rhs


def test_cup_with_constant_matches_cup_product(ell3_curves, cm_curve):
    for E in ell3_curves + [cm_curve]:
        for c in range(E.ell):
            for P in coh.rational_ell_torsion(E):
                hb = h1_new(E, P)
                assert cup_with_constant(E, c, hb) == \
                    cup_product(E, h1_constant(E, c), hb)
        assert cup_with_constant(E, 1, h1_constant(E, 2)).is_zero


def test_cup_with_constant_cm_is_zero(cm_curve):
    # the Legendre derivative vanishes, so constants cup to nothing
    E = cm_curve
    for c in range(3):
        for P in coh.rational_ell_torsion(E):
            assert cup_with_constant(E, c, h1_new(E, P)).is_zero


def test_even_self_cup_structure(ell2_curves):
    # [a] cup [a] = [fraka] x (-1) + dL(fraka) x (-1)^((q-1)/2)
    for E in ell2_curves:
        for P in coh.rational_ell_torsion(E):
            h = h1_new(E, P)
            sc = cup_product(E, h, h)
            dl = legendre_derivative(E, P)
            want = tuple((x + ((E.q - 1) // 2) * y) % 2
                         for x, y in zip(E.pic0_coordinates(P), dl))
            assert sc.deg_coeff == 0 and sc.pic0 == want


def test_eval_hom_duality(quotient_curve):
    E = quotient_curve
    homs = pic_hom_basis(E)
    h2s = [coh.H2Class(E, 1, (0, 0)), coh.H2Class(E, 0, (1, 0)),
           coh.H2Class(E, 0, (0, 1))]
    mat = [[eval_hom(t, h).exp for h in h2s] for t in homs]
    assert modmatrix.rank_mod_prime(mat, 3) == 3
    assert eval_hom(homs[0], h2s[0]) .exp == 1
    assert eval_hom(0 * homs[0], h2s[0]).exp == 0


def test_triple_product_trivial_cases(quotient_curve):
    E = quotient_curve
    trivial = h1_new(E, E.infinity(), 0)
    for t in pic_hom_basis(E):
        for ha in coh.all_h1_classes(E)[:9]:
            assert triple_product(E, t, ha, trivial).exp == 0


def test_triple_product_formula_route(ell3_curves, cm_curve):
    # t cup [g^c] cup [b] = zeta0^(c * t(dL([b]))), the derivative route
    for E in ell3_curves + [cm_curve]:
        for t in pic_hom_basis(E):
            for c in range(E.ell):
                for P in coh.rational_ell_torsion(E):
                    got = triple_product(E, t, h1_constant(E, c), h1_new(E, P)).exp
                    want = c * t.eval_pic0(legendre_derivative(E, P)) % E.ell
                    assert got == want


def test_triple_product_depends_only_on_pic0_restriction(quotient_curve):
    # adding a degree component to t does not change the constant triple
    E = quotient_curve
    t0, t1, _ = pic_hom_basis(E)
    for c in range(3):
        for P in coh.rational_ell_torsion(E):
            a = triple_product(E, t1, h1_constant(E, c), h1_new(E, P))
            b = triple_product(E, t0 + t1, h1_constant(E, c), h1_new(E, P))
            assert a == b


def test_mainthree_coherence(dl_suite):
    # the dL route equals the Weil route through the restriction of t
    for E in dl_suite:
        ell = E.ell
        for t in pic_hom_basis(E):
            S = restrict_hom(E, t)
            for c in range(ell):
                for P in coh.rational_ell_torsion(E):
                    lhs = triple_product(E, t, h1_constant(E, c), h1_new(E, P)).exp
                    e = pairing.weil_pairing(E, S, E.lift_point(P, S.ctx)).exp
                    assert lhs == (-c * e) % ell


def test_nondegeneracy_of_restricted_triple(quotient_curve):
    # on a full-torsion curve, t mod (degree part) is determined by the
    # functional (c, b) -> triple(t, const_c, b)
    E = quotient_curve
    _, t1, t2 = pic_hom_basis(E)
    pts = coh.rational_ell_torsion(E)
    seen = {}
    for u in range(3):
        for v in range(3):
            t = u * t1 + v * t2
            values = tuple(triple_product(E, t, h1_constant(E, 1), h1_new(E, P)).exp
                           for P in pts)
            assert values not in seen, (u, v, seen[values])
            seen[values] = (u, v)


def test_normalized_cup_span(ell3_curves, cm_curve, ell2_curves):
    for E in ell3_curves + [cm_curve]:
        dim, cond = normalized_cup_span(E)
        assert dim <= 1 and cond
    for E in ell2_curves:
        dim, cond = normalized_cup_span(E)
        assert dim == 2 and not cond


def test_span_condition_equivalence(ell3_curves, cm_curve, ell2_curves):
    # Thm-style equivalence: span dimension <= 1 iff every normalized cup is
    # the base-point class times the Weil pairing
    for E in ell3_curves + [cm_curve] + ell2_curves:
        dim, cond = normalized_cup_span(E)
        assert (dim <= 1) == cond


def test_trivial_span_on_torsion_free_curve():
    # E(F_q)[ell] = 0 => (0, True)
    from cupcurve.curve import curve_new
    from cupcurve.field import make_context
    ctx = make_context(7, 3, 1)
    E = next(curve_new(ctx, 1, b) for b in range(1, 7)
             if curve_new(ctx, 1, b).order() % 3)
    assert E.order() % 3 != 0
    assert normalized_cup_span(E) == (0, True)
