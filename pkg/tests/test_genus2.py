import pytest

from cupcurve import genus2


def test_admissible_prime_examples():
    r = genus2.admissible_prime(439)
    assert r.admissible and r.prime and r.q1mod3 and r.cube3 and r.cube4 \
        and r.zeta_noncube
    r7 = genus2.admissible_prime(7)
    assert r7.prime and r7.q1mod3 and not r7.cube3 and not r7.admissible
    r5 = genus2.admissible_prime(5)
    assert r5.prime and not r5.q1mod3 and not r5.admissible
    assert not genus2.admissible_prime(6).prime
    assert not genus2.admissible_prime(3).admissible
    assert not genus2.admissible_prime(-4).prime


def test_admissibility_stable_under_cube_root_choice():
    # both primitive cube roots have the same cube status
    for q in (439, 499, 1021, 1123):
        z = genus2.primitive_cube_root(q)
        z2 = z * z % q
        assert pow(z, 3, q) == 1 and z != 1
        assert (pow(z, (q - 1) // 3, q) == 1) == (pow(z2, (q - 1) // 3, q) == 1)


def test_torsion3_counts():
    assert genus2.torsion3_count(7, 0, -3) == 3
    assert genus2.torsion3_count(7, 0, 9) == 9
    assert genus2.torsion3_count(439, 0, -3) == 9
    assert genus2.torsion3_count(439, 0, 9) == 9
    # cross-check against the group-structure route on a small curve
    from cupcurve.curve import curve_new
    from cupcurve.field import make_context
    for q, a, b in [(7, 0, -3), (7, 0, 9), (13, 0, 3), (13, -2, 0)]:
        E = curve_new(make_context(q, 3, 1), a, b)
        count = sum(1 for P in E.enumerate_points() if E.mul(3, P).is_infinity)
        assert genus2.torsion3_count(q, a, b) == count


def test_verify_counterexample_439():
    ce = genus2.verify_counterexample(439)
    assert (ce.torsion_e, ce.torsion_eprime) == (9, 9)
    assert not ce.p1_divisible and ce.conclusion


def test_verify_requires_admissible():
    with pytest.raises(ValueError):
        genus2.verify_counterexample(7)


def test_tilde_model_bijection():
    for q in (7, 13, 31):
        Ep = genus2.second_quotient(q)
        ctx = Ep.ctx
        sols = [(w, y) for w in range(q) for y in range(q)
                if (y * y - (1 - 3 * w ** 3)) % q == 0]
        images = set()
        for w, y in sols:
            P = genus2.tilde_to_weierstrass(Ep, w, y)
            assert genus2.weierstrass_to_tilde(Ep, P) == (ctx.elem(w), ctx.elem(y))
            images.add(P)
        affine = {P for P in Ep.enumerate_points() if not P.is_infinity}
        assert images == affine and len(images) == len(sols)
        # P1 = (0, 1) in the tilde model corresponds to (0, 3)
        assert genus2.tilde_to_weierstrass(Ep, 0, 1) == Ep.point(0, 3)
    with pytest.raises(ValueError):
        genus2.tilde_to_weierstrass(genus2.second_quotient(7), 1, 1)


def test_scan_small():
    rows, density = genus2.scan(5)
    assert [rep.q for rep, _ in rows] == [2, 3, 5]
    assert density == 0
    rows, density = genus2.scan(439)
    admissible = [rep.q for rep, ce in rows if rep.admissible]
    assert admissible == [439]
    assert all(ce.conclusion for rep, ce in rows if rep.admissible)
    assert density.numerator == 1
    with pytest.raises(ValueError):
        genus2.scan(1)


def test_csv_schema():
    rows, _ = genus2.scan(11)
    lines = genus2.csv_rows(rows)
    assert lines[0] == genus2.CSV_HEADER
    assert all(line.count(",") == genus2.CSV_HEADER.count(",") for line in lines)
    # non-admissible rows have empty trailing fields
    assert lines[1].startswith("2,true,false") and lines[1].endswith(",,,")


def test_scan_conclusions_hold_to_3000():
    rows, density = genus2.scan(3000)
    admissible = [rep.q for rep, ce in rows if rep.admissible]
    assert admissible[0] == 439
    assert all(ce.conclusion for rep, ce in rows if rep.admissible)
    assert all(ce.torsion_e == 9 and ce.torsion_eprime == 9
               for rep, ce in rows if rep.admissible)
