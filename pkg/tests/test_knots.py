import pytest

from fourgeo.algebra import N, LaurentPoly, is_monic_symmetric
from fourgeo.blocks import k3_elliptic
from fourgeo.calculus import MarkedSurface, blow_up, surface_blowup
from fourgeo.knots import (
    ALEXANDER_GENUS_CAP,
    Knot,
    SWLedger,
    distinguish_family,
    find_fibered_knot_of_genus,
    knot_surgery,
    nonfibered_nonmonic_family,
    torus_knot,
    torus_knot_alexander,
    twist_knot,
    unknot,
)


def test_trefoil():
    k = torus_knot(2, 3)
    assert k.genus == 1
    assert k.alexander == LaurentPoly({1: 1, 0: -1, -1: 1})
    assert k.fibered


def test_torus_knot_genus():
    assert torus_knot(2, 7).genus == 3
    assert torus_knot(3, 4).genus == 3
    assert torus_knot(2, 115).genus == 57  # gluing genus at n = 2


def test_torus_knot_rejects_non_knots():
    with pytest.raises(ValueError, match="not a knot"):
        torus_knot(2, 4)
    with pytest.raises(ValueError):
        torus_knot(1, 5)


def test_torus_knot_alexander_against_cyclotomic_oracle():
    # oracle: D(t) * (t^p - 1)(t^q - 1) == (t^{pq} - 1)(t - 1), recentered
    for p, q in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]:
        genus = (p - 1) * (q - 1) // 2
        delta = torus_knot_alexander(p, q)
        lhs = delta * LaurentPoly({p + q + genus: 1, q + genus: -1, p + genus: -1, genus: 1})
        assert lhs == LaurentPoly({p * q + 1: 1, p * q: -1, 1: -1, 0: 1})


def test_alexander_invariants_catalog():
    catalog = [torus_knot(2, q) for q in (3, 5, 7, 115)]
    catalog += [torus_knot(3, q) for q in (4, 5)]
    catalog += nonfibered_nonmonic_family(5)
    catalog.append(unknot())
    for k in catalog:
        assert k.alexander(1) in (1, -1)
        assert k.alexander.is_symmetric()
        if k.fibered:
            assert is_monic_symmetric(k.alexander)


def test_torus_knot_span_is_twice_genus():
    for p, q in [(2, 3), (2, 9), (3, 5), (4, 7)]:
        k = torus_knot(p, q)
        assert k.alexander.span() == 2 * k.genus
        assert k.alexander.substitute_square().span() == 4 * k.genus


def test_find_fibered_knot_of_genus():
    assert find_fibered_knot_of_genus(1).descriptor == "torus(2,3)"
    assert find_fibered_knot_of_genus(57).descriptor == "torus(2,115)"
    k0 = find_fibered_knot_of_genus(0)
    assert k0.descriptor == "unknot"
    assert k0.alexander == LaurentPoly.one()
    with pytest.raises(ValueError):
        find_fibered_knot_of_genus(-1)


def test_find_fibered_knot_defers_large_and_symbolic():
    big = find_fibered_knot_of_genus(ALEXANDER_GENUS_CAP + 1)
    assert big.alexander is None and big.fibered
    symbolic = find_fibered_knot_of_genus(3 * N**5 - 3 * N**4 + N**3 + 1)
    assert symbolic.alexander is None
    assert symbolic.genus == 3 * N**5 - 3 * N**4 + N**3 + 1


def test_twist_family():
    family = nonfibered_nonmonic_family(3)
    assert [k.descriptor for k in family] == ["twist(2)", "twist(3)", "twist(4)"]
    assert family[0].alexander == LaurentPoly({1: 2, 0: -5, -1: 2})
    assert family[1].alexander == LaurentPoly({1: 3, 0: -7, -1: 3})
    assert len({k.alexander for k in family}) == 3
    for k in family:
        assert not k.fibered
        assert not is_monic_symmetric(k.alexander)
    assert len(nonfibered_nonmonic_family(1)) == 1


def test_knot_validation():
    with pytest.raises(ValueError, match="Alexander"):
        Knot("bad", 1, LaurentPoly({1: 1, 0: -1}), fibered=False)
    with pytest.raises(ValueError, match="monic"):
        Knot("bad", 1, LaurentPoly({1: 2, 0: -3, -1: 2}), fibered=True)


def test_knot_surgery_unknot_is_identity():
    base = k3_elliptic()
    after = knot_surgery(base, unknot())
    assert after.e == base.e and after.sigma == base.sigma
    assert after.sw.value == base.sw.value


def test_knot_surgery_trefoil_ledger():
    after = knot_surgery(k3_elliptic(), torus_knot(2, 3))
    assert after.sw.value == LaurentPoly({2: 1, 0: -1, -2: 1})
    assert after.symplectic.is_true()


def test_knot_surgery_preserves_numbers():
    base = k3_elliptic()
    for knot in (torus_knot(2, 5), twist_knot(3), unknot()):
        after = knot_surgery(base, knot)
        assert after.e == base.e
        assert after.sigma == base.sigma
        assert after.c1sq == base.c1sq
        assert after.chi_h == base.chi_h


def test_knot_surgery_nonfibered_kills_symplectic():
    after = knot_surgery(k3_elliptic(), twist_knot(2))
    assert after.symplectic.is_false()


def test_knot_surgery_requirements():
    bare = k3_elliptic()
    no_ledger = bare.__class__(bare.e, bare.sigma, surfaces=bare.surfaces)
    with pytest.raises(ValueError, match="ledger"):
        knot_surgery(no_ledger, unknot())
    no_torus = bare.__class__(bare.e, bare.sigma, sw=bare.sw)
    with pytest.raises(ValueError, match="torus"):
        knot_surgery(no_torus, unknot())
    bad_torus = bare.with_surface("fiber", MarkedSurface(2, 0))
    with pytest.raises(ValueError, match="genus 1"):
        knot_surgery(bad_torus, unknot())


def test_knot_surgery_sum_target_gains_genus():
    # blown-up K3 with its section pushed to square -2n^3, then surgery
    # with the gluing-genus knot at n = 2 (genus 57)
    record = blow_up(k3_elliptic(), 2 * 8 - 2)
    record = record.with_surface("section", surface_blowup(record.surface("section"), 14))
    after = knot_surgery(record, torus_knot(2, 115), sum_target="section")
    glued = after.surface("section")
    assert glued.genus == 57
    assert glued.self_int == -16


def test_knot_surgery_with_deferred_polynomial():
    symbolic_knot = find_fibered_knot_of_genus(3 * N**5 - 3 * N**4 + N**3 + 1)
    after = knot_surgery(k3_elliptic(), symbolic_knot)
    assert after.sw.value == LaurentPoly.one()
    assert len(after.sw.deferred) == 1
    assert "Delta" in str(after.sw)


def test_distinguish_family_torus_knots():
    base = k3_elliptic()
    report = distinguish_family(base, [torus_knot(2, 2 * k + 1) for k in range(1, 11)])
    assert report.pairwise_distinct
    assert len(report.entries) == 10
    assert all(e.monic and e.symplectic_candidate for e in report.entries)


def test_distinguish_family_flags_trivial_and_partitions():
    base = k3_elliptic()
    report = distinguish_family(base, [unknot(), torus_knot(2, 3), twist_knot(2)])
    assert report.entries[0].note == "trivial Alexander polynomial, no exotic pair"
    assert [e.symplectic_candidate for e in report.entries] == [True, True, False]
    assert len(report.non_symplectic()) == 1
    assert report.pairwise_distinct


def test_distinguish_family_detects_collisions():
    base = k3_elliptic()
    report = distinguish_family(base, [torus_knot(2, 3), torus_knot(2, 3)])
    assert not report.pairwise_distinct
    assert report.collisions == (("torus(2,3)", "torus(2,3)"),)


def test_torus_knot_family_distinct_up_to_100():
    seen = set()
    for k in range(1, 101):
        delta = torus_knot(2, 2 * k + 1).alexander.substitute_square()
        assert delta not in seen
        seen.add(delta)


def test_ledger_string_shows_deferred():
    ledger = SWLedger(LaurentPoly.one(), deferred=("Delta[torus(2,7)](t^2)",))
    assert str(ledger) == "1 * Delta[torus(2,7)](t^2)"
