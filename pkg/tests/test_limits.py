"""2-limits and cartesian structure: products, pullbacks, powers, coproducts,
the free arrow, copowers, and internal homs with their oracles."""

import random
from itertools import product as iproduct

import pytest

from fincat import finset
from fincat.audit import diagonal_equaliser_holds
from fincat.corpus import category_from_tables
from fincat.ends import brute_families, check_family, end_families
from fincat.errors import SizeBound
from fincat.finset import FinMap, FinObj, compose, identity
from fincat.internal import (compose_functors, id_functor, level_size,
                             validate_category, validate_functor,
                             validate_nat_trans)
from fincat.limits import (bang_functor, constant_functor, coproduct_cat,
                           copower_by_two, enumerate_cells, enumerate_functors,
                           free_arrow, hom_category, hom_category_as_internal,
                           hom_iso_with_oracle, internal_hom, power_by_two,
                           product_cat, pullback_cat, terminal_cat)
from fincat.transfer import disc, indisc


def test_terminal_cat_is_disc_one():
    t = terminal_cat()
    assert (t.C0.size, t.C1.size) == (1, 1)
    assert t.d0.table == t.d1.table == t.i.table == (0,)


def test_product_of_free_arrows():
    two = free_arrow()
    pc = product_cat(two, two)
    assert (pc.category.C0.size, pc.category.C1.size) == (4, 9)
    assert validate_category(pc.category).ok
    assert validate_functor(pc.proj0).ok and validate_functor(pc.proj1).ok


def test_pullback_of_identities_is_domain():
    two = free_arrow()
    f = id_functor(two)
    pb = pullback_cat(f, f)
    assert (pb.category.C0.size, pb.category.C1.size) == (2, 3)
    assert validate_category(pb.category).ok


def test_mediating_functor_commutes():
    two = free_arrow()
    pc = product_cat(two, two)
    f = id_functor(two)
    med = pc.mediate(f, f)
    assert compose_functors(pc.proj0, med) == f
    assert compose_functors(pc.proj1, med) == f


def test_levelwise_limit_reflection():
    # the chosen product cone is limiting levelwise; a padded fake cone fails
    two = free_arrow()
    pc = product_cat(two, two)
    assert pc.l0.apex.size == two.C0.size * two.C0.size
    assert pc.l1.apex.size == two.C1.size * two.C1.size
    # fake cone: drop an element from the apex; the induced map is not epi
    assert not finset.is_pullback_square(
        FinMap(FinObj(3), two.C0, (0, 0, 1)),
        FinMap(FinObj(3), two.C0, (0, 1, 1)),
        finset.bang(two.C0), finset.bang(two.C0))


def test_power_of_discrete_is_discrete():
    x = FinObj(3)
    p = power_by_two(disc(x))
    assert p.carrier.C0.size == 3
    assert p.carrier.C1.size == 3
    assert p.carrier.d0.table == p.carrier.d1.table == identity(FinObj(3)).table


def test_power_of_free_arrow_brute_force():
    two = free_arrow()
    p = power_by_two(two)
    assert p.carrier.C0.size == two.C1.size == 3
    # independent brute force: pairs of composable pairs with equal composite
    pairs = [(u, v) for u in range(3) for v in range(3)
             if two.d1.table[u] == two.d0.table[v]]
    squares = [(a, b) for a in pairs for b in pairs
               if two.comp(*a) == two.comp(*b)]
    assert len(squares) == 6
    assert p.carrier.C1.size == 6


def test_power_universal_property_bijection(corpus):
    two = free_arrow()
    probes = [two, disc(FinObj(2)), indisc(FinObj(2))]
    for a in corpus[:8]:
        if a.C1.size > 6:
            continue
        p = power_by_two(a)
        hc = hom_category(two, a)
        assert p.carrier.C0.size == a.C1.size
        assert p.carrier.C1.size == len(hc.arrows)
        # functors from small probes into the power biject with 2-cells
        for x in probes:
            fs = enumerate_functors(x, p.carrier)
            cells = [c for f in enumerate_functors(x, a)
                     for g in enumerate_functors(x, a)
                     for c in enumerate_cells(f, g)]
            assert len(fs) == len(cells)
            for cell in cells[:6]:
                h = p.cell_to_functor(cell)
                assert validate_functor(h).ok
                back = p.functor_to_cell(h)
                assert back == cell


def test_power_sizes_against_naive_oracle(corpus):
    from fincat import naive
    two = free_arrow()
    n_two = naive.oracle_from_internal(two)
    for a in corpus[:8]:
        if a.C1.size > 6:
            continue
        p = power_by_two(a)
        na = naive.oracle_from_internal(a)
        funs, cells, _cat = naive.oracle_hom_category(n_two, na)
        assert p.carrier.C0.size == len(funs)
        assert p.carrier.C1.size == len(cells)


def test_internal_hom_higher_levels_match_end(corpus):
    from fincat.ends import end_families
    two = free_arrow()
    i2 = indisc(FinObj(2))
    for (x, y) in [(two, two), (two, i2), (i2, two), (terminal_cat(), two)]:
        ih = internal_hom(x, y)
        assert ih.carrier.pairs.apex.size == len(end_families(x, y, 2))
        assert ih.carrier.triples.apex.size == len(end_families(x, y, 3))


def test_coproduct_with_empty():
    two = free_arrow()
    empty = disc(FinObj(0))
    cop = coproduct_cat(two, empty)
    assert (cop.category.C0.size, cop.category.C1.size) == (2, 3)
    assert cop.category.m.table == two.m.table


def test_coproduct_one_plus_one():
    one = terminal_cat()
    cop = coproduct_cat(one, one)
    d2 = disc(FinObj(2))
    assert (cop.category.C0.size, cop.category.C1.size) == (2, 2)
    assert cop.category.d0.table == d2.d0.table


def test_coproduct_free_arrow_indisc():
    cop = coproduct_cat(free_arrow(), indisc(FinObj(2)))
    assert validate_category(cop.category).ok
    assert (cop.category.C0.size, cop.category.C1.size) == (4, 7)


def test_free_arrow_shape():
    two = free_arrow()
    assert (two.C0.size, two.C1.size) == (2, 3)
    non_identity = [u for u in range(3) if u not in set(two.i.table)]
    assert len(non_identity) == 1
    u = non_identity[0]
    assert two.d1.table[u] != two.d0.table[u]


def test_free_arrow_oracle_isomorphism():
    two = free_arrow()
    hand = category_from_tables(2, [(0, 0), (1, 1), (0, 1)],
                                {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2},
                                [0, 1])
    isos = [h for h in enumerate_functors(two, hand)
            if finset.is_iso(h.f0) and finset.is_iso(h.f1)]
    assert len(isos) == 1


def test_copower_of_terminal_is_free_arrow():
    cp = copower_by_two(terminal_cat())
    assert (cp.carrier.C0.size, cp.carrier.C1.size) == (2, 3)
    isos = [h for h in enumerate_functors(cp.carrier, free_arrow())
            if finset.is_iso(h.f0) and finset.is_iso(h.f1)]
    assert len(isos) == 1


def test_copower_object_count(corpus):
    for a in corpus[:6]:
        cp = copower_by_two(a)
        assert cp.carrier.C0.size == 2 * a.C0.size


def test_copower_universal_bijection():
    rng = random.Random(8)
    pool = [free_arrow(), indisc(FinObj(2)), disc(FinObj(2))]
    for a in pool:
        cp = copower_by_two(a)
        for b in pool:
            if b.C1.size > 5 or a.C1.size > 5:
                continue
            cells = [c for f in enumerate_functors(a, b)
                     for g in enumerate_functors(a, b)
                     for c in enumerate_cells(f, g)]
            hs = enumerate_functors(cp.carrier, b)
            assert len(cells) == len(hs)
            for cell in cells:
                h = cp.cell_to_functor(cell)
                assert validate_functor(h).ok
                back = cp.functor_to_cell(h)
                assert back == cell


def test_internal_hom_unit_law():
    two = free_arrow()
    ih = internal_hom(terminal_cat(), two)
    assert (ih.carrier.C0.size, ih.carrier.C1.size) == (two.C0.size, two.C1.size)
    isos = [h for h in enumerate_functors(ih.carrier, two)
            if finset.is_iso(h.f0) and finset.is_iso(h.f1)]
    assert len(isos) >= 1


def test_internal_hom_of_free_arrows():
    ih = internal_hom(free_arrow(), free_arrow())
    assert ih.carrier.C0.size == 3
    assert ih.carrier.C1.size == 6
    assert validate_category(ih.carrier).ok
    assert validate_functor(ih.evaluation).ok


def test_internal_hom_matches_oracle(corpus):
    checked = 0
    for a in corpus:
        for b in corpus:
            if a.C1.size > 5 or b.C1.size > 5:
                continue
            try:
                ih = internal_hom(a, b, bound=200000)
            except SizeBound:
                continue
            hc = hom_category(a, b)
            assert ih.carrier.C0.size == len(hc.objects)
            assert ih.carrier.C1.size == len(hc.arrows)
            iso = hom_iso_with_oracle(ih, hc)
            assert validate_functor(iso).ok
            checked += 1
            if checked >= 12:
                return
    assert checked > 0


def test_end_families_match_literal_equalizer():
    # tiny instances where the full product can be materialised and filtered
    one = terminal_cat()
    two = free_arrow()
    d2 = disc(FinObj(2))
    for (x, y, k) in [(one, two, 0), (one, d2, 1), (d2, d2, 0), (two, one, 0),
                      (two, one, 2), (one, one, 3), (one, indisc(FinObj(2)), 0)]:
        smart = end_families(x, y, k)
        brute = brute_families(x, y, k)
        assert len(smart) == len(brute)
        smart_keys = {f.key() for f in smart}
        for fam in brute:
            key = tuple([fam[(0, psi)] for psi in sorted(p for (n, p) in fam if n == 0)]
                        + [fam[(1, psi)] for psi in sorted(p for (n, p) in fam if n == 1)])
            assert key in smart_keys


def test_end_families_full_naturality_sweep():
    two = free_arrow()
    i2 = indisc(FinObj(2))
    for (x, y) in [(two, two), (two, i2), (i2, two)]:
        for k in range(3):
            for fam in end_families(x, y, k):
                assert check_family(x, y, fam)


def test_internal_hom_curry_round_trip():
    two = free_arrow()
    i2 = indisc(FinObj(2))
    for (z, x, y) in [(two, two, two), (two, two, i2), (i2, two, two)]:
        ih = internal_hom(x, y)
        prod_zx = product_cat(z, x)
        for h in enumerate_functors(prod_zx.category, y)[:8]:
            g = ih.curry(z, prod_zx, h)
            assert validate_functor(g).ok
            # uncurry: ev . (g x 1)
            lifted = ih.prod.mediate(compose_functors(g, prod_zx.proj0),
                                     prod_zx.proj1)
            back = compose_functors(ih.evaluation, lifted)
            assert back == h


def test_disc_preserves_internal_homs():
    for (ys, zs) in [(2, 2), (2, 3), (3, 2), (0, 2)]:
        y, z = FinObj(ys), FinObj(zs)
        ih = internal_hom(disc(y), disc(z))
        exp = finset.exponential(y, z)
        assert ih.carrier.C0.size == exp.obj.size
        assert ih.carrier.C1.size == exp.obj.size
        assert ih.carrier.d0.table == ih.carrier.d1.table


def test_internal_hom_size_bound():
    big = indisc(FinObj(4))
    with pytest.raises(SizeBound):
        internal_hom(big, big, bound=10)


def test_hom_category_of_terminal_source(corpus):
    for a in corpus[:6]:
        hc = hom_category(terminal_cat(), a)
        assert len(hc.objects) == a.C0.size
        assert len(hc.arrows) == a.C1.size


def test_hom_category_composition_associative():
    hc = hom_category(free_arrow(), free_arrow())
    assert len(hc.objects) == 3
    for (i2, i1), c21 in hc.comp.items():
        for (j2, j1), c32 in hc.comp.items():
            if j1 == i2:
                assert hc.comp[(j2, c21)] == hc.comp[(c32, i1)]


def test_extensivity_of_coproducts(corpus, functor_corpus):
    two = free_arrow()
    i2 = indisc(FinObj(2))
    cop = coproduct_cat(two, i2)
    # pull back sample functors into the coproduct along both injections
    probes = [compose_functors(cop.inj0, id_functor(two)),
              compose_functors(cop.inj1, id_functor(i2))]
    for h in probes:
        pb0 = pullback_cat(h, cop.inj0)
        pb1 = pullback_cat(h, cop.inj1)
        assert pb0.category.C0.size + pb1.category.C0.size == h.dom.C0.size
        assert pb0.category.C1.size + pb1.category.C1.size == h.dom.C1.size
        assert validate_category(pb0.category).ok
        assert validate_category(pb1.category).ok


def test_diagonal_equaliser_identity():
    for n in range(6):
        assert diagonal_equaliser_holds(FinObj(n))
