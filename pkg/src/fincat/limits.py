"""Finite 2-limits and cartesian structure of the category of internal
categories: terminal, binary products, pullbacks, powers by the free arrow,
extensive coproducts, copowers, and internal homs via the simplicial end.

The internal hom is computed by the end formula (see ends.py) as the
definitional path; hom_category re-enumerates functors and transformations
externally and serves as the anti-drift oracle.
"""

from dataclasses import dataclass
from itertools import product as iproduct

from . import finset
from .ends import Family, end_families
from .errors import DomainMismatch, SizeBound
from .finset import FinMap, FinObj, compose, identity
from .internal import (InternalCategory, InternalFunctor, InternalNatTrans,
                       derived_unit_maps, validate_category, validate_functor,
                       validate_nat_trans)
from .transfer import disc


def terminal_cat() -> InternalCategory:
    return disc(finset.terminal())


def bang_functor(a: InternalCategory) -> InternalFunctor:
    return InternalFunctor(a, terminal_cat(), finset.bang(a.C0), finset.bang(a.C1))


def _category_from_levels(l0, l1, a: InternalCategory, b: InternalCategory):
    """Internal category structure on chosen levelwise limits of a and b."""
    p1a, p1b = l1.projections
    d0 = l0.mediate(compose(a.d0, p1a), compose(b.d0, p1b))
    d1 = l0.mediate(compose(a.d1, p1a), compose(b.d1, p1b))
    p0a, p0b = l0.projections
    i = l1.mediate(compose(a.i, p0a), compose(b.i, p0b))
    return InternalCategory(l0.apex, l1.apex, d0, d1, i,
                            _pair_m(l0, l1, a, b, d0, d1))


def _pair_m(l0, l1, a, b, d0, d1):
    pairs = finset.pullback(d1, d0)
    p1a, p1b = l1.projections
    pr_u, pr_v = pairs.projections
    ua, va = compose(p1a, pr_u), compose(p1a, pr_v)
    ub, vb = compose(p1b, pr_u), compose(p1b, pr_v)
    ma = compose(a.m, a.pairs.mediate(ua, va))
    mb = compose(b.m, b.pairs.mediate(ub, vb))
    return l1.mediate(ma, mb)


@dataclass(frozen=True)
class LimitCone:
    """A chosen 2-limit: carrier with projection functors and a mediator."""

    category: InternalCategory
    l0: finset.ChosenLimit
    l1: finset.ChosenLimit
    proj0: InternalFunctor
    proj1: InternalFunctor

    def mediate(self, p: InternalFunctor, q: InternalFunctor) -> InternalFunctor:
        if p.dom != q.dom:
            raise DomainMismatch("mediating functor needs a common domain")
        return InternalFunctor(p.dom, self.category,
                               self.l0.mediate(p.f0, q.f0),
                               self.l1.mediate(p.f1, q.f1))


def product_cat(a: InternalCategory, b: InternalCategory) -> LimitCone:
    l0 = finset.product(a.C0, b.C0)
    l1 = finset.product(a.C1, b.C1)
    cat = _category_from_levels(l0, l1, a, b)
    proj0 = InternalFunctor(cat, a, l0.projections[0], l1.projections[0])
    proj1 = InternalFunctor(cat, b, l0.projections[1], l1.projections[1])
    return LimitCone(cat, l0, l1, proj0, proj1)


def pullback_cat(f: InternalFunctor, g: InternalFunctor) -> LimitCone:
    if f.cod != g.cod:
        raise DomainMismatch("pullback needs a cospan of functors")
    l0 = finset.pullback(f.f0, g.f0)
    l1 = finset.pullback(f.f1, g.f1)
    cat = _category_from_levels(l0, l1, f.dom, g.dom)
    proj0 = InternalFunctor(cat, f.dom, l0.projections[0], l1.projections[0])
    proj1 = InternalFunctor(cat, g.dom, l0.projections[1], l1.projections[1])
    return LimitCone(cat, l0, l1, proj0, proj1)


@dataclass(frozen=True)
class CoproductCone:
    category: InternalCategory
    inj0: InternalFunctor
    inj1: InternalFunctor

    def copair(self, p: InternalFunctor, q: InternalFunctor) -> InternalFunctor:
        if p.cod != q.cod:
            raise DomainMismatch("copairing needs a common codomain")
        c = self.category
        f0 = finset.copair(p.f0, q.f0, c.C0, self.inj0.f0, self.inj1.f0)
        f1 = finset.copair(p.f1, q.f1, c.C1, self.inj0.f1, self.inj1.f1)
        return InternalFunctor(c, p.cod, f0, f1)


def coproduct_cat(a: InternalCategory, b: InternalCategory) -> CoproductCone:
    """Levelwise disjoint union, a's elements first."""
    c0, i00, i01 = finset.coproduct(a.C0, b.C0)
    c1, i10, i11 = finset.coproduct(a.C1, b.C1)
    d0 = finset.copair(compose(i00, a.d0), compose(i01, b.d0), c1, i10, i11)
    d1 = finset.copair(compose(i00, a.d1), compose(i01, b.d1), c1, i10, i11)
    i = finset.copair(compose(i10, a.i), compose(i11, b.i), c0, i00, i01)
    pairs = finset.pullback(d1, d0)
    na = a.C1.size
    table = []
    for u, v in pairs.tuples:
        if u < na:
            table.append(i10.table[a.comp(u, v)])
        else:
            table.append(i11.table[b.comp(u - na, v - na)])
    m = FinMap(pairs.apex, c1, tuple(table))
    cat = InternalCategory(c0, c1, d0, d1, i, m)
    inj0 = InternalFunctor(a, cat, i00, i10)
    inj1 = InternalFunctor(b, cat, i01, i11)
    return CoproductCone(cat, inj0, inj1)


_FREE_ARROW = None


def free_arrow() -> InternalCategory:
    """The free-living internal arrow: 2 objects, 3 arrows, one non-identity."""
    global _FREE_ARROW
    if _FREE_ARROW is None:
        c0 = FinObj(2, ("src", "tgt"))
        c1 = FinObj(3, ("id_src", "id_tgt", "arrow"))
        d1 = FinMap(c1, c0, (0, 1, 0))   # sources
        d0 = FinMap(c1, c0, (0, 1, 1))   # targets
        i = FinMap(c0, c1, (0, 1))
        cat = InternalCategory(c0, c1, d0, d1, i,
                               FinMap(FinObj(4), c1, (0, 1, 2, 2)))
        assert validate_category(cat).ok
        _FREE_ARROW = cat
    return _FREE_ARROW


@dataclass(frozen=True)
class PowerByTwo:
    """The internal arrow category of a: objects are a's arrows, arrows are
    its commutative squares (pairs of composable pairs with equal composite)."""

    carrier: InternalCategory
    source_proj: InternalFunctor
    target_proj: InternalFunctor
    universal_cell: InternalNatTrans
    squares: finset.ChosenLimit  # pullback of (m, m)

    def functor_to_cell(self, h: InternalFunctor) -> InternalNatTrans:
        """A functor X -> a^2 corresponds to a 2-cell between functors X -> a."""
        from .internal import compose_functors
        if h.cod != self.carrier:
            raise DomainMismatch("expected a functor into the power")
        return InternalNatTrans(compose_functors(self.source_proj, h),
                                compose_functors(self.target_proj, h),
                                h.f0)

    def cell_to_functor(self, cell: InternalNatTrans) -> InternalFunctor:
        a = cell.src.cod
        f, g = cell.src, cell.tgt
        table = []
        for u in range(f.dom.C1.size):
            x, y = f.dom.d1.table[u], f.dom.d0.table[u]
            p = a.pairs.encode((g.f1.table[u], cell.alpha.table[x]))
            q = a.pairs.encode((cell.alpha.table[y], f.f1.table[u]))
            table.append(self.squares.encode((p, q)))
        return InternalFunctor(f.dom, self.carrier, cell.alpha,
                               FinMap(f.dom.C1, self.carrier.C1, tuple(table)))


def power_by_two(a: InternalCategory) -> PowerByTwo:
    sq = finset.pullback(a.m, a.m)
    pr0, pr1 = sq.projections          # into the object of composable pairs
    pu, pv = a.pairs.projections       # (u, v): u applied second
    k_map = compose(pu, pr0)           # target-side component
    u_map = compose(pv, pr0)           # source object (an arrow of a)
    v_map = compose(pu, pr1)           # target object
    h_map = compose(pv, pr1)           # source-side component
    i0, i1 = derived_unit_maps(a)
    i_sq = sq.mediate(i0, i1)
    carrier_d0, carrier_d1 = v_map, u_map
    pairs = finset.pullback(carrier_d1, carrier_d0)
    pr_s, pr_t = pairs.projections
    kk = compose(a.m, a.pairs.mediate(compose(k_map, pr_s), compose(k_map, pr_t)))
    hh = compose(a.m, a.pairs.mediate(compose(h_map, pr_s), compose(h_map, pr_t)))
    p_new = a.pairs.mediate(kk, compose(u_map, pr_t))
    q_new = a.pairs.mediate(compose(v_map, pr_s), hh)
    m_sq = sq.mediate(p_new, q_new)
    carrier = InternalCategory(a.C1, sq.apex, carrier_d0, carrier_d1, i_sq, m_sq)
    source_proj = InternalFunctor(carrier, a, a.d1, h_map)
    target_proj = InternalFunctor(carrier, a, a.d0, k_map)
    cell = InternalNatTrans(source_proj, target_proj, identity(a.C1))
    assert validate_category(carrier).ok
    assert validate_functor(source_proj).ok and validate_functor(target_proj).ok
    assert validate_nat_trans(cell).ok
    return PowerByTwo(carrier, source_proj, target_proj, cell, sq)


def constant_functor(a: InternalCategory, b: InternalCategory, obj: int) -> InternalFunctor:
    return InternalFunctor(a, b,
                           FinMap(a.C0, b.C0, (obj,) * a.C0.size),
                           FinMap(a.C1, b.C1, (b.i.table[obj],) * a.C1.size))


@dataclass(frozen=True)
class CopowerByTwo:
    """The copower of a by the free arrow: the product with it, plus the
    universal 2-cell between the two coprojections."""

    carrier: InternalCategory
    prod: LimitCone
    in0: InternalFunctor
    in1: InternalFunctor
    universal_cell: InternalNatTrans

    def cell_to_functor(self, cell: InternalNatTrans) -> InternalFunctor:
        """The functor 2 x A -> B corresponding to a 2-cell f => g : A -> B."""
        f, g = cell.src, cell.tgt
        a, b = f.dom, f.cod
        table0 = []
        for j, x in self.prod.l0.tuples:
            table0.append(f.f0.table[x] if j == 0 else g.f0.table[x])
        table1 = []
        for e, u in self.prod.l1.tuples:
            if e == 0:
                table1.append(f.f1.table[u])
            elif e == 1:
                table1.append(g.f1.table[u])
            else:
                x = a.d1.table[u]
                table1.append(b.comp(g.f1.table[u], cell.alpha.table[x]))
        return InternalFunctor(self.carrier, b,
                               FinMap(self.carrier.C0, b.C0, tuple(table0)),
                               FinMap(self.carrier.C1, b.C1, tuple(table1)))

    def functor_to_cell(self, h: InternalFunctor) -> InternalNatTrans:
        from .internal import whisker_left
        return whisker_left(h, self.universal_cell)


def copower_by_two(a: InternalCategory) -> CopowerByTwo:
    two = free_arrow()
    prod = product_cat(two, a)
    carrier = prod.category
    in0 = prod.mediate(constant_functor(a, two, 0), InternalFunctor(a, a, identity(a.C0), identity(a.C1)))
    in1 = prod.mediate(constant_functor(a, two, 1), InternalFunctor(a, a, identity(a.C0), identity(a.C1)))
    alpha = FinMap(a.C0, carrier.C1,
                   tuple(prod.l1.encode((2, a.i.table[x])) for x in range(a.C0.size)))
    cell = InternalNatTrans(in0, in1, alpha)
    assert validate_nat_trans(cell).ok
    return CopowerByTwo(carrier, prod, in0, in1, cell)


# ---------------------------------------------------------------------------
# Internal hom via the end formula.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InternalHom:
    carrier: InternalCategory
    dom: InternalCategory    # the exponent X
    cod: InternalCategory    # the target Y
    prod: LimitCone          # carrier x X, domain of evaluation
    evaluation: InternalFunctor
    level0: tuple            # Family objects for functors
    level1: tuple            # Family objects for cells

    def curry(self, z: InternalCategory, prod_zx: LimitCone,
              h: InternalFunctor) -> InternalFunctor:
        """Transpose a functor Z x X -> Y (over the chosen product) to Z -> hom."""
        x, y = self.dom, self.cod
        if h.dom != prod_zx.category or h.cod != y:
            raise DomainMismatch("curry needs a functor Z x X -> Y")
        idx0 = {f.key(): i for i, f in enumerate(self.level0)}
        idx1 = {f.key(): i for i, f in enumerate(self.level1)}
        from .internal import monotone_maps, simplicial_map

        def family_for(z_simplex, k):
            eta0 = {}
            eta1 = {}
            for psi in monotone_maps(0, k):
                zs = simplicial_map(z, list(psi), k, 0).table[z_simplex]
                eta0[psi] = tuple(h.f0.table[prod_zx.l0.encode((zs, xv))]
                                  for xv in range(x.C0.size))
            for psi in monotone_maps(1, k):
                za = simplicial_map(z, list(psi), k, 1).table[z_simplex]
                eta1[psi] = tuple(h.f1.table[prod_zx.l1.encode((za, aa))]
                                  for aa in range(x.C1.size))
            return Family(k, eta0, eta1)

        f0 = FinMap(z.C0, self.carrier.C0,
                    tuple(idx0[family_for(zz, 0).key()] for zz in range(z.C0.size)))
        f1 = FinMap(z.C1, self.carrier.C1,
                    tuple(idx1[family_for(zz, 1).key()] for zz in range(z.C1.size)))
        return InternalFunctor(z, self.carrier, f0, f1)


def internal_hom(x: InternalCategory, y: InternalCategory,
                 bound: int = 10 ** 6) -> InternalHom:
    """The internal hom [x, y], each level the stated end; SizeBound if the
    enumeration would exceed `bound` steps."""
    if x.C0.size and y.C0.size ** x.C0.size > bound:
        raise SizeBound("object-table space exceeds the configured bound")
    hom0 = end_families(x, y, 0, bound)
    hom1 = end_families(x, y, 1, bound)
    hom2 = end_families(x, y, 2, bound)
    idx0 = {f.key(): i for i, f in enumerate(hom0)}
    idx1 = {f.key(): i for i, f in enumerate(hom1)}

    def vertex_key(fam, t):
        return (fam.eta0[(t,)], fam.eta1[(t, t)])

    def edge_key(fam, s, t):
        return (fam.eta0[(s,)], fam.eta0[(t,)],
                fam.eta1[(s, s)], fam.eta1[(s, t)], fam.eta1[(t, t)])

    c0 = FinObj(len(hom0))
    c1 = FinObj(len(hom1))
    d0 = FinMap(c1, c0, tuple(idx0[vertex_key(f, 1)] for f in hom1))
    d1 = FinMap(c1, c0, tuple(idx0[vertex_key(f, 0)] for f in hom1))
    i = FinMap(c0, c1, tuple(
        idx1[(f.eta0[(0,)], f.eta0[(0,)], f.eta1[(0, 0)], f.eta1[(0, 0)],
              f.eta1[(0, 0)])] for f in hom0))
    pairs = finset.pullback(d1, d0)
    seen = {}
    for fam in hom2:
        cu = idx1[edge_key(fam, 1, 2)]
        cv = idx1[edge_key(fam, 0, 1)]
        if (cu, cv) in seen:
            raise SizeBound("internal error: Segal map not injective")
        seen[(cu, cv)] = idx1[edge_key(fam, 0, 2)]
    if len(seen) != pairs.apex.size:
        raise SizeBound("internal error: Segal map not surjective")
    m = FinMap(pairs.apex, c1, tuple(seen[t] for t in pairs.tuples))
    carrier = InternalCategory(c0, c1, d0, d1, i, m)
    rep = validate_category(carrier)
    assert rep.ok, f"hom carrier failed validation: {rep}"
    prod = product_cat(carrier, x)
    ev0 = FinMap(prod.l0.apex, y.C0,
                 tuple(hom0[fi].eta0[(0,)][xv] for fi, xv in prod.l0.tuples))
    ev1 = FinMap(prod.l1.apex, y.C1,
                 tuple(hom1[ci].eta1[(0, 1)][a] for ci, a in prod.l1.tuples))
    evaluation = InternalFunctor(prod.category, y, ev0, ev1)
    rep = validate_functor(evaluation)
    assert rep.ok, f"evaluation failed validation: {rep}"
    return InternalHom(carrier, x, y, prod, evaluation, tuple(hom0), tuple(hom1))


# ---------------------------------------------------------------------------
# External hom-category enumeration: the anti-drift oracle for the end path.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HomCategory:
    objects: tuple      # InternalFunctor list
    arrows: tuple       # (src_index, tgt_index, InternalNatTrans)
    identity: tuple     # arrow index per object
    comp: dict          # (later, earlier) -> arrow index


def enumerate_functors(a: InternalCategory, b: InternalCategory,
                       bound: int = 10 ** 6):
    """All internal functors a -> b, ordered by (f0, f1) tables."""
    out = []
    steps = 0
    fibers = {}
    for u in range(b.C1.size):
        fibers.setdefault((b.d1.table[u], b.d0.table[u]), []).append(u)
    ids = {a.i.table[xx]: xx for xx in range(a.C0.size)}
    comp_checks = [[] for _ in range(a.C1.size)]
    for p, (u, v) in enumerate(a.pairs.tuples):
        w = a.m.table[p]
        last = max(u, v, w)
        comp_checks[last].append((u, v, w))
    for f0 in iproduct(range(b.C0.size), repeat=a.C0.size):
        steps += 1
        if steps > bound:
            raise SizeBound("functor enumeration exceeded the bound")
        f1 = [None] * a.C1.size

        def assign(idx):
            nonlocal steps
            if idx == a.C1.size:
                out.append(InternalFunctor(
                    a, b, FinMap(a.C0, b.C0, f0), FinMap(a.C1, b.C1, tuple(f1))))
                return
            if idx in ids:
                cands = [b.i.table[f0[ids[idx]]]]
            else:
                cands = fibers.get(
                    (f0[a.d1.table[idx]], f0[a.d0.table[idx]]), [])
            for val in cands:
                steps += 1
                if steps > bound:
                    raise SizeBound("functor enumeration exceeded the bound")
                f1[idx] = val
                ok = True
                for (u, v, w) in comp_checks[idx]:
                    bu, bv, bw = f1[u], f1[v], f1[w]
                    if bu is None or bv is None or bw is None:
                        continue
                    if b.comp(bu, bv) != bw:
                        ok = False
                        break
                if ok:
                    assign(idx + 1)
                f1[idx] = None

        assign(0)
    out.sort(key=lambda h: (h.f0.table, h.f1.table))
    return out


def enumerate_cells(f: InternalFunctor, g: InternalFunctor):
    """All 2-cells f => g, ordered by assigner table."""
    b = f.cod
    a = f.dom
    cands = []
    for xx in range(a.C0.size):
        fiber = [u for u in range(b.C1.size)
                 if b.d1.table[u] == f.f0.table[xx]
                 and b.d0.table[u] == g.f0.table[xx]]
        if not fiber:
            return []
        cands.append(fiber)
    out = []
    for combo in iproduct(*cands):
        alpha = FinMap(a.C0, b.C1, combo)
        ok = True
        for u in range(a.C1.size):
            xx, yy = a.d1.table[u], a.d0.table[u]
            if b.comp(g.f1.table[u], combo[xx]) != b.comp(combo[yy], f.f1.table[u]):
                ok = False
                break
        if ok:
            out.append(InternalNatTrans(f, g, alpha))
    return out


def hom_category(a: InternalCategory, b: InternalCategory,
                 bound: int = 10 ** 6) -> HomCategory:
    """Exhaustively enumerated hom-category with its composition table."""
    from .internal import id_nat_trans, vcomp
    objects = enumerate_functors(a, b, bound)
    arrows = []
    for si, f in enumerate(objects):
        for ti, g in enumerate(objects):
            for cell in enumerate_cells(f, g):
                arrows.append((si, ti, cell))
                if len(arrows) > bound:
                    raise SizeBound("cell enumeration exceeded the bound")
    index = {(s, t, c.alpha.table): i for i, (s, t, c) in enumerate(arrows)}
    ident = tuple(index[(i, i, id_nat_trans(f).alpha.table)]
                  for i, f in enumerate(objects))
    comp = {}
    for i2, (s2, t2, c2) in enumerate(arrows):
        for i1, (s1, t1, c1) in enumerate(arrows):
            if t1 == s2:
                c = vcomp(c2, c1)
                comp[(i2, i1)] = index[(s1, t2, c.alpha.table)]
    return HomCategory(tuple(objects), tuple(arrows), ident, comp)


def hom_category_as_internal(hc: HomCategory) -> InternalCategory:
    c0 = FinObj(len(hc.objects))
    c1 = FinObj(len(hc.arrows))
    d1 = FinMap(c1, c0, tuple(s for s, _t, _c in hc.arrows))
    d0 = FinMap(c1, c0, tuple(t for _s, t, _c in hc.arrows))
    i = FinMap(c0, c1, hc.identity)
    pairs = finset.pullback(d1, d0)
    m = FinMap(pairs.apex, c1, tuple(hc.comp[(u, v)] for u, v in pairs.tuples))
    return InternalCategory(c0, c1, d0, d1, i, m)


def hom_iso_with_oracle(ih: InternalHom, hc: HomCategory) -> InternalFunctor:
    """An explicit isomorphism from the end-computed hom to the enumerated one.

    Each end family decodes to functor tables; the map is located by search in
    the oracle's lists and verified to be an invertible internal functor.
    """
    obj_index = {(h.f0.table, h.f1.table): i for i, h in enumerate(hc.objects)}
    arr_index = {(s, t, c.alpha.table): i for i, (s, t, c) in enumerate(hc.arrows)}
    table0 = []
    for fam in ih.level0:
        key = (fam.eta0[(0,)], fam.eta1[(0, 0)])
        table0.append(obj_index[key])
    table1 = []
    for fam in ih.level1:
        s = obj_index[(fam.eta0[(0,)], fam.eta1[(0, 0)])]
        t = obj_index[(fam.eta0[(1,)], fam.eta1[(1, 1)])]
        alpha = tuple(fam.eta1[(0, 1)][ih.dom.i.table[xx]]
                      for xx in range(ih.dom.C0.size))
        table1.append(arr_index[(s, t, alpha)])
    oracle_cat = hom_category_as_internal(hc)
    iso = InternalFunctor(ih.carrier, oracle_cat,
                          FinMap(ih.carrier.C0, oracle_cat.C0, tuple(table0)),
                          FinMap(ih.carrier.C1, oracle_cat.C1, tuple(table1)))
    if not (finset.is_iso(iso.f0) and finset.is_iso(iso.f1)
            and validate_functor(iso).ok):
        raise DomainMismatch("hom comparison is not an isomorphism")
    return iso
