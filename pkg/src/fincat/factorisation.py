"""The lifted orthogonal factorisation system on internal categories.

A base-level (L, R) policy lifts to the pair

    (L-on-objects,  R-on-objects and fully faithful)

on internal functors: any functor factors through a middle category whose
object of objects comes from the base factorisation and whose object of
arrows is the chosen pullback of the codomain's endpoint map along r0 x r0.
Lifting against the right class fills squares uniquely, in both the
one-dimensional and two-dimensional senses. Instances ship for (epi, mono)
and (iso, all).
"""

from dataclasses import dataclass

from . import finset
from .errors import NonCommuting, NotInClass
from .finset import FinMap, compose, identity, inverse
from .internal import (InternalCategory, InternalFunctor, InternalNatTrans,
                       fiber_arrow, is_epi_on_objects, is_fully_faithful,
                       is_iso_on_objects, validate_category, validate_functor,
                       validate_nat_trans)


@dataclass(frozen=True)
class BaseOFS:
    """A base orthogonal factorisation system as an executable policy."""

    name: str
    in_left: callable
    in_right: callable
    factor: callable   # FinMap -> (l, r) with r . l = input
    lift: callable     # (s in L, f in R, p, q with f.p = q.s) -> unique diagonal


def _epi_mono_lift(s: FinMap, f: FinMap, p: FinMap, q: FinMap) -> FinMap:
    table = [None] * s.cod.size
    for x in range(s.dom.size):
        table[s.table[x]] = p.table[x]
    u = FinMap(s.cod, f.dom, tuple(table))
    if compose(f, u).table != q.table or compose(u, s).table != p.table:
        raise NonCommuting("no diagonal exists for this square")
    return u


def epi_mono_ofs() -> BaseOFS:
    return BaseOFS("epi-mono", finset.is_epi, finset.is_mono,
                   finset.factor_epi_mono, _epi_mono_lift)


def _iso_all_lift(s: FinMap, f: FinMap, p: FinMap, q: FinMap) -> FinMap:
    u = compose(p, inverse(s))
    if compose(f, u).table != q.table:
        raise NonCommuting("no diagonal exists for this square")
    return u


def iso_all_ofs() -> BaseOFS:
    return BaseOFS("iso-all", finset.is_iso, lambda f: True,
                   lambda f: (identity(f.dom), f), _iso_all_lift)


@dataclass(frozen=True)
class LiftedFactorisation:
    middle: InternalCategory
    left: InternalFunctor    # L-on-objects
    right: InternalFunctor   # R-on-objects and fully faithful


def factor_internal(f: InternalFunctor, ofs: BaseOFS) -> LiftedFactorisation:
    """Factor f through the middle category built over the base factorisation
    of f0, with arrows pulled back from the codomain along r0 x r0."""
    x, y = f.dom, f.cod
    l0, r0 = ofs.factor(f.f0)
    c0 = l0.cod
    prod_c = finset.product(c0, c0)
    prod_y = finset.product(y.C0, y.C0)
    r0xr0 = prod_y.mediate(compose(r0, prod_c.projections[0]),
                           compose(r0, prod_c.projections[1]))
    endpoints_y = prod_y.mediate(y.d0, y.d1)
    pb = finset.pullback(r0xr0, endpoints_y)
    pair_proj, r1 = pb.projections
    c1 = pb.apex
    d0 = compose(prod_c.projections[0], pair_proj)
    d1 = compose(prod_c.projections[1], pair_proj)
    i = pb.mediate(prod_c.mediate(identity(c0), identity(c0)),
                   compose(y.i, r0))
    pairs = finset.pullback(d1, d0)
    pr_u, pr_v = pairs.projections
    ru, rv = compose(r1, pr_u), compose(r1, pr_v)
    m_y = compose(y.m, y.pairs.mediate(ru, rv))
    m = pb.mediate(prod_c.mediate(compose(d0, pr_u), compose(d1, pr_v)), m_y)
    middle = InternalCategory(c0, c1, d0, d1, i, m)
    l1 = pb.mediate(prod_c.mediate(compose(l0, x.d0), compose(l0, x.d1)), f.f1)
    left = InternalFunctor(x, middle, l0, l1)
    right = InternalFunctor(middle, y, r0, r1)
    rep = validate_category(middle)
    assert rep.ok, f"middle category failed validation: {rep}"
    assert validate_functor(left).ok and validate_functor(right).ok
    return LiftedFactorisation(middle, left, right)


def in_lifted_left(s: InternalFunctor, ofs: BaseOFS) -> bool:
    return ofs.in_left(s.f0)


def in_lifted_right(f: InternalFunctor, ofs: BaseOFS) -> bool:
    return ofs.in_right(f.f0) and is_fully_faithful(f)


def lift_square(s: InternalFunctor, f: InternalFunctor, p: InternalFunctor,
                q: InternalFunctor, ofs: BaseOFS) -> InternalFunctor:
    """The unique u with f.u = q and u.s = p, for s in L' and f in R'."""
    if not in_lifted_left(s, ofs):
        raise NotInClass(f"s is not {ofs.name}-left-on-objects")
    if not in_lifted_right(f, ofs):
        raise NotInClass(f"f is not in the lifted right class of {ofs.name}")
    from .internal import compose_functors
    if compose_functors(f, p) != compose_functors(q, s):
        raise NonCommuting("the square does not commute")
    u0 = ofs.lift(s.f0, f.f0, p.f0, q.f0)
    b, x = s.cod, f.dom
    table = [fiber_arrow(f, q.f1.table[arrow],
                         u0.table[b.d1.table[arrow]],
                         u0.table[b.d0.table[arrow]])
             for arrow in range(b.C1.size)]
    u = InternalFunctor(b, x, u0, FinMap(b.C1, x.C1, tuple(table)))
    assert validate_functor(u).ok
    return u


def lift_two_cell(s: InternalFunctor, f: InternalFunctor,
                  alpha_bar: InternalNatTrans, beta_bar: InternalNatTrans,
                  u0_functor: InternalFunctor, u1_functor: InternalFunctor,
                  ofs: BaseOFS) -> InternalNatTrans:
    """The unique gamma: u0 => u1 with f.gamma = beta_bar and gamma.s = alpha_bar.

    alpha_bar: p0 => p1 and beta_bar: q0 => q1 must satisfy the compatibility
    f . alpha_bar = beta_bar . s; u0_functor, u1_functor are the 1-dimensional
    lifts of the two squares.
    """
    if not in_lifted_left(s, ofs):
        raise NotInClass(f"s is not {ofs.name}-left-on-objects")
    if not in_lifted_right(f, ofs):
        raise NotInClass(f"f is not in the lifted right class of {ofs.name}")
    if compose(f.f1, alpha_bar.alpha).table != compose(beta_bar.alpha, s.f0).table:
        raise NonCommuting("the 2-cells are not compatible over the square")
    b = s.cod
    table = [fiber_arrow(f, beta_bar.alpha.table[obj],
                         u0_functor.f0.table[obj],
                         u1_functor.f0.table[obj])
             for obj in range(b.C0.size)]
    gamma = InternalNatTrans(u0_functor, u1_functor,
                             FinMap(b.C0, f.dom.C1, tuple(table)))
    assert validate_nat_trans(gamma).ok
    return gamma


def is_acute(f: InternalFunctor) -> bool:
    """Left orthogonal to every full monomorphism; over the (epi, mono) base
    system this is exactly being an epimorphism on objects."""
    return is_epi_on_objects(f)


def bo_ff_factorisation(f: InternalFunctor) -> LiftedFactorisation:
    """The (iso-on-objects, fully faithful) factorisation, the (iso, all)
    instance of the lifted system."""
    return factor_internal(f, iso_all_ofs())


def left_orthogonal_to(f: InternalFunctor, r: InternalFunctor) -> bool:
    """Direct orthogonality test: every commuting square from f to r has
    exactly one diagonal filler, checked by exhaustive enumeration."""
    from .limits import enumerate_functors
    from .internal import compose_functors
    ps = enumerate_functors(f.dom, r.dom)
    qs = enumerate_functors(f.cod, r.cod)
    fillers = enumerate_functors(f.cod, r.dom)
    for p in ps:
        rp = compose_functors(r, p)
        for q in qs:
            if compose_functors(q, f) != rp:
                continue
            count = sum(1 for u in fillers
                        if compose_functors(u, f) == p
                        and compose_functors(r, u) == q)
            if count != 1:
                return False
    return True
