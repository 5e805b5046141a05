"""A naive finite-category representation with its own validator and
enumerators. This is the independent oracle: it shares no code with the
internal-category validators or the end-formula path, so a shared bug cannot
silently confirm itself.
"""

from dataclasses import dataclass

from .errors import SizeBound


@dataclass(frozen=True)
class NaiveCategory:
    """objects: count; arrows: (source, target) pairs; comp[(g, f)] = g after f
    for target(f) = source(g); identities: arrow index per object."""

    objects: int
    arrows: tuple
    identities: tuple
    comp: dict

    def source(self, a):
        return self.arrows[a][0]

    def target(self, a):
        return self.arrows[a][1]

    def hom(self, x, y):
        return [a for a, (s, t) in enumerate(self.arrows) if s == x and t == y]


def validate_naive(c: NaiveCategory):
    """Ordinary category axioms, checked directly on the tables."""
    problems = []
    if len(c.identities) != c.objects:
        problems.append("identities must list one arrow per object")
        return problems
    for x, e in enumerate(c.identities):
        if c.arrows[e] != (x, x):
            problems.append(f"identity of {x} has wrong endpoints")
    for g, (sg, tg) in enumerate(c.arrows):
        for f, (sf, tf) in enumerate(c.arrows):
            if tf == sg:
                if (g, f) not in c.comp:
                    problems.append(f"missing composite ({g}, {f})")
                    continue
                h = c.comp[(g, f)]
                if c.arrows[h] != (sf, tg):
                    problems.append(f"composite ({g}, {f}) has wrong endpoints")
            elif (g, f) in c.comp:
                problems.append(f"composite defined for non-composable ({g}, {f})")
    for x in range(c.objects):
        e = c.identities[x]
        for a, (s, t) in enumerate(c.arrows):
            if s == x and c.comp.get((a, e)) != a:
                problems.append(f"right unit fails at {a}")
            if t == x and c.comp.get((e, a)) != a:
                problems.append(f"left unit fails at {a}")
    for h, (sh, th) in enumerate(c.arrows):
        for g, (sg, tg) in enumerate(c.arrows):
            if tg != sh:
                continue
            for f, (sf, tf) in enumerate(c.arrows):
                if tf != sg:
                    continue
                if c.comp[(c.comp[(h, g)], f)] != c.comp[(h, c.comp[(g, f)])]:
                    problems.append(f"associativity fails at ({h}, {g}, {f})")
    return problems


def oracle_from_internal(cat) -> NaiveCategory:
    """Convert an internal category's tables to the naive representation."""
    arrows = tuple((cat.d1.table[a], cat.d0.table[a]) for a in range(cat.C1.size))
    identities = tuple(cat.i.table)
    comp = {}
    for p, (u, v) in enumerate(cat.pairs.tuples):
        comp[(u, v)] = cat.m.table[p]
    return NaiveCategory(cat.C0.size, arrows, identities, comp)


def oracle_functors(a: NaiveCategory, b: NaiveCategory, bound: int = 10 ** 6):
    """All functors a -> b as (object table, arrow table) pairs, enumerated by
    backtracking over arrow assignments in arrow order."""
    results = []
    steps = 0
    obj = [None] * a.objects
    arr = [None] * len(a.arrows)

    def obj_rec(x):
        nonlocal steps
        if x == a.objects:
            arr_rec(0)
            return
        for y in range(b.objects):
            steps += 1
            if steps > bound:
                raise SizeBound("oracle functor enumeration exceeded the bound")
            obj[x] = y
            obj_rec(x + 1)
            obj[x] = None

    def ok_so_far(k):
        # identities and all complete composition triangles through k
        s, t = a.arrows[k]
        if a.identities[s] == k and arr[k] != b.identities[obj[s]]:
            return False
        if a.identities[t] == k and arr[k] != b.identities[obj[t]]:
            return False
        for g in range(len(a.arrows)):
            if arr[g] is None:
                continue
            for f in range(len(a.arrows)):
                if arr[f] is None:
                    continue
                cf = a.comp.get((g, f))
                if cf is None or arr[cf] is None:
                    continue
                if b.comp[(arr[g], arr[f])] != arr[cf]:
                    return False
        return True

    def arr_rec(k):
        nonlocal steps
        if k == len(a.arrows):
            results.append((tuple(obj), tuple(arr)))
            return
        s, t = a.arrows[k]
        if a.identities[s] == k:
            cands = [b.identities[obj[s]]]
        else:
            cands = b.hom(obj[s], obj[t])
        for y in cands:
            steps += 1
            if steps > bound:
                raise SizeBound("oracle functor enumeration exceeded the bound")
            arr[k] = y
            if ok_so_far(k):
                arr_rec(k + 1)
            arr[k] = None

    obj_rec(0)
    results.sort()
    return results


def oracle_nat_trans(a: NaiveCategory, b: NaiveCategory, fun_f, fun_g):
    """All natural transformations between two oracle functors, as component
    tuples indexed by objects of a."""
    obj_f, arr_f = fun_f
    obj_g, arr_g = fun_g
    results = []
    comp = [None] * a.objects

    def rec(x):
        if x == a.objects:
            results.append(tuple(comp))
            return
        for c in b.hom(obj_f[x], obj_g[x]):
            comp[x] = c
            if all(_natural(a, b, arr_f, arr_g, comp, u)
                   for u in range(len(a.arrows))
                   if comp[a.arrows[u][0]] is not None
                   and comp[a.arrows[u][1]] is not None):
                rec(x + 1)
            comp[x] = None

    rec(0)
    results.sort()
    return results


def _natural(a, b, arr_f, arr_g, comp, u):
    s, t = a.arrows[u]
    if comp[s] is None or comp[t] is None:
        return True
    return b.comp[(arr_g[u], comp[s])] == b.comp[(comp[t], arr_f[u])]


def count_all_nat_trans(a: NaiveCategory, b: NaiveCategory, functors):
    """Total count of natural transformations over all ordered functor pairs."""
    return sum(len(oracle_nat_trans(a, b, f, g)) for f in functors for g in functors)


def oracle_hom_category(a: NaiveCategory, b: NaiveCategory, bound: int = 10 ** 6):
    """The hom-category as a naive category: objects are oracle functors,
    arrows are (source index, target index, component tuple), composition is
    pointwise in b. Returns (functors, arrows, NaiveCategory)."""
    funs = oracle_functors(a, b, bound)
    arrows = []
    for si, f in enumerate(funs):
        for ti, g in enumerate(funs):
            for comp in oracle_nat_trans(a, b, f, g):
                arrows.append((si, ti, comp))
                if len(arrows) > bound:
                    raise SizeBound("oracle cell enumeration exceeded the bound")
    index = {arr: i for i, arr in enumerate(arrows)}
    identities = tuple(
        index[(i, i, tuple(b.identities[f[0][x]] for x in range(a.objects)))]
        for i, f in enumerate(funs))
    comp = {}
    for i2, (s2, t2, c2) in enumerate(arrows):
        for i1, (s1, t1, c1) in enumerate(arrows):
            if t1 == s2:
                composite = tuple(b.comp[(c2[x], c1[x])] for x in range(a.objects))
                comp[(i2, i1)] = index[(s1, t2, composite)]
    cat = NaiveCategory(len(funs),
                        tuple((s, t) for s, t, _c in arrows),
                        identities, comp)
    return funs, arrows, cat
