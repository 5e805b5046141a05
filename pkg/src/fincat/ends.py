"""Simplicial ends over the three-truncated simplex category.

Level k of the internal hom of two internal categories is the end, over
[n] in the truncation, of the products of mapping objects indexed by the
monotone maps [n] -> [k]; concretely, the subobject of a finite product of
table objects cut out by the naturality equations (an equalizer of two maps
between finite products). A family eta assigns to each slot (n, psi) a table
X_n -> Y_n, and the equations say

    eta[m, psi . theta] . X_theta = Y_theta . eta[n, psi]

for every monotone theta: [m] -> [n] and psi: [n] -> [k].

The solver enumerates the level-0 and level-1 slot tables entry by entry,
propagating the equations (endpoint, degeneracy and composition instances);
slots at levels 2 and 3 are then assembled by spines and the assembled family
is checked. Solutions are returned in the lexicographic order of the ambient
product encoding. `brute_families` materialises the full product and filters
by every equation; it is the literal equalizer, feasible only at tiny sizes,
and the fidelity oracle for the solver.
"""

from itertools import product as iproduct

from .errors import SizeBound
from .internal import (InternalCategory, level_size, monotone_maps,
                       simplicial_map, simplex_of_spine, spine, vertices)


def slot_list(k: int):
    """Slots (n, psi) for levels 0 and 1, in canonical (n, psi-lex) order."""
    slots = [(0, psi) for psi in monotone_maps(0, k)]
    slots += [(1, psi) for psi in monotone_maps(1, k)]
    return slots


class Family:
    """A solved family: tables for every slot at levels 0 and 1."""

    __slots__ = ("k", "eta0", "eta1", "_key")

    def __init__(self, k, eta0, eta1):
        self.k = k
        self.eta0 = eta0  # dict psi -> tuple over X0
        self.eta1 = eta1  # dict psi -> tuple over X1
        self._key = None

    def key(self):
        if self._key is None:
            parts = [self.eta0[psi] for psi in sorted(self.eta0)]
            parts += [self.eta1[psi] for psi in sorted(self.eta1)]
            self._key = tuple(parts)
        return self._key

    def table(self, x_cat: InternalCategory, y_cat: InternalCategory, n, psi):
        """The slot table at (n, psi), assembling levels 2 and 3 by spines."""
        psi = tuple(psi)
        if n == 0:
            return self.eta0[psi]
        if n == 1:
            return self.eta1[psi]
        out = []
        for x in range(level_size(x_cat, n)):
            vs = vertices(x_cat, n, x)
            sp = spine(x_cat, n, x)
            arrows = [self.eta1[(psi[j - 1], psi[j])][sp[j - 1]]
                      for j in range(1, n + 1)]
            v0 = self.eta0[(psi[0],)][vs[0]]
            out.append(simplex_of_spine(y_cat, v0, arrows))
        return tuple(out)


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.limit:
            raise SizeBound(f"end enumeration exceeded {self.limit} steps")


def _hom_fibers(c: InternalCategory):
    fibers = {}
    for a in range(c.C1.size):
        fibers.setdefault((c.d1.table[a], c.d0.table[a]), []).append(a)
    return fibers


def end_families(x_cat: InternalCategory, y_cat: InternalCategory, k: int,
                 budget: int = 10 ** 6):
    """All natural families at level k, lex-ordered by product encoding."""
    slots1 = monotone_maps(1, k)
    x0, x1 = x_cat.C0.size, x_cat.C1.size
    y_fibers = _hom_fibers(y_cat)
    budget = _Budget(budget)

    # composition instances: equation m_Y(eta1[s12][u], eta1[s01][v]) = eta1[s02][uv]
    instances = []
    cells_of = {}  # (psi, arrow) -> list of instance ids (once per distinct cell)
    for psi2 in monotone_maps(2, k):
        s01 = (psi2[0], psi2[1])
        s12 = (psi2[1], psi2[2])
        s02 = (psi2[0], psi2[2])
        for p, (u, v) in enumerate(x_cat.pairs.tuples):
            uv = x_cat.m.table[p]
            iid = len(instances)
            inst_cells = {(s12, u), (s01, v), (s02, uv)}
            instances.append(((s12, u), (s01, v), (s02, uv), len(inst_cells)))
            for cell in inst_cells:
                cells_of.setdefault(cell, []).append(iid)
    missing = [inst[3] for inst in instances]

    eta0 = {(t,): [None] * x0 for t in range(k + 1)}
    eta1 = {psi: [None] * x1 for psi in slots1}
    degenerate = {x_cat.i.table[x]: x for x in range(x_cat.C0.size)}

    # assignment order: per-vertex functor blocks first, then jump slots with
    # the narrowest jumps first; within a jump slot the degenerate arrows come
    # first so that composition instances force every remaining entry
    cells = []
    for t in range(k + 1):
        cells += [("0", (t,), x) for x in range(x0)]
        cells += [("1", (t, t), a) for a in range(x1)]
    jump_order = sorted((psi for psi in slots1 if psi[0] != psi[1]),
                        key=lambda psi: (psi[1] - psi[0], psi[0]))
    arrows_deg_first = ([a for a in range(x1) if a in degenerate]
                        + [a for a in range(x1) if a not in degenerate])
    for psi in jump_order:
        cells += [("1", psi, a) for a in arrows_deg_first]

    solutions = []
    pair_index = y_cat.pairs.index
    m_table = y_cat.m.table

    def complete_instances_hold(incident):
        for iid in incident:
            if missing[iid]:
                continue
            c_u, c_v, c_uv, _n = instances[iid]
            pair = pair_index.get((eta1[c_u[0]][c_u[1]], eta1[c_v[0]][c_v[1]]))
            if pair is None or m_table[pair] != eta1[c_uv[0]][c_uv[1]]:
                return False
        return True

    def forced_value(cell):
        """Value forced by a composition instance whose factors are both set."""
        for iid in cells_of.get(cell, ()):
            inst = instances[iid]
            if inst[2] == cell and missing[iid] == 1:
                vu = eta1[inst[0][0]][inst[0][1]]
                vv = eta1[inst[1][0]][inst[1][1]]
                if vu is not None and vv is not None:
                    pair = pair_index.get((vu, vv))
                    if pair is None:
                        return -1  # impossible: factors not composable
                    return m_table[pair]
        return None

    def candidates(kind, psi, elem):
        if kind == "0":
            return range(y_cat.C0.size)
        s, t = psi
        src = eta0[(s,)][x_cat.d1.table[elem]]
        tgt = eta0[(t,)][x_cat.d0.table[elem]]
        fiber = y_fibers.get((src, tgt), ())
        if s == t and elem in degenerate:
            want = y_cat.i.table[eta0[(t,)][degenerate[elem]]]
            return (want,) if want in fiber else ()
        forced = forced_value((psi, elem))
        if forced is not None:
            return (forced,) if forced in fiber else ()
        return fiber

    def rec(pos):
        if pos == len(cells):
            solutions.append(Family(
                k, {p: tuple(v) for p, v in eta0.items()},
                {p: tuple(v) for p, v in eta1.items()}))
            return
        kind, psi, elem = cells[pos]
        if kind == "0":
            row = eta0[psi]
            for val in candidates(kind, psi, elem):
                budget.tick()
                row[elem] = val
                rec(pos + 1)
                row[elem] = None
            return
        row = eta1[psi]
        cand = candidates(kind, psi, elem)
        incident = cells_of.get((psi, elem), ())
        for iid in incident:
            missing[iid] -= 1
        for val in cand:
            budget.tick()
            row[elem] = val
            if complete_instances_hold(incident):
                rec(pos + 1)
            row[elem] = None
        for iid in incident:
            missing[iid] += 1

    rec(0)
    solutions.sort(key=Family.key)
    return solutions


def reindex_key(fam: Family, x_cat, y_cat, theta, k_to: int):
    """Canonical key of the family obtained by reindexing along theta: [k_to] -> [k]."""
    theta = tuple(theta)
    eta0 = {}
    for psi in monotone_maps(0, k_to):
        eta0[psi] = fam.table(x_cat, y_cat, 0, tuple(theta[j] for j in psi))
    eta1 = {}
    for psi in monotone_maps(1, k_to):
        eta1[psi] = fam.table(x_cat, y_cat, 1, tuple(theta[j] for j in psi))
    return Family(k_to, eta0, eta1).key()


def check_family(x_cat, y_cat, fam: Family, levels=range(4)) -> bool:
    """Full naturality sweep: every theta and psi in the stated range."""
    for n in levels:
        for m in range(4):
            for theta in monotone_maps(m, n):
                x_theta = simplicial_map(x_cat, list(theta), n, m)
                y_theta = simplicial_map(y_cat, list(theta), n, m)
                for psi in monotone_maps(n, fam.k):
                    top = fam.table(x_cat, y_cat, n, psi)
                    psi_theta = tuple(psi[j] for j in theta)
                    low = fam.table(x_cat, y_cat, m, psi_theta)
                    for x in range(level_size(x_cat, n)):
                        if low[x_theta.table[x]] != y_theta.table[top[x]]:
                            return False
    return True


def brute_families(x_cat, y_cat, k: int, limit: int = 200000):
    """The literal equalizer: filter the full product of all slot tables.

    Only feasible at tiny sizes; used as the fidelity oracle for end_families.
    """
    slots = [(n, psi) for n in range(4) for psi in monotone_maps(n, k)]
    total = 1
    for n, _psi in slots:
        total *= level_size(y_cat, n) ** level_size(x_cat, n)
        if total > limit:
            raise SizeBound("brute-force product too large")
    tables_per_slot = [
        list(iproduct(range(level_size(y_cat, n)), repeat=level_size(x_cat, n)))
        for n, _psi in slots]
    actions = {}
    for n in range(4):
        for m in range(4):
            for theta in monotone_maps(m, n):
                actions[(theta, n, m)] = (simplicial_map(x_cat, list(theta), n, m),
                                          simplicial_map(y_cat, list(theta), n, m))
    out = []
    for combo in iproduct(*tables_per_slot):
        fam = {slots[i]: combo[i] for i in range(len(slots))}
        ok = True
        for (n, psi) in slots:
            for m in range(4):
                for theta in monotone_maps(m, n):
                    x_theta, y_theta = actions[(theta, n, m)]
                    psi_theta = tuple(psi[j] for j in theta)
                    low = fam[(m, psi_theta)]
                    top = fam[(n, psi)]
                    if any(low[x_theta.table[x]] != y_theta.table[top[x]]
                           for x in range(level_size(x_cat, n))):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(fam)
    return out
