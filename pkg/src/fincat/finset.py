"""The base category: finite sets with chosen, canonical finite (co)limits.

Objects are {0..n-1}; maps are tabulated. Every limit comes with a fixed
element encoding (lexicographic tuple enumeration) so that derived structure
maps are bit-exact and diagrams commute on the nose. All values are immutable
after construction and every operation is a pure function.

Determinism conventions:
  * chosen-limit apexes enumerate solution tuples lexicographically,
  * quotient classes are numbered by least representative,
  * sections pick least preimages,
  * images are ordered by increasing codomain index.
"""

from dataclasses import dataclass, field
from itertools import product as iproduct

from .errors import DomainMismatch, NotEpi, NotMono


@dataclass(frozen=True)
class FinObj:
    """A finite set {0..size-1}. Labels are display-only; equality is by size."""

    size: int
    labels: tuple = None

    def __post_init__(self):
        if self.size < 0:
            raise DomainMismatch(f"negative size {self.size}")
        if self.labels is not None and len(self.labels) != self.size:
            raise DomainMismatch("labels length must equal size")

    def __eq__(self, other):
        return isinstance(other, FinObj) and self.size == other.size

    def __hash__(self):
        return hash(("FinObj", self.size))

    def label(self, x):
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def __repr__(self):
        return f"FinObj({self.size})"


@dataclass(frozen=True)
class FinMap:
    """A tabulated function between finite sets."""

    dom: FinObj
    cod: FinObj
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.size:
            raise DomainMismatch(
                f"table length {len(self.table)} != domain size {self.dom.size}")
        if self.table and (min(self.table) < 0 or max(self.table) >= self.cod.size):
            raise DomainMismatch("table entry outside codomain")

    def __call__(self, x):
        return self.table[x]

    def __repr__(self):
        return f"FinMap({self.dom.size}->{self.cod.size}, {list(self.table)})"


def identity(a: FinObj) -> FinMap:
    return FinMap(a, a, tuple(range(a.size)))


def compose(g: FinMap, f: FinMap) -> FinMap:
    """g after f; defined iff f.cod = g.dom."""
    if f.cod != g.dom:
        raise DomainMismatch(f"cannot compose: f.cod={f.cod.size}, g.dom={g.dom.size}")
    return FinMap(f.dom, g.cod, tuple(map(g.table.__getitem__, f.table)))


def is_mono(f: FinMap) -> bool:
    return len(set(f.table)) == len(f.table)


def is_epi(f: FinMap) -> bool:
    return len(set(f.table)) == f.cod.size


def is_iso(f: FinMap) -> bool:
    return f.dom.size == f.cod.size and is_mono(f)


def inverse(f: FinMap) -> FinMap:
    if not is_iso(f):
        raise DomainMismatch("not invertible")
    table = [0] * f.cod.size
    for x, y in enumerate(f.table):
        table[y] = x
    return FinMap(f.cod, f.dom, tuple(table))


@dataclass(frozen=True)
class ChosenLimit:
    """A chosen limit: apex indices biject with solution tuples, lex ordered.

    `tuples[k]` decodes apex element k; `index[t]` encodes tuple t back.
    Projections commute with the defining cone exactly.
    """

    apex: FinObj
    projections: tuple
    tuples: tuple
    index: dict = field(compare=False, repr=False)

    def decode(self, k):
        return self.tuples[k]

    def encode(self, t):
        return self.index[tuple(t)]

    def mediate(self, *legs):
        """The unique map into the apex commuting with the projections.

        `legs[i]` must be a FinMap into projections[i].cod, all from one domain,
        and the legs must satisfy the defining equations of the limit.
        """
        if len(legs) != len(self.projections):
            raise DomainMismatch("wrong number of legs")
        dom = legs[0].dom
        try:
            if len(legs) == 2:
                table = tuple(map(self.index.__getitem__,
                                  zip(legs[0].table, legs[1].table)))
            else:
                table = tuple(map(self.index.__getitem__,
                                  zip(*(leg.table for leg in legs))))
        except KeyError as exc:
            raise DomainMismatch(
                f"legs do not satisfy the limit equations at {exc.args[0]}") from exc
        return FinMap(dom, self.apex, table)


def _chosen(tuples, projections_data):
    tuples = tuple(tuples)
    apex = FinObj(len(tuples))
    projections = tuple(
        FinMap(apex, cod, tuple(t[i] for t in tuples))
        for i, cod in enumerate(projections_data))
    return ChosenLimit(apex, projections, tuples,
                       {t: k for k, t in enumerate(tuples)})


def terminal() -> FinObj:
    return FinObj(1)


def bang(a: FinObj) -> FinMap:
    """The unique map to the terminal object."""
    return FinMap(a, terminal(), (0,) * a.size)


def product(a: FinObj, b: FinObj) -> ChosenLimit:
    return _chosen(iproduct(range(a.size), range(b.size)), (a, b))


def pullback(f: FinMap, g: FinMap) -> ChosenLimit:
    """Pairs (x, y) with f(x) = g(y), lexicographic, projecting to f.dom, g.dom."""
    if f.cod != g.cod:
        raise DomainMismatch("pullback needs a cospan")
    buckets = {}
    for y, c in enumerate(g.table):
        buckets.setdefault(c, []).append(y)
    tuples = [(x, y) for x in range(f.dom.size)
              for y in buckets.get(f.table[x], ())]
    return _chosen(tuples, (f.dom, g.dom))


def equalizer(f: FinMap, g: FinMap) -> ChosenLimit:
    """Solutions x with f(x) = g(x); single projection into the common domain."""
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("equalizer needs a parallel pair")
    tuples = [(x,) for x in range(f.dom.size) if f.table[x] == g.table[x]]
    return _chosen(tuples, (f.dom,))


def pair_map(f: FinMap, g: FinMap, prod: ChosenLimit = None) -> FinMap:
    """The map <f, g> into the chosen product of the codomains."""
    if f.dom != g.dom:
        raise DomainMismatch("pairing needs a common domain")
    if prod is None:
        prod = product(f.cod, g.cod)
    return prod.mediate(f, g)


def coproduct(a: FinObj, b: FinObj):
    """Disjoint union with a's elements first; returns (object, inj0, inj1)."""
    obj = FinObj(a.size + b.size)
    inj0 = FinMap(a, obj, tuple(range(a.size)))
    inj1 = FinMap(b, obj, tuple(range(a.size, a.size + b.size)))
    return obj, inj0, inj1


def copair(f: FinMap, g: FinMap, obj: FinObj, inj0: FinMap, inj1: FinMap) -> FinMap:
    """The map out of a coproduct given by cases."""
    if f.cod != g.cod:
        raise DomainMismatch("copairing needs a common codomain")
    table = [0] * obj.size
    for x in range(f.dom.size):
        table[inj0.table[x]] = f.table[x]
    for y in range(g.dom.size):
        table[inj1.table[y]] = g.table[y]
    return FinMap(obj, f.cod, tuple(table))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller index as root so numbering stays canonical
            if rx > ry:
                rx, ry = ry, rx
            self.parent[ry] = rx


def coequalizer(f: FinMap, g: FinMap):
    """Quotient of the codomain by the closure of f(x) ~ g(x).

    Classes are numbered by least member in domain order. Returns (object, q).
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("coequalizer needs a parallel pair")
    uf = _UnionFind(f.cod.size)
    for x in range(f.dom.size):
        uf.union(f.table[x], g.table[x])
    roots = sorted({uf.find(y) for y in range(f.cod.size)})
    number = {r: k for k, r in enumerate(roots)}
    q = FinMap(f.cod, FinObj(len(roots)),
               tuple(number[uf.find(y)] for y in range(f.cod.size)))
    return q.cod, q


def coeq_factor(q: FinMap, h: FinMap) -> FinMap:
    """The unique map through a coequalizer q for h constant on q's classes."""
    if h.dom != q.dom:
        raise DomainMismatch("factorisation needs matching domains")
    table = [None] * q.cod.size
    for y in range(q.dom.size):
        c = q.table[y]
        if table[c] is None:
            table[c] = h.table[y]
        elif table[c] != h.table[y]:
            raise DomainMismatch("map does not coequalize the pair")
    return FinMap(q.cod, h.cod, tuple(table))


@dataclass(frozen=True)
class Exponential:
    """The chosen exponential: all tables A -> B enumerated lexicographically."""

    base: FinObj
    exponent: FinObj
    obj: FinObj
    prod: ChosenLimit  # chosen product obj x exponent, domain of eval
    eval_map: FinMap

    def decode(self, k):
        """Index -> table, big-endian lexicographic."""
        n, size = self.exponent.size, self.base.size
        digits = []
        for _ in range(n):
            digits.append(k % size)
            k //= size
        return tuple(reversed(digits))

    def encode(self, table):
        k = 0
        for y in table:
            k = k * self.base.size + y
        return k

    def curry(self, f: FinMap, x: FinObj, prod_xa: ChosenLimit = None) -> FinMap:
        """The unique transpose X -> B^A of f: X x A -> B."""
        if prod_xa is None:
            prod_xa = product(x, self.exponent)
        if f.dom != prod_xa.apex:
            raise DomainMismatch("curry needs a map out of the chosen product")
        table = []
        for z in range(x.size):
            t = tuple(f.table[prod_xa.encode((z, a))] for a in range(self.exponent.size))
            table.append(self.encode(t))
        return FinMap(x, self.obj, tuple(table))

    def uncurry(self, h: FinMap, prod_xa: ChosenLimit = None) -> FinMap:
        """Inverse of curry: X -> B^A gives X x A -> B."""
        if prod_xa is None:
            prod_xa = product(h.dom, self.exponent)
        table = [0] * prod_xa.apex.size
        for z in range(h.dom.size):
            t = self.decode(h.table[z])
            for a in range(self.exponent.size):
                table[prod_xa.encode((z, a))] = t[a]
        return FinMap(prod_xa.apex, self.base, tuple(table))


def exponential(a: FinObj, b: FinObj) -> Exponential:
    """The object of all maps a -> b with evaluation; size |b|^|a|."""
    obj = FinObj(b.size ** a.size)
    prod = product(obj, a)
    size = b.size
    table = []
    for k, x in prod.tuples:
        # entry x of the table encoded by k
        shift = a.size - 1 - x
        table.append((k // (size ** shift)) % size if size > 0 else 0)
    eval_map = FinMap(prod.apex, b, tuple(table))
    return Exponential(b, a, obj, prod, eval_map)


def subobject_classifier():
    """Returns (omega, top) with index 1 = true."""
    omega = FinObj(2, ("false", "true"))
    return omega, FinMap(terminal(), omega, (1,))


def characteristic_map(i: FinMap) -> FinMap:
    """The map classifying a mono: sends b to true iff b is in the image."""
    if not is_mono(i):
        raise NotMono("characteristic map needs a monomorphism")
    omega, _ = subobject_classifier()
    image = set(i.table)
    return FinMap(i.cod, omega, tuple(1 if b in image else 0 for b in range(i.cod.size)))


def factor_epi_mono(f: FinMap):
    """f = r . l with l epi onto the image and r mono; image ordered by codomain index."""
    image = sorted(set(f.table))
    mid = FinObj(len(image))
    number = {y: k for k, y in enumerate(image)}
    l = FinMap(f.dom, mid, tuple(number[y] for y in f.table))
    r = FinMap(mid, f.cod, tuple(image))
    return l, r


def choose_section(e: FinMap) -> FinMap:
    """The section picking the least preimage of each codomain element."""
    if not is_epi(e):
        raise NotEpi("section requires a surjection")
    table = [None] * e.cod.size
    for x, y in enumerate(e.table):
        if table[y] is None:
            table[y] = x
    return FinMap(e.cod, e.dom, tuple(table))


def is_pullback_square(p: FinMap, q: FinMap, f: FinMap, g: FinMap) -> bool:
    """Whether the commuting square with legs p, q over the cospan f, g is a pullback.

    p: P -> dom(f), q: P -> dom(g), with f.p = g.q; checks that the induced map
    into the chosen pullback of (f, g) is a bijection.
    """
    if compose(f, p).table != compose(g, q).table:
        return False
    pb = pullback(f, g)
    seen = set()
    for z in range(p.dom.size):
        t = (p.table[z], q.table[z])
        if t not in pb.index or t in seen:
            return False
        seen.add(t)
    return len(seen) == pb.apex.size


def all_maps(a: FinObj, b: FinObj):
    """All maps a -> b in lexicographic table order."""
    for table in iproduct(range(b.size), repeat=a.size):
        yield FinMap(a, b, table)
