"""Finite sets, total maps, and the (co)limit toolbox.

Everything is canonical on the nose: element labels are sorted strings,
pair labels are ``(a,b)``, tagged-union labels are ``L:a`` / ``R:b``, and
encoded functions are ``{a:fa,b:fb}`` with entries in sorted-domain order.
Equal constructions therefore have identical representations, which removes
all "up to isomorphism" slack from downstream certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .errors import MismatchedSignature


@dataclass(frozen=True)
class FinSet:
    """An ordered finite set of distinct string labels."""

    elements: tuple[str, ...]

    def __init__(self, elements):
        elems = tuple(sorted(elements))
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate labels in {elems}")
        object.__setattr__(self, "elements", elems)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, label):
        return label in self.elements

    def index(self, label) -> int:
        return self.elements.index(label)

    def __repr__(self):
        return "{" + ",".join(self.elements) + "}"


EMPTY = FinSet(())
POINT = FinSet(("*",))


@dataclass(eq=True)
class FinMap:
    """A total map between finite sets, stored as a full table."""

    dom: FinSet
    cod: FinSet
    table: dict[str, str]

    def __post_init__(self):
        if set(self.table) != set(self.dom.elements):
            raise ValueError("table is not total on the domain")
        for v in self.table.values():
            if v not in self.cod:
                raise ValueError(f"value {v!r} is not in the codomain")

    def __call__(self, label: str) -> str:
        return self.table[label]

    def __repr__(self):
        body = ",".join(f"{a}>{self.table[a]}" for a in self.dom)
        return f"FinMap({body})"

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.dom)

    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.cod.elements)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def image(self) -> FinSet:
        return FinSet(set(self.table.values()))


def identity(a: FinSet) -> FinMap:
    return FinMap(a, a, {x: x for x in a})


def compose(g: FinMap, f: FinMap) -> FinMap:
    """g after f."""
    if f.cod != g.dom:
        raise MismatchedSignature(f"cannot compose: {f.cod} != {g.dom}")
    return FinMap(f.dom, g.cod, {x: g(f(x)) for x in f.dom})


def constant(dom: FinSet, cod: FinSet, value: str) -> FinMap:
    return FinMap(dom, cod, {x: value for x in dom})


# --- label encodings (fixed grammar, documented in the README) ---------------


def pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


def encode_map(f: FinMap) -> str:
    return "{" + ",".join(f"{a}:{f(a)}" for a in f.dom) + "}"


@lru_cache(maxsize=None)
def _maps_by_label(a: FinSet, b: FinSet) -> dict[str, FinMap]:
    """All total maps a -> b keyed by their encoded label.

    Decoding is by lookup, never by parsing, so arbitrary label vocabularies
    are safe as long as the encoding stays injective (asserted below).
    """
    out = {}
    for f in _all_maps(a, b):
        out[encode_map(f)] = f
    assert len(out) == len(b) ** len(a) or len(a) == 0, "label collision"
    return out


def _all_maps(a: FinSet, b: FinSet):
    """Every total map a -> b, canonical odometer order over sorted labels."""
    if len(a) == 0:
        yield FinMap(a, b, {})
        return
    if len(b) == 0:
        return
    for values in iproduct(b.elements, repeat=len(a)):
        yield FinMap(a, b, dict(zip(a.elements, values)))


def function_space(a: FinSet, b: FinSet) -> FinSet:
    """The internal hom: all total maps a -> b as an object."""
    return FinSet(_maps_by_label(a, b).keys())


def decode_map(label: str, a: FinSet, b: FinSet) -> FinMap:
    return _maps_by_label(a, b)[label]


# --- limits and colimits ------------------------------------------------------


@dataclass(eq=True)
class SubPresentation:
    """An equaliser result: a subset together with its inclusion."""

    ambient: FinSet
    members: FinSet
    include: FinMap

    def __post_init__(self):
        assert self.include.dom == self.members
        assert self.include.cod == self.ambient
        assert self.include.is_injective()
        assert self.include.image() == self.members or set(
            self.include.table.values()
        ) == set(self.members.elements)


@dataclass(eq=True)
class QuotPresentation:
    """A coequaliser result: quotient, projection, and class representatives.

    Quotient labels are the least member of each class, so project(reps(k))
    is k by construction.
    """

    ambient: FinSet
    classes: dict[str, tuple[str, ...]]
    project: FinMap
    reps: FinMap

    def __post_init__(self):
        assert self.project.is_surjective()
        for k in self.project.cod:
            assert self.project(self.reps(k)) == k


def product(a: FinSet, b: FinSet):
    """Cartesian product with both projections."""
    labels = [pair_label(x, y) for x in a for y in b]
    p = FinSet(labels)
    proj1 = FinMap(p, a, {pair_label(x, y): x for x in a for y in b})
    proj2 = FinMap(p, b, {pair_label(x, y): y for x in a for y in b})
    return p, proj1, proj2


def pairing(f: FinMap, g: FinMap) -> FinMap:
    """The map <f,g> : Z -> A x B induced by f : Z -> A, g : Z -> B."""
    if f.dom != g.dom:
        raise MismatchedSignature("pairing needs a shared domain")
    p, _, _ = product(f.cod, g.cod)
    return FinMap(f.dom, p, {z: pair_label(f(z), g(z)) for z in f.dom})


def coproduct(a: FinSet, b: FinSet):
    """Tagged disjoint union with both injections."""
    c = FinSet([f"L:{x}" for x in a] + [f"R:{y}" for y in b])
    inj1 = FinMap(a, c, {x: f"L:{x}" for x in a})
    inj2 = FinMap(b, c, {y: f"R:{y}" for y in b})
    return c, inj1, inj2


def equalizer(f: FinMap, g: FinMap) -> SubPresentation:
    """The subset where f and g agree, with its inclusion."""
    if f.dom != g.dom or f.cod != g.cod:
        raise MismatchedSignature("equalizer needs parallel maps")
    members = FinSet([x for x in f.dom if f(x) == g(x)])
    include = FinMap(members, f.dom, {x: x for x in members})
    return SubPresentation(f.dom, members, include)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the least label as the root so representatives are canonical
            lo, hi = sorted((rx, ry))
            self.parent[hi] = lo


def coequalizer(f: FinMap, g: FinMap) -> QuotPresentation:
    """The quotient of the codomain by the relation generated by f(x)~g(x)."""
    if f.dom != g.dom or f.cod != g.cod:
        raise MismatchedSignature("coequalizer needs parallel maps")
    uf = _UnionFind(f.cod.elements)
    for x in f.dom:
        uf.union(f(x), g(x))
    classes: dict[str, list[str]] = {}
    for y in f.cod:
        classes.setdefault(uf.find(y), []).append(y)
    quotient = FinSet(classes.keys())
    project = FinMap(f.cod, quotient, {y: uf.find(y) for y in f.cod})
    reps = FinMap(quotient, f.cod, {k: k for k in quotient})
    return QuotPresentation(
        f.cod, {k: tuple(sorted(v)) for k, v in classes.items()}, project, reps
    )


def quotient_by_pairs(ambient: FinSet, pairs) -> QuotPresentation:
    """Quotient of a set by the equivalence generated by explicit pairs."""
    uf = _UnionFind(ambient.elements)
    for x, y in pairs:
        uf.union(x, y)
    classes: dict[str, list[str]] = {}
    for y in ambient:
        classes.setdefault(uf.find(y), []).append(y)
    quotient = FinSet(classes.keys())
    project = FinMap(ambient, quotient, {y: uf.find(y) for y in ambient})
    reps = FinMap(quotient, ambient, {k: k for k in quotient})
    return QuotPresentation(
        ambient, {k: tuple(sorted(v)) for k, v in classes.items()}, project, reps
    )


def pullback(f: FinMap, g: FinMap):
    """{(a,b) | f(a)=g(b)} with its two projections."""
    if f.cod != g.cod:
        raise MismatchedSignature("pullback needs a shared codomain")
    labels = [pair_label(x, y) for x in f.dom for y in g.dom if f(x) == g(y)]
    p = FinSet(labels)
    table1 = {}
    table2 = {}
    for x in f.dom:
        for y in g.dom:
            if f(x) == g(y):
                table1[pair_label(x, y)] = x
                table2[pair_label(x, y)] = y
    proj1 = FinMap(p, f.dom, table1)
    proj2 = FinMap(p, g.dom, table2)
    return p, proj1, proj2
