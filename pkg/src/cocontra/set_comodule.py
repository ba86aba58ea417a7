"""Comodules over a base set.

A base set carries exactly one comonoid structure (the diagonal), so a
comodule is the same thing as a set over the base: a carrier together with
a total structure map ``phi`` down to the base.  The coaction form
``rho = (id, phi)`` is accepted only through the validating converter
:func:`comodule_of`; internally everything is stored in phi-form.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import finset
from .errors import BaseMismatch, BoundExceeded, NotCounital
from .finset import FinMap, FinSet, SubPresentation


@dataclass(frozen=True)
class SetComonoid:
    """A base set; comultiplication and counit are forced, so only the
    underlying set is stored."""

    base: FinSet

    def diagonal(self) -> FinMap:
        p, _, _ = finset.product(self.base, self.base)
        return FinMap(
            self.base, p, {c: finset.pair_label(c, c) for c in self.base}
        )

    def counit(self) -> FinMap:
        return finset.constant(self.base, finset.POINT, "*")


@dataclass(eq=True)
class SetComodule:
    carrier: FinSet
    base: FinSet
    phi: FinMap

    def __post_init__(self):
        if self.phi.dom != self.carrier or self.phi.cod != self.base:
            raise ValueError("phi must map carrier to base")

    def rho(self) -> FinMap:
        """The coaction x -> (x, phi(x)) into carrier x base."""
        p, _, _ = finset.product(self.carrier, self.base)
        return FinMap(
            self.carrier,
            p,
            {x: finset.pair_label(x, self.phi(x)) for x in self.carrier},
        )


def comodule_of(rho: FinMap, carrier: FinSet, base: FinSet) -> SetComodule:
    """Validate a raw coaction and extract its phi-form.

    The first component must be the identity (the counit axiom); the
    coassociativity axiom then holds automatically and is asserted.
    """
    prod, proj1, proj2 = finset.product(carrier, base)
    if rho.dom != carrier or rho.cod != prod:
        raise ValueError("rho must map the carrier into carrier x base")
    first = finset.compose(proj1, rho)
    if first != finset.identity(carrier):
        bad = next(x for x in carrier if first(x) != x)
        raise NotCounital(f"rho({bad}) does not fix {bad}")
    phi = finset.compose(proj2, rho)
    m = SetComodule(carrier, base, phi)
    # coassociativity holds automatically once counitality does; assert the
    # two nested coactions agree through the canonical re-association
    for x in carrier:
        left = finset.pair_label(finset.pair_label(x, phi(x)), phi(x))
        right = finset.pair_label(x, finset.pair_label(phi(x), phi(x)))
        assert _reassociate(left, x, phi(x)) == right
    return m


def _reassociate(label: str, x: str, a: str) -> str:
    # ((x,a),b) -> (x,(a,b)) for the one triple we construct above
    assert label == finset.pair_label(finset.pair_label(x, a), a)
    return finset.pair_label(x, finset.pair_label(a, a))


def fibers(m: SetComodule) -> dict[str, FinSet]:
    """The preimage decomposition of the carrier, indexed by the base."""
    out = {a: [] for a in m.base}
    for x in m.carrier:
        out[m.phi(x)].append(x)
    return {a: FinSet(v) for a, v in out.items()}


def is_degenerate(m: SetComodule) -> bool:
    """True when some fiber is empty, i.e. phi is not surjective."""
    return not m.phi.is_surjective()


def hom_over(m: SetComodule, n: SetComodule) -> SubPresentation:
    """All carrier maps commuting with the structure maps, as a subset of
    the full function space."""
    if m.base != n.base:
        raise BaseMismatch("hom_over needs a shared base")
    ambient = finset.function_space(m.carrier, n.carrier)
    members = []
    for label in ambient:
        f = finset.decode_map(label, m.carrier, n.carrier)
        if all(n.phi(f(x)) == m.phi(x) for x in m.carrier):
            members.append(label)
    members_set = FinSet(members)
    include = FinMap(members_set, ambient, {x: x for x in members_set})
    return SubPresentation(ambient, members_set, include)


def hom_over_generic(m: SetComodule, n: SetComodule) -> SubPresentation:
    """The same hom set by the generic equaliser route.

    Both maps land in the function space into carrier x base: one
    post-composes with n's coaction, the other records m's own phi.
    Used as a cross-check for :func:`hom_over`.
    """
    if m.base != n.base:
        raise BaseMismatch("hom_over needs a shared base")
    x, y, c = m.carrier, n.carrier, m.base
    hom_xy = finset.function_space(x, y)
    yc, _, _ = finset.product(y, c)
    hom_xyc = finset.function_space(x, yc)
    phi_table = {}
    psi_table = {}
    for label in hom_xy:
        f = finset.decode_map(label, x, y)
        phi_t = FinMap(
            x, yc, {v: finset.pair_label(f(v), n.phi(f(v))) for v in x}
        )
        psi_t = FinMap(x, yc, {v: finset.pair_label(f(v), m.phi(v)) for v in x})
        phi_table[label] = finset.encode_map(phi_t)
        psi_table[label] = finset.encode_map(psi_t)
    phi_map = FinMap(hom_xy, hom_xyc, phi_table)
    psi_map = FinMap(hom_xy, hom_xyc, psi_table)
    return finset.equalizer(phi_map, psi_map)


def restrict_along(f: FinMap, m: SetComodule) -> SetComodule:
    """Push the structure map forward along a map of base sets."""
    if f.dom != m.base:
        raise BaseMismatch("restriction needs f.dom == base")
    return SetComodule(m.carrier, f.cod, finset.compose(f, m.phi))


def induce_along(f: FinMap, p: SetComodule) -> SetComodule:
    """Pull a comodule back along a map of base sets.

    The carrier is the pullback of phi against f and the new structure map
    is the second projection; this is right adjoint to restriction.
    """
    if f.cod != p.base:
        raise BaseMismatch("induction needs f.cod == base of p")
    carrier, _, proj2 = finset.pullback(p.phi, f)
    return SetComodule(carrier, f.dom, proj2)


def unique_comonoid_certificate(c: FinSet, bound: int = 4) -> dict:
    """Enumerate all candidate comultiplications on c and count the counital
    ones; exactly the diagonal should survive.

    Returns a report dict with candidate/valid counts and the witness.
    """
    if len(c) > bound:
        raise BoundExceeded(f"|C|={len(c)} exceeds enumeration bound {bound}")
    prod, proj1, proj2 = finset.product(c, c)
    diagonal = SetComonoid(c).diagonal()
    candidates = 0
    valid = []
    for psi in finset._all_maps(c, prod):
        candidates += 1
        if finset.compose(proj1, psi) == finset.identity(c) and finset.compose(
            proj2, psi
        ) == finset.identity(c):
            valid.append(psi)
    report = {
        "base": list(c.elements),
        "candidates": candidates,
        "valid": len(valid),
        "valid_is_diagonal": len(valid) == 1 and valid[0] == diagonal,
    }
    if valid:
        report["coassociative"] = _is_coassociative(c, valid[0])
    return report


def _is_coassociative(c: FinSet, psi: FinMap) -> bool:
    """Check (psi x 1) psi == (1 x psi) psi through the canonical
    re-association of nested pairs."""
    prod, proj1, proj2 = finset.product(c, c)
    left = {}
    right = {}
    for x in c:
        a, b = proj1(psi(x)), proj2(psi(x))
        left[x] = finset.pair_label(
            finset.pair_label(proj1(psi(a)), proj2(psi(a))), b
        )
        right[x] = finset.pair_label(
            a, finset.pair_label(proj1(psi(b)), proj2(psi(b)))
        )
    reassoc = {
        finset.pair_label(finset.pair_label(u, v), w): finset.pair_label(
            u, finset.pair_label(v, w)
        )
        for u in c
        for v in c
        for w in c
    }
    return all(reassoc[left[x]] == right[x] for x in c)
