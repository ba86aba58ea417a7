"""Coalgebras over exact fields, their comodules and contramodules.

All structure maps are degree-zero; axioms are exact matrix identities.
Validation returns report dicts with basis-level witnesses rather than
raising, so batch drivers can collect failures.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CoalgebraMismatch, NotCoalgebraMorphism
from ..exactlin import (
    GradedVect,
    LinMap,
    assoc,
    assoc_inv,
    braiding,
    compose,
    hom_map,
    hom_space,
    hom_tensor_iso_inv,
    identity_map,
    sub_maps,
    tensor,
    tensor_map,
    unit_left,
    unit_right,
    unit_space,
)


@dataclass(eq=False)
class Coalgebra:
    space: GradedVect
    delta: LinMap  # C -> C (x) C
    eps: LinMap  # C -> unit

    def __post_init__(self):
        assert self.delta.dom == self.space
        assert self.delta.cod == tensor(self.space, self.space)
        assert self.eps.dom == self.space
        assert self.eps.cod == unit_space(self.space.field)
        assert self.delta.degree == 0 and self.eps.degree == 0

    @property
    def field(self):
        return self.space.field

    def __eq__(self, other):
        return (
            isinstance(other, Coalgebra)
            and self.space == other.space
            and self.delta == other.delta
            and self.eps == other.eps
        )


@dataclass(eq=False)
class VComodule:
    """A right comodule; ``side="left"`` marks a left comodule carried in
    right form through the braiding (see :func:`left_coaction`)."""

    coalgebra: Coalgebra
    space: GradedVect
    rho: LinMap  # X -> X (x) C
    side: str = "right"

    def __post_init__(self):
        assert self.rho.dom == self.space
        assert self.rho.cod == tensor(self.space, self.coalgebra.space)
        assert self.rho.degree == 0


@dataclass(eq=False)
class VContramodule:
    coalgebra: Coalgebra
    space: GradedVect
    theta: LinMap  # [C, X] -> X

    def __post_init__(self):
        assert self.theta.dom == hom_space(
            self.coalgebra.space, self.space
        )
        assert self.theta.cod == self.space
        assert self.theta.degree == 0


def _first_witness(diff: LinMap):
    z = diff.dom.field.zero()
    for k in diff.dom.degrees():
        blk = diff.block(k)
        for j, lab in enumerate(diff.dom.labels[k]):
            if any(blk[i, j] != z for i in range(blk.nrows)):
                return lab
    return None


def _identity_check(name, lhs: LinMap, rhs: LinMap, failures):
    diff = sub_maps(lhs, rhs)
    if not diff.is_zero():
        failures.append({"law": name, "witness": _first_witness(diff)})


def validate_coalgebra(c: Coalgebra) -> dict:
    cs = c.space
    failures = []
    lhs = compose(assoc(cs, cs, cs),
                  compose(tensor_map(c.delta, identity_map(cs)), c.delta))
    rhs = compose(tensor_map(identity_map(cs), c.delta), c.delta)
    _identity_check("coassociativity", lhs, rhs, failures)
    left = compose(unit_left(cs),
                   compose(tensor_map(c.eps, identity_map(cs)), c.delta))
    _identity_check("left counit", left, identity_map(cs), failures)
    right = compose(unit_right(cs),
                    compose(tensor_map(identity_map(cs), c.eps), c.delta))
    _identity_check("right counit", right, identity_map(cs), failures)
    return {"ok": not failures, "failures": failures}


def left_coaction(m: VComodule) -> LinMap:
    """X -> C (x) X for a left comodule carried in right form."""
    return compose(
        braiding(m.space, m.coalgebra.space), m.rho
    )


def left_comodule_from_coaction(
    c: Coalgebra, space: GradedVect, lam: LinMap
) -> VComodule:
    """Wrap a coaction X -> C (x) X as a left comodule."""
    assert lam.dom == space and lam.cod == tensor(c.space, space)
    rho = compose(braiding(c.space, space), lam)
    return VComodule(c, space, rho, side="left")


def validate_comodule(m: VComodule) -> dict:
    c = m.coalgebra
    x = m.space
    failures = []
    if m.side == "right":
        counit = compose(
            unit_right(x),
            compose(tensor_map(identity_map(x), c.eps), m.rho),
        )
        _identity_check("counitality", counit, identity_map(x), failures)
        lhs = compose(
            assoc(x, c.space, c.space),
            compose(tensor_map(m.rho, identity_map(c.space)), m.rho),
        )
        rhs = compose(tensor_map(identity_map(x), c.delta), m.rho)
        _identity_check("coassociativity", lhs, rhs, failures)
    else:
        lam = left_coaction(m)
        counit = compose(
            unit_left(x),
            compose(tensor_map(c.eps, identity_map(x)), lam),
        )
        _identity_check("counitality", counit, identity_map(x), failures)
        lhs = compose(tensor_map(c.delta, identity_map(x)), lam)
        rhs = compose(
            assoc_inv(c.space, c.space, x),
            compose(tensor_map(identity_map(c.space), lam), lam),
        )
        _identity_check("coassociativity", lhs, rhs, failures)
    return {"ok": not failures, "failures": failures}


def unit_hom_iso(x: GradedVect) -> LinMap:
    """X -> [unit, X]."""
    cod = hom_space(unit_space(x.field), x)
    one = x.field.one()
    images = {lab: {("h", "1", lab): one} for _, _, lab in x.basis()}
    return LinMap.from_images(x, cod, 0, images)


def eps_star(c: Coalgebra, x: GradedVect) -> LinMap:
    """X -> [C, X], sending x to (a scalar multiple of) x at every basis
    direction the counit sees."""
    return compose(
        hom_map(c.eps, identity_map(x)), unit_hom_iso(x)
    )


def contra_assoc_maps(p: VContramodule):
    """The two composites whose equality is contraassociativity."""
    c = p.coalgebra
    x = p.space
    via_theta = compose(
        p.theta, hom_map(identity_map(c.space), p.theta)
    )
    via_delta = compose(
        p.theta,
        compose(
            hom_map(c.delta, identity_map(x)),
            hom_tensor_iso_inv(c.space, c.space, x),
        ),
    )
    return via_theta, via_delta


def validate_contramodule(p: VContramodule) -> dict:
    c = p.coalgebra
    x = p.space
    failures = []
    contraunit = compose(p.theta, eps_star(c, x))
    _identity_check("contraunitality", contraunit, identity_map(x), failures)
    via_theta, via_delta = contra_assoc_maps(p)
    _identity_check("contraassociativity", via_theta, via_delta, failures)
    return {"ok": not failures, "failures": failures}


def validate(obj) -> dict:
    """Dispatching validator for the three structure kinds."""
    if isinstance(obj, Coalgebra):
        return validate_coalgebra(obj)
    if isinstance(obj, VComodule):
        return validate_comodule(obj)
    if isinstance(obj, VContramodule):
        return validate_contramodule(obj)
    raise TypeError(f"cannot validate {type(obj).__name__}")


def cofree(x: GradedVect, c: Coalgebra) -> VComodule:
    """X (x) C with the comultiplication acting on the right factor."""
    cs = c.space
    rho = compose(
        assoc_inv(x, cs, cs), tensor_map(identity_map(x), c.delta)
    )
    return VComodule(c, tensor(x, cs), rho)


def free(x: GradedVect, c: Coalgebra) -> VContramodule:
    """[C, X] with precomposition by the comultiplication."""
    cs = c.space
    theta = compose(
        hom_map(c.delta, identity_map(x)),
        hom_tensor_iso_inv(cs, cs, x),
    )
    return VContramodule(c, hom_space(cs, x), theta)


def coalgebra_as_comodule(c: Coalgebra) -> VComodule:
    return VComodule(c, c.space, c.delta)


def coalgebra_as_left_comodule(c: Coalgebra) -> VComodule:
    return left_comodule_from_coaction(c, c.space, c.delta)


def require_same_coalgebra(*objs):
    first = objs[0].coalgebra
    for o in objs[1:]:
        if o.coalgebra != first:
            raise CoalgebraMismatch("structures live over different "
                                    "coalgebras")


def is_coalgebra_morphism(f: LinMap, c: Coalgebra, chat: Coalgebra) -> bool:
    if f.dom != c.space or f.cod != chat.space or f.degree != 0:
        return False
    square = sub_maps(
        compose(chat.delta, f), compose(tensor_map(f, f), c.delta)
    )
    counit = sub_maps(compose(chat.eps, f), c.eps)
    return square.is_zero() and counit.is_zero()


def check_coalgebra_morphism(f: LinMap, c: Coalgebra, chat: Coalgebra):
    if not is_coalgebra_morphism(f, c, chat):
        raise NotCoalgebraMorphism(
            "map fails the comultiplication/counit squares"
        )


def is_comodule_map(f: LinMap, m: VComodule, n: VComodule) -> bool:
    require_same_coalgebra(m, n)
    c = m.coalgebra.space
    lhs = compose(n.rho, f)
    rhs = compose(tensor_map(f, identity_map(c)), m.rho)
    return f.degree == 0 and sub_maps(lhs, rhs).is_zero()


def is_contramodule_map(f: LinMap, p: VContramodule, q: VContramodule) -> bool:
    require_same_coalgebra(p, q)
    c = p.coalgebra.space
    lhs = compose(f, p.theta)
    rhs = compose(q.theta, hom_map(identity_map(c), f))
    return f.degree == 0 and sub_maps(lhs, rhs).is_zero()
