"""The dual algebra of a coalgebra and the module pictures of comodules
and contramodules.

At finite dimension the function space out of the coalgebra is the dual
tensored with the target, so a comodule becomes a right module over the
dual algebra, a contramodule a left module, and both conversions are
invertible: the collapse that makes the desk-scale regime degenerate but
exactly checkable.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exactlin import (
    GradedVect,
    LinMap,
    assoc,
    assoc_inv,
    compose,
    dual,
    hom_space,
    identity_map,
    pairing,
    sub_maps,
    tensor,
    tensor_map,
    tensor_vec,
    unit_left,
    unit_left_inv,
    unit_right,
    unit_right_inv,
    unit_space,
    Vec,
)
from .core import (
    Coalgebra,
    VComodule,
    VContramodule,
    validate_contramodule,
)


@dataclass(eq=False)
class DualAlgebra:
    coalgebra: Coalgebra
    space: GradedVect  # the dual of the coalgebra
    mult: LinMap  # A (x) A -> A
    unit: LinMap  # k -> A


@dataclass(eq=False)
class DualModule:
    """A module over the dual algebra; ``side`` records which side acts."""

    algebra: DualAlgebra
    space: GradedVect
    action: LinMap  # X (x) A -> X (right)  or  A (x) X -> X (left)
    side: str


def dual_algebra(c: Coalgebra) -> DualAlgebra:
    """Multiplication transposes the comultiplication; the counit is the
    unit element."""
    a = dual(c.space)
    fld = c.field
    z = fld.zero()
    images = {}
    for _, _, lab in tensor(a, a).basis():
        _, d1, d2 = lab
        c1, c2 = d1[1], d2[1]
        coeffs = {}
        for _, _, ck in c.space.basis():
            img = c.delta.apply_label(ck)
            coeff = img.coeff(("t", c1, c2))
            if coeff != z:
                coeffs[("d", ck)] = coeff
        images[lab] = coeffs
    mult = LinMap.from_images(tensor(a, a), a, 0, images)
    unit_images = {
        "1": {
            ("d", ck): c.eps.apply_label(ck).coeff("1")
            for _, _, ck in c.space.basis()
            if c.eps.apply_label(ck).coeff("1") != z
        }
    }
    unit = LinMap.from_images(unit_space(fld), a, 0, unit_images)
    alg = DualAlgebra(c, a, mult, unit)
    rep = validate_algebra(alg)
    assert rep["ok"], rep
    return alg


def validate_algebra(alg: DualAlgebra) -> dict:
    a = alg.space
    failures = []
    lhs = compose(alg.mult, tensor_map(alg.mult, identity_map(a)))
    rhs = compose(
        alg.mult,
        compose(tensor_map(identity_map(a), alg.mult), assoc(a, a, a)),
    )
    if not sub_maps(lhs, rhs).is_zero():
        failures.append("associativity")
    left = compose(
        alg.mult,
        compose(tensor_map(alg.unit, identity_map(a)), unit_left_inv(a)),
    )
    if not sub_maps(left, identity_map(a)).is_zero():
        failures.append("left unit")
    right = compose(
        alg.mult,
        compose(tensor_map(identity_map(a), alg.unit), unit_right_inv(a)),
    )
    if not sub_maps(right, identity_map(a)).is_zero():
        failures.append("right unit")
    return {"ok": not failures, "failures": failures}


def validate_module(mod: DualModule) -> dict:
    a = mod.algebra.space
    x = mod.space
    act = mod.action
    failures = []
    if mod.side == "right":
        lhs = compose(act, tensor_map(act, identity_map(a)))
        rhs = compose(
            act,
            compose(
                tensor_map(identity_map(x), mod.algebra.mult),
                assoc(x, a, a),
            ),
        )
        unit_leg = compose(
            act,
            compose(
                tensor_map(identity_map(x), mod.algebra.unit),
                unit_right_inv(x),
            ),
        )
    else:
        lhs = compose(act, tensor_map(identity_map(a), act))
        rhs = compose(
            act,
            compose(
                tensor_map(mod.algebra.mult, identity_map(x)),
                assoc_inv(a, a, x),
            ),
        )
        unit_leg = compose(
            act,
            compose(
                tensor_map(mod.algebra.unit, identity_map(x)),
                unit_left_inv(x),
            ),
        )
    if not sub_maps(lhs, rhs).is_zero():
        failures.append("associativity")
    if not sub_maps(unit_leg, identity_map(x)).is_zero():
        failures.append("unit")
    return {"ok": not failures, "failures": failures}


def comodule_to_module(m: VComodule, alg: DualAlgebra) -> DualModule:
    """x . f = sum of x0 f(x1): coact, then pair the coalgebra leg."""
    c = m.coalgebra
    x = m.space
    a = alg.space
    act = compose(
        unit_right(x),
        compose(
            tensor_map(identity_map(x), pairing(c.space)),
            compose(
                assoc(x, c.space, a),
                tensor_map(m.rho, identity_map(a)),
            ),
        ),
    )
    mod = DualModule(alg, x, act, "right")
    rep = validate_module(mod)
    assert rep["ok"], rep
    return mod


def dual_tensor_into_hom(c: Coalgebra, x: GradedVect) -> LinMap:
    """C* (x) X -> [C, X]; an isomorphism at finite dimension."""
    a = dual(c.space)
    dom = tensor(a, x)
    cod = hom_space(c.space, x)
    one = c.field.one()
    images = {}
    for _, _, lab in dom.basis():
        _, dl, xl = lab
        images[lab] = {("h", dl[1], xl): one}
    out = LinMap.from_images(dom, cod, 0, images)
    assert out.is_iso()
    return out


def contramodule_to_module(p: VContramodule, alg: DualAlgebra) -> DualModule:
    """f . y = theta of the function sending c to f(c) y."""
    c = p.coalgebra
    act = compose(p.theta, dual_tensor_into_hom(c, p.space))
    mod = DualModule(alg, p.space, act, "left")
    rep = validate_module(mod)
    assert rep["ok"], rep
    return mod


def module_to_comodule(mod: DualModule) -> VComodule:
    """Recover the coaction from the action on the dual basis."""
    assert mod.side == "right"
    c = mod.algebra.coalgebra
    x = mod.space
    z = c.field.zero()
    images = {}
    for _, _, xl in x.basis():
        coeffs = {}
        for _, _, ck in c.space.basis():
            moved = mod.action.apply(
                tensor_vec(
                    Vec.basis_vec(x, xl),
                    Vec.basis_vec(mod.algebra.space, ("d", ck)),
                )
            )
            for yl, cc in moved.items():
                if cc != z:
                    key = ("t", yl, ck)
                    coeffs[key] = c.field.add(coeffs.get(key, z), cc)
        images[xl] = coeffs
    rho = LinMap.from_images(x, tensor(x, c.space), 0, images)
    return VComodule(c, x, rho)


def module_to_contramodule(mod: DualModule) -> VContramodule:
    """Recover the structure map by letting the dual basis act."""
    assert mod.side == "left"
    c = mod.algebra.coalgebra
    x = mod.space
    ambient = hom_space(c.space, x)
    images = {}
    for _, _, lab in ambient.basis():
        _, cl, xl = lab
        moved = mod.action.apply(
            tensor_vec(
                Vec.basis_vec(mod.algebra.space, ("d", cl)),
                Vec.basis_vec(x, xl),
            )
        )
        images[lab] = moved
    theta = LinMap.from_images(ambient, x, 0, images)
    return VContramodule(c, x, theta)


def comodule_to_contramodule(m: VComodule, alg: DualAlgebra) -> VContramodule:
    """The finite-dimensional collapse, comodule to contramodule: act with
    the dual basis through the right action."""
    right = comodule_to_module(m, alg)
    c = m.coalgebra
    x = m.space
    ambient = hom_space(c.space, x)
    images = {}
    for _, _, lab in ambient.basis():
        _, cl, xl = lab
        images[lab] = right.action.apply(
            tensor_vec(
                Vec.basis_vec(x, xl),
                Vec.basis_vec(alg.space, ("d", cl)),
            )
        )
    theta = LinMap.from_images(ambient, x, 0, images)
    return VContramodule(c, x, theta)


def contramodule_to_comodule(p: VContramodule, alg: DualAlgebra) -> VComodule:
    left = contramodule_to_module(p, alg)
    c = p.coalgebra
    x = p.space
    z = c.field.zero()
    images = {}
    for _, _, xl in x.basis():
        coeffs = {}
        for _, _, ck in c.space.basis():
            moved = left.action.apply(
                tensor_vec(
                    Vec.basis_vec(alg.space, ("d", ck)),
                    Vec.basis_vec(x, xl),
                )
            )
            for yl, cc in moved.items():
                if cc != z:
                    key = ("t", yl, ck)
                    coeffs[key] = c.field.add(coeffs.get(key, z), cc)
        images[xl] = coeffs
    rho = LinMap.from_images(x, tensor(x, c.space), 0, images)
    return VComodule(c, x, rho)


def module_maps_degree_zero(m1: DualModule, m2: DualModule):
    """Solve the equivariance system for maps between modules."""
    from ..exactlin import Matrix, linmap_to_vec, vec_to_linmap

    assert m1.side == m2.side
    fld = m1.space.field
    ambient = hom_space(m1.space, m2.space)
    units = [lab for k, _, lab in ambient.basis() if k == 0]
    a = m1.algebra.space
    columns = []
    if m1.side == "right":
        cspace = hom_space(tensor(m1.space, a), m2.space)
    else:
        cspace = hom_space(tensor(a, m1.space), m2.space)
    for lab in units:
        f = vec_to_linmap(
            Vec.basis_vec(ambient, lab), m1.space, m2.space
        )
        if m1.side == "right":
            lhs = compose(f, m1.action)
            rhs = compose(m2.action, tensor_map(f, identity_map(a)))
        else:
            lhs = compose(f, m1.action)
            rhs = compose(m2.action, tensor_map(identity_map(a), f))
        v1 = linmap_to_vec(lhs, cspace)
        v2 = linmap_to_vec(rhs, cspace)
        col = []
        for k in cspace.degrees():
            if k == 0:
                col.extend(
                    fld.sub(x, y) for x, y in zip(v1.comps[k], v2.comps[k])
                )
        columns.append(tuple(col))
    if not units:
        return units, []
    rows = tuple(
        tuple(col[i] for col in columns) for i in range(len(columns[0]))
    )
    return units, Matrix(fld, rows, len(units)).kernel_basis()


def sections_bridge_iso(m: VComodule, alg: DualAlgebra | None = None):
    """The canonical comparison between the sections contramodule of a
    comodule and its bridge image: include the sections into the function
    space, read that as dual-tensor, and act.

    Returns (iso, sections_contramodule, bridged_contramodule); at finite
    dimension the map is an isomorphism of contramodules, which callers
    should assert."""
    from ..exactlin import braiding
    from .functors import functor_R_data
    from .instances import inverse_map

    alg = alg or dual_algebra(m.coalgebra)
    rdata = functor_R_data(m)
    dt = dual_tensor_into_hom(m.coalgebra, m.space)
    phi = compose(
        comodule_to_module(m, alg).action,
        compose(
            braiding(alg.space, m.space),
            compose(inverse_map(dt), rdata.hom.include),
        ),
    )
    return phi, rdata.contramodule, comodule_to_contramodule(m, alg)


def quotient_bridge_iso(p: VContramodule, alg: DualAlgebra | None = None):
    """The canonical comparison between the quotient comodule of a
    contramodule and its bridge image: coact through the bridge and
    project.

    Returns (iso, quotient_comodule, bridged_comodule)."""
    from .functors import functor_L_data

    alg = alg or dual_algebra(p.coalgebra)
    bridged = contramodule_to_comodule(p, alg)
    ldata = functor_L_data(p)
    psi = compose(ldata.quot.project, bridged.rho)
    return psi, ldata.comodule, bridged


def dual_algebra_bridge(c: Coalgebra):
    """The dual algebra together with the conversion functions, as one
    bundle."""
    alg = dual_algebra(c)
    converters = {
        "comodule_to_module": lambda m: comodule_to_module(m, alg),
        "contramodule_to_module": lambda p: contramodule_to_module(p, alg),
        "module_to_comodule": module_to_comodule,
        "module_to_contramodule": module_to_contramodule,
        "comodule_to_contramodule":
            lambda m: comodule_to_contramodule(m, alg),
        "contramodule_to_comodule":
            lambda p: contramodule_to_comodule(p, alg),
    }
    return alg, converters


def bridge_certificate(m: VComodule, p: VContramodule) -> dict:
    """Round trips are identities and the module pictures validate."""
    alg = dual_algebra(m.coalgebra)
    back_m = module_to_comodule(comodule_to_module(m, alg))
    back_p = module_to_contramodule(contramodule_to_module(p, alg))
    collapse = comodule_to_contramodule(m, alg)
    collapse_rep = validate_contramodule(collapse)
    back_collapse = contramodule_to_comodule(collapse, alg)
    return {
        "comodule_round_trip": sub_maps(back_m.rho, m.rho).is_zero(),
        "contramodule_round_trip": sub_maps(
            back_p.theta, p.theta
        ).is_zero(),
        "collapse_is_contramodule": collapse_rep["ok"],
        "collapse_round_trip": sub_maps(
            back_collapse.rho, m.rho
        ).is_zero(),
        "ok": sub_maps(back_m.rho, m.rho).is_zero()
        and sub_maps(back_p.theta, p.theta).is_zero()
        and collapse_rep["ok"]
        and sub_maps(back_collapse.rho, m.rho).is_zero(),
    }
