"""Enriched hom objects: equalisers of the two structure-compatibility maps
inside the internal hom, plus the internal composition restricted to them.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import IncompatibleTriple
from ..exactlin import (
    GradedVect,
    LinMap,
    Matrix,
    Vec,
    compose,
    equalizer_lin,
    factor_through_include,
    hom_map,
    hom_space,
    identity_map,
    lands_in_sub,
    linmap_to_vec,
    tensor,
    tensor_map,
    vec_to_linmap,
)
from .core import (
    VComodule,
    VContramodule,
    require_same_coalgebra,
)


@dataclass(eq=False)
class HomObject:
    """An enriched hom object presented as a sub-object of the internal hom."""

    kind: str  # "T" for comodules, "F" for contramodules
    src: object
    dst: object
    ambient: GradedVect
    space: GradedVect
    include: LinMap

    def member_map(self, label) -> LinMap:
        """The honest linear map behind a basis label of the hom object."""
        vec = self.include.apply(Vec.basis_vec(self.space, label))
        return vec_to_linmap(
            vec, self.src.space, self.dst.space
        )

    def degree_zero_members(self):
        return [
            self.member_map(lab)
            for k, _, lab in self.space.basis()
            if k == 0
        ]

    def contains(self, f: LinMap) -> bool:
        return lands_in_sub(
            self.include, linmap_to_vec(f, self.ambient)
        )

    def coords_of(self, f: LinMap):
        """Coordinates of a member map in the hom-object basis."""
        vec = linmap_to_vec(f, self.ambient)
        k = f.degree
        sol = self.include.block(k).solve(vec.comps.get(k, ()))
        return sol


def tensor_id_on_hom(
    m: GradedVect, n: GradedVect, c: GradedVect
) -> LinMap:
    """[M,N] -> [M (x) C, N (x) C] sending f to f (x) id (no signs: the
    identity has even degree)."""
    dom = hom_space(m, n)
    cod = hom_space(tensor(m, c), tensor(n, c))
    one = m.field.one()
    images = {}
    for _, _, lab in dom.basis():
        _, a, b = lab
        images[lab] = {
            ("h", ("t", a, cl), ("t", b, cl)): one for _, _, cl in c.basis()
        }
    return LinMap.from_images(dom, cod, 0, images)


def hom_functor_push(
    c: GradedVect, p: GradedVect, q: GradedVect
) -> LinMap:
    """[P,Q] -> [[C,P], [C,Q]] sending f to postcomposition by f."""
    dom = hom_space(p, q)
    cod = hom_space(hom_space(c, p), hom_space(c, q))
    one = p.field.one()
    images = {}
    for _, _, lab in dom.basis():
        _, a, b = lab
        images[lab] = {
            ("h", ("h", cl, a), ("h", cl, b)): one
            for _, _, cl in c.basis()
        }
    return LinMap.from_images(dom, cod, 0, images)


def comodule_structure_pair(m: VComodule, n: VComodule):
    """The parallel pair on [M,N] whose equaliser is the hom object."""
    require_same_coalgebra(m, n)
    c = m.coalgebra.space
    ambient = hom_space(m.space, n.space)
    phi = hom_map(
        identity_map(m.space),
        n.rho,
        dom=ambient,
        cod=hom_space(m.space, tensor(n.space, c)),
    )
    psi = compose(
        hom_map(m.rho, identity_map(tensor(n.space, c))),
        tensor_id_on_hom(m.space, n.space, c),
    )
    return phi, psi


def comodule_hom_object(m: VComodule, n: VComodule) -> HomObject:
    phi, psi = comodule_structure_pair(m, n)
    sub = equalizer_lin(phi, psi, prefix="ht")
    return HomObject("T", m, n, sub.ambient, sub.space, sub.include)


def contra_structure_pair(p: VContramodule, q: VContramodule):
    require_same_coalgebra(p, q)
    c = p.coalgebra.space
    phi = compose(
        hom_map(
            identity_map(hom_space(c, p.space)),
            q.theta,
        ),
        hom_functor_push(c, p.space, q.space),
    )
    psi = hom_map(p.theta, identity_map(q.space))
    return phi, psi


def contra_hom_object(p: VContramodule, q: VContramodule) -> HomObject:
    phi, psi = contra_structure_pair(p, q)
    sub = equalizer_lin(phi, psi, prefix="hf")
    return HomObject("F", p, q, sub.ambient, sub.space, sub.include)


def comodule_maps_direct(m: VComodule, n: VComodule):
    """Brute-force oracle: solve the commuting-square system over the
    degree-zero matrix units, independently of the equaliser machinery."""
    require_same_coalgebra(m, n)
    c = m.coalgebra.space
    fld = m.space.field
    units = [
        lab
        for k, _, lab in hom_space(m.space, n.space).basis()
        if k == 0
    ]
    columns = []
    constraint_space = hom_space(m.space, tensor(n.space, c))
    for lab in units:
        f = vec_to_linmap(
            Vec.basis_vec(hom_space(m.space, n.space), lab),
            m.space,
            n.space,
        )
        diff = compose(n.rho, f)
        diff2 = compose(tensor_map(f, identity_map(c)), m.rho)
        vec = linmap_to_vec(diff, constraint_space)
        vec2 = linmap_to_vec(diff2, constraint_space)
        col = []
        for k in constraint_space.degrees():
            if k == 0:
                col.extend(
                    fld.sub(a, b)
                    for a, b in zip(vec.comps[k], vec2.comps[k])
                )
        columns.append(tuple(col))
    if not units:
        return units, []
    rows = tuple(
        tuple(col[i] for col in columns) for i in range(len(columns[0]))
    )
    kernel = Matrix(fld, rows, len(units)).kernel_basis()
    return units, kernel


def contra_maps_direct(p: VContramodule, q: VContramodule):
    """Brute-force oracle for contramodule maps in degree zero."""
    require_same_coalgebra(p, q)
    c = p.coalgebra.space
    fld = p.space.field
    ambient = hom_space(p.space, q.space)
    units = [lab for k, _, lab in ambient.basis() if k == 0]
    constraint_space = hom_space(hom_space(c, p.space), q.space)
    columns = []
    for lab in units:
        f = vec_to_linmap(
            Vec.basis_vec(ambient, lab), p.space, q.space
        )
        lhs = compose(f, p.theta)
        rhs = compose(q.theta, hom_map(identity_map(c), f))
        vec = linmap_to_vec(lhs, constraint_space)
        vec2 = linmap_to_vec(rhs, constraint_space)
        col = []
        for k in constraint_space.degrees():
            if k == 0:
                col.extend(
                    fld.sub(a, b)
                    for a, b in zip(vec.comps[k], vec2.comps[k])
                )
        columns.append(tuple(col))
    if not units:
        return units, []
    rows = tuple(
        tuple(col[i] for col in columns) for i in range(len(columns[0]))
    )
    kernel = Matrix(fld, rows, len(units)).kernel_basis()
    return units, kernel


def same_degree_zero_subspace(hobj: HomObject, units, kernel) -> bool:
    """Compare the hom object's degree-zero part against an independently
    solved subspace over the same matrix-unit basis."""
    fld = hobj.ambient.field
    amb_labels = [lab for k, _, lab in hobj.ambient.basis() if k == 0]
    assert amb_labels == list(units)
    dim_sub = hobj.space.dim(0)
    if dim_sub != len(kernel):
        return False
    if not units:
        return True
    inc = hobj.include.block(0)
    direct = Matrix(
        fld,
        tuple(
            tuple(vec[j] for vec in kernel) for j in range(len(units))
        ),
        len(kernel),
    )
    return (
        direct.solve_matrix(inc) is not None
        and inc.solve_matrix(direct) is not None
    )


def composition_on_ambient(
    x: GradedVect, y: GradedVect, z: GradedVect
) -> LinMap:
    """[Y,Z] (x) [X,Y] -> [X,Z], matching matrix units through the middle."""
    dom = tensor(hom_space(y, z), hom_space(x, y))
    cod = hom_space(x, z)
    one = x.field.one()
    images = {}
    for _, _, lab in dom.basis():
        _, g, f = lab
        _, b2, cl = g
        _, a, b = f
        if b == b2:
            images[lab] = {("h", a, cl): one}
    return LinMap.from_images(dom, cod, 0, images)


def identity_element(hobj: HomObject):
    """Coordinates of the identity map inside an endo hom object."""
    if hobj.src is not hobj.dst and hobj.src.space != hobj.dst.space:
        raise IncompatibleTriple("identity needs an endo hom object")
    ident = identity_map(hobj.src.space)
    coords = hobj.coords_of(ident)
    if coords is None:
        raise IncompatibleTriple("identity is not a member; invalid input")
    return coords


def enriched_composition(h1: HomObject, h2: HomObject):
    """The internal composition restricted to hom objects.

    ``h1`` is the inner hom (X to Y), ``h2`` the outer (Y to Z); returns
    the target hom object together with the factored composition map
    h2 (x) h1 -> h3.  Raises when the restriction fails to land in the
    target, which would mean the inputs were not genuine hom objects.
    """
    if h1.kind != h2.kind:
        raise IncompatibleTriple("mixed comodule/contramodule composition")
    if h1.dst is not h2.src and h1.dst.space != h2.src.space:
        raise IncompatibleTriple("hom objects do not share the middle object")
    if h1.kind == "T":
        h3 = comodule_hom_object(h1.src, h2.dst)
    else:
        h3 = contra_hom_object(h1.src, h2.dst)
    comp = composition_on_ambient(
        h1.src.space, h1.dst.space, h2.dst.space
    )
    restricted = compose(comp, tensor_map(h2.include, h1.include))
    factored = factor_through_include(h3.include, restricted)
    return h3, factored
