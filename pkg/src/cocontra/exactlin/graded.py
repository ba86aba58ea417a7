"""Finite-support integer-graded vector spaces and degree-homogeneous maps.

Basis labels are atoms (strings) or structural tuples: ("t", a, b) for
tensor factors, ("h", a, b) for hom components, ("d", a) for duals.  Labels
are unique across the whole space and the basis order is canonical (degree
ascending, then the construction order below), so every matrix in sight is
reproducible bit for bit.

The only sign convention in the package lives here: applying a tensor
product of maps to a tensor of elements costs (-1)^(|g||x|) when g slides
past x, and the braiding costs (-1)^(|x||y|).  All structure maps downstream
are degree zero, so these are the only places signs can enter.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MismatchedSignature
from .matrix import Matrix


@dataclass(eq=False)
class GradedVect:
    field: object
    dims: dict[int, int]
    labels: dict[int, tuple]

    def __init__(self, field, dims, labels=None, prefix="e"):
        self.field = field
        self.dims = {k: d for k, d in dims.items() if d > 0}
        if labels is None:
            labels = {
                k: tuple(f"{prefix}{k}_{i}" for i in range(d))
                for k, d in self.dims.items()
            }
        self.labels = {k: tuple(labels[k]) for k in self.dims}
        for k, d in self.dims.items():
            if len(self.labels[k]) != d:
                raise ValueError(f"label count mismatch in degree {k}")
        flat = [lab for k in self.dims for lab in self.labels[k]]
        if len(set(flat)) != len(flat):
            raise ValueError("labels must be unique across the space")
        self._pos = {}
        for k in self.degrees():
            for i, lab in enumerate(self.labels[k]):
                self._pos[lab] = (k, i)

    def __eq__(self, other):
        return (
            isinstance(other, GradedVect)
            and self.field == other.field
            and self.dims == other.dims
            and self.labels == other.labels
        )

    def degrees(self):
        return sorted(self.dims)

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def basis(self):
        """(degree, index, label) triples in canonical order."""
        return [
            (k, i, lab)
            for k in self.degrees()
            for i, lab in enumerate(self.labels[k])
        ]

    def position(self, label):
        return self._pos[label]

    def degree_of(self, label) -> int:
        return self._pos[label][0]

    def __repr__(self):
        body = ", ".join(f"{k}:{d}" for k, d in sorted(self.dims.items()))
        return f"GradedVect({{{body}}} over {self.field.name})"


def unit_space(field) -> GradedVect:
    return GradedVect(field, {0: 1}, {0: ("1",)})


def zero_space(field) -> GradedVect:
    return GradedVect(field, {})


@dataclass(eq=False)
class Vec:
    """A (possibly inhomogeneous) element, stored per degree."""

    space: GradedVect
    comps: dict[int, tuple]

    def __init__(self, space, comps=None):
        self.space = space
        z = space.field.zero()
        self.comps = {}
        for k in space.degrees():
            d = space.dim(k)
            got = tuple((comps or {}).get(k, (z,) * d))
            assert len(got) == d
            self.comps[k] = got

    @classmethod
    def from_dict(cls, space, coeffs: dict):
        """Build from {label: coefficient}."""
        z = space.field.zero()
        comps = {k: [z] * space.dim(k) for k in space.degrees()}
        for lab, c in coeffs.items():
            k, i = space.position(lab)
            comps[k][i] = space.field.add(comps[k][i], c)
        return cls(space, {k: tuple(v) for k, v in comps.items()})

    @classmethod
    def basis_vec(cls, space, label):
        return cls.from_dict(space, {label: space.field.one()})

    def coeff(self, label):
        k, i = self.space.position(label)
        return self.comps[k][i]

    def add(self, other: "Vec") -> "Vec":
        f = self.space.field
        return Vec(
            self.space,
            {
                k: tuple(
                    f.add(a, b)
                    for a, b in zip(self.comps[k], other.comps[k])
                )
                for k in self.comps
            },
        )

    def scale(self, c) -> "Vec":
        f = self.space.field
        return Vec(
            self.space,
            {k: tuple(f.mul(c, a) for a in v) for k, v in self.comps.items()},
        )

    def is_zero(self) -> bool:
        z = self.space.field.zero()
        return all(a == z for v in self.comps.values() for a in v)

    def items(self):
        """(label, coefficient) pairs for the nonzero entries."""
        z = self.space.field.zero()
        out = []
        for k in self.space.degrees():
            for i, lab in enumerate(self.space.labels[k]):
                c = self.comps[k][i]
                if c != z:
                    out.append((lab, c))
        return out

    def __eq__(self, other):
        return self.space == other.space and self.comps == other.comps


def zero_vec(space: GradedVect) -> Vec:
    return Vec(space)


@dataclass(eq=False)
class LinMap:
    """A degree-homogeneous linear map, stored as one exact block per
    domain degree."""

    dom: GradedVect
    cod: GradedVect
    degree: int
    blocks: dict[int, Matrix]

    def __init__(self, dom, cod, degree, blocks):
        self.dom, self.cod, self.degree = dom, cod, degree
        self.blocks = {}
        for k in dom.degrees():
            m = cod.dim(k + degree)
            n = dom.dim(k)
            if m == 0:
                continue
            got = blocks.get(k)
            if got is None:
                got = Matrix.zeros(dom.field, m, n)
            assert got.shape == (m, n), (
                f"block {k}: expected {(m, n)}, got {got.shape}"
            )
            self.blocks[k] = got

    def block(self, k: int) -> Matrix:
        m = self.cod.dim(k + self.degree)
        n = self.dom.dim(k)
        return self.blocks.get(k, Matrix.zeros(self.dom.field, m, n))

    def __eq__(self, other):
        return (
            isinstance(other, LinMap)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.degree == other.degree
            and all(
                self.block(k) == other.block(k) for k in self.dom.degrees()
            )
        )

    def apply(self, v: Vec) -> Vec:
        assert v.space == self.dom
        f = self.dom.field
        out = {}
        for k in self.dom.degrees():
            m = self.cod.dim(k + self.degree)
            if m == 0:
                continue
            img = self.block(k).apply(v.comps[k])
            tgt = k + self.degree
            if tgt in out:
                out[tgt] = tuple(
                    f.add(a, b) for a, b in zip(out[tgt], img)
                )
            else:
                out[tgt] = img
        return Vec(self.cod, out)

    def apply_label(self, label) -> Vec:
        return self.apply(Vec.basis_vec(self.dom, label))

    @classmethod
    def from_images(cls, dom, cod, degree, images: dict):
        """Build from {domain label: image Vec (or {label: coeff} dict)}."""
        blocks = {}
        for k in dom.degrees():
            m = cod.dim(k + degree)
            if m == 0:
                for lab in dom.labels[k]:
                    img = images.get(lab)
                    if img is not None:
                        vec = (
                            img
                            if isinstance(img, Vec)
                            else Vec.from_dict(cod, img)
                        )
                        assert vec.is_zero(), (
                            f"image of {lab} must vanish (no degree "
                            f"{k + degree} in the target)"
                        )
                continue
            cols = []
            for lab in dom.labels[k]:
                img = images.get(lab, {})
                vec = img if isinstance(img, Vec) else Vec.from_dict(cod, img)
                for kk, comp in vec.comps.items():
                    if kk != k + degree:
                        assert all(
                            c == cod.field.zero() for c in comp
                        ), f"image of {lab} is not homogeneous"
                cols.append(vec.comps[k + degree])
            blocks[k] = Matrix(
                dom.field,
                tuple(
                    tuple(col[i] for col in cols) for i in range(m)
                ),
            )
        return cls(dom, cod, degree, blocks)

    def is_zero(self) -> bool:
        return all(self.block(k).is_zero() for k in self.dom.degrees())

    def rank(self) -> int:
        return sum(self.block(k).rank() for k in self.dom.degrees())

    def is_injective(self) -> bool:
        return self.rank() == self.dom.total_dim

    def is_surjective(self) -> bool:
        # only degrees reachable from the domain can be hit
        hit = self.rank()
        need = sum(
            self.cod.dim(k + self.degree) for k in self.dom.degrees()
        )
        extra = self.cod.total_dim - need
        return extra == 0 and hit == self.cod.total_dim

    def is_iso(self) -> bool:
        return (
            self.dom.total_dim == self.cod.total_dim
            and self.is_injective()
            and self.is_surjective()
        )


def identity_map(v: GradedVect) -> LinMap:
    return LinMap(
        v,
        v,
        0,
        {k: Matrix.identity(v.field, v.dim(k)) for k in v.degrees()},
    )


def zero_map(dom: GradedVect, cod: GradedVect, degree: int = 0) -> LinMap:
    return LinMap(dom, cod, degree, {})


def compose(g: LinMap, f: LinMap) -> LinMap:
    """g after f; degrees add."""
    if f.cod != g.dom:
        raise MismatchedSignature("compose: middle spaces differ")
    blocks = {}
    for k in f.dom.degrees():
        if g.cod.dim(k + f.degree + g.degree) == 0:
            continue
        blocks[k] = g.block(k + f.degree) @ f.block(k)
    return LinMap(f.dom, g.cod, f.degree + g.degree, blocks)


def add_maps(f: LinMap, g: LinMap) -> LinMap:
    assert f.dom == g.dom and f.cod == g.cod and f.degree == g.degree
    return LinMap(
        f.dom,
        f.cod,
        f.degree,
        {k: f.block(k) + g.block(k) for k in f.dom.degrees()},
    )


def sub_maps(f: LinMap, g: LinMap) -> LinMap:
    assert f.dom == g.dom and f.cod == g.cod and f.degree == g.degree
    return LinMap(
        f.dom,
        f.cod,
        f.degree,
        {k: f.block(k) - g.block(k) for k in f.dom.degrees()},
    )


def scale_map(c, f: LinMap) -> LinMap:
    return LinMap(
        f.dom,
        f.cod,
        f.degree,
        {k: f.block(k).scale(c) for k in f.dom.degrees()},
    )


# --- tensor product -----------------------------------------------------------


def tensor(v: GradedVect, w: GradedVect) -> GradedVect:
    """Degreewise convolution with ("t", a, b) labels; within a degree the
    first factor's degree ascends, then both indices."""
    assert v.field == w.field
    dims = {}
    labels = {}
    for i in v.degrees():
        for j in w.degrees():
            n = i + j
            labs = [
                ("t", a, b) for a in v.labels[i] for b in w.labels[j]
            ]
            labels.setdefault(n, []).extend(labs)
            dims[n] = dims.get(n, 0) + len(labs)
    return GradedVect(
        v.field, dims, {k: tuple(ls) for k, ls in labels.items()}
    )


def tensor_vec(x: Vec, y: Vec) -> Vec:
    """Elementwise tensor; no signs (signs belong to maps, not elements)."""
    space = tensor(x.space, y.space)
    f = space.field
    coeffs = {}
    for la, ca in x.items():
        for lb, cb in y.items():
            coeffs[("t", la, lb)] = f.mul(ca, cb)
    return Vec.from_dict(space, coeffs)


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    """(f (x) g)(x (x) y) = (-1)^(|g||x|) f(x) (x) g(y)."""
    dom = tensor(f.dom, g.dom)
    cod = tensor(f.cod, g.cod)
    fld = dom.field
    sign_base = fld.from_int(-1)
    images = {}
    for _, _, lab in dom.basis():
        _, la, lb = lab
        fx = f.apply_label(la)
        gy = g.apply_label(lb)
        img = tensor_vec(fx, gy)
        if g.degree % 2 == 1 and f.dom.degree_of(la) % 2 == 1:
            img = img.scale(sign_base)
        # reinterpret into the canonical codomain space
        images[lab] = Vec.from_dict(cod, dict(img.items()))
    return LinMap.from_images(dom, cod, f.degree + g.degree, images)


def assoc(u: GradedVect, v: GradedVect, w: GradedVect) -> LinMap:
    """((x,y),z) -> (x,(y,z)), a permutation of basis labels."""
    dom = tensor(tensor(u, v), w)
    cod = tensor(u, tensor(v, w))
    one = dom.field.one()
    images = {
        ("t", ("t", a, b), c): {("t", a, ("t", b, c)): one}
        for _, _, (_, (_, a, b), c) in dom.basis()
    }
    return LinMap.from_images(dom, cod, 0, images)


def assoc_inv(u: GradedVect, v: GradedVect, w: GradedVect) -> LinMap:
    dom = tensor(u, tensor(v, w))
    cod = tensor(tensor(u, v), w)
    one = dom.field.one()
    images = {
        ("t", a, ("t", b, c)): {("t", ("t", a, b), c): one}
        for _, _, (_, a, (_, b, c)) in dom.basis()
    }
    return LinMap.from_images(dom, cod, 0, images)


def unit_left(v: GradedVect) -> LinMap:
    """k (x) V -> V."""
    k = unit_space(v.field)
    dom = tensor(k, v)
    one = v.field.one()
    images = {
        ("t", "1", a): {a: one} for _, _, (_, _, a) in dom.basis()
    }
    return LinMap.from_images(dom, v, 0, images)


def unit_right(v: GradedVect) -> LinMap:
    """V (x) k -> V."""
    k = unit_space(v.field)
    dom = tensor(v, k)
    one = v.field.one()
    images = {
        ("t", a, "1"): {a: one} for _, _, (_, a, _) in dom.basis()
    }
    return LinMap.from_images(dom, v, 0, images)


def unit_left_inv(v: GradedVect) -> LinMap:
    k = unit_space(v.field)
    cod = tensor(k, v)
    one = v.field.one()
    images = {a: {("t", "1", a): one} for _, _, a in v.basis()}
    return LinMap.from_images(v, cod, 0, images)


def unit_right_inv(v: GradedVect) -> LinMap:
    k = unit_space(v.field)
    cod = tensor(v, k)
    one = v.field.one()
    images = {a: {("t", a, "1"): one} for _, _, a in v.basis()}
    return LinMap.from_images(v, cod, 0, images)


def braiding(v: GradedVect, w: GradedVect) -> LinMap:
    """V (x) W -> W (x) V with the sign (-1)^(|x||y|)."""
    dom = tensor(v, w)
    cod = tensor(w, v)
    fld = v.field
    images = {}
    for _, _, lab in dom.basis():
        _, a, b = lab
        c = fld.one()
        if v.degree_of(a) % 2 == 1 and w.degree_of(b) % 2 == 1:
            c = fld.from_int(-1)
        images[lab] = {("t", b, a): c}
    return LinMap.from_images(dom, cod, 0, images)


# --- internal hom and duals -----------------------------------------------


def hom_space(v: GradedVect, w: GradedVect) -> GradedVect:
    """[V,W]_n collects the maps raising degree by n, one ("h", a, b) label
    per matrix unit; source degree ascends first, then both indices."""
    assert v.field == w.field
    dims = {}
    labels = {}
    for k in v.degrees():
        for m in w.degrees():
            n = m - k
            labs = [
                ("h", a, b) for a in v.labels[k] for b in w.labels[m]
            ]
            labels.setdefault(n, []).extend(labs)
            dims[n] = dims.get(n, 0) + len(labs)
    return GradedVect(
        v.field, dims, {k: tuple(ls) for k, ls in labels.items()}
    )


def vec_to_linmap(h: Vec, v: GradedVect, w: GradedVect) -> LinMap:
    """Read a homogeneous hom-space element back as an honest map."""
    degrees = {
        k for k, comp in h.comps.items()
        if any(c != h.space.field.zero() for c in comp)
    }
    assert len(degrees) <= 1, "hom element must be homogeneous"
    n = degrees.pop() if degrees else 0
    images = {}
    for lab, c in h.items():
        _, a, b = lab
        images.setdefault(a, {})[b] = c
    return LinMap.from_images(
        v, w, n, {a: Vec.from_dict(w, img) for a, img in images.items()}
    )


def linmap_to_vec(f: LinMap, ambient: GradedVect | None = None) -> Vec:
    """The hom-space element of a map; ambient defaults to hom(dom, cod)."""
    space = ambient if ambient is not None else hom_space(f.dom, f.cod)
    coeffs = {}
    z = f.dom.field.zero()
    for _, _, a in f.dom.basis():
        img = f.apply_label(a)
        for b, c in img.items():
            if c != z:
                coeffs[("h", a, b)] = c
    return Vec.from_dict(space, coeffs)


def hom_map(f: LinMap, g: LinMap, dom=None, cod=None) -> LinMap:
    """[B,X] -> [A,Y] by h -> g o h o f, for degree-zero f: A -> B and
    g: X -> Y."""
    assert f.degree == 0 and g.degree == 0, "hom_map wants degree-0 maps"
    dom = dom if dom is not None else hom_space(f.cod, g.dom)
    cod = cod if cod is not None else hom_space(f.dom, g.cod)
    fld = dom.field
    z = fld.zero()
    images = {}
    for _, _, lab in dom.basis():
        _, b, x = lab
        coeffs = {}
        fb = f.cod.position(b)
        gx = g.apply_label(x)
        kb, ib = fb
        col = f.block(kb)  # A_kb -> B_kb
        for ia, a in enumerate(f.dom.labels.get(kb, ())):
            fa = col[ib, ia] if col.nrows else z
            if fa == z:
                continue
            for y, cy in gx.items():
                key = ("h", a, y)
                coeffs[key] = fld.add(
                    coeffs.get(key, z), fld.mul(fa, cy)
                )
        images[lab] = coeffs
    return LinMap.from_images(dom, cod, 0, images)


def ev_map(v: GradedVect, w: GradedVect) -> LinMap:
    """[V,W] (x) V -> W, pairing a matrix unit against a basis vector."""
    hom_vw = hom_space(v, w)
    dom = tensor(hom_vw, v)
    one = v.field.one()
    images = {}
    for _, _, lab in dom.basis():
        _, h, a2 = lab
        _, a, b = h
        if a == a2:
            images[lab] = {b: one}
    return LinMap.from_images(dom, w, 0, images)


def coev_map(v: GradedVect, w: GradedVect) -> LinMap:
    """V -> [W, V (x) W], the unit of the tensor-hom adjunction."""
    vw = tensor(v, w)
    cod = hom_space(w, vw)
    one = v.field.one()
    images = {}
    for _, _, a in v.basis():
        coeffs = {
            ("h", b, ("t", a, b)): one for _, _, b in w.basis()
        }
        images[a] = coeffs
    return LinMap.from_images(v, cod, 0, images)


def curry(f: LinMap, u: GradedVect, v: GradedVect, w: GradedVect) -> LinMap:
    """U (x) V -> W into U -> [V,W] (the degree rides along)."""
    assert f.dom == tensor(u, v) and f.cod == w
    cod = hom_space(v, w)
    z = u.field.zero()
    images = {}
    for _, _, a in u.basis():
        coeffs = {}
        for _, _, b in v.basis():
            img = f.apply_label(("t", a, b))
            for c, cc in img.items():
                if cc != z:
                    coeffs[("h", b, c)] = cc
        images[a] = coeffs
    return LinMap.from_images(u, cod, f.degree, images)


def uncurry(g: LinMap, u: GradedVect, v: GradedVect, w: GradedVect) -> LinMap:
    """U -> [V,W] into U (x) V -> W."""
    assert g.dom == u and g.cod == hom_space(v, w)
    dom = tensor(u, v)
    z = u.field.zero()
    images = {}
    for _, _, lab in dom.basis():
        _, a, b = lab
        ga = g.apply_label(a)
        coeffs = {}
        for hlab, c in ga.items():
            _, b2, cc = hlab
            if b2 == b and c != z:
                coeffs[cc] = c
        images[lab] = coeffs
    return LinMap.from_images(dom, w, g.degree, images)


def hom_tensor_iso(a: GradedVect, b: GradedVect, x: GradedVect) -> LinMap:
    """[A (x) B, X] -> [A, [B, X]], a label permutation."""
    dom = hom_space(tensor(a, b), x)
    cod = hom_space(a, hom_space(b, x))
    one = a.field.one()
    images = {}
    for _, _, lab in dom.basis():
        _, tlab, xl = lab
        _, la, lb = tlab
        images[lab] = {("h", la, ("h", lb, xl)): one}
    return LinMap.from_images(dom, cod, 0, images)


def hom_tensor_iso_inv(a: GradedVect, b: GradedVect, x: GradedVect) -> LinMap:
    dom = hom_space(a, hom_space(b, x))
    cod = hom_space(tensor(a, b), x)
    one = a.field.one()
    images = {}
    for _, _, lab in dom.basis():
        _, la, hlab = lab
        _, lb, xl = hlab
        images[lab] = {("h", ("t", la, lb), xl): one}
    return LinMap.from_images(dom, cod, 0, images)


def dual(v: GradedVect) -> GradedVect:
    dims = {}
    labels = {}
    for k in v.degrees():
        dims[-k] = v.dim(k)
        labels[-k] = tuple(("d", a) for a in v.labels[k])
    return GradedVect(v.field, dims, labels)


def dual_map(f: LinMap) -> LinMap:
    """Transpose of a degree-zero map."""
    assert f.degree == 0
    dom = dual(f.cod)
    cod = dual(f.dom)
    z = f.dom.field.zero()
    images = {}
    for _, _, dlab in dom.basis():
        _, b = dlab
        kb, ib = f.cod.position(b)
        coeffs = {}
        blk = f.block(kb)
        for ia, a in enumerate(f.dom.labels.get(kb, ())):
            c = blk[ib, ia] if blk.nrows else z
            if c != z:
                coeffs[("d", a)] = c
        images[dlab] = coeffs
    return LinMap.from_images(dom, cod, 0, images)


def double_dual_iso(v: GradedVect) -> LinMap:
    one = v.field.one()
    images = {
        a: {("d", ("d", a)): one} for _, _, a in v.basis()
    }
    return LinMap.from_images(v, dual(dual(v)), 0, images)


def pairing(v: GradedVect) -> LinMap:
    """V (x) V* -> k."""
    dom = tensor(v, dual(v))
    one = v.field.one()
    images = {}
    for _, _, lab in dom.basis():
        _, a, dl = lab
        if dl == ("d", a):
            images[lab] = {"1": one}
    return LinMap.from_images(dom, unit_space(v.field), 0, images)


# --- (co)equalisers of parallel pairs ------------------------------------


@dataclass(eq=False)
class SubPresentation:
    """A sub-object: its own space plus a full-column-rank inclusion."""

    ambient: GradedVect
    space: GradedVect
    include: LinMap


@dataclass(eq=False)
class QuotPresentation:
    """A quotient: projection plus a section selecting representatives."""

    ambient: GradedVect
    space: GradedVect
    project: LinMap
    section: LinMap


def equalizer_lin(f: LinMap, g: LinMap, prefix: str = "s") -> SubPresentation:
    """Degreewise kernel of f - g, with inclusion."""
    if f.dom != g.dom or f.cod != g.cod or f.degree != g.degree:
        raise MismatchedSignature("equalizer needs a parallel pair")
    h = sub_maps(f, g)
    dims = {}
    labels = {}
    blocks = {}
    for k in f.dom.degrees():
        basis = h.block(k).kernel_basis()
        if not basis:
            continue
        dims[k] = len(basis)
        labels[k] = tuple((prefix, k, i) for i in range(len(basis)))
        blocks[k] = Matrix(
            f.dom.field,
            tuple(
                tuple(vec[i] for vec in basis)
                for i in range(f.dom.dim(k))
            ),
        )
    space = GradedVect(f.dom.field, dims, labels)
    include = LinMap(space, f.dom, 0, blocks)
    return SubPresentation(f.dom, space, include)


def coequalizer_lin(f: LinMap, g: LinMap, prefix: str = "q") -> QuotPresentation:
    """Degreewise cokernel of f - g, with projection and section."""
    if f.dom != g.dom or f.cod != g.cod or f.degree != g.degree:
        raise MismatchedSignature("coequalizer needs a parallel pair")
    h = sub_maps(f, g)
    fld = f.dom.field
    dims = {}
    labels = {}
    proj_blocks = {}
    sect_blocks = {}
    d = f.degree
    for m in f.cod.degrees():
        cod_dim = f.cod.dim(m)
        k = m - d
        a = h.block(k) if f.dom.dim(k) > 0 else Matrix.zeros(fld, cod_dim, 0)
        chosen = a.column_space_complement()
        if not chosen:
            continue
        dims[m] = len(chosen)
        labels[m] = tuple((prefix, m, i) for i in range(len(chosen)))
        e_cols = Matrix(
            fld,
            tuple(
                tuple(
                    fld.one() if r == i else fld.zero() for i in chosen
                )
                for r in range(cod_dim)
            ),
        )
        sect_blocks[m] = e_cols
        # solve [A | E_S] X = I and keep the E_S part: the coefficients of
        # the chosen representatives are unique by the greedy construction
        aug = a.hstack(e_cols)
        sol = aug.solve_matrix(Matrix.identity(fld, cod_dim))
        assert sol is not None, "complement must span the cokernel"
        proj_blocks[m] = Matrix(
            fld,
            tuple(sol.rows[a.ncols + i] for i in range(len(chosen))),
        )
    space = GradedVect(fld, dims, labels)
    project = LinMap(f.cod, space, 0, proj_blocks)
    section = LinMap(space, f.cod, 0, sect_blocks)
    assert compose(project, section) == identity_map(space)
    return QuotPresentation(f.cod, space, project, section)


def factor_through_include(include: LinMap, f: LinMap) -> LinMap:
    """Solve include o g = f; raises when f does not land in the sub."""
    assert include.cod == f.cod and include.degree == 0
    blocks = {}
    for k in f.dom.degrees():
        target_deg = k + f.degree
        if include.dom.dim(target_deg) == 0:
            if not f.block(k).is_zero():
                raise ValueError(
                    f"map does not factor (degree {k} lands outside)"
                )
            continue
        sol = include.block(target_deg).solve_matrix(f.block(k))
        if sol is None:
            raise ValueError(f"map does not factor in degree {k}")
        blocks[k] = sol
    return LinMap(f.dom, include.dom, f.degree, blocks)


def lands_in_sub(include: LinMap, v: Vec) -> bool:
    for k, comp in v.comps.items():
        if all(c == v.space.field.zero() for c in comp):
            continue
        if include.dom.dim(k) == 0:
            return False
        if include.block(k).solve(comp) is None:
            return False
    return True


def factor_through_quotient(project: LinMap, section: LinMap,
                            f: LinMap) -> LinMap:
    """The map a quotient induces: f o section, checked well-defined."""
    induced = compose(f, section)
    assert compose(induced, project) == f, "map does not respect the quotient"
    return induced
