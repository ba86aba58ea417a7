"""Parsing and serialisation of the declaration format.

One self-describing JSON document format: a bundle carries a list of
declarations, each with an explicit "kind" tag, and (for manifests) a list
of jobs.  Exact scalars travel as strings ("3/4" over the rationals,
"2 mod 5" over a prime field; bare integers are accepted on input),
matrices are row-major arrays keyed by domain degree, graded spaces are
degree-to-dimension maps.  Serialisation is canonical: sorted keys,
two-space indents, one trailing newline, so re-serialising a parsed
canonical file is byte-identical.
"""

from __future__ import annotations

import json

from . import polycoalg
from .coalg import (
    Coalgebra,
    VComodule,
    VContramodule,
    check_coalgebra_morphism,
    cofree,
    free,
)
from .coalg.instances import group_like_coalgebra
from .errors import ParseError
from .exactlin import (
    GradedVect,
    LinMap,
    Matrix,
    field_from_name,
    tensor,
    unit_space,
)
from .finset import FinMap, FinSet
from .set_comodule import SetComodule
from .set_contramodule import ContraTable, product_contra


def label_str(label) -> str:
    """Canonical display form of a basis label."""
    if isinstance(label, str):
        return label
    tag = label[0]
    if tag == "t":
        return f"({label_str(label[1])}⊗{label_str(label[2])})"
    if tag == "h":
        return f"[{label_str(label[1])},{label_str(label[2])}]"
    if tag == "d":
        return f"{label_str(label[1])}*"
    return tag + ".".join(str(x) for x in label[1:])


def _scalar_in(field, raw):
    if isinstance(raw, int):
        return field.from_int(raw)
    return field.parse(raw)


def _scalar_out(field, value) -> str:
    return field.format(value)


def matrix_in(field, rows, width) -> Matrix:
    return Matrix(
        field,
        tuple(tuple(_scalar_in(field, x) for x in r) for r in rows),
        width,
    )


def matrix_out(m: Matrix):
    return [[_scalar_out(m.field, x) for x in r] for r in m.rows]


def blocks_in(field, dom: GradedVect, cod: GradedVect, degree: int,
              raw: dict) -> LinMap:
    blocks = {}
    for key, rows in raw.items():
        k = int(key)
        blocks[k] = matrix_in(field, rows, dom.dim(k))
    return LinMap(dom, cod, degree, blocks)


def blocks_out(f: LinMap) -> dict:
    return {
        str(k): matrix_out(f.block(k))
        for k in f.dom.degrees()
        if f.cod.dim(k + f.degree) > 0
    }


def graded_out(v: GradedVect) -> dict:
    return {
        "field": v.field.name,
        "dims": {str(k): v.dim(k) for k in v.degrees()},
        "labels": {
            str(k): [label_str(lab) for lab in v.labels[k]]
            for k in v.degrees()
        },
    }


class Environment:
    """Resolved declarations by name."""

    def __init__(self):
        self.objects: dict[str, object] = {}
        self.kinds: dict[str, str] = {}

    def add(self, name: str, kind: str, obj):
        if name in self.objects:
            raise ParseError(f"duplicate name {name!r}", where=name)
        self.objects[name] = obj
        self.kinds[name] = kind

    def get(self, name: str, where: str = ""):
        if name not in self.objects:
            raise ParseError(f"unresolved reference {name!r}",
                             where=where or name)
        return self.objects[name]


def _parse_declaration(decl: dict, env: Environment):
    kind = decl.get("kind")
    name = decl.get("name")
    if not kind or not name:
        raise ParseError("declaration needs 'kind' and 'name'",
                         where=str(decl)[:80])
    try:
        obj = _PARSERS[kind](decl, env)
    except KeyError as exc:
        if str(exc).strip("'") == kind:
            raise ParseError(f"unknown declaration kind {kind!r}",
                             where=name)
        raise ParseError(f"missing field {exc} in {name!r}", where=name)
    env.add(name, kind, obj)


def _p_finset(decl, env):
    return FinSet(decl["elements"])


def _p_finmap(decl, env):
    dom = env.get(decl["dom"])
    cod = env.get(decl["cod"])
    return FinMap(dom, cod, dict(decl["table"]))


def _p_set_comodule(decl, env):
    carrier = env.get(decl["carrier"])
    base = env.get(decl["base"])
    phi = FinMap(carrier, base, dict(decl["phi"]))
    return SetComodule(carrier, base, phi)


def _p_contra_product(decl, env):
    base = env.get(decl["base"])
    fibers = {a: FinSet(v) for a, v in decl["fibers"].items()}
    return product_contra(base, fibers)


def _p_contra_table(decl, env):
    from . import finset as fs

    carrier = env.get(decl["carrier"])
    base = env.get(decl["base"])
    ambient = fs.function_space(base, carrier)
    theta = FinMap(ambient, carrier, dict(decl["theta"]))
    return ContraTable(carrier, base, theta=theta)


def _p_graded_space(decl, env):
    field = field_from_name(decl["field"])
    dims = {int(k): d for k, d in decl["dims"].items()}
    labels = None
    if "labels" in decl:
        labels = {int(k): tuple(v) for k, v in decl["labels"].items()}
    return GradedVect(field, dims, labels,
                      prefix=decl.get("prefix", "e"))


def _p_linmap(decl, env):
    dom = env.get(decl["dom"])
    cod = env.get(decl["cod"])
    return blocks_in(dom.field, dom, cod, decl.get("degree", 0),
                     decl["blocks"])


def _p_coalgebra(decl, env):
    space = env.get(decl["space"])
    delta = blocks_in(space.field, space, tensor(space, space), 0,
                      decl["delta_blocks"])
    eps = blocks_in(space.field, space, unit_space(space.field), 0,
                    decl["eps_blocks"])
    # axiom checking is a job ("check"), not a parse-time gate: broken
    # structures must be declarable so seeded failures can be reported
    return Coalgebra(space, delta, eps)


def _p_group_like(decl, env):
    field = field_from_name(decl["field"])
    return group_like_coalgebra(field, decl["size"])


def _p_poly_coalgebra(decl, env):
    field = field_from_name(decl["field"])
    return polycoalg.build(decl["truncation"], decl.get("z_degree", 0),
                           field)


def _coalgebra_of(env, name):
    obj = env.get(name)
    if isinstance(obj, polycoalg.PolyCoalgebra):
        return obj.underlying
    return obj


def _p_vcomodule(decl, env):
    c = _coalgebra_of(env, decl["coalgebra"])
    space = env.get(decl["space"])
    rho = blocks_in(space.field, space, tensor(space, c.space), 0,
                    decl["rho_blocks"])
    return VComodule(c, space, rho, side=decl.get("side", "right"))


def _p_vcontramodule(decl, env):
    from .exactlin import hom_space

    c = _coalgebra_of(env, decl["coalgebra"])
    space = env.get(decl["space"])
    ambient = hom_space(c.space, space)
    theta = blocks_in(space.field, ambient, space, 0, decl["theta_blocks"])
    return VContramodule(c, space, theta)


def _p_cofree(decl, env):
    c = _coalgebra_of(env, decl["coalgebra"])
    return cofree(env.get(decl["on"]), c)


def _p_free(decl, env):
    c = _coalgebra_of(env, decl["coalgebra"])
    return free(env.get(decl["on"]), c)


def _p_coalgebra_morphism(decl, env):
    c = _coalgebra_of(env, decl["dom"])
    chat = _coalgebra_of(env, decl["cod"])
    f = blocks_in(c.space.field, c.space, chat.space, 0, decl["blocks"])
    check_coalgebra_morphism(f, c, chat)
    return f


_PARSERS = {
    "finset": _p_finset,
    "finmap": _p_finmap,
    "set_comodule": _p_set_comodule,
    "contra_product": _p_contra_product,
    "contra_table": _p_contra_table,
    "graded_space": _p_graded_space,
    "linmap": _p_linmap,
    "coalgebra": _p_coalgebra,
    "group_like_coalgebra": _p_group_like,
    "poly_coalgebra": _p_poly_coalgebra,
    "vcomodule": _p_vcomodule,
    "vcontramodule": _p_vcontramodule,
    "cofree_comodule": _p_cofree,
    "free_contramodule": _p_free,
    "coalgebra_morphism": _p_coalgebra_morphism,
}


def parse_bundle(doc: dict) -> Environment:
    env = Environment()
    for decl in doc.get("declarations", []):
        _parse_declaration(decl, env)
    return env


def load_document(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", where=path)
    except OSError as exc:
        raise ParseError(str(exc), where=path)


def canonical_bytes(doc) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2,
                       ensure_ascii=False) + "\n").encode()


# --- result serialisers -------------------------------------------------------


def serialize_result(obj):
    """Turn computed objects into plain JSON data for reports."""
    if isinstance(obj, FinSet):
        return {"kind": "finset", "elements": list(obj.elements)}
    if isinstance(obj, FinMap):
        return {
            "kind": "finmap",
            "dom": list(obj.dom.elements),
            "cod": list(obj.cod.elements),
            "table": dict(sorted(obj.table.items())),
        }
    if isinstance(obj, SetComodule):
        return {
            "kind": "set_comodule",
            "carrier": list(obj.carrier.elements),
            "base": list(obj.base.elements),
            "phi": dict(sorted(obj.phi.table.items())),
        }
    if isinstance(obj, ContraTable):
        if obj.fibers is not None:
            return {
                "kind": "contra_product",
                "base": list(obj.base.elements),
                "fibers": {
                    a: list(v.elements) for a, v in sorted(obj.fibers.items())
                },
            }
        return {
            "kind": "contra_table",
            "carrier": list(obj.carrier.elements),
            "base": list(obj.base.elements),
            "theta": dict(sorted(obj.theta.table.items())),
        }
    if isinstance(obj, GradedVect):
        return {"kind": "graded_space", **graded_out(obj)}
    if isinstance(obj, LinMap):
        return {
            "kind": "linmap",
            "degree": obj.degree,
            "dom_dims": {str(k): obj.dom.dim(k) for k in obj.dom.degrees()},
            "cod_dims": {str(k): obj.cod.dim(k) for k in obj.cod.degrees()},
            "blocks": blocks_out(obj),
        }
    if isinstance(obj, VComodule):
        return {
            "kind": "vcomodule",
            "space": graded_out(obj.space),
            "rho_blocks": blocks_out(obj.rho),
            "side": obj.side,
        }
    if isinstance(obj, VContramodule):
        return {
            "kind": "vcontramodule",
            "space": graded_out(obj.space),
            "theta_blocks": blocks_out(obj.theta),
        }
    if isinstance(obj, dict):
        return {k: serialize_result(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [serialize_result(v) for v in obj]
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return repr(obj)
