"""The sections / quotient correspondence between set comodules and
contramodules.

The sections functor carries a set over C to its set of sections (a product
contramodule, empty exactly when some fiber is empty).  The quotient functor
goes the other way as a coequaliser of evaluation against the structure map.
At desk scale both are computed on the nose and the unit/counit, triangle
identities, and the explicit description of the round trip are certified by
exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from . import finset, set_comodule, set_contramodule
from .errors import BudgetExceeded
from .finset import FinMap, FinSet, QuotPresentation
from .set_comodule import SetComodule, fibers, is_degenerate
from .set_contramodule import (
    ContraTable,
    _choice_dicts,
    _decode_choice_label,
    _encode_choice,
    all_product_shapes,
    empty_contramodule,
    product_contra,
    to_extensional,
)


@dataclass(eq=True)
class SectionSet:
    """The sections of a set over C, with the induced contramodule."""

    of: SetComodule
    sections: FinSet
    theta: ContraTable


def section_maps(m: SetComodule) -> list[FinMap]:
    """All sections of the structure map, as maps base -> carrier."""
    fam = fibers(m)
    if any(len(v) == 0 for v in fam.values()):
        return []
    out = []
    for ch in _choice_dicts(m.base, fam):
        out.append(FinMap(m.base, m.carrier, ch))
    return out


def R_set(m: SetComodule) -> ContraTable:
    """The sections contramodule; empty exactly when m is degenerate."""
    fam = fibers(m)
    if any(len(v) == 0 for v in fam.values()):
        return empty_contramodule(m.base)
    return product_contra(m.base, fam)


def section_set(m: SetComodule) -> SectionSet:
    t = R_set(m)
    fam = fibers(m)
    for label in t.carrier:
        beta = FinMap(
            m.base, m.carrier, _decode_choice_label(m.base, fam, label)
        )
        assert all(m.phi(beta(a)) == a for a in m.base)
    return SectionSet(m, t.carrier, t)


def R_mor(v: FinMap, m: SetComodule, n: SetComodule) -> FinMap:
    """Push sections forward along a comodule map."""
    rm, rn = R_set(m), R_set(n)
    fam_m = fibers(m)
    table = {}
    for label in rm.carrier:
        ch = _decode_choice_label(m.base, fam_m, label)
        table[label] = _encode_choice(m.base, {a: v(ch[a]) for a in m.base})
    return FinMap(rm.carrier, rn.carrier, table)


def l_set_with_projection(t: ContraTable, budget: int = 1_000_000):
    """The quotient comodule together with the projection from carrier x base.

    Product-form input takes the closed-form route (the disjoint union of
    the fibers); extensional input goes through the generic coequaliser.
    """
    c = t.base
    if t.fibers is not None:
        labels = []
        proj_table = {}
        for a in c:
            for v in t.fibers[a]:
                labels.append(finset.pair_label(v, a))
        carrier = FinSet(labels)
        ambient, _, _ = finset.product(t.carrier, c)
        for y in t.carrier:
            ch = _decode_choice_label(c, t.fibers, y)
            for a in c:
                proj_table[finset.pair_label(y, a)] = finset.pair_label(
                    ch[a], a
                )
        project = FinMap(ambient, carrier, proj_table)
        phi = FinMap(
            carrier,
            c,
            {
                finset.pair_label(v, a): a
                for a in c
                for v in t.fibers[a]
            },
        )
        return SetComodule(carrier, c, phi), project
    size = (len(t.carrier) ** len(c)) * len(c)
    if size > budget:
        raise BudgetExceeded(
            f"coequaliser ambient has {size} elements (budget {budget})",
            projected=size,
        )
    hom_cy = finset.function_space(c, t.carrier)
    dom, _, _ = finset.product(hom_cy, c)
    cod, _, _ = finset.product(t.carrier, c)
    eta_table = {}
    nu_table = {}
    for label in hom_cy:
        beta = finset.decode_map(label, c, t.carrier)
        tv = t.theta_value(beta)
        for a in c:
            key = finset.pair_label(label, a)
            eta_table[key] = finset.pair_label(beta(a), a)
            nu_table[key] = finset.pair_label(tv, a)
    eta = FinMap(dom, cod, eta_table)
    nu = FinMap(dom, cod, nu_table)
    q = finset.coequalizer(eta, nu)
    carrier = q.project.cod
    _, _, proj2 = finset.product(t.carrier, c)
    phi_table = {}
    for k in carrier:
        members = q.classes[k]
        bases = {proj2(y) for y in members}
        assert len(bases) == 1, "quotient classes must respect the base"
        phi_table[k] = bases.pop()
    phi = FinMap(carrier, c, phi_table)
    return SetComodule(carrier, c, phi), q.project


def L_set(t: ContraTable, budget: int = 1_000_000) -> SetComodule:
    m, _ = l_set_with_projection(t, budget)
    return m


def L_mor(u: FinMap, s: ContraTable, t: ContraTable) -> FinMap:
    """The induced map on quotient comodules: [(y,a)] -> [(u(y),a)]."""
    ls, proj_s = l_set_with_projection(s)
    lt, proj_t = l_set_with_projection(t)
    table = {}
    for y in s.carrier:
        for a in s.base:
            src = proj_s(finset.pair_label(y, a))
            dst = proj_t(finset.pair_label(u(y), a))
            if src in table:
                assert table[src] == dst, "map does not respect classes"
            table[src] = dst
    return FinMap(ls.carrier, lt.carrier, table)


def lr_explicit(m: SetComodule) -> QuotPresentation:
    """The round trip as an explicit quotient of sections x base.

    Two pairs are identified exactly when they share the base point and
    their sections agree there.
    """
    r = R_set(m)
    ambient, proj1, proj2 = finset.product(r.carrier, m.base)
    fam = fibers(m)
    pairs = []
    labels = list(ambient.elements)
    for i, lab1 in enumerate(labels):
        b1, a1 = proj1(lab1), proj2(lab1)
        v1 = _decode_choice_label(m.base, fam, b1)[a1] if len(r.carrier) else None
        for lab2 in labels[i + 1 :]:
            b2, a2 = proj1(lab2), proj2(lab2)
            if a1 != a2:
                continue
            v2 = _decode_choice_label(m.base, fam, b2)[a2]
            if v1 == v2:
                pairs.append((lab1, lab2))
    return finset.quotient_by_pairs(ambient, pairs)


def lr_routes_agree(m: SetComodule) -> bool:
    """The explicit relation and the generic coequaliser produce the same
    partition of sections x base."""
    explicit = lr_explicit(m)
    r = to_extensional(R_set(m))
    _, project = l_set_with_projection(r)
    generic: dict[str, set] = {}
    for y in explicit.ambient:
        generic.setdefault(project(y), set()).add(y)
    explicit_classes = {frozenset(v) for v in explicit.classes.values()}
    generic_classes = {frozenset(v) for v in generic.values()}
    return explicit_classes == generic_classes


def counit(m: SetComodule) -> FinMap:
    """Evaluation on the explicit round-trip quotient: [(beta,a)] -> beta(a)."""
    q = lr_explicit(m)
    r = R_set(m)
    _, proj1, proj2 = finset.product(r.carrier, m.base)
    fam = fibers(m)
    table = {}
    for k, members in q.classes.items():
        values = set()
        for lab in members:
            beta_label, a = proj1(lab), proj2(lab)
            values.add(_decode_choice_label(m.base, fam, beta_label)[a])
        assert len(values) == 1, "counit must be constant on classes"
        table[k] = values.pop()
    return FinMap(q.project.cod, m.carrier, table)


def counit_is_comodule_map(m: SetComodule) -> bool:
    q = lr_explicit(m)
    r = R_set(m)
    _, _, proj2 = finset.product(r.carrier, m.base)
    eps = counit(m)
    for k, members in q.classes.items():
        for lab in members:
            if m.phi(eps(k)) != proj2(lab):
                return False
    return True


def unit(t: ContraTable, budget: int = 1_000_000) -> FinMap:
    """The carrier map into the sections of the quotient comodule."""
    l, project = l_set_with_projection(t, budget)
    rl = R_set(l)
    table = {}
    for y in t.carrier:
        choice = {
            a: project(finset.pair_label(y, a)) for a in t.base
        }
        table[y] = _encode_choice(t.base, choice)
    return FinMap(t.carrier, rl.carrier, table)


def unit_is_contramodule_map(t: ContraTable) -> bool:
    l, _ = l_set_with_projection(t)
    rl = R_set(l)
    eta = unit(t)
    return set_contramodule.is_contramodule_map(eta, t, rl)


# --- batch certificate --------------------------------------------------------


def all_comodules(carrier_size: int, base_size: int):
    """Every set comodule on canonical labels of the given sizes."""
    carrier = FinSet([f"x{i}" for i in range(1, carrier_size + 1)])
    base = FinSet([f"c{i}" for i in range(1, base_size + 1)])
    for phi in finset._all_maps(carrier, base):
        yield SetComodule(carrier, base, phi)


def triangle_identities_hold(m: SetComodule) -> bool:
    """Sections-side triangle: pushing sections through the counit after the
    unit of the sections contramodule is the identity."""
    p = R_set(m)
    if p.is_empty():
        return True
    pe = to_extensional(p)
    l, project = l_set_with_projection(pe)
    eta = unit(pe)
    eps = counit(m)
    q = lr_explicit(m)
    assert l.carrier == q.project.cod, "quotient carriers must coincide"
    rl = R_set(l)
    fam_l = fibers(l)
    for y in p.carrier:
        section_label = eta(y)
        ch = _decode_choice_label(l.base, fam_l, section_label)
        pushed = _encode_choice(l.base, {a: eps(ch[a]) for a in l.base})
        if pushed != y:
            return False
    return True


def triangle_identities_hold_l(t: ContraTable) -> bool:
    """Quotient-side triangle: mapping the quotient through the unit and then
    evaluating is the identity."""
    te = to_extensional(t)
    lt, project_t = l_set_with_projection(te)
    if len(lt.carrier) == 0:
        return True
    rlt = to_extensional(R_set(lt))
    eta = unit(te)
    l_eta = L_mor(eta, te, rlt)
    eps = counit(lt)
    q = lr_explicit(lt)
    assert q.project.cod == L_set(rlt).carrier
    for z in lt.carrier:
        if eps(l_eta(z)) != z:
            return False
    return True


def equivalence_certificate(
    max_carrier: int = 4,
    max_base: int = 2,
    max_fiber: int = 3,
    naturality_carrier: int = 3,
) -> dict:
    """Exhaustively certify the correspondence on bounded instances.

    For every non-degenerate comodule: the counit is a bijective comodule
    map, the explicit quotient agrees with the generic coequaliser, and the
    sections-side triangle holds.  For every product contramodule: the unit
    is a bijective contramodule map and the quotient-side triangle holds.
    Naturality of both is checked on all structure maps between instances
    with carriers up to ``naturality_carrier``.  Degenerate comodules are
    reported and excluded, never errors.
    """
    report = {
        "comodules": 0,
        "nondegenerate": 0,
        "degenerate": 0,
        "contramodules": 0,
        "failures": [],
        "naturality_squares": 0,
    }
    for base_size in range(1, max_base + 1):
        for carrier_size in range(0, max_carrier + 1):
            for m in all_comodules(carrier_size, base_size):
                report["comodules"] += 1
                if is_degenerate(m):
                    report["degenerate"] += 1
                    if not R_set(m).is_empty():
                        report["failures"].append(
                            {"kind": "degenerate-with-sections",
                             "phi": m.phi.table}
                        )
                    continue
                report["nondegenerate"] += 1
                eps = counit(m)
                if not eps.is_bijective():
                    report["failures"].append(
                        {"kind": "counit-not-bijective", "phi": m.phi.table}
                    )
                if not counit_is_comodule_map(m):
                    report["failures"].append(
                        {"kind": "counit-not-comodule-map",
                         "phi": m.phi.table}
                    )
                if not lr_routes_agree(m):
                    report["failures"].append(
                        {"kind": "lr-routes-disagree", "phi": m.phi.table}
                    )
                if not triangle_identities_hold(m):
                    report["failures"].append(
                        {"kind": "triangle-R", "phi": m.phi.table}
                    )
        base = FinSet([f"c{i}" for i in range(1, base_size + 1)])
        for t in all_product_shapes(base, max_fiber):
            report["contramodules"] += 1
            eta = unit(t)
            if not eta.is_bijective():
                report["failures"].append(
                    {"kind": "unit-not-bijective",
                     "shape": {a: len(v) for a, v in t.fibers.items()}}
                )
            if not unit_is_contramodule_map(t):
                report["failures"].append(
                    {"kind": "unit-not-contramodule-map",
                     "shape": {a: len(v) for a, v in t.fibers.items()}}
                )
            if not triangle_identities_hold_l(t):
                report["failures"].append(
                    {"kind": "triangle-L",
                     "shape": {a: len(v) for a, v in t.fibers.items()}}
                )
        report["naturality_squares"] += _counit_naturality(
            base_size, naturality_carrier, report
        )
    report["ok"] = not report["failures"]
    return report


def _counit_naturality(base_size: int, max_carrier: int, report) -> int:
    """counit o L(R(f)) == f o counit for every comodule map f."""
    squares = 0
    base = FinSet([f"c{i}" for i in range(1, base_size + 1)])
    instances = []
    for carrier_size in range(0, max_carrier + 1):
        instances.extend(all_comodules(carrier_size, base_size))
    instances = [m for m in instances if not is_degenerate(m)]
    for m in instances:
        for n in instances:
            hom = set_comodule.hom_over(m, n)
            for label in hom.members:
                f = finset.decode_map(label, m.carrier, n.carrier)
                rm, rn = to_extensional(R_set(m)), to_extensional(R_set(n))
                rf = R_mor(f, m, n)
                lrf = L_mor(rf, rm, rn)
                eps_m, eps_n = counit(m), counit(n)
                lm, _ = l_set_with_projection(rm)
                for k in lm.carrier:
                    if eps_n(lrf(k)) != f(eps_m(k)):
                        report["failures"].append(
                            {"kind": "counit-not-natural",
                             "f": f.table,
                             "phi_m": m.phi.table,
                             "phi_n": n.phi.table}
                        )
                        break
                squares += 1
    return squares
