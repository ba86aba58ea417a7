"""The two functors between comodules and contramodules, their unit and
counit, the adjunction certificate, and the cofree/free comparison.

The contramodule of a comodule is the hom object out of the coalgebra
itself; the comodule of a contramodule is a quotient of its free cover.
Everything returns honest matrices and is validated on construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exactlin import (
    LinMap,
    QuotPresentation,
    compose,
    curry,
    ev_map,
    factor_through_include,
    hom_map,
    hom_space,
    hom_tensor_iso,
    hom_tensor_iso_inv,
    identity_map,
    coequalizer_lin,
    sub_maps,
    tensor,
    tensor_map,
    assoc_inv,
)
from .core import (
    Coalgebra,
    VComodule,
    VContramodule,
    coalgebra_as_comodule,
    is_comodule_map,
    is_contramodule_map,
    require_same_coalgebra,
    validate_comodule,
    validate_contramodule,
)
from .homobjects import (
    HomObject,
    comodule_hom_object,
    contra_hom_object,
    tensor_id_on_hom,
)


@dataclass(eq=False)
class RData:
    contramodule: VContramodule
    hom: HomObject  # sections inside [C, M]


@dataclass(eq=False)
class LData:
    comodule: VComodule
    quot: QuotPresentation  # quotient of M (x) C


def functor_R_data(m: VComodule) -> RData:
    """The sections contramodule: comodule maps from the coalgebra into m,
    with the structure map factored through the equaliser."""
    c = m.coalgebra
    hobj = comodule_hom_object(coalgebra_as_comodule(c), m)
    g = compose(
        hom_map(c.delta, identity_map(m.space)),
        compose(
            hom_tensor_iso_inv(c.space, c.space, m.space),
            hom_map(identity_map(c.space), hobj.include),
        ),
    )
    theta = factor_through_include(hobj.include, g)
    p = VContramodule(c, hobj.space, theta)
    rep = validate_contramodule(p)
    assert rep["ok"], rep
    return RData(p, hobj)


def functor_R(m: VComodule) -> VContramodule:
    return functor_R_data(m).contramodule


def R_mor(v: LinMap, rm: RData, rn: RData) -> LinMap:
    """Push a comodule map through the sections construction."""
    lifted = compose(
        hom_map(identity_map(rm.contramodule.coalgebra.space), v),
        rm.hom.include,
    )
    return factor_through_include(rn.hom.include, lifted)


def l_pair(p: VContramodule):
    """The parallel pair on [C,P] (x) C whose coequaliser carries L."""
    c = p.coalgebra
    fp = hom_space(c.space, p.space)
    delta_map = tensor_map(p.theta, identity_map(c.space))
    beta_map = compose(
        tensor_map(ev_map(c.space, p.space), identity_map(c.space)),
        compose(
            assoc_inv(fp, c.space, c.space),
            tensor_map(identity_map(fp), c.delta),
        ),
    )
    return delta_map, beta_map


def functor_L_data(p: VContramodule) -> LData:
    """The quotient comodule of a contramodule, with its coaction induced
    from the comultiplication on the free cover."""
    c = p.coalgebra
    delta_map, beta_map = l_pair(p)
    quot = coequalizer_lin(delta_map, beta_map, prefix="l")
    x = p.space
    w = compose(
        tensor_map(quot.project, identity_map(c.space)),
        compose(
            assoc_inv(x, c.space, c.space),
            tensor_map(identity_map(x), c.delta),
        ),
    )
    # the candidate coaction must respect the identification
    assert sub_maps(
        compose(w, delta_map), compose(w, beta_map)
    ).is_zero(), "coaction does not descend to the quotient"
    rho = compose(w, quot.section)
    m = VComodule(c, quot.space, rho)
    rep = validate_comodule(m)
    assert rep["ok"], rep
    return LData(m, quot)


def functor_L(p: VContramodule) -> VComodule:
    return functor_L_data(p).comodule


def unit_map(p: VContramodule, ldata: LData | None = None,
             rdata: RData | None = None) -> LinMap:
    """P -> sections of the quotient comodule."""
    ldata = ldata or functor_L_data(p)
    rdata = rdata or functor_R_data(ldata.comodule)
    c = p.coalgebra
    curried = curry(
        ldata.quot.project, p.space, c.space, ldata.comodule.space
    )
    return factor_through_include(rdata.hom.include, curried)


def counit_map(m: VComodule, rdata: RData | None = None,
               ldata: LData | None = None) -> LinMap:
    """Quotient of the sections back onto m, by evaluation."""
    rdata = rdata or functor_R_data(m)
    ldata = ldata or functor_L_data(rdata.contramodule)
    c = m.coalgebra
    evaluate = compose(
        ev_map(c.space, m.space),
        tensor_map(rdata.hom.include, identity_map(c.space)),
    )
    delta_map, beta_map = l_pair(rdata.contramodule)
    assert sub_maps(
        compose(evaluate, delta_map), compose(evaluate, beta_map)
    ).is_zero(), "evaluation does not descend to the quotient"
    return compose(evaluate, ldata.quot.section)


def triangle_identities(p: VContramodule, m: VComodule) -> dict:
    """Both triangle identities at the given objects, exactly."""
    require_same_coalgebra(p, m)
    # contramodule side: R(counit) after unit at the sections of m
    rdata = functor_R_data(m)
    ldata_rm = functor_L_data(rdata.contramodule)
    eps = counit_map(m, rdata, ldata_rm)
    eta_rm = unit_map(rdata.contramodule, ldata_rm)
    r_lrm = functor_R_data(ldata_rm.comodule)
    r_eps = R_mor(eps, r_lrm, rdata)
    tri_r = sub_maps(
        compose(r_eps, eta_rm), identity_map(rdata.contramodule.space)
    ).is_zero()
    # comodule side: counit at L(p) after L(unit)
    ldata = functor_L_data(p)
    rdata_lp = functor_R_data(ldata.comodule)
    eta = unit_map(p, ldata, rdata_lp)
    ldata_rlp = functor_L_data(rdata_lp.contramodule)
    l_eta = _l_mor(eta, p, rdata_lp.contramodule, ldata, ldata_rlp)
    eps_lp = counit_map(ldata.comodule, rdata_lp, ldata_rlp)
    tri_l = sub_maps(
        compose(eps_lp, l_eta), identity_map(ldata.comodule.space)
    ).is_zero()
    return {"ok": tri_r and tri_l, "sections_side": tri_r,
            "quotient_side": tri_l}


def _l_mor(u: LinMap, p: VContramodule, q: VContramodule,
           lp: LData, lq: LData) -> LinMap:
    c = p.coalgebra
    w = compose(lq.quot.project, tensor_map(u, identity_map(c.space)))
    delta_map, beta_map = l_pair(p)
    assert sub_maps(
        compose(w, delta_map), compose(w, beta_map)
    ).is_zero(), "map does not respect the quotient identification"
    return compose(w, lp.quot.section)


def l_morphism(u: LinMap, p: VContramodule, q: VContramodule) -> LinMap:
    return _l_mor(u, p, q, functor_L_data(p), functor_L_data(q))


def unit_counit_iso_report(p: VContramodule, m: VComodule) -> dict:
    """Are the unit and counit isomorphisms at these finite instances?"""
    require_same_coalgebra(p, m)
    eta = unit_map(p)
    eps = counit_map(m)
    return {
        "unit_iso": eta.is_iso(),
        "counit_iso": eps.is_iso(),
        "unit_is_contramodule_map": is_contramodule_map(
            eta, p, functor_R(functor_L(p))
        ),
        "counit_is_comodule_map": is_comodule_map(
            eps, functor_L(functor_R_data(m).contramodule), m
        ),
    }


def adjunction_certificate(
    p: VContramodule, m: VComodule, squares=None
) -> dict:
    """Certify the adjunction by the two-embeddings route.

    Comodule maps out of the quotient embed into [P, FM] by precomposing
    with the projection and transposing; contramodule maps into the
    sections embed by postcomposing with the inclusion.  The certificate
    checks the two images coincide (dimension and mutual containment) and,
    when morphism squares are supplied, that the identification is natural
    in both arguments.
    """
    require_same_coalgebra(p, m)
    c = p.coalgebra
    ldata = functor_L_data(p)
    rdata = functor_R_data(m)
    fm = hom_space(c.space, m.space)

    homT = comodule_hom_object(ldata.comodule, m)
    to_pfm_T = compose(
        hom_tensor_iso(p.space, c.space, m.space),
        hom_map(ldata.quot.project, identity_map(m.space)),
    )
    a_incl = compose(to_pfm_T, homT.include)

    homF = contra_hom_object(p, rdata.contramodule)
    b_incl = compose(
        hom_map(identity_map(p.space), rdata.hom.include), homF.include
    )

    report = {
        "dim_comodule_side": homT.space.total_dim,
        "dim_contramodule_side": homF.space.total_dim,
        "failures": [],
    }
    if homT.space.total_dim != a_incl.rank():
        report["failures"].append("comodule-side embedding not injective")
    if homF.space.total_dim != b_incl.rank():
        report["failures"].append("contramodule-side embedding not injective")
    if homT.space.total_dim != homF.space.total_dim:
        report["failures"].append("dimension mismatch")
    try:
        factor_through_include(a_incl, b_incl)
    except ValueError:
        report["failures"].append(
            "contramodule side not contained in comodule side"
        )
    try:
        factor_through_include(b_incl, a_incl)
    except ValueError:
        report["failures"].append(
            "comodule side not contained in contramodule side"
        )
    report["naturality_squares"] = 0
    for u, p2, v, m2 in squares or []:
        # u : P2 -> P a contramodule map, v : M -> M2 a comodule map
        ldata2 = functor_L_data(p2)
        rdata2 = functor_R_data(m2)
        homT2 = comodule_hom_object(ldata2.comodule, m2)
        homF2 = contra_hom_object(p2, rdata2.contramodule)
        to_pfm_T2 = compose(
            hom_tensor_iso(p2.space, c.space, m2.space),
            hom_map(ldata2.quot.project, identity_map(m2.space)),
        )
        a_incl2 = compose(to_pfm_T2, homT2.include)
        b_incl2 = compose(
            hom_map(identity_map(p2.space), rdata2.hom.include),
            homF2.include,
        )
        fv = hom_map(identity_map(c.space), v)
        transport = hom_map(u, fv)  # [P,FM] -> [P2,FM2]
        lu = _l_mor(u, p2, p, ldata2, ldata)
        chi_t = factor_through_include(
            homT2.include,
            compose(hom_map(lu, v), homT.include),
        )
        if not sub_maps(
            compose(transport, a_incl), compose(a_incl2, chi_t)
        ).is_zero():
            report["failures"].append("comodule-side square broke")
        rv = R_mor(v, rdata, rdata2)
        chi_f = factor_through_include(
            homF2.include,
            compose(hom_map(u, rv), homF.include),
        )
        if not sub_maps(
            compose(transport, b_incl), compose(b_incl2, chi_f)
        ).is_zero():
            report["failures"].append("contramodule-side square broke")
        report["naturality_squares"] += 2
    report["ok"] = not report["failures"]
    return report


def kleisli_certificate(x, c: Coalgebra) -> dict:
    """The free contramodule on x maps isomorphically onto the sections of
    the cofree comodule on x, compatibly with the structure maps."""
    from .core import cofree, free

    tx = cofree(x, c)
    fx = free(x, c)
    rdata = functor_R_data(tx)
    # h goes to (h (x) id) o delta
    push = compose(
        hom_map(c.delta, identity_map(tx.space)),
        tensor_id_on_hom(c.space, x, c.space),
    )
    kappa = factor_through_include(rdata.hom.include, push)
    ok_iso = kappa.is_iso()
    lhs = compose(kappa, fx.theta)
    rhs = compose(
        rdata.contramodule.theta,
        hom_map(identity_map(c.space), kappa),
    )
    ok_map = sub_maps(lhs, rhs).is_zero()
    expected = c.space.total_dim * x.total_dim
    return {
        "ok": ok_iso and ok_map
        and rdata.contramodule.space.total_dim == expected,
        "iso": ok_iso,
        "contramodule_map": ok_map,
        "dim_sections_of_cofree": rdata.contramodule.space.total_dim,
        "dim_expected": expected,
    }
