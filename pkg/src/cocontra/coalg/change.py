"""Cotensor and cohom bifunctors, restriction along a coalgebra morphism,
the induced/co-induced structures, and the empirical cotensor-cohom
comparison probe.
"""

from __future__ import annotations

from ..exactlin import (
    LinMap,
    QuotPresentation,
    SubPresentation,
    assoc_inv,
    coequalizer_lin,
    compose,
    equalizer_lin,
    factor_through_include,
    hom_map,
    hom_space,
    hom_tensor_iso_inv,
    identity_map,
    sub_maps,
    tensor,
    tensor_map,
    unit_right,
)
from .core import (
    Coalgebra,
    VComodule,
    VContramodule,
    check_coalgebra_morphism,
    left_coaction,
    left_comodule_from_coaction,
    require_same_coalgebra,
    validate_comodule,
    validate_contramodule,
)


def cotensor(m: VComodule, n: VComodule) -> SubPresentation:
    """The equaliser of the two coactions inside m (x) n; n must be a left
    comodule."""
    require_same_coalgebra(m, n)
    assert m.side == "right" and n.side == "left"
    c = m.coalgebra.space
    first = tensor_map(m.rho, identity_map(n.space))
    second = compose(
        assoc_inv(m.space, c, n.space),
        tensor_map(identity_map(m.space), left_coaction(n)),
    )
    return equalizer_lin(first, second, prefix="ct")


def counit_contraction_iso(m: VComodule) -> LinMap:
    """The canonical identification of m cotensor the coalgebra with m."""
    c = m.coalgebra
    sub = cotensor(m, coalgebra_as_left_comodule_cached(c))
    collapse = compose(
        unit_right(m.space),
        tensor_map(identity_map(m.space), c.eps),
    )
    iso = compose(collapse, sub.include)
    assert iso.is_iso(), "counit contraction must be invertible"
    # the coaction itself provides the inverse leg
    back = factor_through_include(sub.include, m.rho)
    assert sub_maps(
        compose(iso, back), identity_map(m.space)
    ).is_zero()
    return iso


_left_cache: dict[int, VComodule] = {}


def coalgebra_as_left_comodule_cached(c: Coalgebra) -> VComodule:
    key = id(c)
    if key not in _left_cache:
        _left_cache[key] = left_comodule_from_coaction(
            c, c.space, c.delta
        )
    return _left_cache[key]


def cohom(m: VComodule, p: VContramodule) -> QuotPresentation:
    """The coequaliser pairing the coaction against the structure map on
    maps out of m."""
    require_same_coalgebra(m, p)
    c = m.coalgebra.space
    first = compose(
        hom_map(m.rho, identity_map(p.space)),
        hom_tensor_iso_inv(m.space, c, p.space),
    )
    second = hom_map(identity_map(m.space), p.theta)
    return coequalizer_lin(first, second, prefix="ch")


def restrict_comodule(f: LinMap, c: Coalgebra, chat: Coalgebra,
                      m: VComodule) -> VComodule:
    """Push the coaction forward along a coalgebra morphism."""
    check_coalgebra_morphism(f, c, chat)
    assert m.coalgebra == c
    rho = compose(tensor_map(identity_map(m.space), f), m.rho)
    out = VComodule(chat, m.space, rho, side=m.side)
    rep = validate_comodule(out)
    assert rep["ok"], rep
    return out


def restrict_contramodule(f: LinMap, c: Coalgebra, chat: Coalgebra,
                          p: VContramodule) -> VContramodule:
    """Precompose the structure map with the morphism."""
    check_coalgebra_morphism(f, c, chat)
    assert p.coalgebra == c
    theta = compose(p.theta, hom_map(f, identity_map(p.space)))
    out = VContramodule(chat, p.space, theta)
    rep = validate_contramodule(out)
    assert rep["ok"], rep
    return out


def induce_comodule(f: LinMap, c: Coalgebra, chat: Coalgebra,
                    m: VComodule) -> VComodule:
    """Cotensor against the coalgebra seen as a left comodule over the
    target; right adjoint to restriction."""
    check_coalgebra_morphism(f, c, chat)
    assert m.coalgebra == chat
    lam = compose(tensor_map(f, identity_map(c.space)), c.delta)
    c_left = left_comodule_from_coaction(chat, c.space, lam)
    sub = cotensor(m, c_left)
    w = compose(
        compose(
            assoc_inv(m.space, c.space, c.space),
            tensor_map(identity_map(m.space), c.delta),
        ),
        sub.include,
    )
    rho = factor_through_include(
        tensor_map(sub.include, identity_map(c.space)), w
    )
    out = VComodule(c, sub.space, rho)
    rep = validate_comodule(out)
    assert rep["ok"], rep
    return out


def coinduce_contramodule(f: LinMap, c: Coalgebra, chat: Coalgebra,
                          p: VContramodule) -> VContramodule:
    """Cohom out of the coalgebra seen as a comodule over the target; left
    adjoint to restriction."""
    check_coalgebra_morphism(f, c, chat)
    assert p.coalgebra == chat
    rho = compose(tensor_map(identity_map(c.space), f), c.delta)
    c_right = VComodule(chat, c.space, rho)
    quot = cohom(c_right, p)
    route = compose(
        quot.project,
        compose(
            hom_map(c.delta, identity_map(p.space)),
            hom_tensor_iso_inv(c.space, c.space, p.space),
        ),
    )
    lifted = compose(
        route, hom_map(identity_map(c.space), quot.section)
    )
    # independence of the section: composing back with the projection must
    # recover the route on the nose
    assert sub_maps(
        compose(lifted, hom_map(identity_map(c.space), quot.project)),
        route,
    ).is_zero(), "structure map does not descend"
    out = VContramodule(c, quot.space, lifted)
    rep = validate_contramodule(out)
    assert rep["ok"], rep
    return out


def restrict_along(f: LinMap, c: Coalgebra, chat: Coalgebra, obj):
    """Dispatching restriction for comodules and contramodules."""
    if isinstance(obj, VComodule):
        return restrict_comodule(f, c, chat, obj)
    if isinstance(obj, VContramodule):
        return restrict_contramodule(f, c, chat, obj)
    raise TypeError(f"cannot restrict {type(obj).__name__}")


def change_adjunction_certificate(f: LinMap, c: Coalgebra, chat: Coalgebra,
                                  n: VComodule, m: VComodule,
                                  p: VContramodule,
                                  q: VContramodule) -> dict:
    """Graded dimensions of the four adjunction hom objects.

    n is a comodule over the source, m over the target; q a contramodule
    over the source, p over the target.  Restriction against induction and
    coinduction must produce hom objects of equal graded dimension.
    """
    from .homobjects import comodule_hom_object, contra_hom_object

    res_n = restrict_comodule(f, c, chat, n)
    ind_m = induce_comodule(f, c, chat, m)
    lhs_t = comodule_hom_object(res_n, m)
    rhs_t = comodule_hom_object(n, ind_m)

    res_q = restrict_contramodule(f, c, chat, q)
    coind_p = coinduce_contramodule(f, c, chat, p)
    lhs_f = contra_hom_object(coind_p, q)
    rhs_f = contra_hom_object(p, res_q)
    return {
        "comodule_side": (
            dict(lhs_t.space.dims), dict(rhs_t.space.dims)
        ),
        "contramodule_side": (
            dict(lhs_f.space.dims), dict(rhs_f.space.dims)
        ),
        "ok": lhs_t.space.dims == rhs_t.space.dims
        and lhs_f.space.dims == rhs_f.space.dims,
    }


def hom_of_contramodule(n: VComodule, x) -> VContramodule:
    """[N, X] for a left comodule n is a contramodule: precompose a family
    with the coaction."""
    c = n.coalgebra
    assert n.side == "left"
    theta = compose(
        hom_map(left_coaction(n), identity_map(x)),
        hom_tensor_iso_inv(c.space, n.space, x),
    )
    out = VContramodule(c, hom_space(n.space, x), theta)
    rep = validate_contramodule(out)
    assert rep["ok"], rep
    return out


def trifunctor_probe(m: VComodule, n: VComodule, x) -> dict:
    """Compare maps out of the cotensor with the cohom into the hom
    contramodule and try the restriction-of-transpose as the comparison
    map.  Purely empirical: the report states what happened, nothing is
    asserted as a law."""
    require_same_coalgebra(m, n)
    sub = cotensor(m, n)
    lhs_space = hom_space(sub.space, x)
    p = hom_of_contramodule(n, x)
    quot = cohom(m, p)
    candidate = compose(
        hom_map(sub.include, identity_map(x)),
        hom_tensor_iso_inv(m.space, n.space, x),
    )
    first = compose(
        hom_map(m.rho, identity_map(p.space)),
        hom_tensor_iso_inv(m.space, m.coalgebra.space, p.space),
    )
    second = hom_map(identity_map(m.space), p.theta)
    descends = sub_maps(
        compose(candidate, first), compose(candidate, second)
    ).is_zero()
    report = {
        "dim_hom_of_cotensor": dict(lhs_space.dims),
        "dim_cohom_of_hom": dict(quot.space.dims),
        "dims_equal": lhs_space.dims == quot.space.dims,
        "candidate_descends": descends,
    }
    if descends:
        induced = compose(candidate, quot.section)
        report["candidate_iso"] = (
            induced.rank() == lhs_space.total_dim
            and lhs_space.dims == quot.space.dims
        )
    return report
