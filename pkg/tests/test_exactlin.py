import random
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from cocontra.exactlin import (
    GF,
    QQ,
    GradedVect,
    LinMap,
    Matrix,
    Vec,
    assoc,
    assoc_inv,
    braiding,
    coequalizer_lin,
    compose,
    curry,
    double_dual_iso,
    dual,
    dual_map,
    equalizer_lin,
    ev_map,
    hom_map,
    hom_space,
    hom_tensor_iso,
    hom_tensor_iso_inv,
    identity_map,
    linmap_to_vec,
    sub_maps,
    tensor,
    tensor_map,
    tensor_vec,
    uncurry,
    unit_left,
    unit_right,
    unit_space,
    vec_to_linmap,
    zero_map,
)


Q = QQ()
F2 = GF(2)
F5 = GF(5)


def rand_linmap(rng, dom, cod, degree=0):
    blocks = {}
    for k in dom.degrees():
        m, n = cod.dim(k + degree), dom.dim(k)
        if m == 0:
            continue
        blocks[k] = Matrix(
            dom.field,
            tuple(
                tuple(dom.field.from_int(rng.randint(-2, 2))
                      for _ in range(n))
                for _ in range(m)
            ),
            n,
        )
    return LinMap(dom, cod, degree, blocks)


# --- fields -------------------------------------------------------------------


@given(st.integers(-40, 40), st.integers(-40, 40))
def test_gf5_matches_integer_arithmetic(a, b):
    assert F5.add(F5.from_int(a), F5.from_int(b)) == (a + b) % 5
    assert F5.mul(F5.from_int(a), F5.from_int(b)) == (a * b) % 5
    if b % 5:
        assert F5.mul(F5.from_int(b), F5.inv(F5.from_int(b))) == 1


def test_field_parsing_round_trips():
    assert Q.parse("3/4") == Fraction(3, 4)
    assert Q.format(Fraction(-7, 2)) == "-7/2"
    assert F5.parse("2 mod 5") == 2
    assert F5.format(7) == "2 mod 5"
    with pytest.raises(ValueError):
        GF(4)


# --- matrices -----------------------------------------------------------------


def test_kernel_example():
    m = Matrix.from_rows(Q, [[1, 1], [0, 0]])
    basis = m.kernel_basis()
    assert len(basis) == 1
    v = basis[0]
    assert v[0] == -v[1]


def test_rank_nullity_random():
    rng = random.Random(7)
    for _ in range(30):
        rows = rng.randint(0, 4)
        cols = rng.randint(0, 4)
        m = Matrix(
            Q,
            tuple(
                tuple(Fraction(rng.randint(-3, 3)) for _ in range(cols))
                for _ in range(rows)
            ),
            cols,
        )
        assert m.rank() + len(m.kernel_basis()) == cols


def test_solve_and_complement():
    m = Matrix.from_rows(Q, [[1, 0], [1, 0]])
    assert m.solve((Fraction(2), Fraction(2))) is not None
    assert m.solve((Fraction(1), Fraction(2))) is None
    # greedy complement takes the lowest basis index that extends the
    # column space: e_0 is independent of (1,1)
    assert m.column_space_complement() == [0]
    assert Matrix.from_rows(Q, [[1, 0], [0, 0]]).column_space_complement() \
        == [1]


def test_zero_row_matrices_keep_their_width():
    m = Matrix.zeros(Q, 0, 3)
    assert m.ncols == 3
    assert len(m.kernel_basis()) == 3


# --- graded spaces and maps -----------------------------------------------


def test_tensor_dims_convolve():
    v = GradedVect(Q, {0: 1, 1: 1})
    w = GradedVect(Q, {0: 1, 1: 1}, prefix="f")
    assert tensor(v, w).dims == {0: 1, 1: 2, 2: 1}
    assert tensor(v, unit_space(Q)).dims == v.dims


def test_hom_space_degrees():
    v = GradedVect(Q, {0: 1, 1: 1})
    w = GradedVect(Q, {0: 1}, prefix="f")
    assert hom_space(v, w).dims == {-1: 1, 0: 1}
    assert hom_space(GradedVect(Q, {0: 2}), GradedVect(Q, {0: 3},
                                                       prefix="f")).dims \
        == {0: 6}


def test_dual_flips_degrees():
    assert dual(GradedVect(Q, {1: 2})).dims == {-1: 2}
    assert dual(unit_space(Q)).dims == {0: 1}


def test_unit_isos():
    v = GradedVect(Q, {0: 2, 3: 1})
    assert unit_left(v).is_iso() and unit_right(v).is_iso()


def test_tensor_unit_is_identity_after_unitor():
    v = GradedVect(Q, {0: 2, 1: 1})
    k = unit_space(Q)
    rng = random.Random(3)
    f = rand_linmap(rng, v, v)
    via = compose(
        unit_right(v), compose(tensor_map(f, identity_map(k)),
                               _unit_right_inv(v))
    )
    assert via == f


def _unit_right_inv(v):
    from cocontra.exactlin import unit_right_inv

    return unit_right_inv(v)


def test_assoc_is_natural_iso():
    rng = random.Random(11)
    u = GradedVect(Q, {0: 1, 1: 1}, prefix="u")
    v = GradedVect(Q, {0: 2}, prefix="v")
    w = GradedVect(Q, {0: 1, 2: 1}, prefix="w")
    a = assoc(u, v, w)
    assert compose(assoc_inv(u, v, w), a) == identity_map(
        tensor(tensor(u, v), w)
    )
    f = rand_linmap(rng, u, u)
    g = rand_linmap(rng, v, v)
    h = rand_linmap(rng, w, w)
    lhs = compose(assoc(u, v, w),
                  tensor_map(tensor_map(f, g), h))
    rhs = compose(tensor_map(f, tensor_map(g, h)), assoc(u, v, w))
    assert lhs == rhs


def test_braiding_symmetry_and_sign():
    v = GradedVect(Q, {1: 1}, prefix="v")
    w = GradedVect(Q, {1: 1}, prefix="w")
    b = braiding(v, w)
    back = braiding(w, v)
    assert compose(back, b) == identity_map(tensor(v, w))
    # odd times odd picks up the sign
    lab = tensor(v, w).labels[2][0]
    img = b.apply_label(lab)
    (out_lab, coeff), = img.items()
    assert coeff == Fraction(-1)


def test_koszul_sign_in_tensor_map():
    # g of odd degree sliding past an odd-degree basis vector flips sign
    v = GradedVect(Q, {1: 1}, prefix="v")
    w = GradedVect(Q, {0: 1, 1: 1}, prefix="w")
    g = LinMap(w, w, 1, {0: Matrix.from_rows(Q, [[1]])})
    f = identity_map(v)
    fg = tensor_map(f, g)
    lab = ("t", v.labels[1][0], w.labels[0][0])
    img = fg.apply_label(lab)
    (out_lab, coeff), = img.items()
    assert coeff == Fraction(-1)
    # and an even source degree keeps the sign positive
    v0 = GradedVect(Q, {0: 1}, prefix="z")
    fg0 = tensor_map(identity_map(v0), g)
    img0 = fg0.apply_label(("t", v0.labels[0][0], w.labels[0][0]))
    (_, coeff0), = img0.items()
    assert coeff0 == Fraction(1)


def test_curry_uncurry_mutually_inverse():
    rng = random.Random(5)
    u = GradedVect(Q, {0: 2}, prefix="u")
    v = GradedVect(Q, {0: 1, 1: 1}, prefix="v")
    w = GradedVect(Q, {0: 2, 1: 1}, prefix="w")
    for _ in range(10):
        f = rand_linmap(rng, tensor(u, v), w)
        assert uncurry(curry(f, u, v, w), u, v, w) == f
        g = rand_linmap(rng, u, hom_space(v, w))
        assert curry(uncurry(g, u, v, w), u, v, w) == g


def test_tensor_hom_adjunction_natural_in_each_argument():
    rng = random.Random(13)
    u = GradedVect(Q, {0: 2}, prefix="u")
    u2 = GradedVect(Q, {0: 1}, prefix="s")
    v = GradedVect(Q, {0: 2}, prefix="v")
    w = GradedVect(Q, {0: 2}, prefix="w")
    w2 = GradedVect(Q, {0: 1}, prefix="r")
    for _ in range(5):
        f = rand_linmap(rng, tensor(u, v), w)
        a = rand_linmap(rng, u2, u)
        # naturality in the first argument
        lhs = curry(compose(f, tensor_map(a, identity_map(v))), u2, v, w)
        rhs = compose(curry(f, u, v, w), a)
        assert lhs == rhs
        # naturality in the target
        b = rand_linmap(rng, w, w2)
        lhs2 = curry(compose(b, f), u, v, w2)
        rhs2 = compose(hom_map(identity_map(v), b), curry(f, u, v, w))
        assert lhs2 == rhs2


def test_ev_is_evaluation():
    v = GradedVect(Q, {0: 2}, prefix="v")
    w = GradedVect(Q, {0: 2}, prefix="w")
    rng = random.Random(2)
    f = rand_linmap(rng, v, w)
    fv = linmap_to_vec(f)
    for _, _, a in v.basis():
        out = ev_map(v, w).apply(tensor_vec(fv, Vec.basis_vec(v, a)))
        assert out == f.apply_label(a)


def test_vec_linmap_round_trip():
    rng = random.Random(4)
    v = GradedVect(Q, {0: 2, 1: 1}, prefix="v")
    w = GradedVect(Q, {0: 1, 1: 2}, prefix="w")
    for d in (-1, 0, 1):
        f = rand_linmap(rng, v, w, degree=d)
        assert vec_to_linmap(linmap_to_vec(f), v, w) == f


def test_hom_tensor_iso_round_trip():
    a = GradedVect(Q, {0: 2}, prefix="a")
    b = GradedVect(Q, {0: 1, 1: 1}, prefix="b")
    x = GradedVect(Q, {0: 2}, prefix="x")
    i = hom_tensor_iso(a, b, x)
    j = hom_tensor_iso_inv(a, b, x)
    assert compose(j, i) == identity_map(hom_space(tensor(a, b), x))
    assert compose(i, j) == identity_map(hom_space(a, hom_space(b, x)))


def test_dual_map_and_double_dual():
    rng = random.Random(9)
    v = GradedVect(Q, {0: 2}, prefix="v")
    w = GradedVect(Q, {0: 2}, prefix="w")
    f = rand_linmap(rng, v, w)
    g = rand_linmap(rng, w, v)
    assert dual_map(compose(g, f)) == compose(dual_map(f), dual_map(g))
    assert double_dual_iso(v).is_iso()


def test_equalizer_coequalizer_rank_laws():
    rng = random.Random(21)
    for field in (Q, F2, F5):
        for _ in range(15):
            dims = {k: rng.randint(0, 2) for k in (0, 1)}
            v = GradedVect(field, dims, prefix="v")
            w = GradedVect(field, {k: rng.randint(0, 2) for k in (0, 1)},
                           prefix="w")
            f = _rand_over(rng, field, v, w)
            g = _rand_over(rng, field, v, w)
            eq = equalizer_lin(f, g)
            cq = coequalizer_lin(f, g)
            h = sub_maps(f, g)
            assert eq.space.total_dim + h.rank() == v.total_dim
            reachable = sum(w.dim(k) for k in v.degrees())
            assert cq.space.total_dim == w.total_dim - h.rank()
            assert eq.include.is_injective()
            assert cq.project.is_surjective()
            assert compose(cq.project, cq.section) == identity_map(cq.space)


def _rand_over(rng, field, v, w):
    blocks = {}
    for k in v.degrees():
        m, n = w.dim(k), v.dim(k)
        if m == 0:
            continue
        pool = list(range(field.p)) if hasattr(field, "p") else \
            [field.from_int(t) for t in (-2, -1, 0, 1, 2)]
        blocks[k] = Matrix(
            field,
            tuple(tuple(rng.choice(pool) for _ in range(n))
                  for _ in range(m)),
            n,
        )
    return LinMap(v, w, 0, blocks)


def test_equalizer_examples():
    x = GradedVect(Q, {0: 2})
    f = LinMap(x, x, 0, {0: Matrix.from_rows(Q, [[1, 1], [0, 0]])})
    z = zero_map(x, x)
    eq = equalizer_lin(f, z)
    assert eq.space.total_dim == 1
    assert equalizer_lin(f, f).space.total_dim == 2
    ident = identity_map(x)
    assert equalizer_lin(ident, z).space.total_dim == 0


def test_coequalizer_examples():
    x = GradedVect(Q, {0: 2})
    f = LinMap(x, x, 0, {0: Matrix.from_rows(Q, [[1, 0], [1, 0]])})
    z = zero_map(x, x)
    cq = coequalizer_lin(f, z)
    assert cq.space.total_dim == 1
    assert coequalizer_lin(f, f).space.total_dim == 2
    ident = identity_map(x)
    assert coequalizer_lin(ident, z).space.total_dim == 0
