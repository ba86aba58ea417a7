"""Independent brute-force reference routines.

These never share code with the production paths they certify: maps are
enumerated by odometer, universal properties by checking every competing
cone from small canonical test objects, and linear (co)equalisers by
solving the defining systems from scratch.  Budgets are hard errors with
exact projected counts, never silent truncation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product as iproduct

from . import finset
from .errors import BudgetExceeded
from .exactlin import (
    GradedVect,
    LinMap,
    Matrix,
    compose as lcompose,
    sub_maps,
)
from .finset import FinSet


@dataclass(frozen=True)
class Budget:
    max_count: int = 1_000_000
    time_ceiling_s: float = 60.0

    def __post_init__(self):
        assert self.max_count > 0 and self.time_ceiling_s > 0

    def charge(self, projected: int, what: str):
        if projected > self.max_count:
            raise BudgetExceeded(
                f"{what} would enumerate {projected} items "
                f"(budget {self.max_count})",
                projected=projected,
            )


DEFAULT_BUDGET = Budget()


def all_maps(a: FinSet, b: FinSet, budget: Budget = DEFAULT_BUDGET):
    """Every total map exactly once, canonical odometer order."""
    if len(a) > 0:
        budget.charge(len(b) ** len(a), "map enumeration")
    deadline = time.monotonic() + budget.time_ceiling_s
    for f in finset._all_maps(a, b):
        if time.monotonic() > deadline:
            raise BudgetExceeded("map enumeration hit the time ceiling")
        yield f


def all_linmaps(v: GradedVect, w: GradedVect, budget: Budget = DEFAULT_BUDGET,
                degree: int = 0):
    """Every degree-homogeneous map exactly once over a prime field."""
    fld = v.field
    assert hasattr(fld, "p"), "exhaustive map enumeration needs a prime field"
    cells = []
    for k in v.degrees():
        m, n = w.dim(k + degree), v.dim(k)
        cells.extend(((k, i, j) for i in range(m) for j in range(n)))
    budget.charge(fld.p ** len(cells), "matrix enumeration")
    deadline = time.monotonic() + budget.time_ceiling_s
    for values in iproduct(range(fld.p), repeat=len(cells)):
        if time.monotonic() > deadline:
            raise BudgetExceeded("matrix enumeration hit the time ceiling")
        blocks: dict[int, list] = {}
        for (k, i, j), val in zip(cells, values):
            if k not in blocks:
                blocks[k] = [
                    [fld.zero()] * v.dim(k)
                    for _ in range(w.dim(k + degree))
                ]
            blocks[k][i][j] = val
        yield LinMap(
            v,
            w,
            degree,
            {k: Matrix(fld, tuple(tuple(r) for r in rows), v.dim(k))
             for k, rows in blocks.items()},
        )


def _test_sets(max_size: int = 3):
    out = [finset.EMPTY]
    for n in range(1, max_size + 1):
        out.append(FinSet([f"t{i}" for i in range(n)]))
    return out


def _count_mediators(dom: FinSet, cod: FinSet, allowed) -> int:
    """Mediating morphisms are pinned elementwise, so their number is the
    product over the domain of the allowed-value counts."""
    total = 1
    for d in dom:
        total *= sum(1 for v in cod if allowed(d, v))
        if total == 0:
            return 0
    return total


def universal_property_check(kind: str, data: dict,
                             budget: Budget = DEFAULT_BUDGET) -> dict:
    """Enumerate all competing (co)cones from canonical test sets and
    verify existence and uniqueness of the mediating morphism."""
    checkers = {
        "equalizer": _up_equalizer,
        "coequalizer": _up_coequalizer,
        "product": _up_product,
        "coproduct": _up_coproduct,
        "pullback": _up_pullback,
    }
    if kind not in checkers:
        raise ValueError(f"unknown universal property kind {kind!r}")
    return checkers[kind](data, budget)


def _up_equalizer(data, budget):
    f, g = data["f"], data["g"]
    eq = finset.equalizer(f, g)
    cones = 0
    for z in _test_sets():
        for h in all_maps(z, f.dom, budget):
            if finset.compose(f, h) != finset.compose(g, h):
                continue
            cones += 1
            n = _count_mediators(
                z, eq.members, lambda x, e: eq.include(e) == h(x)
            )
            if n != 1:
                return {"ok": False, "cones": cones,
                        "witness": {"cone": h.table, "mediators": n}}
    return {"ok": True, "cones": cones, "witness": None}


def _up_coequalizer(data, budget):
    f, g = data["f"], data["g"]
    q = finset.coequalizer(f, g)
    quotient = q.project.cod
    cocones = 0
    for z in _test_sets():
        for h in all_maps(f.cod, z, budget):
            if finset.compose(h, f) != finset.compose(h, g):
                continue
            cocones += 1
            n = _count_mediators(
                quotient,
                z,
                lambda k, v: all(h(y) == v for y in q.classes[k]),
            )
            if n != 1:
                return {"ok": False, "cocones": cocones,
                        "witness": {"cocone": h.table, "mediators": n}}
    return {"ok": True, "cocones": cocones, "witness": None}


def _up_product(data, budget):
    a, b = data["a"], data["b"]
    p, proj1, proj2 = finset.product(a, b)
    cones = 0
    for z in _test_sets():
        for h1 in all_maps(z, a, budget):
            for h2 in all_maps(z, b, budget):
                cones += 1
                n = _count_mediators(
                    z,
                    p,
                    lambda x, v: proj1(v) == h1(x) and proj2(v) == h2(x),
                )
                if n != 1:
                    return {"ok": False, "cones": cones,
                            "witness": {"h1": h1.table, "h2": h2.table,
                                        "mediators": n}}
    return {"ok": True, "cones": cones, "witness": None}


def _up_coproduct(data, budget):
    a, b = data["a"], data["b"]
    c, inj1, inj2 = finset.coproduct(a, b)
    back = {inj1(x): ("L", x) for x in a}
    back.update({inj2(y): ("R", y) for y in b})
    cocones = 0
    for z in _test_sets():
        for h1 in all_maps(a, z, budget):
            for h2 in all_maps(b, z, budget):
                cocones += 1

                def allowed(d, v, h1=h1, h2=h2):
                    side, orig = back[d]
                    want = h1(orig) if side == "L" else h2(orig)
                    return v == want

                n = _count_mediators(c, z, allowed)
                if n != 1:
                    return {"ok": False, "cocones": cocones,
                            "witness": {"h1": h1.table, "h2": h2.table,
                                        "mediators": n}}
    return {"ok": True, "cocones": cocones, "witness": None}


def _up_pullback(data, budget):
    f, g = data["f"], data["g"]
    p, proj1, proj2 = finset.pullback(f, g)
    cones = 0
    for z in _test_sets():
        for h1 in all_maps(z, f.dom, budget):
            for h2 in all_maps(z, g.dom, budget):
                if finset.compose(f, h1) != finset.compose(g, h2):
                    continue
                cones += 1
                n = _count_mediators(
                    z,
                    p,
                    lambda x, v: proj1(v) == h1(x) and proj2(v) == h2(x),
                )
                if n != 1:
                    return {"ok": False, "cones": cones,
                            "witness": {"h1": h1.table, "h2": h2.table,
                                        "mediators": n}}
    return {"ok": True, "cones": cones, "witness": None}


def linear_equalizer_up_check(f: LinMap, g: LinMap,
                              test_dims=(1, 2)) -> dict:
    """Complete universal-property check for the linear equaliser: the
    space of cones, solved from scratch, must have the dimension of the
    maps into the sub-object (factorisation is then unique because the
    inclusion has full column rank)."""
    from .exactlin import equalizer_lin

    eq = equalizer_lin(f, g)
    fld = f.dom.field
    diff = sub_maps(f, g)
    probe_degrees = f.dom.degrees() or [0]
    for n in test_dims:
      for base_deg in probe_degrees:
        z = GradedVect(fld, {base_deg: n}, prefix="up")
        cols = []
        cells = [
            (k, i, j)
            for k in z.degrees()
            if f.dom.dim(k) > 0
            for i in range(f.dom.dim(k))
            for j in range(z.dim(k))
        ]
        for k, i, j in cells:
            h = LinMap(
                z,
                f.dom,
                0,
                {
                    k: Matrix(
                        fld,
                        tuple(
                            tuple(
                                fld.one() if (r == i and cc == j)
                                else fld.zero()
                                for cc in range(z.dim(k))
                            )
                            for r in range(f.dom.dim(k))
                        ),
                        z.dim(k),
                    )
                },
            )
            comp = lcompose(diff, h)
            col = []
            for kk in z.degrees():
                blk = comp.block(kk)
                col.extend(
                    blk[i2, j2]
                    for i2 in range(blk.nrows)
                    for j2 in range(blk.ncols)
                )
            cols.append(tuple(col))
        if cells and cols[0]:
            rows = tuple(
                tuple(c[i] for c in cols) for i in range(len(cols[0]))
            )
            cone_dim = len(Matrix(fld, rows, len(cols)).kernel_basis())
        else:
            cone_dim = len(cells)
        expected = sum(eq.space.dim(k) * z.dim(k) for k in z.degrees())
        if cone_dim != expected:
            return {"ok": False, "test_dim": n, "degree": base_deg,
                    "cone_dim": cone_dim, "expected": expected}
    return {"ok": True}


def linear_coequalizer_up_check(f: LinMap, g: LinMap,
                                test_dims=(1, 2)) -> dict:
    """Dual check: cocones out of the codomain match maps out of the
    quotient."""
    from .exactlin import coequalizer_lin

    q = coequalizer_lin(f, g)
    fld = f.dom.field
    diff = sub_maps(f, g)
    probe_degrees = f.cod.degrees() or [0]
    for n in test_dims:
      for base_deg in probe_degrees:
        z = GradedVect(fld, {base_deg: n}, prefix="up")
        cols = []
        cells = [
            (k, i, j)
            for k in f.cod.degrees()
            if z.dim(k) > 0
            for i in range(z.dim(k))
            for j in range(f.cod.dim(k))
        ]
        for k, i, j in cells:
            h = LinMap(
                f.cod,
                z,
                0,
                {
                    k: Matrix(
                        fld,
                        tuple(
                            tuple(
                                fld.one() if (r == i and cc == j)
                                else fld.zero()
                                for cc in range(f.cod.dim(k))
                            )
                            for r in range(z.dim(k))
                        ),
                        f.cod.dim(k),
                    )
                },
            )
            comp = lcompose(h, diff)
            col = []
            for kk in f.dom.degrees():
                blk = comp.block(kk)
                col.extend(
                    blk[i2, j2]
                    for i2 in range(blk.nrows)
                    for j2 in range(blk.ncols)
                )
            cols.append(tuple(col))
        if cells and cols and cols[0]:
            rows = tuple(
                tuple(c[i] for c in cols) for i in range(len(cols[0]))
            )
            cocone_dim = len(Matrix(fld, rows, len(cols)).kernel_basis())
        else:
            cocone_dim = len(cells)
        expected = sum(q.space.dim(k) * z.dim(k) for k in z.degrees())
        if cocone_dim != expected:
            return {"ok": False, "test_dim": n, "degree": base_deg,
                    "cocone_dim": cocone_dim, "expected": expected}
    return {"ok": True}
