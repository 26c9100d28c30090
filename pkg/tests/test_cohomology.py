"""Chevalley-Eilenberg cohomology, Lie kernels, Cartan-type identities."""
import random
from itertools import combinations

from lmmt.cohomology import (betti, cartan_identity_check, cocycle_basis,
                             ce_differential, d_form, is_exact, is_trivial,
                             kunneth_check, lie_derivative, lie_kernel)
from lmmt.exterior import KForm, KVector, basis_masks, indices_of
from lmmt.liealg import builtin, parse_salamon, structural_report
from lmmt.scalars import Scalar

CATALOG = ["0,12,2.13", "0,12,13,14,1.15", "0,0,13+24,14",
           "0,0,13+24,14-23,2.15", "0,0,13+24,14,2.15",
           "0,12,3.13,4.14+23,5.15+24,6.16+25,7.17+34+26",
           "0,0,13+23,14,15,16,-4.17-27"]
NILPOTENT = ["0,0,12", "0,0,12,13", "0,0,0,0,12+34", "0,0,12,13,14",
             "0,0,12,13,14,15"]


def test_su2_betti_oracle():
    assert betti(builtin("su2")).betti == [1, 0, 0, 1]


def test_heisenberg_betti_oracle():
    assert betti(parse_salamon("0,0,12")).betti == [1, 2, 2, 1]


def test_su2_differential_oracle():
    # de1 = 2 e23 for the convention [X1, X2] = -2 X3 (cyclic)
    e1 = KForm.basis(3, (1,))
    assert d_form(builtin("su2"), e1) == KForm.basis(3, (2, 3), 2)


def test_dd_zero_exhaustive():
    for text in CATALOG:
        g = parse_salamon(text)
        for k in range(g.n + 1):
            for mask in basis_masks(g.n, k):
                a = KForm.basis(g.n, indices_of(mask))
                assert d_form(g, d_form(g, a)).is_zero()


def test_LL_zero_exhaustive():
    for g in [builtin("su2"), parse_salamon("0,0,13+24,14")]:
        for k in range(2, g.n + 1):
            for mask in basis_masks(g.n, k):
                p = KVector.basis(g.n, indices_of(mask))
                assert g.lie_L(g.lie_L(p)).is_zero()


def test_euler_characteristic_vanishes():
    for text in CATALOG:
        b = betti(parse_salamon(text)).betti
        assert sum((-1) ** k * x for k, x in enumerate(b)) == 0


def test_b1_equals_codim_derived():
    for text in CATALOG + ["0,0,12"]:
        g = parse_salamon(text)
        assert betti(g).betti[1] == structural_report(g).codim_derived


def test_poincare_duality_unimodular():
    b = betti(parse_salamon("0,0,13+23,14,15,16,-4.17-27")).betti
    assert b == [1, 2, 1, 0, 0, 1, 2, 1]
    assert b == b[::-1]


def test_nilpotent_betti_lower_bound():
    # b_k >= 2 for 0 < k < n on nilpotent algebras of dimension <= 6
    for text in NILPOTENT:
        b = betti(parse_salamon(text)).betti
        assert all(x >= 2 for x in b[1:-1])


def test_lie_kernel_dims_su2():
    su2 = builtin("su2")
    assert [len(lie_kernel(su2, k)) for k in (1, 2, 3)] == [3, 0, 1]


def test_ce_differential_shape_and_rank():
    g = parse_salamon("0,0,12")
    d1 = ce_differential(g, 1)
    assert d1.rank() == 1
    code = betti(g)
    assert code.cocycle_dims[1] == 2 and code.coboundary_dims[2] == 1


def test_is_trivial_catalog():
    for text in CATALOG:
        ok, witness = is_trivial(parse_salamon(text))
        assert ok and witness is None
    ok, witness = is_trivial(parse_salamon("0,0,12,13,14,15"))
    assert not ok and witness is not None


def test_is_exact():
    g = parse_salamon("0,0,12")
    assert is_exact(g, d_form(g, KForm.basis(3, (3,))))
    assert not is_exact(g, KForm.basis(3, (1,)))


def test_kunneth_oracles():
    su2 = builtin("su2")
    assert kunneth_check(su2, su2)
    assert betti(su2.direct_sum(su2)).betti[3] == 2
    r1 = builtin("abelian:1")
    assert betti(r1.direct_sum(su2)).betti[3] == 1
    aff = parse_salamon("0,12")
    assert betti(aff.direct_sum(aff)).betti[3] == 0
    assert kunneth_check(aff, parse_salamon("0,0,12"))


def _random_kvector(rng, n, k):
    masks = basis_masks(n, k)
    return KVector.from_vector(
        n, k, masks, [Scalar(rng.randint(-2, 2)) for _ in masks])


def _random_kform(rng, n, k):
    masks = basis_masks(n, k)
    return KForm.from_vector(
        n, k, masks, [Scalar(rng.randint(-2, 2)) for _ in masks])


def test_extended_cartan_random_sweep():
    rng = random.Random(2024)
    algebras = [builtin("su2"), parse_salamon("0,12,2.13"),
                parse_salamon("0,0,13+24,14"), parse_salamon("0,12,13,14,15")]
    for _ in range(60):
        g = algebras[rng.randrange(len(algebras))]
        r = rng.randint(2, min(3, g.n))
        s = rng.randint(r, g.n)
        p = _random_kvector(rng, g.n, r)
        a = _random_kform(rng, g.n, s)
        assert cartan_identity_check(g, p, a)


def test_extended_cartan_exhaustive_decomposables():
    for text in ["0,12", "0,0,12", "0,12,2.13"]:
        g = parse_salamon(text)
        n = g.n
        for r in range(2, n + 1):
            for s in range(r, n + 1):
                for pm in basis_masks(n, r):
                    for am in basis_masks(n, s):
                        p = KVector.basis(n, indices_of(pm))
                        a = KForm.basis(n, indices_of(am))
                        assert cartan_identity_check(g, p, a)


def test_invariant_closed_case():
    # for invariant closed alpha, d(p hook alpha) = L(p) hook alpha
    from lmmt.exterior import contract
    g = builtin("su2")
    for z in cocycle_basis(g, 3):
        if not all(lie_derivative(g, KVector.basis(3, (i,)), z).is_zero()
                   for i in range(1, 4)):
            continue
        for idx in combinations(range(1, 4), 2):
            p = KVector.basis(3, idx)
            assert d_form(g, contract(p, z)) == contract(g.lie_L(p), z)
