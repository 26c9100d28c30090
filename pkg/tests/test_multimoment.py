"""Multi-moment solving, orbit-stabilizer condition, inner-product three-forms."""
import pytest

from lmmt.cohomology import betti, cocycle_basis, d_form, is_exact
from lmmt.exterior import KForm
from lmmt.liealg import builtin, parse_salamon
from lmmt.multimoment import (Cocycle, PDualElement, d_P, orbit_stab_condition,
                              solve_multimoment, triple_form)
from lmmt.scalars import Scalar


def test_cocycle_rejects_non_closed():
    g = parse_salamon("0,0,12")
    with pytest.raises(ValueError):
        Cocycle.checked(g, KForm.basis(3, (3,)))
    assert Cocycle.checked(g, KForm.basis(3, (1, 2))).degree == 2


def test_pdual_class_representatives():
    g = parse_salamon("0,0,12")
    a = PDualElement(2, KForm.basis(3, (1, 3)))
    b = PDualElement(2, KForm.basis(3, (1, 3)) + KForm.basis(3, (1, 2)))
    # e12 is a coboundary, so the two representatives name the same class
    assert a.same_class(g, b)
    assert not a.same_class(g, PDualElement(2, KForm.basis(3, (2, 3))))


def test_d_P_well_defined_on_classes():
    g = parse_salamon("0,0,12")
    a = PDualElement(1, KForm.basis(3, (1,)))
    assert d_P(g, a).is_zero()
    b = PDualElement(1, KForm.basis(3, (3,)))
    assert d_P(g, b) == KForm.basis(3, (1, 2))


def test_unique_solutions_on_b34_trivial_algebra():
    g = parse_salamon("0,12,13,14,15")
    assert betti(g).betti[3] == 0 and betti(g).betti[4] == 0
    for z in cocycle_basis(g, 4):
        sol = solve_multimoment(g, Cocycle(4, z))
        assert sol.status == "unique"
        assert sol.kernel == []
        assert d_form(g, sol.nu.representative) == z


def test_su2_obstruction():
    su2 = builtin("su2")
    identity = [[Scalar(1) if i == j else Scalar(0) for j in range(3)]
                for i in range(3)]
    gamma = triple_form(su2, identity)
    sol = solve_multimoment(su2, Cocycle(3, gamma))
    assert sol.status == "no-existence"
    assert sol.obstruction is not None
    assert not is_exact(su2, sol.obstruction)


def test_nonunique_kernel_on_heisenberg():
    g = parse_salamon("0,0,12")
    # d e3 = e12 is exact; solutions differ by the two closed 1-form classes
    sol = solve_multimoment(g, Cocycle(2, KForm.basis(3, (1, 2))))
    assert sol.status == "non-unique"
    assert len(sol.kernel) == betti(g).betti[1] == 2
    assert d_form(g, sol.nu.representative) == KForm.basis(3, (1, 2))


def test_solution_json():
    g = parse_salamon("0,12,13,14,15")
    sol = solve_multimoment(g, Cocycle(4, cocycle_basis(g, 4)[0]))
    payload = sol.to_json()
    assert payload["status"] == "unique"


def test_orbit_stab_heisenberg_center():
    g = parse_salamon("0,0,12")
    rep = orbit_stab_condition(g, PDualElement(1, KForm.basis(3, (3,))))
    assert rep.holds
    assert len(rep.stab_basis) == len(rep.ker_basis) == 1


def test_orbit_stab_abelian_everything_fixed():
    g = builtin("abelian:4")
    rep = orbit_stab_condition(g, PDualElement(2, KForm.basis(4, (1, 2))))
    assert rep.holds
    assert len(rep.stab_basis) == 4


def test_orbit_stab_su2():
    su2 = builtin("su2")
    rep = orbit_stab_condition(su2, PDualElement(1, KForm.basis(3, (3,))))
    assert rep.holds


def test_triple_form_su2_is_cartan_form():
    su2 = builtin("su2")
    identity = [[Scalar(1) if i == j else Scalar(0) for j in range(3)]
                for i in range(3)]
    gamma = triple_form(su2, identity)
    assert gamma == KForm.basis(3, (1, 2, 3), -2)
    assert d_form(su2, gamma).is_zero()


def test_triple_form_validates_input():
    su2 = builtin("su2")
    asym = [[Scalar(0), Scalar(1), Scalar(0)],
            [Scalar(-1), Scalar(0), Scalar(0)],
            [Scalar(0), Scalar(0), Scalar(0)]]
    with pytest.raises(ValueError):
        triple_form(su2, asym)
    not_invariant = [[Scalar(1) if i == j else Scalar(0) for j in range(3)]
                     for i in range(3)]
    not_invariant[0][0] = Scalar(2)
    with pytest.raises(ValueError):
        triple_form(su2, not_invariant)
