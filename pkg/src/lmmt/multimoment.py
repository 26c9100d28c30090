"""Algebraic multi-moment maps on the dual of the Lie kernel."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .cohomology import (
    ce_differential,
    cocycle_basis,
    coboundary_matrix,
    d_form,
    is_exact,
)
from .exterior import KForm, KVector, basis_masks, contract
from .liealg import LieAlgebra
from .linalg import Matrix, row_space_basis
from .scalars import Scalar, sc


@dataclass(frozen=True)
class PDualElement:
    """A class in degree-k forms modulo coboundaries, by representative."""

    degree: int
    representative: KForm

    def __post_init__(self):
        if self.representative.degree != self.degree:
            raise ValueError("representative degree mismatch")

    def same_class(self, g: LieAlgebra, other: "PDualElement") -> bool:
        diff = self.representative - other.representative
        return is_exact(g, diff)

    def to_json(self) -> dict:
        return {"degree": self.degree, "representative": self.representative.to_json()}


@dataclass(frozen=True)
class Cocycle:
    degree: int
    form: KForm

    @classmethod
    def checked(cls, g: LieAlgebra, form: KForm) -> "Cocycle":
        if not d_form(g, form).is_zero():
            raise ValueError("form is not closed")
        return cls(form.degree, form)


def d_P(g: LieAlgebra, beta: PDualElement) -> KForm:
    """The induced differential: d of any representative."""
    if beta.degree >= g.n:
        raise ValueError("degree out of range")
    return d_form(g, beta.representative)


@dataclass
class MultimomentSolution:
    status: str  # "unique" | "non-unique" | "no-existence"
    nu: Optional[PDualElement] = None
    kernel: List[PDualElement] = field(default_factory=list)
    obstruction: Optional[KForm] = None

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.nu is not None:
            out["nu"] = self.nu.to_json()
        if self.kernel:
            out["kernel"] = [k.to_json() for k in self.kernel]
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction.to_json()
        return out


def solve_multimoment(g: LieAlgebra, psi: Cocycle) -> MultimomentSolution:
    """Solve d_P(nu) = psi, reporting existence and uniqueness.

    When no solution exists the obstruction is the (nonzero) class of
    psi in degree-r cohomology; when the solution is not unique the
    affine solution set is a particular nu plus the span of the
    returned kernel classes.
    """
    r = psi.degree
    if not 1 <= r <= g.n:
        raise ValueError("degree out of range")
    masks_r = basis_masks(g.n, r)
    sol = ce_differential(g, r - 1).solve(psi.form.to_vector(masks_r))
    if sol is None:
        return MultimomentSolution("no-existence", obstruction=psi.form)
    masks = basis_masks(g.n, r - 1)
    nu = PDualElement(r - 1, KForm.from_vector(g.n, r - 1, masks, sol))
    # kernel of d_P on classes: closed (r-1)-forms that are not exact
    kernel: List[PDualElement] = []
    bmat = coboundary_matrix(g, r - 1)
    for z in cocycle_basis(g, r - 1):
        if bmat.solve(z.to_vector(masks)) is None:
            kernel.append(PDualElement(r - 1, z))
    status = "unique" if not kernel else "non-unique"
    return MultimomentSolution(status, nu=nu, kernel=kernel)


@dataclass
class OrbitStabReport:
    stab_basis: List[List[Scalar]]
    ker_basis: List[List[Scalar]]
    holds: bool

    def to_json(self) -> dict:
        return {
            "stab_dim": len(self.stab_basis),
            "ker_dim": len(self.ker_basis),
            "stab_basis": [[str(x) for x in v] for v in self.stab_basis],
            "ker_basis": [[str(x) for x in v] for v in self.ker_basis],
            "holds": self.holds,
        }


def orbit_stab_condition(g: LieAlgebra, beta: PDualElement) -> OrbitStabReport:
    """Compare the stabiliser of beta with the kernel of contraction.

    stab = {X : X . d(rep) is a coboundary}; ker = {X : X . d(rep) = 0}.
    Equality means the closed geometry is realised on the orbit.
    """
    k = beta.degree
    dbeta = d_P(g, beta)
    masks_k = basis_masks(g.n, k)
    cols: List[List[Scalar]] = []
    for i in range(1, g.n + 1):
        hooked = contract(KVector.basis(g.n, [i]), dbeta)
        cols.append(hooked.to_vector(masks_k))
    hook = Matrix.from_columns(cols, nrows=len(masks_k))
    ker = hook.kernel_basis()
    # stab: solve X . d(rep) = d(gamma) jointly in (X, gamma)
    bmat = coboundary_matrix(g, k)
    joint = hook.hstack(bmat.scale(Scalar(-1)))
    stab = row_space_basis([v[: g.n] for v in joint.kernel_basis()], g.n)
    holds = len(stab) == len(ker)
    return OrbitStabReport(stab, ker, holds)


def triple_form(g: LieAlgebra, inner: Sequence[Sequence]) -> KForm:
    """The 3-form (X, Y, Z) -> <[X, Y], Z> of an ad-invariant pairing."""
    n = g.n
    m = [[sc(x) for x in row] for row in inner]
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError("inner product has wrong shape")
    for i in range(n):
        for j in range(i, n):
            if m[i][j] != m[j][i]:
                raise ValueError("inner product not symmetric")

    def pair(u: List[Scalar], j: int) -> Scalar:
        return sum((u[i] * m[i][j] for i in range(n)), Scalar(0))

    ei = lambda i: [Scalar(1) if t == i - 1 else Scalar(0) for t in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                lhs = pair(g.bracket(ei(i), ei(j)), k - 1)
                rhs = pair(g.bracket(ei(i), ei(k)), j - 1)
                if not (lhs + rhs).is_zero():
                    raise ValueError("inner product is not ad-invariant")
    terms = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            br = g.bracket(ei(i), ei(j))
            for k in range(j + 1, n + 1):
                c = pair(br, k - 1)
                if not c.is_zero():
                    terms.append(((i, j, k), c))
    return KForm.from_terms(n, terms) if terms else KForm.zero(n, 3)
