"""Chevalley-Eilenberg cohomology with invariant coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .exterior import KForm, KVector, basis_masks, contract, dim_lambda
from .liealg import LieAlgebra
from .linalg import Matrix
from .scalars import Scalar


def ce_differential(g: LieAlgebra, k: int) -> Matrix:
    """Matrix of d: degree-k forms -> degree-(k+1) forms, canonical bases.

    Dual to the bracket-extension map: the e^J-coefficient of d(e^I) is
    the e_I-coefficient of L(e_J).
    """
    src = basis_masks(g.n, k)
    dst = basis_masks(g.n, k + 1)
    col_index = {m: i for i, m in enumerate(src)}
    entries: Dict[Tuple[int, int], Scalar] = {}
    for row, mj in enumerate(dst):
        image = g.lie_L(KVector(g.n, k + 1, {mj: Scalar(1)}))
        for mask, c in image.terms.items():
            entries[(row, col_index[mask])] = c
    return Matrix(len(dst), len(src), entries)


def d_form(g: LieAlgebra, a: KForm) -> KForm:
    src = basis_masks(g.n, a.degree)
    dst = basis_masks(g.n, a.degree + 1)
    vec = a.to_vector(src)
    out = ce_differential(g, a.degree).mul_vec(vec)
    return KForm.from_vector(g.n, a.degree + 1, dst, out)


def lie_kernel(g: LieAlgebra, k: int) -> List[KVector]:
    """Basis of ker(L) on degree-k multivectors (domain degree)."""
    src = basis_masks(g.n, k)
    dst = basis_masks(g.n, k - 1)
    col_index = {m: i for i, m in enumerate(dst)}
    entries: Dict[Tuple[int, int], Scalar] = {}
    for col, mi in enumerate(src):
        image = g.lie_L(KVector(g.n, k, {mi: Scalar(1)}))
        for mask, c in image.terms.items():
            entries[(col_index[mask], col)] = c
    mat = Matrix(len(dst), len(src), entries)
    return [KVector.from_vector(g.n, k, src, v) for v in mat.kernel_basis()]


@dataclass
class CohomologyReport:
    n: int
    betti: List[int]
    cocycle_dims: List[int]
    coboundary_dims: List[int]

    def to_json(self) -> dict:
        return {
            "dim": self.n,
            "betti": self.betti,
            "cocycles": self.cocycle_dims,
            "coboundaries": self.coboundary_dims,
        }


def betti(g: LieAlgebra) -> CohomologyReport:
    """All Betti numbers b_0..b_n, with cocycle/coboundary dimensions."""
    n = g.n
    ranks = [ce_differential(g, k).rank() for k in range(n + 1)]
    cocycles = [dim_lambda(n, k) - ranks[k] for k in range(n + 1)]
    cobound = [0] + [ranks[k] for k in range(n)]
    b = [cocycles[k] - cobound[k] for k in range(n + 1)]
    return CohomologyReport(n, b, cocycles, cobound)


def cocycle_basis(g: LieAlgebra, k: int) -> List[KForm]:
    masks = basis_masks(g.n, k)
    return [
        KForm.from_vector(g.n, k, masks, v)
        for v in ce_differential(g, k).kernel_basis()
    ]


def coboundary_matrix(g: LieAlgebra, k: int) -> Matrix:
    """Columns span the degree-k coboundaries (image of d from k-1)."""
    return ce_differential(g, k - 1) if k >= 1 else Matrix(dim_lambda(g.n, 0), 0, {})


def is_exact(g: LieAlgebra, a: KForm) -> bool:
    mat = coboundary_matrix(g, a.degree)
    return mat.solve(a.to_vector(basis_masks(g.n, a.degree))) is not None


def is_trivial(
    g: LieAlgebra, degrees: Sequence[int] = (3, 4)
) -> Tuple[bool, Optional[KForm]]:
    """True when b_k = 0 for every listed degree.

    On failure, also returns a witness: a closed non-exact form in the
    first offending degree."""
    rep = betti(g)
    for k in degrees:
        if k > g.n or rep.betti[k] == 0:
            continue
        bmat = coboundary_matrix(g, k)
        for z in cocycle_basis(g, k):
            if bmat.solve(z.to_vector(basis_masks(g.n, k))) is None:
                return False, z
        raise AssertionError("positive Betti number without a witness")
    return True, None


def kunneth_check(g: LieAlgebra, h: LieAlgebra) -> bool:
    """Betti numbers of a direct sum against the convolution formula."""
    bg = betti(g).betti
    bh = betti(h).betti
    bs = betti(g.direct_sum(h)).betti
    for k in range(g.n + h.n + 1):
        expect = sum(
            bg[i] * bh[k - i]
            for i in range(max(0, k - h.n), min(g.n, k) + 1)
        )
        if bs[k] != expect:
            return False
    return True


# -- extended Cartan formula ----------------------------------------------


def lie_derivative(g: LieAlgebra, x: KVector, a: KForm) -> KForm:
    """L_X a = X . da + d(X . a) for a single vector X."""
    if x.degree != 1:
        raise ValueError("lie_derivative wants a vector")
    return contract(x, d_form(g, a)) + d_form(g, contract(x, a))


def _hook_L(g: LieAlgebra, p: KVector, a: KForm) -> KForm:
    """The operator sum_i Q_{^i} . (L_{X_i} a), basis monomial by monomial."""
    s = p.degree
    out = KForm.zero(g.n, a.degree - s + 1)
    for mask, coeff in p.terms.items():
        idx = [i for i in range(1, g.n + 1) if mask & (1 << (i - 1))]
        for pos, i in enumerate(idx):
            rest = mask ^ (1 << (i - 1))
            sign = Scalar(1) if pos % 2 == 0 else Scalar(-1)
            deriv = lie_derivative(g, KVector.basis(g.n, [i]), a)
            hooked = contract(KVector(g.n, s - 1, {rest: Scalar(1)}), deriv)
            out = out + hooked.scale(coeff * sign)
    return out


def cartan_identity_check(g: LieAlgebra, p: KVector, a: KForm) -> bool:
    """p . da - (-1)^s d(p . a) == (.L)_p a - L(p) . a, sides built separately."""
    s = p.degree
    lhs = contract(p, d_form(g, a))
    da = d_form(g, contract(p, a))
    lhs = lhs - da if s % 2 == 0 else lhs + da
    rhs = _hook_L(g, p, a) - contract(g.lie_L(p), a)
    return (lhs - rhs).is_zero()
