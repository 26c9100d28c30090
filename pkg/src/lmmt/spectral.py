"""Hochschild-Serre machinery for ideals with small abelian quotient."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cohomology import betti, ce_differential, d_form
from .exterior import KForm, KVector, basis_masks, contract, dim_lambda
from .liealg import Brackets, LieAlgebra, structural_report
from .linalg import Matrix, extend_basis, in_span, row_space_basis
from .scalars import Scalar, sc


class SplitError(ValueError):
    pass


def _solve_in_basis(cols: List[List[Scalar]], v: List[Scalar]) -> List[Scalar]:
    sol = Matrix.from_columns(cols, nrows=len(v)).solve(v)
    if sol is None:
        raise SplitError("vector escapes the chosen basis")
    return sol


@dataclass
class IdealSplit:
    """An ideal k of g containing g' together with a lifted complement."""

    g: LieAlgebra
    ideal_basis: List[List[Scalar]]
    complement_basis: List[List[Scalar]]
    _adapted: Optional[LieAlgebra] = field(default=None, repr=False)

    def __post_init__(self):
        g, n = self.g, self.g.n
        m, p = len(self.ideal_basis), len(self.complement_basis)
        if m + p != n:
            raise SplitError("ideal and complement do not span")
        cols = [list(v) for v in self.ideal_basis + self.complement_basis]
        if Matrix.from_columns(cols, nrows=n).rank() != n:
            raise SplitError("ideal and complement do not span")
        ideal_span = row_space_basis(self.ideal_basis, n)
        for i in range(1, n + 1):
            e = [Scalar(1) if t == i - 1 else Scalar(0) for t in range(n)]
            for v in self.ideal_basis:
                if not in_span(ideal_span, g.bracket(e, list(v))):
                    raise SplitError("subspace is not an ideal")
        rep = structural_report(g)
        for v in rep.derived_basis:
            if not in_span(ideal_span, v):
                raise SplitError("quotient is not abelian: ideal misses g'")

    @classmethod
    def from_indices(cls, g: LieAlgebra, ideal: Sequence[int]) -> "IdealSplit":
        def e(i):
            return [Scalar(1) if t == i - 1 else Scalar(0) for t in range(g.n)]

        comp = [i for i in range(1, g.n + 1) if i not in set(ideal)]
        return cls(g, [e(i) for i in ideal], [e(i) for i in comp])

    @property
    def m(self) -> int:
        return len(self.ideal_basis)

    @property
    def codim(self) -> int:
        return len(self.complement_basis)

    def adapted(self) -> LieAlgebra:
        """g in a basis whose first m vectors span the ideal."""
        if self._adapted is None:
            g, n = self.g, self.g.n
            basis = [list(v) for v in self.ideal_basis + self.complement_basis]
            cols = basis
            brackets: Brackets = {}
            for i in range(n):
                for j in range(i + 1, n):
                    w = _solve_in_basis(cols, g.bracket(basis[i], basis[j]))
                    comp = {
                        k + 1: w[k] for k in range(n) if not w[k].is_zero()
                    }
                    if comp:
                        brackets[(i + 1, j + 1)] = comp
            self._adapted = LieAlgebra(n, brackets, validate=False)
        return self._adapted

    def ideal_algebra(self) -> LieAlgebra:
        m = self.m
        gt = self.adapted()
        brackets = {
            key: dict(comp)
            for key, comp in gt.brackets.items()
            if key[1] <= m
        }
        return LieAlgebra(m, brackets, validate=False)


def _restrict(form: KForm, m: int) -> KForm:
    """Drop terms touching the complement directions; reindex to dim m."""
    keep = {
        mask: c for mask, c in form.terms.items() if mask < (1 << m)
    }
    return KForm(m, form.degree, keep)


def _lift(form: KForm, n: int) -> KForm:
    return KForm(n, form.degree, dict(form.terms))


@dataclass
class InvariantCohomology:
    q: int
    dim_H: int
    dim_invariant: int
    operators: List[Matrix]
    invariant_basis: List[KForm]

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "dim_H": self.dim_H,
            "dim_invariant": self.dim_invariant,
            "invariant_basis": [f.to_json() for f in self.invariant_basis],
        }


def invariant_cohomology(split: IdealSplit, q: int) -> InvariantCohomology:
    """H^q(k), the quotient action on it per A.[a] = [A . da], joint kernel."""
    m, n = split.m, split.g.n
    gt = split.adapted()
    k = split.ideal_algebra()
    masks_q = basis_masks(m, q)
    z_basis = ce_differential(k, q).kernel_basis()
    b_mat = ce_differential(k, q - 1) if q >= 1 else Matrix.zero(len(masks_q), 0)
    b_basis = b_mat.column_space_basis()
    h_reps = extend_basis(b_basis, z_basis, len(masks_q))
    dim_h = len(h_reps)
    span_cols = b_basis + h_reps
    ops: List[Matrix] = []
    for a in range(m + 1, n + 1):
        cols: List[List[Scalar]] = []
        for rep in h_reps:
            alpha = _lift(KForm.from_vector(m, q, masks_q, rep), n)
            acted = _restrict(contract(KVector.basis(n, [a]), d_form(gt, alpha)), m)
            coords = _solve_in_basis(span_cols, acted.to_vector(masks_q)) if span_cols else []
            cols.append(coords[len(b_basis):])
        ops.append(Matrix.from_columns(cols, nrows=dim_h))
    if ops:
        stacked = ops[0]
        for op in ops[1:]:
            stacked = stacked.transpose().hstack(op.transpose()).transpose()
        kernel = stacked.kernel_basis()
    else:
        kernel = Matrix.identity(dim_h).to_rows()
    inv_forms = []
    for vec in kernel:
        acc = KForm.zero(m, q)
        for j, c in enumerate(vec):
            acc = acc + KForm.from_vector(m, q, masks_q, h_reps[j]).scale(c)
        inv_forms.append(acc)
    return InvariantCohomology(q, dim_h, len(kernel), ops, inv_forms)


@dataclass
class SpectralPage:
    level: int
    table: Dict[Tuple[int, int], int]

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "table": {f"{p},{q}": v for (p, q), v in sorted(self.table.items())},
        }


def hs_page(split: IdealSplit, level: int, max_q: int) -> SpectralPage:
    """E1 or E2 page of the ideal's spectral sequence, rows 0..max_q."""
    pa = split.codim
    if pa > 2:
        raise SplitError("quotient dimension must be 1 or 2")
    if level not in (1, 2):
        raise ValueError("level must be 1 or 2")
    table: Dict[Tuple[int, int], int] = {}
    for q in range(max_q + 1):
        inv = invariant_cohomology(split, q)
        if level == 1:
            for p in range(pa + 1):
                table[(p, q)] = dim_lambda(pa, p) * inv.dim_H
            continue
        if pa == 1:
            # one operator: kernel and cokernel have equal dimension
            table[(0, q)] = inv.dim_invariant
            table[(1, q)] = inv.dim_invariant
        else:
            a1, a2 = inv.operators
            v = inv.dim_H
            m1 = a1.transpose().hstack(a2.transpose()).transpose()  # v -> (A1 v, A2 v)
            top = a2.scale(Scalar(-1)).hstack(a1)  # (u, w) -> A1 w - A2 u
            table[(0, q)] = inv.dim_invariant
            table[(1, q)] = (2 * v - top.rank()) - m1.rank()
            im_cols = [a1.column(j) for j in range(v)] + [a2.column(j) for j in range(v)]
            table[(2, q)] = v - len(row_space_basis(im_cols, v))
    return SpectralPage(level, table)


# -- structure-theorem verification ---------------------------------------


def _quotient_functional_ideals(g: LieAlgebra) -> List[List[List[Scalar]]]:
    """Codimension-one ideals containing g', via a hyperplane grid on g/g'.

    The grid takes kernels of the dual quotient-basis functionals and of
    their pairwise sums and differences; full projective enumeration is
    impossible over the rationals, and these hyperplanes are the ones the
    structure arguments are sensitive to.
    """
    rep = structural_report(g)
    n = g.n
    dprime = rep.derived_basis
    comp = extend_basis(
        list(dprime),
        [[Scalar(1) if t == i else Scalar(0) for t in range(n)] for i in range(n)],
        n,
    )
    p = len(comp)
    funcs: List[List[Fraction]] = []
    for i in range(p):
        f = [Fraction(0)] * p
        f[i] = Fraction(1)
        funcs.append(f)
    for i in range(p):
        for j in range(i + 1, p):
            for s in (1, -1):
                f = [Fraction(0)] * p
                f[i], f[j] = Fraction(1), Fraction(s)
                funcs.append(f)
    ideals = []
    for f in funcs:
        fm = Matrix.from_rows([[Scalar(x) for x in f]])
        ker = fm.kernel_basis()  # vectors in quotient coordinates
        lifted = [
            [
                sum((v[i] * comp[i][t] for i in range(p)), Scalar(0))
                for t in range(n)
            ]
            for v in ker
        ]
        ideals.append([list(b) for b in dprime] + lifted)
    return ideals


@dataclass
class StructureVerdict:
    direct: bool
    structural: bool
    codim: int
    per_ideal: List[Dict[str, object]]

    @property
    def agrees(self) -> bool:
        return self.direct == self.structural

    def to_json(self) -> dict:
        return {
            "direct": self.direct,
            "structural": self.structural,
            "codim": self.codim,
            "agrees": self.agrees,
            "ideals": self.per_ideal,
        }


def _complement_for(g: LieAlgebra, ideal: List[List[Scalar]]) -> List[List[Scalar]]:
    n = g.n
    cand = [[Scalar(1) if t == i else Scalar(0) for t in range(n)] for i in range(n)]
    return extend_basis([list(v) for v in ideal], cand, n)


def verify_34_structure(g: LieAlgebra) -> StructureVerdict:
    """Direct Betti test against the invariant-cohomology conditions.

    Codimension-one ideals containing g' (enumerated over the hyperplane
    grid) must have H^i(k)^g = 0 for i = 2, 3, 4; when g' itself has
    codimension two or more it must additionally satisfy the condition
    for i = 1.  Non-solvable algebras fail the structural side outright.
    """
    rep = betti(g)
    direct = all(rep.betti[k] == 0 for k in (3, 4) if k <= g.n)
    srep = structural_report(g)
    per_ideal: List[Dict[str, object]] = []
    if not srep.solvable:
        return StructureVerdict(direct, False, srep.codim_derived, per_ideal)
    structural = True
    for ideal in _quotient_functional_ideals(g):
        split = IdealSplit(g, ideal, _complement_for(g, ideal))
        dims = {
            i: invariant_cohomology(split, i).dim_invariant
            for i in (2, 3, 4)
            if i <= split.m
        }
        ok = all(v == 0 for v in dims.values())
        per_ideal.append({"dim": split.m, "invariant_dims": dims, "vanishes": ok})
        structural = structural and ok
    if srep.codim_derived >= 2:
        ideal = [list(v) for v in srep.derived_basis]
        split = IdealSplit(g, ideal, _complement_for(g, ideal))
        dims = {
            i: invariant_cohomology(split, i).dim_invariant
            for i in (1, 2, 3, 4)
            if i <= split.m
        }
        ok = all(v == 0 for v in dims.values())
        per_ideal.append({"dim": split.m, "invariant_dims": dims, "vanishes": ok})
        structural = structural and ok
    return StructureVerdict(direct, structural, srep.codim_derived, per_ideal)


# -- diagonal extensions of abelian algebras ------------------------------


def abelian_eigen_criterion(lambdas: Sequence[Fraction]) -> bool:
    """No 2, 3 or 4 eigenvalues at distinct indices may sum to zero."""
    vals = [Fraction(x) for x in lambdas]
    for size in (2, 3, 4):
        for combo in itertools.combinations(vals, size):
            if sum(combo) == 0:
                return False
    return True


def diagonal_extension(lambdas: Sequence[Fraction]) -> LieAlgebra:
    """Extend abelian R^m by the diagonal derivation; generator first."""
    m = len(lambdas)
    brackets: Brackets = {}
    for i, lam in enumerate(lambdas, start=2):
        c = -sc(Fraction(lam))
        if not c.is_zero():
            brackets[(1, i)] = {i: c}
    return LieAlgebra(m + 1, brackets, validate=False)


def search_34_extensions(
    m: int,
    eig_range: Tuple[int, int],
    include_excluded: bool = False,
) -> List[Dict[str, object]]:
    """Enumerate diagonal extensions over an eigenvalue box.

    Each certificate cross-checks the eigenvalue criterion against the
    direct Betti computation on the built algebra."""
    lo, hi = eig_range
    out: List[Dict[str, object]] = []
    for tup in itertools.combinations_with_replacement(range(lo, hi + 1), m):
        lambdas = [Fraction(t) for t in tup]
        crit = abelian_eigen_criterion(lambdas)
        if not crit and not include_excluded:
            continue
        g = diagonal_extension(lambdas)
        b = betti(g).betti
        trivial = all(b[k] == 0 for k in (3, 4) if k <= g.n)
        out.append(
            {
                "eigenvalues": [str(t) for t in tup],
                "algebra": g.to_salamon(),
                "criterion": crit,
                "betti": b,
                "agrees": crit == trivial,
            }
        )
    return out
