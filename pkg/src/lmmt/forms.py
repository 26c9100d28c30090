"""Distinguished constant-coefficient forms and their orbit analysis."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from .exterior import (
    KForm,
    KVector,
    basis_masks,
    contract,
    dim_lambda,
    hodge_star,
    indices_of,
    volume_form,
    wedge_sign,
)
from .linalg import Matrix
from .scalars import FieldError, Scalar

HALF = Scalar(Fraction(1, 2))
SQRT3_HALF = Scalar(0, Fraction(1, 2), 3)

_G2_TERMS = [
    ((1, 2, 3), 1), ((1, 4, 5), 1), ((1, 6, 7), 1), ((2, 4, 6), 1),
    ((2, 5, 7), -1), ((3, 4, 7), -1), ((3, 5, 6), -1),
]

_SPIN7_TERMS = [
    ((1, 2, 3, 4), 1), ((1, 2, 5, 6), 1), ((3, 4, 7, 8), 1),
    ((3, 4, 5, 6), 1), ((1, 2, 7, 8), 1), ((1, 3, 5, 7), 1),
    ((1, 3, 6, 8), -1), ((2, 4, 5, 7), -1), ((2, 4, 6, 8), 1),
    ((1, 4, 5, 8), -1), ((1, 4, 6, 7), -1), ((2, 3, 5, 8), -1),
    ((2, 3, 6, 7), -1), ((5, 6, 7, 8), 1),
]

_PSU3_TERMS = [
    ((1, 2, 3), Scalar(1)),
    ((1, 4, 7), HALF), ((1, 5, 6), -HALF),
    ((2, 4, 6), HALF), ((2, 5, 7), HALF),
    ((3, 4, 5), HALF), ((3, 6, 7), -HALF),
    ((4, 5, 8), SQRT3_HALF), ((6, 7, 8), SQRT3_HALF),
]

_CVOL6_TERMS = [
    ((1, 3, 5), 1), ((1, 4, 6), -1), ((2, 3, 6), -1), ((2, 4, 5), -1),
]

_SYMPLECTIC_RE = re.compile(r"symplectic\((\d+),(\d+)\)")


def builtin_form(name: str, sqrt: Optional[int] = None) -> KForm:
    """Model forms: g2, spin7, psu3, cvol6, symplectic(k,n)."""
    if name == "g2":
        return KForm.from_terms(7, _G2_TERMS)
    if name == "spin7":
        return KForm.from_terms(8, _SPIN7_TERMS)
    if name == "psu3":
        if sqrt not in (None, 3):
            raise FieldError("the psu3 form needs sqrt(3); got sqrt(%r)" % sqrt)
        return KForm.from_terms(8, _PSU3_TERMS)
    if name == "cvol6":
        return KForm.from_terms(6, _CVOL6_TERMS)
    m = _SYMPLECTIC_RE.fullmatch(name)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        if 2 * k > n:
            raise ValueError(f"symplectic({k},{n}) needs n >= 2k")
        return KForm.from_terms(n, [((2 * i - 1, 2 * i), 1) for i in range(1, k + 1)])
    raise ValueError(f"unknown builtin form {name!r}")


# -- degeneracy ------------------------------------------------------------


def contraction_kernel(alpha: KForm) -> List[List[Scalar]]:
    """Null space of v -> v . alpha."""
    n = alpha.n
    masks = basis_masks(n, alpha.degree - 1)
    cols = [
        contract(KVector.basis(n, [i]), alpha).to_vector(masks)
        for i in range(1, n + 1)
    ]
    return Matrix.from_columns(cols, nrows=len(masks)).kernel_basis()


def weak_nondegenerate(alpha: KForm) -> bool:
    return not contraction_kernel(alpha)


def construct_nondegenerate(r: int, n: int) -> Optional[KForm]:
    """A weakly non-degenerate r-form on R^n, or None when impossible.

    Possible exactly for n >= r and n != r + 1; built by recursion on
    (r, n) splitting off the last coordinate.
    """
    if r < 3:
        raise ValueError("degree must be at least 3")
    if n < r or n == r + 1:
        return None
    if r == n:
        return volume_form(n)
    if r == 3 and n % 2 == 1:
        omega = builtin_form(f"symplectic({(n - 1) // 2},{n})")
        return omega.wedge(KForm.basis(n, [n]))
    if r == 3:
        inner = construct_nondegenerate(3, n - 3)
        shifted = KForm(n, 3, {mask << 3: c for mask, c in inner.terms.items()})
        return KForm.basis(n, [1, 2, 3]) + shifted
    inner = construct_nondegenerate(r - 1, n - 1)
    return KForm(n, r - 1, dict(inner.terms)).wedge(KForm.basis(n, [n]))


# -- two-form normal form --------------------------------------------------


@dataclass
class NormalFormResult:
    k: int
    basis_change: Matrix  # columns are the new basis in old coordinates

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "basis_change": [
                [str(x) for x in self.basis_change.row(i)]
                for i in range(self.basis_change.rows)
            ],
        }


def _gram(omega: KForm) -> List[List[Scalar]]:
    n = omega.n
    g = [[Scalar(0)] * n for _ in range(n)]
    for mask, c in omega.terms.items():
        i, j = indices_of(mask)
        g[i - 1][j - 1] = c
        g[j - 1][i - 1] = -c
    return g


def two_form_normal_form(omega: KForm) -> NormalFormResult:
    """Darboux basis: omega pulls back to e12 + e34 + ... (k terms).

    Inductive pairing with lexicographically-first pivots, so the basis
    change is deterministic.
    """
    if omega.degree != 2:
        raise ValueError("normal form wants a two-form")
    n = omega.n
    g = _gram(omega)

    def ev(u: List[Scalar], v: List[Scalar]) -> Scalar:
        return sum(
            (u[i] * g[i][j] * v[j] for i in range(n) for j in range(n)),
            Scalar(0),
        )

    def e(i):
        return [Scalar(1) if t == i else Scalar(0) for t in range(n)]

    working = [e(i) for i in range(n)]
    paired: List[List[Scalar]] = []
    while True:
        pivot = None
        for a in range(len(working)):
            for b in range(a + 1, len(working)):
                if not ev(working[a], working[b]).is_zero():
                    pivot = (a, b)
                    break
            if pivot:
                break
        if pivot is None:
            break
        a, b = pivot
        u = working[a]
        val = ev(u, working[b])
        v = [x / val for x in working[b]]
        rest = []
        for t, w in enumerate(working):
            if t in (a, b):
                continue
            wu, wv = ev(w, u), ev(w, v)
            rest.append(
                [w[i] - wv * u[i] + wu * v[i] for i in range(n)]
            )
        paired.extend([u, v])
        working = rest
    cols = paired + working
    change = Matrix.from_columns(cols, nrows=n)
    return NormalFormResult(len(paired) // 2, change)


def pullback(alpha: KForm, change: Matrix) -> KForm:
    """alpha composed with the column basis of change."""
    n = alpha.n
    cols = [change.column(j) for j in range(change.cols)]
    out = KForm.zero(n, alpha.degree)
    for mask in basis_masks(n, alpha.degree):
        idx = indices_of(mask)
        vecs = [cols[i - 1] for i in idx]
        val = _evaluate(alpha, vecs)
        if not val.is_zero():
            out = out + KForm(n, alpha.degree, {mask: val})
    return out


def _evaluate(alpha: KForm, vecs: List[List[Scalar]]) -> Scalar:
    """alpha(v_1, ..., v_r) by iterated contraction."""
    n = alpha.n
    acc = alpha
    for v in vecs:
        kv = KVector(n, 1, {
            1 << i: c for i, c in enumerate(v) if not c.is_zero()
        })
        acc = contract(kv, acc)
    # after contracting all slots we hold a 0-form
    return acc.terms.get(0, Scalar(0))


# -- stabilizers and stability --------------------------------------------


def _act_elementary(alpha: KForm, a: int, b: int) -> KForm:
    """Derivation action of the elementary matrix E_ab on the form.

    E_ab sends the covector e^a to e^b; extend as a derivation of the
    exterior algebra."""
    n = alpha.n
    out = KForm.zero(n, alpha.degree)
    abit = 1 << (a - 1)
    for mask, c in alpha.terms.items():
        if not (mask & abit):
            continue
        if a == b:
            out = out + KForm(n, alpha.degree, {mask: c})
            continue
        rest = mask ^ abit
        if rest & (1 << (b - 1)):
            continue
        pos = bin(mask & (abit - 1)).count("1")  # slot of a in the term
        sgn = Scalar(1) if pos % 2 == 0 else Scalar(-1)
        wsign = wedge_sign(1 << (b - 1), rest)
        coeff = c * sgn * (Scalar(1) if wsign > 0 else Scalar(-1))
        out = out + KForm(n, alpha.degree, {rest | (1 << (b - 1)): coeff})
    return out


def stabilizer_algebra(alpha: KForm) -> List[Matrix]:
    """Basis of the annihilating matrix algebra inside gl(n)."""
    n = alpha.n
    masks = basis_masks(n, alpha.degree)
    cols = []
    keys = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    for a, b in keys:
        cols.append(_act_elementary(alpha, a, b).to_vector(masks))
    system = Matrix.from_columns(cols, nrows=len(masks))
    out = []
    for vec in system.kernel_basis():
        entries = {}
        for t, (a, b) in enumerate(keys):
            if not vec[t].is_zero():
                # E_ab has matrix entry (b, a): it maps the vector e_a to e_b
                entries[(b - 1, a - 1)] = vec[t]
        out.append(Matrix(n, n, entries))
    return out


@dataclass
class FormAnalysis:
    form: KForm
    kernel_basis: List[List[Scalar]]
    weakly_nondegenerate: bool
    stabilizer_dim: int
    orbit_dim: int
    stable: bool

    def to_json(self) -> dict:
        return {
            "n": self.form.n,
            "degree": self.form.degree,
            "kernel_dim": len(self.kernel_basis),
            "weakly_nondegenerate": self.weakly_nondegenerate,
            "stabilizer_dim": self.stabilizer_dim,
            "orbit_dim": self.orbit_dim,
            "stable": self.stable,
        }


def analyze(alpha: KForm) -> FormAnalysis:
    kernel = contraction_kernel(alpha)
    stab = len(stabilizer_algebra(alpha))
    n = alpha.n
    orbit = n * n - stab
    return FormAnalysis(
        form=alpha,
        kernel_basis=kernel,
        weakly_nondegenerate=not kernel,
        stabilizer_dim=stab,
        orbit_dim=orbit,
        stable=orbit == dim_lambda(n, alpha.degree),
    )


def is_stable(alpha: KForm) -> bool:
    return analyze(alpha).stable


def stability_admissible(r: int, n: int) -> bool:
    """Degrees admitting stable forms on R^n."""
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    if r == 0:
        return False
    if r in (1, 2, n - 2, n - 1, n):
        return True
    return r in (3, n - 3) and n in (6, 7, 8)


def fully_nondeg_admissible(r: int, n: int) -> bool:
    """Degrees r >= 3 admitting fully non-degenerate forms on R^n."""
    if r < 3:
        raise ValueError("degree must be at least 3")
    return r == n or (r, n) in ((3, 7), (4, 8))


# -- pointwise special-holonomy identities --------------------------------


def _shift_down(alpha: KForm) -> KForm:
    """Relabel indices 2..8 to 1..7 (index 1 must be absent)."""
    if any(mask & 1 for mask in alpha.terms):
        raise ValueError("form touches the split direction")
    return KForm(alpha.n - 1, alpha.degree, {m >> 1: c for m, c in alpha.terms.items()})


def holonomy_identities(which: str) -> Dict[str, object]:
    """Verdict and computed values for the model-form identities."""
    if which == "g2metric":
        phi = builtin_form("g2")
        vol = volume_form(7)
        matrix = []
        ok = True
        for i in range(1, 8):
            row = []
            for j in range(1, 8):
                w = (
                    contract(KVector.basis(7, [i]), phi)
                    .wedge(contract(KVector.basis(7, [j]), phi))
                    .wedge(phi)
                )
                c = w.terms.get((1 << 7) - 1, Scalar(0))
                row.append(c)
                ok = ok and c == (Scalar(6) if i == j else Scalar(0))
            matrix.append(row)
        return {"ok": ok, "matrix": [[str(x) for x in r] for r in matrix]}
    if which == "spin7vol":
        big = builtin_form("spin7")
        sq = big.wedge(big)
        c = sq.terms.get((1 << 8) - 1, Scalar(0))
        return {"ok": c == Scalar(14), "coefficient": str(c)}
    if which == "spin7bivector":
        big = builtin_form("spin7")
        ok = True
        values = {}
        for i in range(1, 9):
            for j in range(i + 1, 9):
                om = contract(KVector.basis(8, [i, j]), big)
                c = om.wedge(om).wedge(big).terms.get((1 << 8) - 1, Scalar(0))
                values[f"{i},{j}"] = str(c)
                ok = ok and c == Scalar(6)
        rank12 = 2 * two_form_normal_form(
            contract(KVector.basis(8, [1, 2]), big)
        ).k
        return {"ok": ok and rank12 == 6, "values": values, "rank_12": rank12}
    if which == "spin7split":
        big = builtin_form("spin7")
        phi = contract(KVector.basis(8, [1]), big)
        expected = KForm.from_terms(
            8,
            [
                ((2, 3, 4), 1), ((2, 5, 6), 1), ((2, 7, 8), 1),
                ((3, 5, 7), 1), ((3, 6, 8), -1), ((4, 5, 8), -1),
                ((4, 6, 7), -1),
            ],
        )
        rest = big - KForm.basis(8, [1]).wedge(phi)
        star = hodge_star(_shift_down(phi))
        ok = phi == expected and _shift_down(rest) == star
        return {"ok": ok, "phi": phi.to_json()}
    raise ValueError(f"unknown identity {which!r}")
