"""Lie algebras by structure constants.

Sign convention (fixed throughout): a listed differential "de^k = e^i
wedge e^j" means (d gamma)(X, Y) = -gamma([X, Y]), hence stores
[e_i, e_j] = -e_k.  All computed dimensions are invariant under the
opposite convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exterior import KVector, indices_of
from .linalg import Matrix, Vector, row_space_basis
from .scalars import Scalar, sc

Brackets = Dict[Tuple[int, int], Dict[int, Scalar]]


class JacobiError(ValueError):
    def __init__(self, triple: Tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"Jacobi identity fails on basis triple {triple}")


class LeibnizError(ValueError):
    pass


class SalamonSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class LieAlgebra:
    """Finite-dimensional Lie algebra with exact structure constants.

    brackets maps (i, j) with i < j to the sparse component vector of
    [e_i, e_j]; antisymmetry is implicit in the storage.
    """

    def __init__(self, n: int, brackets: Brackets, validate: bool = True):
        self.n = n
        clean: Brackets = {}
        for (i, j), comp in brackets.items():
            if not (1 <= i < j <= n):
                raise ValueError(f"bad bracket key ({i},{j})")
            comp = {k: sc(c) for k, c in comp.items() if not sc(c).is_zero()}
            if comp:
                clean[(i, j)] = comp
        self.brackets = clean
        if validate:
            bad = self.jacobi_check()
            if bad is not None:
                raise JacobiError(bad)

    # -- bracket evaluation ------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Dict[int, Scalar]:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        out = [Scalar(0)] * self.n
        for i, ui in enumerate(u, start=1):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v, start=1):
                if vj.is_zero():
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k - 1] = out[k - 1] + ui * vj * c
        return out

    def ad_matrix(self, i: int) -> Matrix:
        """Matrix of ad(e_i) acting on basis vectors."""
        entries = {}
        for j in range(1, self.n + 1):
            for k, c in self.bracket_basis(i, j).items():
                entries[(k - 1, j - 1)] = c
        return Matrix(self.n, self.n, entries)

    def jacobi_check(self) -> Optional[Tuple[int, int, int]]:
        """None if Jacobi holds; else the first failing basis triple."""
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                for k in range(j + 1, self.n + 1):
                    acc = [Scalar(0)] * self.n
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_basis(a, b)
                        for m, cm in inner.items():
                            for p, cp in self.bracket_basis(m, c).items():
                                acc[p - 1] = acc[p - 1] + cm * cp
                    if any(not x.is_zero() for x in acc):
                        return (i, j, k)
        return None

    # -- the bracket-extension map L --------------------------------------

    def lie_L(self, p: KVector) -> KVector:
        """L(Q) = sum_{i<j} [X_i, X_j] wedge Q_{^ij}, extended linearly."""
        if p.n != self.n:
            raise ValueError("multivector dimension mismatch")
        out = KVector.zero(self.n, max(p.degree - 1, 0))
        for mask, coeff in p.terms.items():
            idx = indices_of(mask)
            s = len(idx)
            for a in range(s):
                for b in range(a + 1, s):
                    sign = -1 if (a + b) % 2 else 1  # (-1)^{(a+1)+(b+1)}
                    rest = mask ^ (1 << (idx[a] - 1)) ^ (1 << (idx[b] - 1))
                    br = self.bracket_basis(idx[a], idx[b])
                    if not br:
                        continue
                    vec = KVector(self.n, 1, {1 << (k - 1): c for k, c in br.items()})
                    rest_v = KVector(self.n, s - 2, {rest: sc(coeff if sign > 0 else -coeff)})
                    out = out + vec.wedge(rest_v)
        return out

    # -- constructions -----------------------------------------------------

    def direct_sum(self, other: "LieAlgebra") -> "LieAlgebra":
        n = self.n + other.n
        brackets: Brackets = {k: dict(v) for k, v in self.brackets.items()}
        off = self.n
        for (i, j), comp in other.brackets.items():
            brackets[(i + off, j + off)] = {k + off: c for k, c in comp.items()}
        return LieAlgebra(n, brackets, validate=False)

    def to_json(self) -> dict:
        d = 1
        payload = []
        for (i, j), comp in sorted(self.brackets.items()):
            cdict = {}
            for k, c in sorted(comp.items()):
                cdict[str(k)] = str(c)
                if not c.is_rational():
                    d = c.d
            payload.append({"i": i, "j": j, "c": cdict})
        return {"dim": self.n, "brackets": payload, "field": {"sqrt": d}}

    @classmethod
    def from_json(cls, data: dict) -> "LieAlgebra":
        brackets: Brackets = {}
        for entry in data.get("brackets", []):
            comp = {int(k): Scalar.parse(v) for k, v in entry["c"].items()}
            brackets[(entry["i"], entry["j"])] = comp
        return cls(data["dim"], brackets)

    # -- Salamon notation --------------------------------------------------

    def to_salamon(self) -> str:
        """Serialize as the comma list of de^k expansions."""
        parts = []
        for k in range(1, self.n + 1):
            terms = []
            for (i, j), comp in sorted(self.brackets.items()):
                c = comp.get(k)
                if c is None:
                    continue
                coeff = -c  # de^k = -sum c^k_{ij} e^{ij}
                pair = f"{i}{j}" if self.n <= 9 else f"[{i},{j}]"
                if coeff == 1:
                    terms.append(f"+{pair}")
                elif coeff == Scalar(-1):
                    terms.append(f"-{pair}")
                else:
                    sgn = "+"
                    if coeff.is_rational() and coeff.a < 0:
                        sgn, coeff = "-", -coeff
                    terms.append(f"{sgn}{coeff}.{pair}")
            if not terms:
                parts.append("0")
            else:
                joined = "".join(terms)
                parts.append(joined[1:] if joined.startswith("+") else joined)
        return ",".join(parts)

    def __repr__(self):
        return f"LieAlgebra({self.to_salamon()!r})"


# -- Salamon parser --------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<pair>\d\d(?![\d./]))|(?P<bracket>\[\s*\d+\s*,\s*\d+\s*\])"
    r"|(?P<rat>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_]\w*)|(?P<op>[+\-.,]))"
)


def parse_salamon(
    text: str,
    params: Optional[Dict[str, Fraction]] = None,
    excluded: Optional[Dict[str, Sequence[Fraction]]] = None,
) -> LieAlgebra:
    """Parse Salamon notation like "0,12,2.13" into a validated algebra.

    params binds identifiers to explicit rationals.  excluded maps a
    parameter name to values for which the caller warned the construction
    degenerates; hitting one raises a UserWarning (not an error).
    """
    params = params or {}
    import warnings

    exprs = _split_top(text)
    n = len(exprs)
    diffs: List[Dict[Tuple[int, int], Scalar]] = []
    for expr, offset in exprs:
        diffs.append(_parse_expr(expr, offset, n, params, excluded, warnings))
    brackets: Brackets = {}
    for k, two_form in enumerate(diffs, start=1):
        for (i, j), c in two_form.items():
            brackets.setdefault((i, j), {})[k] = brackets.get((i, j), {}).get(k, Scalar(0)) - c
    alg = LieAlgebra(n, brackets, validate=True)
    return alg


def _split_top(text: str) -> List[Tuple[str, int]]:
    out = []
    start = 0
    depth = 0
    for pos, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append((text[start:pos], start))
            start = pos + 1
    out.append((text[start:], start))
    return out


def _parse_expr(expr, offset, n, params, excluded, warnings):
    stripped = expr.strip()
    if stripped == "0":
        return {}
    if not stripped:
        raise SalamonSyntaxError("empty expression", offset)
    terms: Dict[Tuple[int, int], Scalar] = {}
    pos = 0
    sign = Scalar(1)
    expect_term = True
    coeff: Optional[Scalar] = None
    pending_dot = False
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m or m.end() == pos:
            if expr[pos:].strip() == "":
                break
            raise SalamonSyntaxError(f"unexpected character {expr[pos]!r}", offset + pos)
        pos = m.end()
        if m.group("op") in ("+", "-"):
            if expect_term and m.group("op") == "-" and coeff is None:
                sign = -sign
                continue
            if expect_term:
                raise SalamonSyntaxError("misplaced sign", offset + m.start())
            sign = Scalar(1) if m.group("op") == "+" else Scalar(-1)
            expect_term, coeff, pending_dot = True, None, False
        elif m.group("op") == ".":
            if coeff is None:
                raise SalamonSyntaxError("dot without coefficient", offset + m.start())
            pending_dot = True
        elif m.group("rat"):
            if coeff is not None:
                raise SalamonSyntaxError("two coefficients in a term", offset + m.start())
            coeff = Scalar(Fraction(m.group("rat")))
        elif m.group("ident"):
            name = m.group("ident")
            if name not in params:
                raise SalamonSyntaxError(f"unbound parameter {name!r}", offset + m.start())
            value = Fraction(params[name])
            if excluded and name in excluded and value in [Fraction(v) for v in excluded[name]]:
                warnings.warn(
                    f"parameter {name} = {value} lies in the excluded set", UserWarning
                )
            coeff = Scalar(value)
        elif m.group("pair") or m.group("bracket"):
            if m.group("pair"):
                i, j = int(m.group("pair")[0]), int(m.group("pair")[1])
            else:
                nums = re.findall(r"\d+", m.group("bracket"))
                i, j = int(nums[0]), int(nums[1])
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise SalamonSyntaxError(f"bad index pair {i}{j}", offset + m.start())
            flip = Scalar(1)
            if i > j:
                i, j, flip = j, i, Scalar(-1)
            c = sign * flip * (coeff if coeff is not None else Scalar(1))
            terms[(i, j)] = terms.get((i, j), Scalar(0)) + c
            sign, coeff, expect_term, pending_dot = Scalar(1), None, False, False
        else:  # pragma: no cover
            raise SalamonSyntaxError("unrecognised token", offset + m.start())
    if expect_term and not terms:
        raise SalamonSyntaxError("trailing operator", offset + len(expr))
    return {k: v for k, v in terms.items() if not v.is_zero()}


# -- derivations -----------------------------------------------------------


@dataclass(frozen=True)
class Derivation:
    """A derivation of parent, as the matrix with T(e_j) = sum_i M[i][j] e_i."""

    parent: LieAlgebra
    matrix: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        n = self.parent.n
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("derivation matrix has wrong shape")
        bad = self._leibniz_violation()
        if bad is not None:
            raise LeibnizError(f"Leibniz rule fails on basis pair {bad}")

    @classmethod
    def from_rows(cls, parent: LieAlgebra, rows: Sequence[Sequence]) -> "Derivation":
        return cls(parent, tuple(tuple(sc(x) for x in r) for r in rows))

    def apply(self, v: Sequence[Scalar]) -> Vector:
        n = self.parent.n
        return [
            sum((self.matrix[i][j] * v[j] for j in range(n)), Scalar(0)) for i in range(n)
        ]

    def _basis_image(self, j: int) -> Vector:
        return [self.matrix[i][j - 1] for i in range(self.parent.n)]

    def _leibniz_violation(self) -> Optional[Tuple[int, int]]:
        g = self.parent
        for i in range(1, g.n + 1):
            for j in range(i + 1, g.n + 1):
                lhs = self.apply(_comp_vec(g.n, g.bracket_basis(i, j)))
                rhs1 = g.bracket(self._basis_image(i), _basis_vec(g.n, j))
                rhs2 = g.bracket(_basis_vec(g.n, i), self._basis_image(j))
                if any(
                    not (lhs[k] - rhs1[k] - rhs2[k]).is_zero() for k in range(g.n)
                ):
                    return (i, j)
        return None

    def commutes_with(self, other: "Derivation") -> bool:
        n = self.parent.n
        for j in range(1, n + 1):
            ab = self.apply(other._basis_image(j))
            ba = other.apply(self._basis_image(j))
            if any(not (ab[k] - ba[k]).is_zero() for k in range(n)):
                return False
        return True


def _basis_vec(n: int, i: int) -> Vector:
    v = [Scalar(0)] * n
    v[i - 1] = Scalar(1)
    return v


def _comp_vec(n: int, comp: Dict[int, Scalar]) -> Vector:
    v = [Scalar(0)] * n
    for k, c in comp.items():
        v[k - 1] = c
    return v


def grading_derivation(k: LieAlgebra, weights: Sequence[int]) -> Derivation:
    """Diagonal derivation from a positive grading; validates the grading."""
    if len(weights) != k.n or any(w <= 0 for w in weights):
        raise ValueError("need one positive weight per basis vector")
    for (i, j), comp in k.brackets.items():
        for m in comp:
            if weights[m - 1] != weights[i - 1] + weights[j - 1]:
                raise ValueError(
                    f"weights incompatible: [e{i},e{j}] has component e{m} "
                    f"of weight {weights[m - 1]} != {weights[i - 1] + weights[j - 1]}"
                )
    rows = [
        [Scalar(weights[i]) if i == j else Scalar(0) for j in range(k.n)]
        for i in range(k.n)
    ]
    return Derivation.from_rows(k, rows)


def extend_by_derivations(k: LieAlgebra, ds: Sequence[Derivation]) -> LieAlgebra:
    """Semidirect extension by an abelian algebra of 1 or 2 derivations.

    The new generators come first in the basis, so k's basis vector i
    becomes e_{len(ds)+i}."""
    if not 1 <= len(ds) <= 2:
        raise ValueError("supply one or two derivations")
    for d in ds:
        if d.parent is not k and d.parent.brackets != k.brackets:
            raise ValueError("derivation parent mismatch")
    if len(ds) == 2 and not ds[0].commutes_with(ds[1]):
        raise ValueError("the two derivations do not commute")
    p = len(ds)
    n = k.n + p
    brackets: Brackets = {}
    for (i, j), comp in k.brackets.items():
        brackets[(i + p, j + p)] = {m + p: c for m, c in comp.items()}
    for a, d in enumerate(ds, start=1):
        for j in range(1, k.n + 1):
            col = d._basis_image(j)
            comp = {m + p: col[m - 1] for m in range(1, k.n + 1) if not col[m - 1].is_zero()}
            if comp:
                brackets[(a, j + p)] = comp
    return LieAlgebra(n, brackets, validate=True)


# -- structural analysis ---------------------------------------------------


@dataclass
class StructuralReport:
    n: int
    derived_series_dims: List[int]
    lower_central_dims: List[int]
    solvable: bool
    nilpotent: bool
    unimodular: bool
    codim_derived: int
    derived_basis: List[Vector] = field(repr=False, default_factory=list)

    def to_json(self) -> dict:
        return {
            "derived_series": self.derived_series_dims,
            "lower_central_series": self.lower_central_dims,
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "unimodular": self.unimodular,
            "codim_derived": self.codim_derived,
        }


def _span_brackets(g: LieAlgebra, basis1: List[Vector], basis2: List[Vector]) -> List[Vector]:
    prods = [g.bracket(u, v) for u in basis1 for v in basis2]
    return row_space_basis(prods, g.n)


def structural_report(g: LieAlgebra) -> StructuralReport:
    full = [_basis_vec(g.n, i) for i in range(1, g.n + 1)]
    derived = [full]
    while True:
        nxt = _span_brackets(g, derived[-1], derived[-1])
        if len(nxt) == len(derived[-1]):
            break
        derived.append(nxt)
        if not nxt:
            break
    lower = [full]
    while True:
        nxt = _span_brackets(g, full, lower[-1])
        if len(nxt) == len(lower[-1]):
            break
        lower.append(nxt)
        if not nxt:
            break
    unimodular = all(
        sum((g.ad_matrix(i).entries.get((j, j), Scalar(0)) for j in range(g.n)), Scalar(0)).is_zero()
        for i in range(1, g.n + 1)
    )
    dprime = derived[1] if len(derived) > 1 else _span_brackets(g, full, full)
    return StructuralReport(
        n=g.n,
        derived_series_dims=[len(b) for b in derived],
        lower_central_dims=[len(b) for b in lower],
        solvable=len(derived[-1]) == 0,
        nilpotent=len(lower[-1]) == 0,
        unimodular=unimodular,
        codim_derived=g.n - len(dprime),
        derived_basis=dprime,
    )


# -- builtins --------------------------------------------------------------


def _su2() -> LieAlgebra:
    m = Scalar(-2)
    return LieAlgebra(3, {(1, 2): {3: m}, (2, 3): {1: m}, (1, 3): {2: Scalar(2)}})


def _su3() -> LieAlgebra:
    """Anti-Hermitian Gell-Mann basis X_a; [X_a, X_b] = f_abc X_c."""
    half = Fraction(1, 2)
    s3h = Scalar(0, half, 3)  # sqrt(3)/2
    f: Dict[Tuple[int, int, int], Scalar] = {
        (1, 2, 3): Scalar(1),
        (1, 4, 7): Scalar(half),
        (1, 5, 6): Scalar(-half),
        (2, 4, 6): Scalar(half),
        (2, 5, 7): Scalar(half),
        (3, 4, 5): Scalar(half),
        (3, 6, 7): Scalar(-half),
        (4, 5, 8): s3h,
        (6, 7, 8): s3h,
    }
    brackets: Brackets = {}
    for (a, b, c), v in f.items():
        # totally antisymmetric in all three slots
        for (i, j, k), s in (
            ((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1),
            ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1),
        ):
            if i < j:
                comp = brackets.setdefault((i, j), {})
                comp[k] = comp.get(k, Scalar(0)) + (v if s > 0 else -v)
    return LieAlgebra(8, brackets)


def builtin(name: str) -> LieAlgebra:
    """Named algebras: su2, su3, heisenberg, abelian:n."""
    if name == "su2":
        return _su2()
    if name == "su3":
        return _su3()
    if name == "heisenberg":
        return parse_salamon("0,0,12")
    if name.startswith("abelian:"):
        n = int(name.split(":", 1)[1])
        return LieAlgebra(n, {})
    raise ValueError(f"unknown builtin algebra {name!r}")
