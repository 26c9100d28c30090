"""Exterior algebra over a fixed n-dimensional basis.

Multi-indices are bitmasks over basis indices 1..n (bit i-1 represents
basis index i); signs are computed on the fly from popcounts of lower
bits.  Forms (KForm) live on the dual basis e^1..e^n, multivectors
(KVector) on E_1..E_n; both share the same sparse mask -> Scalar layout.
"""

from __future__ import annotations

from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple, Type, TypeVar

from .linalg import Vector
from .scalars import Scalar, sc


class DimensionMismatch(ValueError):
    pass


class DegreeError(ValueError):
    pass


# -- mask utilities --------------------------------------------------------


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        bit = 1 << (i - 1)
        if m & bit:
            raise ValueError(f"repeated index {i}")
        m |= bit
    return m


def indices_of(mask: int) -> List[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def wedge_sign(a: int, b: int) -> int:
    """Sign of merging e_a (ascending) followed by e_b into ascending order.

    Counts, for each index in b, the indices of a above it."""
    sign = 0
    bb = b
    while bb:
        low = bb & -bb
        sign += (a >> low.bit_length()).bit_count() + (1 if a & low else 0)
        # a & low nonzero never happens for disjoint masks; kept for safety
        bb ^= low
    return -1 if sign % 2 else 1


def contract_sign(i: int, mask: int) -> int:
    """Sign (-1)^pos of e_i in the ascending tuple of mask (i in mask)."""
    pos = (mask & ((1 << (i - 1)) - 1)).bit_count()
    return -1 if pos % 2 else 1


def basis_masks(n: int, k: int) -> List[int]:
    """Canonical (bitmask-ordered) basis of degree k over n indices."""
    if k < 0 or k > n:
        return []
    out = [m for m in range(1 << n) if m.bit_count() == k]
    return out


_E = TypeVar("_E", bound="AltElement")


class AltElement:
    """Common sparse container for forms and multivectors."""

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: Dict[int, Scalar]):
        clean = {}
        for m, c in terms.items():
            c = sc(c)
            if m.bit_count() != degree:
                raise ValueError(f"mask {m:b} has wrong degree (expected {degree})")
            if not c.is_zero():
                clean[m] = c
        # degrees beyond n only name the zero module
        if degree < 0 or (degree > n and clean):
            raise DegreeError(f"degree {degree} out of range for n={n}")
        self.n = n
        self.degree = degree
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls: Type[_E], n: int, degree: int) -> _E:
        return cls(n, degree, {})

    @classmethod
    def basis(cls: Type[_E], n: int, indices: Sequence[int], coeff=1) -> _E:
        m = mask_of(indices)
        return cls(n, len(indices), {m: sc(coeff)})

    @classmethod
    def from_terms(cls: Type[_E], n: int, terms: Iterable[Tuple[Sequence[int], object]]) -> _E:
        acc: Dict[int, Scalar] = {}
        degree = None
        for idx, coeff in terms:
            m = mask_of(idx)
            if degree is None:
                degree = m.bit_count()
            acc[m] = acc.get(m, Scalar(0)) + sc(coeff)
        return cls(n, degree if degree is not None else 0, acc)

    # -- algebra -----------------------------------------------------------

    def _check_compat(self, other: "AltElement"):
        if self.n != other.n:
            raise DimensionMismatch(f"ambient dimensions differ: {self.n} vs {other.n}")
        if type(self) is not type(other):
            raise TypeError("cannot combine forms and multivectors")

    def __add__(self: _E, other: _E) -> _E:
        self._check_compat(other)
        if self.degree != other.degree:
            if not self.terms:
                return other
            if not other.terms:
                return self
            raise DegreeError("degree mismatch in sum")
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, Scalar(0)) + c
        return type(self)(self.n, self.degree, acc)

    def __neg__(self: _E) -> _E:
        return type(self)(self.n, self.degree, {m: -c for m, c in self.terms.items()})

    def __sub__(self: _E, other: _E) -> _E:
        return self + (-other)

    def scale(self: _E, c) -> _E:
        c = sc(c)
        return type(self)(self.n, self.degree, {m: c * v for m, v in self.terms.items()})

    def wedge(self: _E, other: _E) -> _E:
        """Graded-commutative product; zero when degrees overflow n."""
        self._check_compat(other)
        deg = self.degree + other.degree
        if deg > self.n:
            return type(self).zero(self.n, 0)
        acc: Dict[int, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                s = wedge_sign(ma, mb)
                m = ma | mb
                c = ca * cb if s > 0 else -(ca * cb)
                acc[m] = acc.get(m, Scalar(0)) + c
        return type(self)(self.n, deg, acc)

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.n == other.n
            and self.terms == other.terms
            and (self.degree == other.degree or not self.terms)
        )

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices: Sequence[int]) -> Scalar:
        return self.terms.get(mask_of(indices), Scalar(0))

    # -- coordinates -------------------------------------------------------

    def to_vector(self, masks: Sequence[int]) -> Vector:
        return [self.terms.get(m, Scalar(0)) for m in masks]

    @classmethod
    def from_vector(cls: Type[_E], n: int, degree: int, masks: Sequence[int], v: Sequence) -> _E:
        return cls(n, degree, {m: sc(x) for m, x in zip(masks, v)})

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": {
                ",".join(str(i) for i in indices_of(m)): str(c)
                for m, c in sorted(self.terms.items())
            },
        }

    @classmethod
    def from_json(cls: Type[_E], data: dict) -> _E:
        terms = {}
        for key, val in data.get("terms", {}).items():
            idx = [int(t) for t in key.split(",")] if key else []
            terms[mask_of(idx)] = Scalar.parse(val)
        return cls(data["n"], data["degree"], terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            label = "e" + "".join(str(i) for i in indices_of(m)) if m else "1"
            parts.append(f"({c})*{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}[{self}]"


class KForm(AltElement):
    """Alternating form on the dual basis e^1..e^n."""


class KVector(AltElement):
    """Multivector on the basis E_1..E_n."""


def contract(p: KVector, a: KForm) -> KForm:
    """Partial evaluation (p .| a)(Y...) = a(X_1..X_s, Y...)."""
    if not isinstance(p, KVector) or not isinstance(a, KForm):
        raise TypeError("contract expects (KVector, KForm)")
    if p.n != a.n:
        raise DimensionMismatch(f"ambient dimensions differ: {p.n} vs {a.n}")
    if p.degree > a.degree:
        raise DegreeError(f"cannot contract degree {p.degree} into degree {a.degree}")
    acc: Dict[int, Scalar] = {}
    for mp, cp in p.terms.items():
        for ma, ca in a.terms.items():
            if mp & ma != mp:
                continue
            # evaluate the s vectors front to back
            sign = 1
            rest = ma
            for i in indices_of(mp):
                sign *= contract_sign(i, rest)
                rest ^= 1 << (i - 1)
            c = cp * ca if sign > 0 else -(cp * ca)
            acc[rest] = acc.get(rest, Scalar(0)) + c
    return KForm(a.n, a.degree - p.degree, acc)


def hodge_star(a: KForm) -> KForm:
    """Hodge star for the standard orthonormal basis and orientation."""
    n = a.n
    full = (1 << n) - 1
    acc: Dict[int, Scalar] = {}
    for m, c in a.terms.items():
        comp = full ^ m
        s = wedge_sign(m, comp)
        acc[comp] = acc.get(comp, Scalar(0)) + (c if s > 0 else -c)
    return KForm(n, n - a.degree, acc)


def volume_form(n: int) -> KForm:
    return KForm.basis(n, list(range(1, n + 1)))


def dim_lambda(n: int, k: int) -> int:
    return comb(n, k)
