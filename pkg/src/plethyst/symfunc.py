"""Homogeneous symmetric functions with exact coefficients.

A SymFunc is a finite coefficient map over partitions of a fixed degree,
tagged with a basis: 'm' (monomial), 's' (Schur), 'h' (complete homogeneous)
or 'p' (power sum).  Coefficients are exact: integers everywhere, with
rationals permitted only under the power-sum tag.

Basis conversions among m, s and h go through the Kostka matrix of the
degree and its inverse, with the index conventions fixed once:

    s_lam = sum_mu  K[lam][mu]    * m_mu
    m_lam = sum_mu  Kinv[lam][mu] * s_mu
    s_nu  = sum_kap Kinv[kap][nu] * h_kap
    h_kap = sum_nu  K[nu][kap]    * s_nu

Conversions out of the power-sum basis are owned by the oracle module and
routed there; conversions into it are not provided.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    BasisMismatchError,
    IntegralityError,
    SizeMismatchError,
    UnsupportedConversionError,
)
from .limits import check_partition_size
from .partitions import Partition, partitions_of
from .tableaux import kostka

MONOMIAL = "m"
SCHUR = "s"
HOMOGENEOUS = "h"
POWERSUM = "p"

_BASES = frozenset({MONOMIAL, SCHUR, HOMOGENEOUS, POWERSUM})

Coeff = "int | Fraction"


@dataclass(frozen=True, eq=False)
class SymFunc:
    """Immutable-by-convention symmetric function of one degree.

    The coefficient dict is normalized at construction: keys become tuples,
    zero terms are dropped, and integral Fractions collapse to int.  Do not
    mutate ``coeffs`` afterwards.
    """

    basis: str
    degree: int
    coeffs: dict

    def __post_init__(self):
        if self.basis not in _BASES:
            raise BasisMismatchError(f"unknown basis tag {self.basis!r}")
        norm = {}
        for part, c in self.coeffs.items():
            key = tuple(part)
            if any(x < 1 for x in key) or any(a < b for a, b in zip(key, key[1:])):
                raise SizeMismatchError(f"{key} is not a partition")
            if sum(key) != self.degree:
                raise SizeMismatchError(
                    f"term {key} has size {sum(key)}, expected degree {self.degree}"
                )
            if isinstance(c, Fraction):
                if c.denominator == 1:
                    c = int(c)
                elif self.basis != POWERSUM:
                    raise IntegralityError(
                        f"non-integer coefficient {c} in basis {self.basis!r} at {key}"
                    )
            elif not isinstance(c, int):
                raise TypeError(f"coefficients must be int or Fraction, got {type(c)}")
            if c:
                norm[key] = c
        object.__setattr__(self, "coeffs", norm)

    def coefficient(self, part) -> "int | Fraction":
        return self.coeffs.get(tuple(part), 0)

    def terms(self) -> list:
        """(partition, coefficient) pairs, decreasing revlex."""
        return sorted(self.coeffs.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            raise BasisMismatchError(f"cannot add bases {self.basis!r} and {other.basis!r}")
        if self.degree != other.degree:
            raise SizeMismatchError(f"cannot add degrees {self.degree} and {other.degree}")
        out = dict(self.coeffs)
        for part, c in other.coeffs.items():
            out[part] = out.get(part, 0) + c
        return SymFunc(self.basis, self.degree, out)

    def scale(self, c: "int | Fraction") -> "SymFunc":
        return SymFunc(self.basis, self.degree, {p: c * v for p, v in self.coeffs.items()})

    def to_json_dict(self) -> dict:
        """JSON form with arbitrary-precision coefficients as strings."""
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"partition": list(part), "coeff": str(c)} for part, c in self.terms()
            ],
        }


def add(f: SymFunc, g: SymFunc) -> SymFunc:
    return f + g


def scale(c, f: SymFunc) -> SymFunc:
    return f.scale(c)


def coefficient(f: SymFunc, part) -> "int | Fraction":
    return f.coefficient(part)


@dataclass(frozen=True)
class KostkaMatrix:
    """Kostka numbers of one degree and their inverse.

    Rows and columns are indexed by the partitions of ``degree`` in
    decreasing revlex order, which makes both matrices upper unitriangular:
    K[lam][mu] = 0 whenever lam < mu.
    """

    degree: int
    parts: tuple[Partition, ...]
    index: dict
    k_rows: tuple[tuple[int, ...], ...]
    kinv_rows: tuple[tuple[int, ...], ...]

    def kostka(self, lam, mu) -> int:
        return self.k_rows[self.index[tuple(lam)]][self.index[tuple(mu)]]

    def kostka_inv(self, lam, mu) -> int:
        return self.kinv_rows[self.index[tuple(lam)]][self.index[tuple(mu)]]


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> KostkaMatrix:
    """Build (and cache) the Kostka matrix and its inverse for degree ``n``.

    Every entry of K is counted by honest tableau enumeration, including the
    entries that triangularity predicts to vanish.  The inverse is found by
    back-substitution on the unitriangular system, so it is exact and
    integral; K * Kinv = I is checked by the test suite, not assumed here.
    """
    check_partition_size(n)
    parts = tuple(partitions_of(n))
    p = len(parts)
    k_rows = [[kostka(parts[i], parts[j]) for j in range(p)] for i in range(p)]
    kinv = [[0] * p for _ in range(p)]
    for j in range(p):
        kinv[j][j] = 1
        for i in range(j - 1, -1, -1):
            acc = 0
            for k in range(i + 1, j + 1):
                if k_rows[i][k]:
                    acc += k_rows[i][k] * kinv[k][j]
            kinv[i][j] = -acc
    return KostkaMatrix(
        degree=n,
        parts=parts,
        index={part: i for i, part in enumerate(parts)},
        k_rows=tuple(tuple(row) for row in k_rows),
        kinv_rows=tuple(tuple(row) for row in kinv),
    )


def _apply_matrix(f: SymFunc, rows, index, parts, target: str) -> SymFunc:
    """Right-multiply the coefficient row vector of f by the given matrix."""
    out: dict = {}
    for part, c in f.coeffs.items():
        row = rows[index[part]]
        for j, entry in enumerate(row):
            if entry:
                key = parts[j]
                out[key] = out.get(key, 0) + c * entry
    return SymFunc(target, f.degree, out)


def _apply_matrix_transposed(f: SymFunc, rows, index, parts, target: str) -> SymFunc:
    """Right-multiply the coefficient row vector of f by the matrix transpose."""
    out: dict = {}
    for part, c in f.coeffs.items():
        j = index[part]
        for i, row in enumerate(rows):
            if row[j]:
                key = parts[i]
                out[key] = out.get(key, 0) + c * row[j]
    return SymFunc(target, f.degree, out)


def convert(f: SymFunc, target: str) -> SymFunc:
    """Convert ``f`` to the target basis, exactly.

    Supported: any conversion among m, s and h, and conversions out of p
    (delegated to the oracle's power-sum arithmetic).  Conversions into p are
    not provided.
    """
    if target not in _BASES:
        raise UnsupportedConversionError(f"unknown basis tag {target!r}")
    if target == POWERSUM and f.basis != POWERSUM:
        raise UnsupportedConversionError(
            "conversion into the power-sum basis is not provided"
        )
    if f.basis == target:
        return f
    if f.basis == POWERSUM:
        from .oracle import powersum_to_monomial

        return convert(powersum_to_monomial(f), target)
    km = kostka_matrix(f.degree)
    if f.basis == SCHUR and target == MONOMIAL:
        return _apply_matrix(f, km.k_rows, km.index, km.parts, MONOMIAL)
    if f.basis == MONOMIAL and target == SCHUR:
        return _apply_matrix(f, km.kinv_rows, km.index, km.parts, SCHUR)
    if f.basis == SCHUR and target == HOMOGENEOUS:
        # s_nu = sum_kap Kinv[kap][nu] h_kap: pick up the nu-th column of Kinv.
        return _apply_matrix_transposed(f, km.kinv_rows, km.index, km.parts, HOMOGENEOUS)
    if f.basis == HOMOGENEOUS and target == SCHUR:
        # h_kap = sum_nu K[nu][kap] s_nu: pick up the kap-th column of K.
        return _apply_matrix_transposed(f, km.k_rows, km.index, km.parts, SCHUR)
    # m <-> h and anything else compose through the Schur basis.
    return convert(convert(f, SCHUR), target)


def hall_inner(f: SymFunc, g: SymFunc) -> "int | Fraction":
    """Hall inner product, computed in the orthonormal Schur basis."""
    if f.degree != g.degree:
        raise SizeMismatchError(
            f"inner product needs equal degrees, got {f.degree} and {g.degree}"
        )
    fs = convert(f, SCHUR)
    gs = convert(g, SCHUR)
    total = 0
    small, large = (fs.coeffs, gs.coeffs) if len(fs.coeffs) <= len(gs.coeffs) else (gs.coeffs, fs.coeffs)
    for part, c in small.items():
        other = large.get(part)
        if other:
            total += c * other
    if isinstance(total, Fraction) and total.denominator == 1:
        total = int(total)
    return total
