"""Independent cross-checks for the composite-tableau pipeline.

Two routes that share no enumeration code with the plethysm module:

* the power-sum route: expand s_lam over power sums with symmetric-group
  characters (Murnaghan-Nakayama recursion), substitute p_k -> p_{k*i}
  multiplicatively, and convert the result back p -> m -> s with exact
  rational arithmetic whose denominators must cancel;
* the finite-variable route: substitute the monomials of s_mu in a fixed
  number of variables into s_lam and read coefficients off the resulting
  polynomial.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import BasisMismatchError, SizeMismatchError
from .limits import check_degree, check_partition_size
from .partitions import Partition, as_partition, partitions_of
from .symfunc import MONOMIAL, POWERSUM, SCHUR, SymFunc, convert
from .tableaux import enumerate_ssyt, weight


def centralizer_order(rho) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    rho = as_partition(rho)
    out = 1
    for part, m in Counter(rho).items():
        out *= part**m * factorial(m)
    return out


def _border_strip_removals(lam: Partition, size: int):
    """(smaller shape, strip height) for each removable border strip.

    Works on first-column hook lengths (beta numbers): removing a strip of
    the given size moves one beta number down by ``size`` into a free slot,
    and the height is the number of beta numbers jumped over.
    """
    n_rows = len(lam)
    beta = [lam[i] + n_rows - 1 - i for i in range(n_rows)]
    taken = set(beta)
    out = []
    for b in beta:
        nb = b - size
        if nb < 0 or nb in taken:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        parts = tuple(new_beta[i] - (n_rows - 1 - i) for i in range(n_rows))
        out.append((tuple(x for x in parts if x), height))
    return out


@lru_cache(maxsize=None)
def _character_rec(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    size, rest = rho[0], rho[1:]
    total = 0
    for smaller, height in _border_strip_removals(lam, size):
        total += (-1) ** height * _character_rec(smaller, rest)
    return total


def character(lam, rho) -> int:
    """Irreducible symmetric-group character chi^lam at cycle type rho."""
    lam, rho = as_partition(lam), as_partition(rho)
    if sum(lam) != sum(rho):
        raise SizeMismatchError(
            f"character needs |lam| == |rho|, got {sum(lam)} and {sum(rho)}"
        )
    return _character_rec(lam, rho)


def schur_to_powersum(lam) -> SymFunc:
    """s_lam = sum_rho chi^lam(rho) / z_rho * p_rho, exactly."""
    lam = as_partition(lam)
    n = sum(lam)
    check_partition_size(n)
    coeffs = {}
    for rho in partitions_of(n):
        chi = character(lam, rho)
        if chi:
            coeffs[rho] = Fraction(chi, centralizer_order(rho))
    return SymFunc(POWERSUM, n, coeffs)


@lru_cache(maxsize=None)
def _distribution_count(rho: Partition, nu: Partition) -> int:
    """Ways to assign the parts of rho to the positions of nu so that the
    parts landing on position j sum to nu_j.

    This is the coefficient of m_nu in p_rho: expanding the product
    p_{rho_1} * p_{rho_2} * ... chooses one variable per factor, and the
    monomial x^nu arises once per such assignment.
    """
    if sum(rho) != sum(nu):
        return 0
    memo: dict = {}

    def assign(i: int, caps: tuple[int, ...]) -> int:
        if i == len(rho):
            return 1
        key = (i, caps)
        hit = memo.get(key)
        if hit is not None:
            return hit
        part = rho[i]
        total = 0
        for j, cap in enumerate(caps):
            if cap >= part:
                total += assign(i + 1, caps[:j] + (cap - part,) + caps[j + 1 :])
        memo[key] = total
        return total

    return assign(0, nu)


def powersum_to_monomial(f: SymFunc) -> SymFunc:
    """Expand a power-sum element over monomial symmetric functions."""
    if f.basis != POWERSUM:
        raise BasisMismatchError(f"expected basis 'p', got {f.basis!r}")
    out: dict = {}
    targets = partitions_of(f.degree)
    for rho, c in f.coeffs.items():
        for nu in targets:
            r = _distribution_count(rho, nu)
            if r:
                out[nu] = out.get(nu, 0) + c * r
    return SymFunc(MONOMIAL, f.degree, out)


def stretch_powersum(f: SymFunc, k: int) -> SymFunc:
    """Substitute p_i -> p_{k*i}: the plethysm p_k[f] for f in the p basis."""
    if f.basis != POWERSUM:
        raise BasisMismatchError(f"expected basis 'p', got {f.basis!r}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return SymFunc(
        POWERSUM,
        k * f.degree,
        {tuple(k * x for x in rho): c for rho, c in f.coeffs.items()},
    )


def _powersum_product(factors) -> dict:
    """Multiply p-basis coefficient maps; parts concatenate and sort."""
    prod: dict = {(): Fraction(1)}
    for coeffs in factors:
        nxt: dict = {}
        for alpha, ca in prod.items():
            for sigma, cs in coeffs.items():
                key = tuple(sorted(alpha + sigma, reverse=True))
                nxt[key] = nxt.get(key, 0) + ca * cs
        prod = nxt
    return prod


def plethysm_via_powersums(lam, mu) -> SymFunc:
    """s_lam[s_mu] in the Schur basis, computed entirely through power sums.

    Integrality of the final monomial and Schur coefficients is enforced at
    construction; a fractional survivor signals a bug, not bad input.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    m = sum(lam)
    degree = m * sum(mu)
    check_degree(degree)
    if m == 0:
        return SymFunc(SCHUR, 0, {(): 1})
    pmu = schur_to_powersum(mu)
    stretched = {k: stretch_powersum(pmu, k).coeffs for k in set().union(*partitions_of(m))}
    total: dict = {}
    for rho in partitions_of(m):
        chi = character(lam, rho)
        if not chi:
            continue
        outer = Fraction(chi, centralizer_order(rho))
        for alpha, ca in _powersum_product(stretched[k] for k in rho).items():
            total[alpha] = total.get(alpha, 0) + outer * ca
    psf = SymFunc(POWERSUM, degree, total)
    return convert(powersum_to_monomial(psf), SCHUR)


def finite_variable_expansion(lam, mu, num_vars: int) -> dict:
    """Coefficients of s_lam[s_mu] as a polynomial in num_vars variables.

    The monomials of s_mu (one per tableau, with multiplicity, ordered by
    decreasing exponent vector) form the substitution alphabet; evaluating
    s_lam on that alphabet and collecting exponent vectors gives the
    polynomial directly.  Returns a map from length-num_vars exponent
    tuples to integers.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if num_vars < 1:
        raise ValueError(f"num_vars must be >= 1, got {num_vars}")
    check_degree(sum(lam) * sum(mu))
    monomials = []
    for t in enumerate_ssyt(mu, num_vars):
        w = weight(t)
        monomials.append(tuple(w) + (0,) * (num_vars - len(w)))
    monomials.sort(reverse=True)
    out: Counter = Counter()
    for u in enumerate_ssyt(lam, len(monomials)):
        expo = [0] * num_vars
        for row in u:
            for letter in row:
                mono = monomials[letter - 1]
                for v in range(num_vars):
                    expo[v] += mono[v]
        out[tuple(expo)] += 1
    return dict(out)
