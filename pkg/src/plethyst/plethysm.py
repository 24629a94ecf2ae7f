"""Plethysm of Schur functions through composite tableaux.

The coefficient of m_nu in s_lam[s_mu] counts the lam-shaped arrangements of
semistandard tableaux of shape mu whose entries total nu: the inner tableaux
weakly increase along rows and strictly increase down columns of lam, under
the reading-word order on same-shape tableaux.  Summing over all nu gives
the monomial expansion; the inverse Kostka matrix (or, as a cross-check, a
signed Jacobi-Trudi sum over permutations) turns it into the Schur
expansion.  The revlex-largest Schur term is also predicted in closed form
and verified against the computed expansion.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import (
    BoundExceededError,
    EmptyPartitionError,
    PlethystError,
    SizeMismatchError,
)
from .limits import MAX_JACOBI_TRUDI_LENGTH, check_degree
from .partitions import Partition, as_partition, partitions_of
from .symfunc import MONOMIAL, SCHUR, SymFunc, convert
from .tableaux import Tableau, enumerate_ssyt, kostka, weight


@dataclass(frozen=True)
class CompositeTableau:
    """A lam-shaped arrangement of same-shape inner tableaux.

    ``rows[i][j]`` is the inner tableau sitting in cell (i, j) of the outer
    shape.
    """

    outer_shape: Partition
    inner_shape: Partition
    rows: tuple

    def cell(self, i: int, j: int) -> Tableau:
        return self.rows[i][j]

    def total_weight(self) -> tuple[int, ...]:
        counts: list[int] = []
        for row in self.rows:
            for t in row:
                w = weight(t)
                if len(w) > len(counts):
                    counts.extend([0] * (len(w) - len(counts)))
                for v, c in enumerate(w):
                    counts[v] += c
        return tuple(counts)

    def to_json_dict(self) -> dict:
        return {
            "outer_shape": list(self.outer_shape),
            "inner_shape": list(self.inner_shape),
            "rows": [[[list(r) for r in t] for t in row] for row in self.rows],
        }


@lru_cache(maxsize=None)
def _inner_pool(mu: Partition, max_entry: int):
    """SSYT of shape mu with entries <= max_entry, ascending word order.

    Returns the tableaux together with their weights in sparse form
    (0-based value index, multiplicity), which is what the counting loops
    consume.
    """
    pool = enumerate_ssyt(mu, max_entry)
    sparse = tuple(
        tuple((v, c) for v, c in enumerate(weight(t)) if c) for t in pool
    )
    return tuple(pool), sparse


@lru_cache(maxsize=None)
def _strip_successors(outer: Partition, sigma: Partition):
    """Ways to grow sigma inside outer by a non-empty horizontal strip.

    Returns (sigma', cells added) pairs.  Appending at most one cell per
    column is equivalent to capping row i of sigma' at row i-1 of sigma.
    """
    n_rows = len(outer)
    sig = list(sigma) + [0] * (n_rows - len(sigma))
    acc = [0] * n_rows
    out = []

    def grow(i: int, added: int) -> None:
        if i == n_rows:
            if added:
                out.append((tuple(x for x in acc if x), added))
            return
        hi = outer[i] if i == 0 else min(outer[i], sig[i - 1])
        for v in range(sig[i], hi + 1):
            acc[i] = v
            grow(i + 1, added + v - sig[i])

    grow(0, 0)
    return tuple(out)


@lru_cache(maxsize=None)
def _weight_classes(mu: Partition, nu: Partition):
    """Weights of shape-mu tableaux fitting under nu, with multiplicities.

    Returns (weight, count) pairs where weight is a dense vector of length
    len(nu) bounded by nu componentwise and count is the number of
    semistandard tableaux of shape mu with that weight, i.e. a Kostka
    number.  Pairs come in descending lexicographic order of the weight so
    that letters rich in small values are consumed first.
    """
    n = sum(mu)
    width = len(nu)
    kostka_by_sorted: dict = {}
    out = []
    acc = [0] * width

    def fill(pos: int, remaining: int) -> None:
        if pos == width:
            if remaining:
                return
            key = tuple(sorted(acc, reverse=True))
            count = kostka_by_sorted.get(key)
            if count is None:
                count = kostka(mu, key)
                kostka_by_sorted[key] = count
            if count:
                out.append((tuple(acc), count))
            return
        for c in range(min(nu[pos], remaining), -1, -1):
            acc[pos] = c
            fill(pos + 1, remaining - c)
        acc[pos] = 0

    fill(0, n)
    return tuple(out)


def _validate_triple(lam, mu, nu):
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(nu) != sum(lam) * sum(mu):
        raise SizeMismatchError(
            f"weight {nu} has size {sum(nu)}, composite shape holds {sum(lam) * sum(mu)} cells"
        )
    return lam, mu, nu


def count_composite_tableaux(lam, mu, nu) -> int:
    """Number of composite tableaux of outer shape lam, inner shape mu and
    total weight nu; equivalently the coefficient of m_nu in s_lam[s_mu].

    Reading an arrangement as a semistandard filling of lam over the
    alphabet of inner tableaux, the count is a sum over chains of horizontal
    strips, one strip per alphabet letter.  That view powers a forward
    dynamic program whose states are (filled subshape, remaining weight)
    pairs, folded letter by letter.  The count only depends on the multiset
    of letter weights (the number of fillings with a given content is
    content-symmetric), so the alphabet is built from Kostka multiplicities
    of weights bounded by nu rather than from the tableaux themselves.  The
    DP agrees with the direct cell-by-cell enumeration below but handles
    the full expansion of a degree-10 product in seconds, with memory
    bounded by the live state set instead of a tableau pool or search tree.
    """
    lam, mu, nu = _validate_triple(lam, mu, nu)
    if not lam:
        return 1
    if not mu:
        # Every cell holds the empty tableau; equal entries break column
        # strictness as soon as there is a second row.
        return 1 if len(lam) <= 1 else 0
    classes = _weight_classes(mu, nu)
    letters = []
    for w, count in classes:
        sw = tuple((v, c) for v, c in enumerate(w) if c)
        letters.extend([sw] * count)
    r = len(letters)
    if r == 0:
        return 0
    width = len(nu)
    cells = sum(lam)

    # masks[i]: union of entry supports over letters[i:].  A state whose
    # remaining weight needs a value no later letter contains is dead.
    masks = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        m = masks[i + 1]
        for v, _ in letters[i]:
            m |= 1 << v
        masks[i] = m

    # With one outer cell left, the remaining weight must be some letter's
    # weight verbatim.
    letter_weights = {w for w, _ in classes}

    zero = (0,) * width
    target = (lam, zero)
    states: dict = {((), tuple(nu)): 1}
    for i in range(r):
        sw = letters[i]
        next_mask = masks[i + 1]
        additions: dict = {}
        for (sigma, rem), count in states.items():
            if sigma == lam:
                continue
            copies = min(rem[v] // c for v, c in sw)
            if copies == 0:
                continue
            for sigma2, added in _strip_successors(lam, sigma):
                if added > copies:
                    continue
                new_rem = list(rem)
                for v, c in sw:
                    new_rem[v] -= c * added
                need = 0
                for v, c in enumerate(new_rem):
                    if c:
                        need |= 1 << v
                left = cells - sum(sigma2)
                if left == 0:
                    if need:
                        continue
                elif need & ~next_mask:
                    continue
                elif left == 1 and tuple(new_rem) not in letter_weights:
                    continue
                key = (sigma2, tuple(new_rem))
                additions[key] = additions.get(key, 0) + count
        for key, count in additions.items():
            states[key] = states.get(key, 0) + count
    return states.get(target, 0)


def _arrangements(lam: Partition, pool, sparse, rem) -> Iterable[tuple]:
    """Cell-by-cell DFS over lam in row-major order.

    ``grid`` holds indices into the word-sorted pool, so the arrangement
    constraints become: weakly increasing along rows, strictly increasing
    down columns.  ``rem`` is the remaining weight budget, or None for the
    entry-bounded variant.
    """
    cells = [(i, j) for i, length in enumerate(lam) for j in range(length)]
    grid = [[0] * length for length in lam]

    def fill(pos: int):
        if pos == len(cells):
            yield tuple(tuple(pool[k] for k in row) for row in grid)
            return
        i, j = cells[pos]
        lo = 0
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for k in range(lo, len(pool)):
            if rem is not None:
                sw = sparse[k]
                if any(rem[v] < c for v, c in sw):
                    continue
                for v, c in sw:
                    rem[v] -= c
                grid[i][j] = k
                yield from fill(pos + 1)
                for v, c in sw:
                    rem[v] += c
            else:
                grid[i][j] = k
                yield from fill(pos + 1)

    yield from fill(0)


def composite_tableaux(lam, mu, nu) -> list[CompositeTableau]:
    """All composite tableaux of outer shape lam, inner shape mu and total
    weight nu, in deterministic DFS order."""
    lam, mu, nu = _validate_triple(lam, mu, nu)
    if not lam:
        return [CompositeTableau(lam, mu, ())]
    if not mu:
        if len(lam) > 1:
            return []
        rows = tuple(tuple(() for _ in range(length)) for length in lam)
        return [CompositeTableau(lam, mu, rows)]
    pool, sparse = _inner_pool(mu, len(nu))
    keep = [k for k in range(len(pool)) if all(c <= nu[v] for v, c in sparse[k])]
    pool = [pool[k] for k in keep]
    sparse = [sparse[k] for k in keep]
    rem = list(nu)
    return [
        CompositeTableau(lam, mu, rows)
        for rows in _arrangements(lam, pool, sparse, rem)
    ]


def bounded_composite_tableaux(lam, mu, max_entry: int) -> list[CompositeTableau]:
    """All composite tableaux with inner entries bounded by max_entry."""
    lam, mu = as_partition(lam), as_partition(mu)
    if max_entry < 0:
        raise ValueError(f"max_entry must be non-negative, got {max_entry}")
    if not lam:
        return [CompositeTableau(lam, mu, ())]
    if not mu:
        if len(lam) > 1:
            return []
        rows = tuple(tuple(() for _ in range(length)) for length in lam)
        return [CompositeTableau(lam, mu, rows)]
    pool, sparse = _inner_pool(mu, max_entry)
    return [
        CompositeTableau(lam, mu, rows)
        for rows in _arrangements(lam, list(pool), list(sparse), None)
    ]


def monomial_expansion(lam, mu) -> SymFunc:
    """s_lam[s_mu] in the monomial basis, with exact integer coefficients."""
    lam, mu = as_partition(lam), as_partition(mu)
    check_degree(sum(lam) * sum(mu))
    return _monomial_expansion(lam, mu)


@lru_cache(maxsize=None)
def _monomial_expansion(lam: Partition, mu: Partition) -> SymFunc:
    degree = sum(lam) * sum(mu)
    coeffs = {}
    for nu in partitions_of(degree):
        c = count_composite_tableaux(lam, mu, nu)
        if c:
            coeffs[nu] = c
    return SymFunc(MONOMIAL, degree, coeffs)


def schur_expansion(lam, mu) -> SymFunc:
    """s_lam[s_mu] in the Schur basis, via the inverse Kostka matrix."""
    out = convert(monomial_expansion(lam, mu), SCHUR)
    for part, c in out.coeffs.items():
        if c < 0:
            raise PlethystError(
                f"internal error: negative Schur coefficient {c} at {part}; "
                "this indicates a broken index convention"
            )
    return out


def first_term(lam, mu) -> Partition:
    """The revlex-largest partition carrying a non-zero Schur coefficient.

    Writing m = |lam| and r for the number of rows of mu, it is

        (m*mu_1, ..., m*mu_{r-1}, m*(mu_r - 1) + lam_1, lam_2, ...)

    and its coefficient is 1.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not lam or not mu:
        raise EmptyPartitionError("first_term needs non-empty partitions")
    m = sum(lam)
    head = [m * part for part in mu[:-1]]
    head.append(m * (mu[-1] - 1) + lam[0])
    head.extend(lam[1:])
    nu0 = tuple(x for x in head if x)
    assert all(a >= b for a, b in zip(nu0, nu0[1:])), nu0
    assert sum(nu0) == m * sum(mu), nu0
    return nu0


def leading_tableaux(mu, count: int) -> list[Tableau]:
    """The inner tableaux that build the maximal-weight arrangement.

    The first is the superstandard tableau of shape mu (row i filled with
    i); the k-th, for k >= 2, replaces the last entry of the bottom row by
    r + k - 1, where r is the number of rows.  Their weights are mu and
    (mu_1, ..., mu_r - 1, 0, ..., 0, 1) with the final 1 in position
    r + k - 1.
    """
    mu = as_partition(mu)
    if not mu:
        raise EmptyPartitionError("leading_tableaux needs a non-empty shape")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    base = [[i + 1] * length for i, length in enumerate(mu)]
    out = [tuple(tuple(row) for row in base)]
    for k in range(2, count + 1):
        rows = [list(row) for row in base]
        rows[-1][-1] = len(mu) + k - 1
        out.append(tuple(tuple(row) for row in rows))
    return out


def jacobi_trudi_term(pi, nu) -> tuple[int, ...]:
    """Index sequence (nu_{pi(i)} - pi(i) + i) of one Jacobi-Trudi summand.

    ``pi`` is a permutation of 1..l(nu) given as a tuple of images.  Entries
    of the result may be negative or zero; the caller normalizes.
    """
    nu = as_partition(nu)
    perm = tuple(pi)
    if sorted(perm) != list(range(1, len(nu) + 1)):
        raise ValueError(f"pi must be a permutation of 1..{len(nu)}, got {perm}")
    return tuple(nu[perm[i] - 1] - perm[i] + i + 1 for i in range(len(nu)))


def _permutation_sign(perm: tuple[int, ...]) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


def schur_coefficient_jacobi_trudi(lam, mu, nu, *, max_length: int = MAX_JACOBI_TRUDI_LENGTH) -> int:
    """Coefficient of s_nu in s_lam[s_mu] as a signed sum over S_{l(nu)}.

    Each permutation contributes sign(pi) times the monomial coefficient at
    the normalized index sequence: a term with a negative entry vanishes,
    zeros are dropped, and the rest is sorted into a partition.  The sum is
    factorial in l(nu), so the length is capped (raise ``max_length``
    deliberately for bigger runs).
    """
    lam, mu, nu = _validate_triple(lam, mu, nu)
    length = len(nu)
    if length > max_length:
        raise BoundExceededError(
            f"l(nu) = {length} exceeds the Jacobi-Trudi length cap {max_length}"
        )
    mono = monomial_expansion(lam, mu).coeffs
    total = 0
    for perm in permutations(range(1, length + 1)):
        alpha = tuple(nu[perm[i] - 1] - perm[i] + i + 1 for i in range(length))
        if any(a < 0 for a in alpha):
            continue
        kappa = tuple(sorted((a for a in alpha if a), reverse=True))
        c = mono.get(kappa, 0)
        if c:
            total += _permutation_sign(perm) * c
    return total


@dataclass
class ExpansionReport:
    """Everything verify_first_term computed for one (lam, mu) pair."""

    lam: Partition
    mu: Partition
    monomial_coeffs: dict
    schur_coeffs: dict
    predicted_first_term: Partition
    observed_first_term: Partition
    first_term_coefficient: int
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json_dict(self) -> dict:
        def term_list(coeffs: dict) -> list:
            return [
                {"partition": list(part), "coeff": str(c)}
                for part, c in sorted(coeffs.items(), reverse=True)
            ]

        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "monomial_coeffs": term_list(self.monomial_coeffs),
            "schur_coeffs": term_list(self.schur_coeffs),
            "predicted_first_term": list(self.predicted_first_term),
            "observed_first_term": list(self.observed_first_term),
            "first_term_coefficient": str(self.first_term_coefficient),
            "checks": dict(self.checks),
            "passed": self.passed,
        }


def verify_first_term(lam, mu, use_oracle: bool = False) -> ExpansionReport:
    """Expand s_lam[s_mu] both ways and test the first-term prediction.

    Checks, all recorded by name: the predicted first term is the observed
    revlex-maximal Schur term and carries coefficient 1; the monomial
    coefficient at the prediction is 1 and vanishes strictly above it; every
    monomial coefficient dominates the matching Schur coefficient, which is
    non-negative.  With ``use_oracle`` the whole Schur expansion is also
    compared against the independent power-sum pipeline.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    mono = monomial_expansion(lam, mu)
    schur = schur_expansion(lam, mu)
    nu0 = first_term(lam, mu)
    observed = max(schur.coeffs)
    checks = {
        "predicted_equals_observed_first_term": observed == nu0,
        "first_term_coefficient_is_one": schur.coefficient(nu0) == 1,
        "monomial_first_term_is_one": mono.coefficient(nu0) == 1,
        "monomial_vanishes_above_first_term": all(part <= nu0 for part in mono.coeffs),
        "monomial_dominates_schur": all(
            mono.coefficient(part) >= c for part, c in schur.coeffs.items()
        ),
        "schur_nonnegative": all(c >= 0 for c in schur.coeffs.values()),
    }
    if use_oracle:
        from .oracle import plethysm_via_powersums

        checks["oracle_agrees"] = plethysm_via_powersums(lam, mu) == schur
    return ExpansionReport(
        lam=lam,
        mu=mu,
        monomial_coeffs=dict(mono.coeffs),
        schur_coeffs=dict(schur.coeffs),
        predicted_first_term=nu0,
        observed_first_term=observed,
        first_term_coefficient=schur.coefficient(nu0),
        checks=checks,
    )
