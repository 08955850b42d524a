"""Solving and classifying the quadratic compatibility system for (a, b).

The bracket condition on the candidate parameter family reduces to p scalar
equations

    0 = a_0 b_l + sum_{j+k = l (mod p)} b_k * (-C(j+1,2) b_j + j a_j),

one per l in [0, p).  The system is quadratic in the pair but linear once b
is fixed: packaging c_0 = a_0, c_m = -C(j+1,2) b_j + j a_j (with j = p - m)
turns it into phi_b(c) = b * sigma(c) = 0, so the solutions for a fixed b
are the kernel of multiplication by b composed with the antipode.  That
kernel is spanned by the powers (g-1)^(p-j) for 0 <= j <= k where k is the
(g-1)-adic class of b, giving p^k solutions per b and p^(p+1) in total.

Closed-form enumeration walks that description; brute-force enumeration
sweeps all pairs against the system directly (vectorized with numpy, since
the p = 5 sweep already has p^10 pairs) and serves as its independent check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal

import numpy as np

from .group_algebra import (
    GroupAlgebraElement,
    TooLarge,
    binom_mod,
    check_prime,
    gminus1_power,
    guard_ceiling,
    scalar_inv,
)

#: Guard for the p^p kernel sweeps (7^7 is about 8e5 candidates).
KERNEL_BRUTEFORCE_MAX_P = 7
#: Guard for the p^(2p) pair sweeps (5^10 is about 1e7 pairs).
PAIR_SWEEP_MAX_P = 5

EnumerationMode = Literal["closed_form", "brute_force"]


@dataclass(frozen=True)
class SolutionRecord:
    """All solutions a for one fixed b, together with its kernel data."""

    b: GroupAlgebraElement
    k: int
    btilde: GroupAlgebraElement
    kernel_basis: tuple[GroupAlgebraElement, ...]
    solutions: tuple[tuple[GroupAlgebraElement, GroupAlgebraElement], ...]  # (c, a)

    def to_json(self) -> dict:
        return {
            "b": list(self.b.coeffs),
            "k": self.k,
            "btilde": list(self.btilde.coeffs),
            "kernel": [list(e.coeffs) for e in self.kernel_basis],
            "solutions": [
                {"c": list(c.coeffs), "a": list(a.coeffs)} for c, a in self.solutions
            ],
        }


@dataclass(frozen=True)
class CensusRow:
    """Size bookkeeping for one (g-1)-adic class of b."""

    k: int
    b_class_size: int
    a_class_size_per_b: int


def system_residual(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """The p residuals of the compatibility system, as the element sum_l r_l g^l."""
    if a.p != b.p:
        raise ValueError("mismatched primes")
    p = a.p
    out = [0] * p
    a0 = a.coeffs[0]
    for l in range(p):
        total = a0 * b.coeffs[l]
        for j in range(p):
            bk = b.coeffs[(l - j) % p]
            if bk:
                total += bk * (-binom_mod(j + 1, 2, p) * b.coeffs[j] + j * a.coeffs[j])
        out[l] = total % p
    return GroupAlgebraElement.from_coeffs(p, out)


def c_from_ab(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Package (a, b) into the cyclic coefficient vector c.

    c_0 = a_0 and c_m = -C(j+1,2) b_j + j a_j for the j with m + j = 0 mod p;
    b enters only through b_j for j >= 1.
    """
    p = a.p
    coeffs = [a.coeffs[0]]
    for m in range(1, p):
        j = p - m
        coeffs.append((-binom_mod(j + 1, 2, p) * b.coeffs[j] + j * a.coeffs[j]) % p)
    return GroupAlgebraElement.from_coeffs(p, coeffs)


def a_from_c(c: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Invert c_from_ab on the a-coordinate for fixed b.

    a_0 = c_0 and a_j = j^(p-2) (c_(p-j) + C(j+1,2) b_j) for 1 <= j < p.
    """
    p = c.p
    coeffs = [c.coeffs[0]]
    for j in range(1, p):
        coeffs.append(
            scalar_inv(j, p) * (c.coeffs[p - j] + binom_mod(j + 1, 2, p) * b.coeffs[j]) % p
        )
    return GroupAlgebraElement.from_coeffs(p, coeffs)


def phi_b(b: GroupAlgebraElement, c: GroupAlgebraElement) -> GroupAlgebraElement:
    """b * sigma(c): the linear map whose kernel is the solution set for fixed b."""
    return b * c.sigma()


def kernel_basis(b: GroupAlgebraElement) -> tuple[GroupAlgebraElement, ...]:
    """Basis of ker(phi_b): the nonzero powers (g-1)^(p-j) for 0 <= j <= k.

    (g-1)^p = 0 is dropped, so the basis has k elements and the kernel has
    p^k points; in particular the basis is empty when b is a unit.
    """
    k = b.gminus1_factor().k
    return tuple(gminus1_power(b.p, p_minus_j) for p_minus_j in range(b.p - 1, b.p - k - 1, -1))


def span(p: int, basis: Iterable[GroupAlgebraElement]) -> list[GroupAlgebraElement]:
    """All F_p-linear combinations, coordinates iterated lexicographically."""
    basis = list(basis)
    out = []
    for coords in itertools.product(range(p), repeat=len(basis)):
        acc = GroupAlgebraElement.zero(p)
        for t, e in zip(coords, basis):
            if t:
                acc = acc + e.scale(t)
        out.append(acc)
    return out


@lru_cache(maxsize=4)
def _all_coeff_rows(p: int) -> np.ndarray:
    """All p^p coefficient vectors as an int64 array, lexicographic by row."""
    if p ** p > 10**7:
        raise TooLarge(f"p^p = {p**p} rows is past the enumeration cache limit")
    cols = [
        np.repeat(np.tile(np.arange(p, dtype=np.int64), p**i), p ** (p - 1 - i))
        for i in range(p)
    ]
    return np.stack(cols, axis=1)


def kernel_bruteforce(b: GroupAlgebraElement) -> set[GroupAlgebraElement]:
    """{c : phi_b(c) = 0} by exhaustive sweep over all p^p candidates.

    The sweep is vectorized: phi_b is linear in c with matrix
    M[l, m] = b_((m+l) mod p), so one matrix product tests every candidate.
    Guarded to p <= 7.
    """
    p = b.p
    if p > guard_ceiling(KERNEL_BRUTEFORCE_MAX_P):
        raise TooLarge(f"kernel sweep needs p <= {KERNEL_BRUTEFORCE_MAX_P}, got {p}")
    rows = _all_coeff_rows(p)
    matrix = np.array(
        [[b.coeffs[(m + l) % p] for m in range(p)] for l in range(p)], dtype=np.int64
    )
    residuals = (rows @ matrix.T) % p
    hits = np.flatnonzero(~residuals.any(axis=1))
    return {GroupAlgebraElement(p, tuple(int(x) for x in rows[i])) for i in hits}


def _brute_force_solutions(b: GroupAlgebraElement) -> list[GroupAlgebraElement]:
    """All a with system_residual(a, b) = 0, by vectorized sweep over all a.

    The residual is affine in a: the coefficient of a_0 in r_l is b_l, the
    coefficient of a_j (j >= 1) is j * b_(l-j), and the constant part is
    -sum_j C(j+1,2) b_j b_(l-j).  Rows are swept in lexicographic order.
    """
    p = b.p
    rows = _all_coeff_rows(p)
    lin = np.empty((p, p), dtype=np.int64)
    const = np.empty(p, dtype=np.int64)
    for l in range(p):
        lin[l, 0] = b.coeffs[l]
        for j in range(1, p):
            lin[l, j] = (j * b.coeffs[(l - j) % p]) % p
        const[l] = (
            -sum(binom_mod(j + 1, 2, p) * b.coeffs[j] * b.coeffs[(l - j) % p] for j in range(p))
        ) % p
    residuals = (rows @ lin.T + const) % p
    hits = np.flatnonzero(~residuals.any(axis=1))
    return [GroupAlgebraElement(p, tuple(int(x) for x in rows[i])) for i in hits]


def _record_closed_form(b: GroupAlgebraElement) -> SolutionRecord:
    fact = b.gminus1_factor()
    basis = kernel_basis(b)
    solutions = tuple((c, a_from_c(c, b)) for c in span(b.p, basis))
    return SolutionRecord(b, fact.k, fact.btilde, basis, solutions)


def _record_brute_force(b: GroupAlgebraElement) -> SolutionRecord:
    fact = b.gminus1_factor()
    solutions = tuple((c_from_ab(a, b), a) for a in _brute_force_solutions(b))
    return SolutionRecord(b, fact.k, fact.btilde, kernel_basis(b), solutions)


def enumerate_solutions(
    p: int, mode: EnumerationMode = "closed_form", workers: int = 1
) -> list[SolutionRecord]:
    """One SolutionRecord per b in F_pG, b iterated lexicographically.

    closed_form spans the kernel description; brute_force sweeps every
    (a, b) pair against the system and is guarded to p <= 5.  Both modes
    return the same solution sets (brute force orders solutions by a, the
    closed form by kernel coordinates).
    """
    check_prime(p)
    if mode not in ("closed_form", "brute_force"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "brute_force" and p > guard_ceiling(PAIR_SWEEP_MAX_P):
        raise TooLarge(f"pair sweep needs p <= {PAIR_SWEEP_MAX_P}, got {p}")
    build = _record_closed_form if mode == "closed_form" else _record_brute_force
    bs = list(GroupAlgebraElement.all_elements(p))
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            return pool.map(build, bs, chunksize=max(1, len(bs) // (4 * workers)))
    return [build(b) for b in bs]


def census(p: int) -> list[CensusRow]:
    """Class sizes by (g-1)-adic class: p^(p-k-1)(p-1) values of b for k < p,
    one for k = p, each contributing p^k solutions."""
    check_prime(p)
    rows = [CensusRow(k, p ** (p - k - 1) * (p - 1), p**k) for k in range(p)]
    rows.append(CensusRow(p, 1, p**p))
    return rows


def records_to_json(p: int, records: Iterable[SolutionRecord]) -> dict:
    return {"p": p, "records": [r.to_json() for r in records]}


def records_to_csv(records: Iterable[SolutionRecord]) -> str:
    """One (b, a) row per solution, in canonical text form."""
    lines = ["b,a"]
    for rec in records:
        for _c, a in rec.solutions:
            lines.append(f"{rec.b.to_text()},{a.to_text()}")
    return "\n".join(lines) + "\n"
