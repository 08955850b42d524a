"""Exact arithmetic in the modular group algebra F_p[G] for G cyclic of odd prime order p.

Elements are stored as dense length-p coefficient vectors in the basis
1, g, ..., g^(p-1).  Because char F_p = |G| = p, the algebra is local:
F_pG is isomorphic to F_p[t]/(t^p) via t = g - 1, the augmentation
(coefficient sum) is the unique maximal-ideal quotient, and every element
factors uniquely as (g-1)^k * u with u a unit.  That factorization drives
the whole solver, so it lives here next to the basic ring operations.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

DEFAULT_PRIME_CEILING = 97

#: Environment variable that overrides every guard ceiling (at your own risk).
GUARD_ENV_VAR = "ORBIFOLD_MAX_P"


class NotAUnit(ValueError):
    """Raised when inverting an element of the augmentation ideal."""


class TooLarge(ValueError):
    """Raised when a brute-force sweep would exceed its guard ceiling."""


def guard_ceiling(default: int) -> int:
    """The effective ceiling for a p-guard: the env override if set, else default."""
    value = os.environ.get(GUARD_ENV_VAR)
    return int(value) if value else default


def check_prime(p: int, ceiling: int | None = None) -> int:
    """Validate that p is an odd prime in [3, ceiling] and return it."""
    if ceiling is None:
        ceiling = guard_ceiling(DEFAULT_PRIME_CEILING)
    if not isinstance(p, int):
        raise ValueError(f"p must be an integer, got {p!r}")
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime >= 3, got {p}")
    if p > ceiling:
        raise ValueError(f"p={p} exceeds the ceiling {ceiling}")
    if any(p % d == 0 for d in range(3, int(p**0.5) + 1, 2)):
        raise ValueError(f"p={p} is not prime")
    return p


@lru_cache(maxsize=None)
def binom_mod(n: int, m: int, p: int) -> int:
    """C(n, m) mod p, computed over the integers.  C(n, m) = 0 for m > n or m < 0."""
    if m < 0 or m > n:
        return 0
    return comb(n, m) % p


def scalar_inv(j: int, p: int) -> int:
    """j^(p-2) mod p: the inverse of j for j != 0, and 0 for j = 0.

    The vanishing convention at 0 is load-bearing: closed-form solution
    formulas multiply by j^(p-2) precisely so the j = 0 term drops out.
    """
    return pow(j % p, p - 2, p)


@dataclass(frozen=True)
class Factorization:
    """The unique (g-1)-adic factorization x = (g-1)^k * btilde.

    For x != 0, k in [0, p) and btilde has nonzero augmentation (is a unit).
    For x = 0, k = p and btilde = 1 by convention.
    """

    k: int
    btilde: "GroupAlgebraElement"


@dataclass(frozen=True)
class GroupAlgebraElement:
    """An element of F_p[G], G = <g> cyclic of order p.

    coeffs[i] is the coefficient of g^i, reduced to [0, p).  Instances are
    immutable and all operations are pure, so values can be shared freely
    across concurrent workers.
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p:
            raise ValueError(f"expected {self.p} coefficients, got {len(self.coeffs)}")
        if any(not (0 <= c < self.p) for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(c % self.p for c in self.coeffs))

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "GroupAlgebraElement":
        return cls(p, (0,) * p)

    @classmethod
    def one(cls, p: int) -> "GroupAlgebraElement":
        return cls.monomial(p, 0, 1)

    @classmethod
    def g(cls, p: int, exp: int = 1) -> "GroupAlgebraElement":
        """The basis element g^exp."""
        return cls.monomial(p, exp, 1)

    @classmethod
    def monomial(cls, p: int, exp: int, coeff: int) -> "GroupAlgebraElement":
        coeffs = [0] * p
        coeffs[exp % p] = coeff % p
        return cls(p, tuple(coeffs))

    @classmethod
    def from_coeffs(cls, p: int, coeffs: Iterable[int]) -> "GroupAlgebraElement":
        return cls(p, tuple(c % p for c in coeffs))

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_same_p(other)
        p = self.p
        return GroupAlgebraElement(
            p, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_same_p(other)
        p = self.p
        return GroupAlgebraElement(
            p, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.p, tuple((-a) % self.p for a in self.coeffs))

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        """Cyclic convolution: (xy)_l = sum over i+j = l (mod p) of x_i y_j."""
        self._check_same_p(other)
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    k = i + j
                    if k >= p:
                        k -= p
                    out[k] = (out[k] + a * b) % p
        return GroupAlgebraElement(p, tuple(out))

    def scale(self, c: int) -> "GroupAlgebraElement":
        c %= self.p
        return GroupAlgebraElement(self.p, tuple((c * a) % self.p for a in self.coeffs))

    def shift(self, m: int) -> "GroupAlgebraElement":
        """Multiply by the basis element g^m (a cyclic coefficient shift)."""
        p = self.p
        m %= p
        return GroupAlgebraElement(p, tuple(self.coeffs[(i - m) % p] for i in range(p)))

    def __pow__(self, n: int) -> "GroupAlgebraElement":
        if n < 0:
            return self.invert() ** (-n)
        result = GroupAlgebraElement.one(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_same_p(self, other: "GroupAlgebraElement") -> None:
        if self.p != other.p:
            raise ValueError(f"mismatched primes: {self.p} != {other.p}")

    # -- structural maps -------------------------------------------------

    def sigma(self) -> "GroupAlgebraElement":
        """The antipode g^i -> g^(-i), a ring involution."""
        p = self.p
        return GroupAlgebraElement(p, tuple(self.coeffs[(p - i) % p] for i in range(p)))

    def augmentation(self) -> int:
        """The coefficient sum, a ring map onto F_p with kernel (g-1)."""
        return sum(self.coeffs) % self.p

    def gminus1_coords(self) -> tuple[int, ...]:
        """Coordinates z with x = sum z_i (g-1)^i.

        Since g^j = (1 + (g-1))^j, the change of basis is the binomial
        transform z_i = sum_j C(j, i) x_j, exact over the integers before
        reduction.
        """
        p = self.p
        return tuple(
            sum(binom_mod(j, i, p) * x for j, x in enumerate(self.coeffs)) % p
            for i in range(p)
        )

    @classmethod
    def from_gminus1_coords(cls, p: int, z: Sequence[int]) -> "GroupAlgebraElement":
        """Inverse of gminus1_coords: x_j = sum_i z_i (-1)^(i-j) C(i, j)."""
        coeffs = [
            sum(z[i] * (-1) ** (i - j) * binom_mod(i, j, p) for i in range(p)) % p
            for j in range(p)
        ]
        return cls(p, tuple(coeffs))

    def gminus1_factor(self) -> Factorization:
        """Factor x = (g-1)^k * btilde with btilde a unit; (p, 1) for x = 0."""
        p = self.p
        z = self.gminus1_coords()
        k = next((i for i, zi in enumerate(z) if zi != 0), p)
        if k == p:
            return Factorization(p, GroupAlgebraElement.one(p))
        btilde = GroupAlgebraElement.from_gminus1_coords(p, z[k:] + (0,) * k)
        return Factorization(k, btilde)

    def invert(self) -> "GroupAlgebraElement":
        """Multiplicative inverse, by solving the circulant system x*y = 1 over F_p."""
        p = self.p
        if self.augmentation() == 0:
            raise NotAUnit(f"augmentation is 0: {self} is not a unit")
        # Column j of the matrix is x shifted by g^j; solve M y = e_0.
        rows = [[self.coeffs[(l - j) % p] for j in range(p)] + [1 if l == 0 else 0]
                for l in range(p)]
        y = _solve_mod_p(rows, p)
        return GroupAlgebraElement(p, tuple(y))

    # -- iteration over the whole algebra ---------------------------------

    @classmethod
    def all_elements(cls, p: int) -> Iterator["GroupAlgebraElement"]:
        """All p^p elements, in lexicographic coefficient order."""
        coeffs = [0] * p
        while True:
            yield cls(p, tuple(coeffs))
            i = p - 1
            while i >= 0 and coeffs[i] == p - 1:
                coeffs[i] = 0
                i -= 1
            if i < 0:
                return
            coeffs[i] += 1

    @classmethod
    def random(cls, rng, p: int) -> "GroupAlgebraElement":
        return cls(p, tuple(rng.randrange(p) for _ in range(p)))

    # -- serialization ----------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Render as a signed polynomial in g, e.g. "-1 + g + g^2".

        Coefficients use balanced representatives in (-p/2, p/2) so the
        common small elements print the way they are written by hand.
        """
        p = self.p
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = c if c <= (p - 1) // 2 else c - p
            mag, neg = abs(s), s < 0
            if i == 0:
                body = str(mag)
            else:
                gpart = "g" if i == 1 else f"g^{i}"
                body = gpart if mag == 1 else f"{mag}*{gpart}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts) if parts else "0"

    _TERM_RE = re.compile(
        r"\s*(?P<sign>[+-])?\s*(?:"
        r"(?P<coeff>\d+)\s*\*?\s*(?:g(?:\^(?P<exp1>\d+))?)?"
        r"|g(?:\^(?P<exp2>\d+))?"
        r")"
    )

    @classmethod
    def from_text(cls, p: int, text: str) -> "GroupAlgebraElement":
        """Parse the textual grammar: signed terms like "2*g^2", "g", "-1".

        Accepts both "2*g" and "2g".  Exponents must lie in [0, p).
        Raises ValueError with the offending position on bad input.
        """
        coeffs = [0] * p
        pos, n = 0, len(text)
        if not text.strip():
            raise ValueError("empty element text")
        first = True
        while pos < n:
            m = cls._TERM_RE.match(text, pos)
            if not m or m.end() == m.start():
                raise ValueError(f"parse error at position {pos}: {text[pos:]!r}")
            sign_tok = m.group("sign")
            if sign_tok is None and not first:
                raise ValueError(f"missing +/- before position {m.start()}: {text!r}")
            sign = -1 if sign_tok == "-" else 1
            if m.group("coeff") is not None:
                coeff = int(m.group("coeff"))
                # A bare coefficient is a constant term unless g follows in this match.
                has_g = "g" in text[m.start():m.end()]
                exp = int(m.group("exp1")) if m.group("exp1") else (1 if has_g else 0)
            else:
                coeff = 1
                exp = int(m.group("exp2")) if m.group("exp2") else 1
            if exp >= p:
                raise ValueError(f"exponent {exp} out of range for p={p} in {text!r}")
            coeffs[exp] = (coeffs[exp] + sign * coeff) % p
            pos = m.end()
            first = False
            if pos < n and text[pos:].strip() == "":
                break
        return cls(p, tuple(coeffs))

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "GroupAlgebraElement":
        if not isinstance(obj, dict) or "p" not in obj or "coeffs" not in obj:
            raise ValueError(f"expected {{'p':..., 'coeffs':...}}, got {obj!r}")
        p = check_prime(int(obj["p"]))
        coeffs = obj["coeffs"]
        if len(coeffs) != p:
            raise ValueError(f"expected {p} coefficients, got {len(coeffs)}")
        return cls(p, tuple(int(c) % p for c in coeffs))


def gminus1(p: int) -> GroupAlgebraElement:
    """The element g - 1, generator of the augmentation ideal."""
    return GroupAlgebraElement.from_coeffs(p, [-1, 1] + [0] * (p - 2))


def gminus1_power(p: int, k: int) -> GroupAlgebraElement:
    """(g-1)^k; zero for k >= p since (g-1)^p = g^p - 1 = 0 in char p."""
    if k >= p:
        return GroupAlgebraElement.zero(p)
    return GroupAlgebraElement.from_coeffs(
        p, [(-1) ** (k - j) * binom_mod(k, j, p) for j in range(p)]
    )


def _solve_mod_p(rows: list[list[int]], p: int) -> list[int]:
    """Gaussian elimination over F_p on an augmented matrix; returns the solution."""
    n = len(rows)
    rows = [[c % p for c in row] for row in rows]
    col = 0
    for row in range(n):
        pivot = next((r for r in range(row, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise NotAUnit("singular convolution matrix")
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = pow(rows[row][col], p - 2, p)
        rows[row] = [(c * inv) % p for c in rows[row]]
        for r in range(n):
            if r != row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[row])]
        col += 1
    return [rows[i][n] for i in range(n)]
