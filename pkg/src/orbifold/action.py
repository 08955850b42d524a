"""The transvection action of G on V = F_p^2 and the small tensor spaces built from V.

The generator g acts by the unipotent matrix [[1, 1], [0, 1]]: it fixes v1
and sends v2 to v1 + v2, so g^i sends (x1, x2) to (x1 + i*x2, x2) and every
power has determinant 1.  V is hard-wired to dimension 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group_algebra import GroupAlgebraElement

QUAD_MONOMIALS = ("v1^2", "v1*v2", "v2^2")


@dataclass(frozen=True)
class Vector:
    """x1*v1 + x2*v2 in V = F_p^2, entries reduced mod p."""

    p: int
    x1: int
    x2: int

    def __post_init__(self):
        object.__setattr__(self, "x1", self.x1 % self.p)
        object.__setattr__(self, "x2", self.x2 % self.p)

    def __add__(self, other: "Vector") -> "Vector":
        return Vector(self.p, self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "Vector") -> "Vector":
        return Vector(self.p, self.x1 - other.x1, self.x2 - other.x2)

    def scale(self, c: int) -> "Vector":
        return Vector(self.p, c * self.x1, c * self.x2)

    def is_zero(self) -> bool:
        return self.x1 == 0 and self.x2 == 0

    def to_json(self) -> list[int]:
        return [self.x1, self.x2]


def v1(p: int) -> Vector:
    return Vector(p, 1, 0)


def v2(p: int) -> Vector:
    return Vector(p, 0, 1)


def act(i: int, v: Vector) -> Vector:
    """Apply g^i: (x1, x2) -> (x1 + i*x2, x2)."""
    return Vector(v.p, v.x1 + i * v.x2, v.x2)


@dataclass(frozen=True)
class VGroupElement:
    """An element of V tensor F_pG: v1 (x) row1 + v2 (x) row2 with rows in F_pG.

    Column i holds the V-coefficients of g^i, so entry (j, i) is the
    coefficient of v_j g^i.
    """

    row1: GroupAlgebraElement
    row2: GroupAlgebraElement

    def __post_init__(self):
        if self.row1.p != self.row2.p:
            raise ValueError("mismatched primes in VGroupElement rows")

    @property
    def p(self) -> int:
        return self.row1.p

    @classmethod
    def zero(cls, p: int) -> "VGroupElement":
        z = GroupAlgebraElement.zero(p)
        return cls(z, z)

    def __add__(self, other: "VGroupElement") -> "VGroupElement":
        return VGroupElement(self.row1 + other.row1, self.row2 + other.row2)

    def __sub__(self, other: "VGroupElement") -> "VGroupElement":
        return VGroupElement(self.row1 - other.row1, self.row2 - other.row2)

    def __neg__(self) -> "VGroupElement":
        return VGroupElement(-self.row1, -self.row2)

    def scale(self, c: int) -> "VGroupElement":
        return VGroupElement(self.row1.scale(c), self.row2.scale(c))

    def is_zero(self) -> bool:
        return self.row1.is_zero() and self.row2.is_zero()

    def column(self, i: int) -> Vector:
        """The V-part of the g^i component."""
        return Vector(self.p, self.row1.coeffs[i], self.row2.coeffs[i])

    def to_text(self) -> str:
        parts = []
        for name, row in (("v1", self.row1), ("v2", self.row2)):
            if not row.is_zero():
                parts.append(f"{name}*({row.to_text()})")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"v1": list(self.row1.coeffs), "v2": list(self.row2.coeffs)}

    @classmethod
    def from_json(cls, p: int, obj: dict) -> "VGroupElement":
        return cls(
            GroupAlgebraElement.from_coeffs(p, obj["v1"]),
            GroupAlgebraElement.from_coeffs(p, obj["v2"]),
        )


def act_ga(x: VGroupElement, h: int) -> VGroupElement:
    """Apply g^h to the V-part of every group-basis column.

    g^h fixes v1 and maps v2 to h*v1 + v2, so the v1-row gains h times the
    v2-row and the v2-row is unchanged.
    """
    return VGroupElement(x.row1 + x.row2.scale(h), x.row2)


@dataclass(frozen=True)
class Quad2GroupElement:
    """An element of S(V)_2 tensor F_pG in the monomial basis (v1^2, v1*v2, v2^2)."""

    q11: GroupAlgebraElement
    q12: GroupAlgebraElement
    q22: GroupAlgebraElement

    @property
    def p(self) -> int:
        return self.q11.p

    @classmethod
    def zero(cls, p: int) -> "Quad2GroupElement":
        z = GroupAlgebraElement.zero(p)
        return cls(z, z, z)

    def __add__(self, other: "Quad2GroupElement") -> "Quad2GroupElement":
        return Quad2GroupElement(
            self.q11 + other.q11, self.q12 + other.q12, self.q22 + other.q22
        )

    def scale(self, c: int) -> "Quad2GroupElement":
        return Quad2GroupElement(self.q11.scale(c), self.q12.scale(c), self.q22.scale(c))

    def is_zero(self) -> bool:
        return self.q11.is_zero() and self.q12.is_zero() and self.q22.is_zero()

    def to_json(self) -> dict:
        return {
            "v1^2": list(self.q11.coeffs),
            "v1*v2": list(self.q12.coeffs),
            "v2^2": list(self.q22.coeffs),
        }


def sym_mul(u: Vector, w: Vector) -> Quad2GroupElement:
    """The commutative product u*w in S(V)_2, with group part concentrated at g^0."""
    p = u.p
    return Quad2GroupElement(
        GroupAlgebraElement.monomial(p, 0, u.x1 * w.x1),
        GroupAlgebraElement.monomial(p, 0, u.x1 * w.x2 + u.x2 * w.x1),
        GroupAlgebraElement.monomial(p, 0, u.x2 * w.x2),
    )
