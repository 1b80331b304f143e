"""Nanotubical fullerene families with maximal Wiener index.

Six cap types are covered. Type ``a`` is the (5,0) nanotube and has an
explicit constructor; for every type the Wiener index, Wiener complexity
and diameter are given in closed form over the admissible orders. Values
that do not follow the closed forms (small orders and a handful of
corrected complexities) live in ``EXCEPTIONS``, never inline.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from fullwiener.graph import FullereneGraph


class FamilyKind(str, enum.Enum):
    A = "a"
    B = "b"
    C1 = "c1"
    C2 = "c2"
    D1 = "d1"
    D2 = "d2"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "FamilyKind":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown family {text!r}; expected one of {[k.value for k in cls]}") from None


class OrderNotInFamily(ValueError):
    pass


class NonIntegerResult(ArithmeticError):
    pass


class OddOrder(ValueError):
    pass


class KTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class Residue:
    """Orders ``60k + offset`` (k >= 0) with complexity ``slope*k + c`` and diameter ``10k + d``."""

    offset: int
    complexity_slope: int
    complexity_const: int
    diameter_const: int


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    # numerator coefficients (n^3, n^2, n, 1) and denominator of the Wiener polynomial
    poly: tuple[int, int, int, int]
    denominator: int
    poly_from: int  # smallest order where the polynomial holds
    members: Callable[[int], bool]
    complexity: Callable[[int], int]
    diameter: Callable[[int], int]
    residues: tuple[Residue, ...] = ()

    def polynomial(self, n: int) -> int:
        a, b, c, d = self.poly
        num = a * n**3 + b * n**2 + c * n + d
        q, r = divmod(num, self.denominator)
        if r:
            raise NonIntegerResult(f"{self.kind}: polynomial at n={n} is {num}/{self.denominator}")
        return q


def _residue_of(residues: tuple[Residue, ...], n: int) -> tuple[Residue, int] | None:
    for res in residues:
        if n >= res.offset and (n - res.offset) % 60 == 0:
            return res, (n - res.offset) // 60
    return None


def _residue_family(kind, poly, poly_from, residues, extra_orders=()):
    def members(n: int) -> bool:
        return n in extra_orders or _residue_of(residues, n) is not None

    def complexity(n: int) -> int:
        res, k = _residue_of(residues, n)  # type: ignore[misc]
        return res.complexity_slope * k + res.complexity_const

    def diameter(n: int) -> int:
        res, k = _residue_of(residues, n)  # type: ignore[misc]
        return 10 * k + res.diameter_const

    return FamilySpec(kind, poly, 36, poly_from, members, complexity, diameter, residues)


FAMILIES: dict[FamilyKind, FamilySpec] = {
    FamilyKind.A: FamilySpec(
        FamilyKind.A,
        (1, 0, 1175, -20100),
        30,
        50,
        members=lambda n: n >= 20 and n % 10 == 0,
        complexity=lambda n: n // 10,
        diameter=lambda n: 2 * (n // 10) - 1,
    ),
    FamilyKind.B: FamilySpec(
        FamilyKind.B,
        (1, 27, 156, -4352),
        36,
        26,
        members=lambda n: n >= 26 and (n + 4) % 6 == 0,
        complexity=lambda n: math.ceil(((n + 4) // 6) / 2),
        diameter=lambda n: (n + 4) // 6 + 1,
    ),
    FamilyKind.C1: _residue_family(
        FamilyKind.C1,
        (1, 24, 336, -7128),
        36,
        (Residue(36, 15, 9, 7), Residue(48, 15, 12, 9), Residue(72, 15, 18, 13), Residue(84, 15, 21, 15)),
    ),
    FamilyKind.C2: _residue_family(
        FamilyKind.C2,
        (1, 24, 336, -7192),
        52,
        (Residue(52, 15, 12, 10), Residue(64, 15, 15, 12), Residue(76, 15, 18, 14), Residue(88, 15, 21, 16)),
    ),
    FamilyKind.D1: _residue_family(
        FamilyKind.D1,
        (1, 15, 1068, -22788),
        54,
        (Residue(54, 25, 27, 10), Residue(66, 25, 32, 12), Residue(78, 25, 37, 14), Residue(102, 25, 47, 18)),
        extra_orders=(42,),
    ),
    FamilyKind.D2: _residue_family(
        FamilyKind.D2,
        (1, 15, 1068, -22756),
        58,
        (Residue(58, 15, 35, 11), Residue(82, 15, 41, 15), Residue(94, 15, 44, 17), Residue(106, 15, 47, 19)),
        extra_orders=(46,),
    ),
}

# (kind, n) -> {"W": .., "C_W": .., "D": ..}; only the listed fields override the closed forms.
EXCEPTIONS: dict[tuple[FamilyKind, int], dict[str, int]] = {
    (FamilyKind.A, 20): {"W": 500, "C_W": 1, "D": 5},
    (FamilyKind.A, 30): {"W": 1435, "C_W": 3, "D": 6},
    (FamilyKind.A, 40): {"W": 3035, "C_W": 4, "D": 8},
    (FamilyKind.B, 26): {"C_W": 2},
    (FamilyKind.C1, 36): {"C_W": 8},
    (FamilyKind.C2, 52): {"C_W": 13},
    (FamilyKind.D1, 42): {"W": 3415, "C_W": 19, "D": 8},
    (FamilyKind.D1, 54): {"C_W": 22},
    (FamilyKind.D1, 66): {"C_W": 30},
    (FamilyKind.D2, 46): {"W": 4322, "C_W": 19, "D": 9},
    (FamilyKind.D2, 58): {"C_W": 25},
    (FamilyKind.D2, 82): {"C_W": 38},
}


def _spec(kind: FamilyKind | str, n: int) -> FamilySpec:
    kind = FamilyKind.parse(kind) if isinstance(kind, str) else kind
    spec = FAMILIES[kind]
    if not spec.members(n):
        raise OrderNotInFamily(f"order {n} is not an order of family {kind}")
    return spec


def _value(kind, n: int, field: str, closed_form: Callable[[FamilySpec, int], int]) -> int:
    spec = _spec(kind, n)
    exc = EXCEPTIONS.get((spec.kind, n), {})
    if field in exc:
        return exc[field]
    return closed_form(spec, n)


def wiener_formula(kind: FamilyKind | str, n: int) -> int:
    """Wiener index of the family member of order ``n``."""
    return _value(kind, n, "W", FamilySpec.polynomial)


def complexity_formula(kind: FamilyKind | str, n: int) -> int:
    return _value(kind, n, "C_W", lambda spec, m: spec.complexity(m))


def diameter_formula(kind: FamilyKind | str, n: int) -> int:
    return _value(kind, n, "D", lambda spec, m: spec.diameter(m))


def is_exception(kind: FamilyKind | str, n: int) -> bool:
    return (_spec(kind, n).kind, n) in EXCEPTIONS


def classify_order(n: int) -> set[FamilyKind]:
    """All families having a member with ``n`` vertices."""
    if n % 2:
        raise OddOrder(f"order {n} is odd")
    if n < 20:
        raise ValueError(f"order {n} is below 20")
    return {kind for kind, spec in FAMILIES.items() if spec.members(n)}


def best_family(n: int) -> FamilyKind | None:
    """The family whose member of order ``n`` has the largest Wiener index."""
    kinds = classify_order(n)
    if not kinds:
        return None
    scored = sorted(((wiener_formula(k, n), k) for k in kinds), key=lambda t: t[0], reverse=True)
    if len(scored) > 1 and scored[0][0] == scored[1][0]:
        raise AssertionError(f"tie between {scored[0][1]} and {scored[1][1]} at n={n}")
    return scored[0][1]


@dataclass(frozen=True)
class FamilyRow:
    n: int
    kind: FamilyKind
    W: int
    C_W: int
    D: int
    provenance: str  # "formula" or "exception"

    def csv(self, provenance: bool = True) -> str:
        cells = [self.n, self.kind.value, self.W, self.C_W, self.D]
        if provenance:
            cells.append(self.provenance)
        return ",".join(str(c) for c in cells)


FAMILY_TABLE_HEADER = "n,kind,W,C_W,D,provenance"


def family_row(kind: FamilyKind | str, n: int) -> FamilyRow:
    spec = _spec(kind, n)
    return FamilyRow(
        n,
        spec.kind,
        wiener_formula(spec.kind, n),
        complexity_formula(spec.kind, n),
        diameter_formula(spec.kind, n),
        "exception" if (spec.kind, n) in EXCEPTIONS else "formula",
    )


def family_table(max_n: int) -> list[FamilyRow]:
    """One row per family member of order at most ``max_n``, sorted by order then kind."""
    rows = []
    for n in range(20, max_n + 1, 2):
        for kind in FamilyKind:
            if FAMILIES[kind].members(n):
                rows.append(family_row(kind, n))
    return rows


def construct_type_a(k: int) -> FullereneGraph:
    """The (5,0) nanotubical fullerene with ``10k`` vertices.

    Drawn on concentric circles: the top cap pentagon innermost, then
    ``k - 1`` rings of ten vertices, the bottom cap pentagon outermost.
    Ring ``r`` (1-based) sends its positions of parity ``(r-1) % 2`` inwards
    and those of parity ``r % 2`` outwards, so each ring vertex gets exactly
    one radial edge. Rotations follow from the drawing.
    """
    if k < 2:
        raise KTooSmall(f"k must be at least 2, got {k}")

    def ring(r: int, p: int) -> int:
        return 5 + 10 * (r - 1) + p % 10

    bottom = 5 + 10 * (k - 1)
    bottom_parity = (k - 1) % 2
    rotation: list[tuple[int, int, int]] = []
    # clockwise around a vertex on a circle: outward, clockwise tangent, inward, counter-clockwise tangent
    for i in range(5):
        rotation.append((ring(1, 2 * i), (i - 1) % 5, (i + 1) % 5))
    for r in range(1, k):
        for p in range(10):
            cw, ccw = ring(r, p - 1), ring(r, p + 1)
            if p % 2 == (r - 1) % 2:
                inner = p // 2 if r == 1 else ring(r - 1, p)
                rotation.append((cw, inner, ccw))
            else:
                outer = bottom + (p - bottom_parity) // 2 if r == k - 1 else ring(r + 1, p)
                rotation.append((outer, cw, ccw))
    for i in range(5):
        rotation.append((bottom + (i - 1) % 5, ring(k - 1, 2 * i + bottom_parity), bottom + (i + 1) % 5))
    return FullereneGraph.from_adjacency(rotation, label=f"type-a k={k}")
