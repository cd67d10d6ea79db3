"""
Rational surgery presentations, Rolfsen twists and first homology.

A presentation is the linking matrix of the link together with one
coefficient p/q per component (Seifert framing, 1/0 meaning the component
is filled trivially). H_1 of the surgered manifold is the cokernel of the
relation matrix whose row i reads ``p_i mu_i + q_i sum_j lk(i, j) mu_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import NotCertifiedUnknotted, NotInfinityFramed, ZeroZeroCoefficient

Matrix = list[list[int]]


@dataclass(frozen=True)
class RationalCoeff:
    p: int
    q: int

    def __post_init__(self) -> None:
        if (self.p, self.q) == (0, 0):
            raise ZeroZeroCoefficient("0/0 is not a surgery coefficient")
        if self.q < 0 or gcd(self.p, self.q) != 1 or (self.q == 0 and self.p != 1):
            raise ValueError(f"{self.p}/{self.q} is not in lowest terms; use normalize_coeff")

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinity:
            raise ZeroDivisionError("infinite coefficient")
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return "inf" if self.is_infinity else f"{self.p}/{self.q}"


INFINITY = RationalCoeff(1, 0)


def normalize_coeff(p: int, q: int) -> RationalCoeff:
    if p == 0 and q == 0:
        raise ZeroZeroCoefficient("0/0 is not a surgery coefficient")
    if q == 0:
        return INFINITY
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    return RationalCoeff(p, q)


def parse_coeff(text: str) -> RationalCoeff:
    """``"p/q"``, ``"p"`` or ``"inf"``."""
    text = text.strip()
    if text.lower() in ("inf", "infinity", "1/0", "∞"):
        return INFINITY
    num, _, den = text.partition("/")
    return normalize_coeff(int(num), int(den) if den else 1)


@dataclass(frozen=True)
class SurgeryPresentation:
    linking: tuple[tuple[int, ...], ...]
    coeffs: tuple[RationalCoeff, ...]
    unknotted: tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "linking", tuple(tuple(int(x) for x in row) for row in self.linking))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "unknotted", tuple(bool(f) for f in self.unknotted))
        m = len(self.coeffs)
        if len(self.linking) != m or len(self.unknotted) != m or any(len(r) != m for r in self.linking):
            raise ValueError("linking matrix, coefficients and flags must agree in size")
        for i in range(m):
            if self.linking[i][i] != 0:
                raise ValueError("linking matrix must have zero diagonal")
            for j in range(i):
                if self.linking[i][j] != self.linking[j][i]:
                    raise ValueError("linking matrix must be symmetric")

    @property
    def m(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class HomologyInvariants:
    torsion: tuple[int, ...]
    free_rank: int

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def rolfsen_twist(pres: SurgeryPresentation, u: int, n: int) -> SurgeryPresentation:
    """n-fold Rolfsen twist along component ``u`` (n = 1: one right-handed full twist)."""
    if not pres.unknotted[u]:
        raise NotCertifiedUnknotted(f"component {u} is not certified unknotted")
    lk = pres.linking
    coeffs = []
    for j, c in enumerate(pres.coeffs):
        if j == u:
            coeffs.append(normalize_coeff(c.p, n * c.p + c.q))
        else:
            coeffs.append(normalize_coeff(c.p + n * lk[j][u] ** 2 * c.q, c.q))
    linking = [
        [lk[i][j] + n * lk[i][u] * lk[j][u] if u not in (i, j) and i != j else lk[i][j]
         for j in range(pres.m)]
        for i in range(pres.m)
    ]
    return SurgeryPresentation(tuple(map(tuple, linking)), tuple(coeffs), pres.unknotted)


def remove_infinity_component(pres: SurgeryPresentation, u: int) -> SurgeryPresentation:
    if not pres.coeffs[u].is_infinity:
        raise NotInfinityFramed(f"component {u} has coefficient {pres.coeffs[u]}")
    keep = [i for i in range(pres.m) if i != u]
    return SurgeryPresentation(
        tuple(tuple(pres.linking[i][j] for j in keep) for i in keep),
        tuple(pres.coeffs[i] for i in keep),
        tuple(pres.unknotted[i] for i in keep),
    )


def h1_matrix(pres: SurgeryPresentation) -> Matrix:
    return [
        [c.p if i == j else c.q * pres.linking[i][j] for j in range(pres.m)]
        for i, c in enumerate(pres.coeffs)
    ]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """
    Invariant factors of an integer matrix.

    Returns the nonzero diagonal entries d_1 | d_2 | ... (1s included) and
    the free rank of the cokernel, i.e. number of columns minus rank.
    Pivots are chosen by smallest nonzero magnitude.
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        pivot = _min_entry(a, t, rows, cols)
        if pivot is None:
            break
        r, c = pivot
        a[t], a[r] = a[r], a[t]
        for row in a:
            row[t], row[c] = row[c], row[t]
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    f = a[i][t] // a[t][t]
                    a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    f = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= f * row[t]
                    if a[t][j]:
                        done = False
            if done:
                bad = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            r, c = _min_entry(a, t, rows, cols, only_cross=True)
            a[t], a[r] = a[r], a[t]
            for row in a:
                row[t], row[c] = row[c], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag, cols - len(diag)


def _min_entry(a: Matrix, t: int, rows: int, cols: int, only_cross: bool = False):
    best = None
    if only_cross:
        cells = [(i, t) for i in range(t, rows)] + [(t, j) for j in range(t + 1, cols)]
    else:
        cells = [(i, j) for i in range(t, rows) for j in range(t, cols)]
    for i, j in cells:
        if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
            best = (i, j)
    return best


def h1_invariants(pres: SurgeryPresentation) -> HomologyInvariants:
    diag, free = smith_normal_form(h1_matrix(pres)) if pres.m else ([], 0)
    return HomologyInvariants(tuple(d for d in diag if d != 1), free)
