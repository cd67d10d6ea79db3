"""Seeded random braid words, presentations and diagrams for property suites."""

from __future__ import annotations

import random

from .braid import BraidWord
from .closure import linking_matrix
from .pipeline import BraidSurgeryDiagram
from .surgery import RationalCoeff, SurgeryPresentation, normalize_coeff


def random_word(rng: random.Random, max_strands: int = 6, max_length: int = 24, min_strands: int = 1) -> BraidWord:
    k = rng.randint(min_strands, max_strands)
    if k == 1:
        return BraidWord(1, ())
    length = rng.randint(0, max_length)
    return BraidWord(k, tuple(rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(length)))


def random_coeff(rng: random.Random, bound: int = 9) -> RationalCoeff:
    while True:
        p, q = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if (p, q) != (0, 0):
            return normalize_coeff(p, q)


def random_presentation(
    rng: random.Random, max_m: int = 5, max_entry: int = 6, max_coeff: int = 9
) -> SurgeryPresentation:
    m = rng.randint(1, max_m)
    lk = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i):
            lk[i][j] = lk[j][i] = rng.randint(-max_entry, max_entry)
    coeffs = tuple(random_coeff(rng, max_coeff) for _ in range(m))
    flags = tuple(rng.random() < 0.5 for _ in range(m))
    return SurgeryPresentation(tuple(map(tuple, lk)), coeffs, flags)


def random_diagram(
    rng: random.Random, max_strands: int = 6, max_length: int = 20, max_coeff: int = 9
) -> BraidSurgeryDiagram:
    w = random_word(rng, max_strands, max_length)
    m = linking_matrix(w).component_count
    return BraidSurgeryDiagram(w, tuple(random_coeff(rng, max_coeff) for _ in range(m)))
