"""Components, axis linking and pairwise linking numbers of braid closures."""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, underlying_permutation
from .errors import OddCrossingParity


@dataclass(frozen=True)
class ClosureInfo:
    component_count: int
    strand_to_component: tuple[int, ...]  # strand j (1-based) -> label, at index j-1
    strand_counts: tuple[int, ...]
    linking: tuple[tuple[int, ...], ...]


def components(w: BraidWord) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Cycles of the strand permutation, labelled 1..m by their least strand."""
    cycles = underlying_permutation(w).cycles()
    labels = [0] * w.strands
    for label, cyc in enumerate(cycles, start=1):
        for strand in cyc:
            labels[strand - 1] = label
    return len(cycles), tuple(labels), tuple(len(c) for c in cycles)


def linking_matrix(w: BraidWord) -> ClosureInfo:
    m, labels, counts = components(w)
    doubled = [[0] * m for _ in range(m)]
    occupant = list(range(w.strands))
    for e in w.letters:
        i = abs(e)
        a, b = labels[occupant[i - 1]] - 1, labels[occupant[i]] - 1
        if a != b:
            sign = 1 if e > 0 else -1
            doubled[a][b] += sign
            doubled[b][a] += sign
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
    for a in range(m):
        for b in range(m):
            if doubled[a][b] % 2:
                raise OddCrossingParity(f"components {a + 1},{b + 1} of {w.letters}")
    linking = tuple(tuple(x // 2 for x in row) for row in doubled)
    return ClosureInfo(m, labels, counts, linking)


def axis_linking(info: ClosureInfo) -> tuple[int, ...]:
    """Linking of each component with the braid axis: every strand pierces the axis disk once."""
    return info.strand_counts
