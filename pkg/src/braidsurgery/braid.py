"""
Braid words over the Artin generators.

A letter ``+i`` stands for sigma_i (the right-handed half twist of the
strands in positions i and i+1) and ``-i`` for its inverse. Strand
positions are numbered 1..k and words are read left to right, i.e. the
first letter is the first crossing a strand meets.

Permutations use one-line notation for the *strand map*: ``images[j-1]``
is the final position of the strand that starts at position ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import LetterOutOfRange, StrandMismatch


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise LetterOutOfRange(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(int(e) for e in self.letters))
        for e in self.letters:
            if e == 0 or abs(e) > self.strands - 1:
                raise LetterOutOfRange(f"letter {e} is not a generator of B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.letters)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(1, k + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(j)) for j in range(1, self.size + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for j, img in enumerate(self.images, start=1):
            inv[img - 1] = j
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def cycles(self) -> list[tuple[int, ...]]:
        """Orbits, each starting at its least element, sorted by that element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out


def new_braid_word(k: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(k, tuple(letters))


def parse_word(text: str, k: int) -> BraidWord:
    """Parse whitespace (or comma) separated signed integers, e.g. ``"1 -2 1"``."""
    return BraidWord(k, tuple(int(tok) for tok in text.replace(",", " ").split()))


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise StrandMismatch(f"B_{a.strands} vs B_{b.strands}")


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise ValueError("concat needs at least one word")
    for w in words[1:]:
        _check_same(words[0], w)
    return BraidWord(words[0].strands, tuple(e for w in words for e in w.letters))


def power(w: BraidWord, n: int) -> BraidWord:
    """``w`` repeated ``n`` times; negative ``n`` repeats the inverse."""
    base = w if n >= 0 else inverse(w)
    return BraidWord(w.strands, base.letters * abs(n))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-e for e in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for e in w.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(w.strands, tuple(stack))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


def negative_letter_count(w: BraidWord) -> int:
    return sum(1 for e in w.letters if e < 0)


def is_positive_word(w: BraidWord) -> bool:
    return all(e > 0 for e in w.letters)


def underlying_permutation(w: BraidWord) -> Permutation:
    # occupant[p] = strand sitting at position p+1
    occupant = list(range(1, w.strands + 1))
    for e in w.letters:
        i = abs(e)
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
    images = [0] * w.strands
    for pos, strand in enumerate(occupant, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def full_twist_word(k: int) -> BraidWord:
    """The full twist (sigma_1 ... sigma_{k-1})^k as a positive word of length k(k-1)."""
    return BraidWord(k, tuple(range(1, k)) * k)
