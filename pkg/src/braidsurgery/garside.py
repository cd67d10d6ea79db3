"""
Garside structure of B_k with the half twist as Garside element.

Simple braids are stored by their strand map (0-indexed one-line tuple
``f`` with ``f[j]`` the final position of the strand starting at ``j``).
For a simple braid ``f``:

* its *starting set* (letters a positive word for it may begin with) is
  ``{i : f[i-1] > f[i]}``, i.e. strands starting at i, i+1 cross;
* its *finishing set* is ``{i : finv[i-1] > finv[i]}``.

A pair ``(a, b)`` is left-weighted when start(b) is contained in finish(a).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .braid import (
    BraidWord,
    Permutation,
    concat,
    full_twist_word,
    is_positive_word,
    negative_letter_count,
    power,
)
from .errors import IndexOutOfRange, InsufficientTwists, StrandMismatch

Strands = tuple[int, ...]


@dataclass(frozen=True)
class SimpleFactor:
    word: BraidWord
    perm: Permutation


@dataclass(frozen=True)
class NormalForm:
    strands: int
    infimum: int
    factors: tuple[SimpleFactor, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def is_positive(self) -> bool:
        return self.infimum >= 0

    def to_word(self) -> BraidWord:
        """A word representing the same braid: half twist power, then the factors."""
        parts = [power(half_twist_word(self.strands), self.infimum)]
        parts.extend(f.word for f in self.factors)
        return concat(*parts)


# -- strand-map primitives (0-indexed tuples) ------------------------------

def _identity(k: int) -> Strands:
    return tuple(range(k))


def _reversal(k: int) -> Strands:
    return tuple(range(k - 1, -1, -1))


def _inv(f: Strands) -> Strands:
    out = [0] * len(f)
    for j, img in enumerate(f):
        out[img] = j
    return tuple(out)


def _starting_set(f: Strands) -> frozenset[int]:
    return frozenset(i for i in range(1, len(f)) if f[i - 1] > f[i])


def _finishing_set(f: Strands) -> frozenset[int]:
    return _starting_set(_inv(f))


def _append_generator(f: Strands, i: int) -> Strands:
    # f . sigma_i : the strands ending at positions i, i+1 swap
    return tuple(i if x == i - 1 else i - 1 if x == i else x for x in f)


def _prepend_generator(f: Strands, i: int) -> Strands:
    # sigma_i . f (or removal of a leading sigma_i): swap positions i, i+1
    g = list(f)
    g[i - 1], g[i] = g[i], g[i - 1]
    return tuple(g)


def _tau(f: Strands) -> Strands:
    """Conjugation by the half twist: sigma_i <-> sigma_{k-i}."""
    k = len(f)
    return tuple(k - 1 - f[k - 1 - j] for j in range(k))


def _generator(k: int, i: int) -> Strands:
    return _prepend_generator(_identity(k), i)


def _left_weight(a: Strands, b: Strands) -> tuple[Strands, Strands, bool]:
    changed = False
    while True:
        movable = _starting_set(b) - _finishing_set(a)
        if not movable:
            return a, b, changed
        i = min(movable)
        a = _append_generator(a, i)
        b = _prepend_generator(b, i)
        changed = True


def _to_simple(f: Strands) -> SimpleFactor:
    return simple_word(Permutation(tuple(x + 1 for x in f)))


# -- public operations -----------------------------------------------------

def half_twist_word(k: int) -> BraidWord:
    """(s_1)(s_2 s_1)(s_3 s_2 s_1)...(s_{k-1}...s_1), length k(k-1)/2."""
    letters: list[int] = []
    for top in range(1, k):
        letters.extend(range(top, 0, -1))
    return BraidWord(k, tuple(letters))


def simple_word(perm: Permutation) -> SimpleFactor:
    """
    Positive permutation braid realizing ``perm``.

    Bubble sort on the one-line images: repeatedly swap the leftmost
    adjacent descent at positions i, i+1 and emit sigma_i. Each emitted
    letter is the first crossing of the remaining braid, so the word has
    exactly ``perm.inversions()`` letters.
    """
    f = [x - 1 for x in perm.images]
    letters = []
    while True:
        for i in range(1, len(f)):
            if f[i - 1] > f[i]:
                f[i - 1], f[i] = f[i], f[i - 1]
                letters.append(i)
                break
        else:
            break
    return SimpleFactor(BraidWord(max(perm.size, 1), tuple(letters)), perm)


def delta_over_sigma(k: int, i: int) -> BraidWord:
    """Positive word ``p`` with ``p . sigma_i`` equal to the half twist."""
    if not 1 <= i <= k - 1:
        raise IndexOutOfRange(f"sigma_{i} is not a generator of B_{k}")
    f = _append_generator(_reversal(k), i)
    return _to_simple(f).word


def full_twist_times_inverse(k: int, i: int) -> BraidWord:
    """Positive expansion of Delta_k sigma_i^{-1}, length k(k-1) - 1."""
    return concat(half_twist_word(k), delta_over_sigma(k, i))


def positify(w: BraidWord, n: int) -> BraidWord:
    """Positive word for Delta_k^n w, with each negative letter absorbing one full twist."""
    k = w.strands
    needed = negative_letter_count(w)
    if n < needed:
        raise InsufficientTwists(f"{needed} negative letters need n >= {needed}, got {n}")
    body: list[int] = []
    expansions: dict[int, tuple[int, ...]] = {}
    for e in w.letters:
        if e > 0:
            body.append(e)
        else:
            if -e not in expansions:
                expansions[-e] = full_twist_times_inverse(k, -e).letters
            body.extend(expansions[-e])
    leftover = full_twist_word(k).letters * (n - needed)
    return BraidWord(k, leftover + tuple(body))


def _factor_stream(w: BraidWord) -> tuple[int, list[Strands]]:
    """Rewrite w as Delta^{-r} x_1 ... x_l with simple x_j (not yet normalized)."""
    k = w.strands
    neg_after = 0
    reversed_factors: list[Strands] = []
    for e in reversed(w.letters):
        i = abs(e)
        f = _generator(k, i) if e > 0 else _append_generator(_reversal(k), i)
        if neg_after % 2:
            f = _tau(f)
        reversed_factors.append(f)
        if e < 0:
            neg_after += 1
    return -neg_after, reversed_factors[::-1]


def _normalize(k: int, factors: Iterable[Strands]) -> tuple[int, list[Strands]]:
    ident, delta = _identity(k), _reversal(k)
    nf: list[Strands] = []
    for s in factors:
        if s == ident:
            continue
        # merge into the last factor when the product stays simple
        if nf and not (_starting_set(s) & _finishing_set(nf[-1])) and _is_simple_product(nf[-1], s):
            nf[-1] = _compose(nf[-1], s)
        else:
            nf.append(s)
        j = len(nf) - 1
        while j > 0:
            a, b, changed = _left_weight(nf[j - 1], nf[j])
            nf[j - 1], nf[j] = a, b
            if not changed:
                break
            j -= 1
    # safety net: sweep until every adjacent pair is left-weighted
    dirty = True
    while dirty:
        dirty = False
        for j in range(len(nf) - 1):
            a, b, changed = _left_weight(nf[j], nf[j + 1])
            if changed:
                nf[j], nf[j + 1] = a, b
                dirty = True
    lo, hi = 0, len(nf)
    while lo < hi and nf[lo] == delta:
        lo += 1
    while hi > lo and nf[hi - 1] == ident:
        hi -= 1
    return lo, nf[lo:hi]


def _compose(a: Strands, b: Strands) -> Strands:
    # braid a then braid b
    return tuple(b[x] for x in a)


def _inversion_count(f: Strands) -> int:
    return sum(1 for x in range(len(f)) for y in range(x + 1, len(f)) if f[x] > f[y])


def _is_simple_product(a: Strands, b: Strands) -> bool:
    return _inversion_count(_compose(a, b)) == _inversion_count(a) + _inversion_count(b)


def left_normal_form(w: BraidWord) -> NormalForm:
    k = w.strands
    if k == 1:
        return NormalForm(1, 0, ())
    inf, stream = _factor_stream(w)
    deltas, factors = _normalize(k, stream)
    return NormalForm(k, inf + deltas, tuple(_to_simple(f) for f in factors))


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise StrandMismatch(f"B_{a.strands} vs B_{b.strands}")
    return left_normal_form(a) == left_normal_form(b)


def is_positive_braid(w: BraidWord) -> bool:
    """Whether the braid (not the word) is a positive element."""
    return is_positive_word(w) or left_normal_form(w).infimum >= 0


def minimal_twist_power(w: BraidWord) -> int:
    """Least n >= 0 with Delta_k^n w positive; Delta_k is the square of the half twist."""
    inf = left_normal_form(w).infimum
    return max(0, -(inf // 2))


TwistMode = Literal["lemma", "minimal"]


def positive_representative(w: BraidWord, n: int) -> BraidWord:
    """
    Positive word for Delta_k^n w for any sufficient n.

    Uses :func:`positify` when n covers every negative letter; below that
    count the word is read off the left normal form of Delta_k^n w.
    """
    if n >= negative_letter_count(w):
        return positify(w, n)
    nf = left_normal_form(concat(power(full_twist_word(w.strands), n), w))
    if nf.infimum < 0:
        raise InsufficientTwists(f"Delta^{n} w is not positive (infimum {nf.infimum})")
    return nf.to_word()
