"""Free-group words over a small alphabet.

A word is a tuple of nonzero ints: ``k`` is the k-th symbol and ``-k`` its
inverse.  Only free and cyclic reduction are used; there is no rewriting.
"""

from __future__ import annotations

from typing import Iterable, Optional

Word = tuple


def reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for s in word:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def inverse(word: Word) -> Word:
    return tuple(-s for s in reversed(word))


def mul(*words: Word) -> Word:
    return reduce(s for w in words for s in w)


def cyclic_reduce(word: Word) -> Word:
    w = list(reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def syllables(word: Word) -> list[tuple[int, int]]:
    """Runs of one symbol: [(symbol, exponent), ...] with symbol > 0."""
    out: list[list[int]] = []
    for s in word:
        a, e = abs(s), (1 if s > 0 else -1)
        if out and out[-1][0] == a:
            out[-1][1] += e
        else:
            out.append([a, e])
    return [(a, e) for a, e in out if e != 0]


def cyclic_syllables(word: Word) -> list[tuple[int, int]]:
    """Syllables of the cyclically reduced word, merging the wrap-around run."""
    syl = syllables(cyclic_reduce(word))
    if len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        a, e = syl[-1]
        syl = [(a, e + syl[0][1])] + syl[1:-1]
        syl = [(x, y) for x, y in syl if y != 0]
    return syl


def symbols(word: Word) -> set[int]:
    return {abs(s) for s in word}


def occurrences(word: Word) -> dict[int, int]:
    """How many letters of each symbol the cyclically reduced word contains."""
    counts: dict[int, int] = {}
    for s in cyclic_reduce(word):
        counts[abs(s)] = counts.get(abs(s), 0) + 1
    return counts


def is_power(word: Word, symbol: int) -> bool:
    return all(abs(s) == symbol for s in word)


def conjugacy_key(word: Word) -> Word:
    """Least cyclic rotation of the word or its inverse; equal keys mean the
    two relators generate the same normal subgroup."""
    best = None
    for w in (cyclic_reduce(word), inverse(cyclic_reduce(word))):
        for i in range(max(1, len(w))):
            r = w[i:] + w[:i]
            if best is None or r < best:
                best = r
    return best


def solvable_bs_shape(word: Word) -> Optional[str]:
    """Name of a one-relator shape whose group is a solvable Baumslag-Solitar group.

    Recognised up to cyclic rotation, inversion and renaming or inverting the
    two symbols:

    * ``b a^k b^-1 a^-l`` with ``|k| == 1`` or ``|l| == 1``: BS(k, l);
    * ``a^2 b^2`` or ``a^2 b^-2``: the Klein bottle group BS(1, -1).
    """
    syl = cyclic_syllables(word)
    if len(syl) == 4:
        (s1, e1), (s2, e2), (s3, e3), (s4, e4) = syl
        if s1 != s3 or s2 != s4 or s1 == s2:
            return None
        # b-syllables in slots 1,3 or in slots 2,4
        for (b1, b2), (a1, a2) in (((e1, e3), (e2, e4)), ((e2, e4), (e3, e1))):
            if {b1, b2} == {1, -1} and (abs(a1) == 1 or abs(a2) == 1):
                k, l = (a1, -a2) if b1 == 1 else (a2, -a1)
                return f"BS({k},{l})"
        return None
    if len(syl) == 2:
        (s1, e1), (s2, e2) = syl
        if s1 != s2 and abs(e1) == 2 and abs(e2) == 2:
            return "BS(1,-1)"
    return None


def format_word(word: Word, names: tuple = ("g", "h")) -> str:
    if not word:
        return "1"
    parts = []
    for a, e in syllables(word):
        name = names[a - 1]
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)
