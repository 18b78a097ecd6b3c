"""Lascoux-Schutzenberger charge of words and tableaux, and exponent charges."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .tableaux import Tableau, reading_word


class ChargeError(ValueError):
    """Raised for words whose charge is undefined."""


def word_weight(word: Sequence[int]) -> tuple[int, ...]:
    counts = Counter(word)
    top = max(counts, default=0)
    return tuple(counts.get(a, 0) for a in range(1, top + 1))


def is_dominant_weight(word: Sequence[int]) -> bool:
    weight = word_weight(word)
    return all(weight[i] >= weight[i + 1] for i in range(len(weight) - 1))


def charge_indices(word: Sequence[int]) -> tuple[int, ...]:
    """Index of each position of a standard word, in word order."""
    word = tuple(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ChargeError(f"not a standard word: {word}")
    position = {a: p for p, a in enumerate(word)}
    index = {1: 0} if word else {}
    for a in range(2, len(word) + 1):
        step = 0 if position[a] > position[a - 1] else 1
        index[a] = index[a - 1] + step
    return tuple(index[a] for a in word)


def charge_standard(word: Sequence[int]) -> int:
    return sum(charge_indices(word))


def extract_standard_subwords(word: Sequence[int]) -> list[tuple[int, ...]]:
    """Split a word of dominant weight into standard subwords by cyclic scanning."""
    word = tuple(word)
    if not is_dominant_weight(word):
        raise ChargeError(f"weight {word_weight(word)} is not dominant")
    used = [False] * len(word)
    left = len(word)
    subwords = []
    while left:
        top = len([c for c in word_weight([a for a, u in zip(word, used) if not u]) if c])
        picked = []
        pos = -1
        for letter in range(1, top + 1):
            for step in range(1, len(word) + 1):
                p = (pos + step) % len(word)
                if not used[p] and word[p] == letter:
                    break
            else:
                raise ChargeError(f"letter {letter} missing during extraction")
            used[p] = True
            picked.append(p)
            pos = p
        left -= len(picked)
        subwords.append(tuple(word[p] for p in sorted(picked)))
    return subwords


def charge_word(word: Sequence[int]) -> int:
    return sum(charge_standard(w) for w in extract_standard_subwords(word))


def charge_tableau(t: Tableau) -> int:
    return charge_word(reading_word(t))


def charge_of_d(d: Sequence[int], m: int, variant: str = "c") -> int:
    """``c(d) = sum (m - i) d_i`` or ``ind(d) = sum i d_i`` over ``i = 1 .. m-1``."""
    d = tuple(d)
    if len(d) != m - 1:
        raise ChargeError(f"exponent vector of length {len(d)} for m={m}")
    if variant == "c":
        return sum((m - i) * x for i, x in enumerate(d, start=1))
    if variant == "ind":
        return sum(i * x for i, x in enumerate(d, start=1))
    raise ChargeError(f"unknown variant {variant!r}")


def format_word(word: Sequence[int]) -> str:
    """Concatenated digits when every letter is below 10, otherwise comma separated."""
    if all(a <= 9 for a in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse word {text!r}")
    return tuple(int(ch) for ch in text)
