"""Finite-depth weight tables for shift-invariant measures.

A shift-invariant measure on a subshift is determined by its weights on
cylinders of finite words.  The weight function is nonnegative and satisfies
the Kirchhoff equalities: summing over all one-letter extensions of a word on
either side reproduces the word's weight.  A MeasureTable stores such a
function exactly (rationals only) on all words up to a fixed depth, together
with the total mass, which is also the weight of the empty-word cylinder.
Absent entries are zero; violations of the consistency constraints are data
reported by validate(), not construction errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .words import Alphabet, Word, iter_words, primitive_root

Rational = Union[Fraction, int]


def _as_fraction(value, what: str) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"{what} must be exact, got a float")
    return Fraction(value)


@dataclass(frozen=True)
class MeasureTable:
    """Exact weights for all words of length 1..depth over one alphabet."""

    alphabet: Alphabet
    depth: int
    values: dict[Word, Fraction]
    total_mass: Fraction

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        mass = _as_fraction(self.total_mass, "total mass")
        if mass < 0:
            raise ValueError("total mass must be nonnegative")
        object.__setattr__(self, "total_mass", mass)
        normalized: dict[Word, Fraction] = {}
        for word, raw in self.values.items():
            if word.alphabet != self.alphabet:
                raise ValueError(f"word '{word}' is not over the table alphabet")
            if not 1 <= len(word) <= self.depth:
                raise ValueError(f"word '{word}' has length outside 1..{self.depth}")
            value = _as_fraction(raw, f"value of '{word}'")
            if value < 0:
                raise ValueError(f"negative value for '{word}'")
            if value:
                normalized[word] = value
        object.__setattr__(self, "values", normalized)

    def value(self, w: Word) -> Fraction:
        """Weight of the cylinder of w; the empty word gives the total mass."""
        if w.alphabet != self.alphabet:
            raise ValueError("word is not over the table alphabet")
        if len(w) == 0:
            return self.total_mass
        if len(w) > self.depth:
            raise ValueError(f"word length {len(w)} exceeds table depth {self.depth}")
        return self.values.get(w, Fraction(0))


@dataclass(frozen=True)
class Violation:
    """One broken consistency constraint found by validate().

    kind is "left-extension" or "right-extension" (word set, level None) or
    "level-sum" (level set, word None).
    """

    kind: str
    word: Word | None
    level: int | None
    expected: Fraction
    actual: Fraction

    def __str__(self) -> str:
        subject = str(self.word) if self.word is not None else f"length-{self.level}"
        return f"{self.kind} at {subject}: expected {self.expected}, found {self.actual}"


def validate(m: MeasureTable) -> list[Violation]:
    """Every Kirchhoff and level-sum violation; an empty list means consistent.

    Both extension equalities are checked at every word of length < depth
    (zero-valued ones included), and each level sum is checked against the
    total mass.
    """
    out: list[Violation] = []
    letters = [Word(m.alphabet, (i,)) for i in range(len(m.alphabet))]
    for length in range(1, m.depth):
        for w in iter_words(m.alphabet, length):
            expected = m.value(w)
            left = sum((m.value(a + w) for a in letters), Fraction(0))
            if left != expected:
                out.append(Violation("left-extension", w, None, expected, left))
            right = sum((m.value(w + a) for a in letters), Fraction(0))
            if right != expected:
                out.append(Violation("right-extension", w, None, expected, right))
    for length in range(1, m.depth + 1):
        total = sum((v for w, v in m.values.items() if len(w) == length), Fraction(0))
        if total != m.total_mass:
            out.append(Violation("level-sum", None, length, m.total_mass, total))
    return out


def characteristic_measure(w: Word, depth: int) -> MeasureTable:
    """Weight table of the counting measure on the periodic orbit of w.

    A word v weighs the number of start offsets within one period of the
    biinfinite repetition of w at which v occurs, scaled by the exponent of w
    over its primitive root.  Total mass is |w|.
    """
    if len(w) == 0:
        raise ValueError("the empty word has no characteristic measure")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    root, exponent = primitive_root(w)
    period = len(root)
    stream = root.letters * (-(-depth // period) + 1)
    values: dict[Word, Fraction] = {}
    for offset in range(period):
        for length in range(1, depth + 1):
            v = Word(w.alphabet, stream[offset : offset + length])
            values[v] = values.get(v, Fraction(0)) + exponent
    return MeasureTable(w.alphabet, depth, values, Fraction(len(w)))


def linear_combination(terms: Iterable[tuple[Rational, MeasureTable]]) -> MeasureTable:
    """Nonnegative rational combination of tables over one alphabet.

    The result is truncated to the smallest depth among the terms; masses
    combine with the same coefficients.
    """
    term_list = list(terms)
    if not term_list:
        raise ValueError("at least one term is required")
    alphabet = term_list[0][1].alphabet
    depth = min(table.depth for _, table in term_list)
    values: dict[Word, Fraction] = {}
    mass = Fraction(0)
    for coefficient, table in term_list:
        if table.alphabet != alphabet:
            raise ValueError("all terms must share one alphabet")
        lam = _as_fraction(coefficient, "coefficient")
        if lam < 0:
            raise ValueError("coefficients must be nonnegative")
        mass += lam * table.total_mass
        for word, value in table.values.items():
            if len(word) <= depth:
                values[word] = values.get(word, Fraction(0)) + lam * value
    return MeasureTable(alphabet, depth, values, mass)


@dataclass(frozen=True)
class FrequencyVector:
    """Letter weights in alphabet order; entries sum to the total mass."""

    alphabet: Alphabet
    entries: tuple[Fraction, ...]


def frequency_vector(m: MeasureTable) -> FrequencyVector:
    return FrequencyVector(
        m.alphabet,
        tuple(m.value(Word(m.alphabet, (i,))) for i in range(len(m.alphabet))),
    )


def support_words(m: MeasureTable) -> set[Word]:
    """All stored words of strictly positive weight."""
    return set(m.values)
