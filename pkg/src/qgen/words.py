"""Colored tensor words.

A word is a finite sequence of colors, one per tensor factor: ``PLAIN``
stands for the fundamental space V, ``STAR`` for its dual V*.  The text
format is one character per letter, ``u`` for PLAIN and ``U`` for STAR,
so that words are single CLI tokens (``uUuU``).
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator

from .errors import WordParseError

#: Default cap on word length enforced by the enumeration/realization layers.
#: The ambient dimension N**k grows exponentially in the word length k.
DEFAULT_WORD_CAP = 10


class Color(Enum):
    PLAIN = "u"
    STAR = "U"

    def flipped(self) -> "Color":
        return Color.STAR if self is Color.PLAIN else Color.PLAIN

    def __repr__(self) -> str:
        return f"Color.{self.name}"


class ColoredWord:
    """Immutable sequence of colors; the empty word is the trivial object."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters: tuple[Color, ...] = tuple(letters)
        for c in self.letters:
            if not isinstance(c, Color):
                raise TypeError(f"not a Color: {c!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Color]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, ColoredWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return "".join(c.value for c in self.letters)

    def __repr__(self) -> str:
        return f"ColoredWord({str(self)!r})"

    def balance(self) -> int:
        """Number of PLAIN letters minus number of STAR letters."""
        plain = sum(1 for c in self.letters if c is Color.PLAIN)
        return 2 * plain - len(self.letters)

    def conjugate(self) -> "ColoredWord":
        return conjugate_word(self)

    def subword(self, positions) -> "ColoredWord":
        """The word restricted to the given 1-based positions, in order."""
        return ColoredWord(self.letters[p - 1] for p in sorted(positions))


def parse_word(s: str) -> ColoredWord:
    """Parse a string over {u, U} into a word; reject anything else.

    The error names the 1-based position of the offending character.
    """
    letters = []
    for i, ch in enumerate(s):
        if ch == "u":
            letters.append(Color.PLAIN)
        elif ch == "U":
            letters.append(Color.STAR)
        else:
            raise WordParseError(ch, i + 1)
    return ColoredWord(letters)


def conjugate_word(w: ColoredWord) -> ColoredWord:
    """Reverse the word and flip every color; involutive."""
    return ColoredWord(c.flipped() for c in reversed(w.letters))


def uncolored_word(k: int) -> ColoredWord:
    """All-PLAIN word of length k (self-dual conventions ignore colors)."""
    return ColoredWord((Color.PLAIN,) * k)


def check_dimension(N: int) -> int:
    """Validate a fundamental-representation size."""
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"dimension must be a positive integer, got {N!r}")
    return N
