"""Standard-form braid words for plats, with parsing and serialization.

A grid converts to a word in the braid group on 2m strands by reading its
rows top to bottom: an odd row contributes the even-indexed generators
s2^a1 s4^a2 ... s(2m-2)^a(m-1), an even row the odd-indexed generators
s1^a1 s3^a2 ... s(2m-1)^am.  Zero coefficients contribute nothing, which
is why the inverse conversion may need the target length to reinsert
empty rows.

Text grammar: whitespace-separated tokens 's<k>^<e>', e.g. 's2^-3 s4^-4'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import AmbiguousLength, BraidSyntaxError, NotStandardForm
from .grid import Closure, PlatGrid, require_valid, row_width


@dataclass(frozen=True)
class BraidLetter:
    """A run-length encoded power of one Artin generator: sigma_k^e."""

    generator: int
    exponent: int

    def __post_init__(self):
        if self.generator < 1:
            raise ValueError(f"generator index must be positive, got {self.generator}")
        if self.exponent == 0:
            raise ValueError("exponent must be nonzero")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 2 or self.strands % 2 != 0:
            raise ValueError(f"strand count must be even and at least 2, got {self.strands}")
        for letter in self.letters:
            if letter.generator >= self.strands:
                raise ValueError(
                    f"generator {letter.generator} out of range for {self.strands} strands"
                )


def to_braid_word(grid: PlatGrid) -> BraidWord:
    """Emit the standard-form word of a grid, dropping zero coefficients."""
    require_valid(grid)
    letters = []
    for i, r in enumerate(grid.rows, start=1):
        first_gen = 2 if i % 2 == 1 else 1
        for j, a in enumerate(r):
            if a != 0:
                letters.append(BraidLetter(first_gen + 2 * j, a))
    return BraidWord(strands=2 * grid.width, letters=tuple(letters))


def from_braid_word(word: BraidWord, n: int | None = None) -> PlatGrid:
    """Rebuild the coefficient grid from a standard-form word.

    The word is factored greedily into maximal blocks of strictly
    increasing generators of one parity, alternating even/odd starting
    with even.  With n given, trailing empty rows are filled in up to n-1
    blocks; without it, n is inferred only when no padding is needed
    (block count + 1 already even), otherwise AmbiguousLength is raised
    because any larger even length would also fit.
    """
    m = word.strands // 2
    blocks: list[list[BraidLetter]] = [[]]
    for index, letter in enumerate(word.letters):
        while True:
            block_row = len(blocks)  # current 1-indexed row
            want_even = block_row % 2 == 1
            parity_ok = (letter.generator % 2 == 0) == want_even
            increasing = not blocks[-1] or letter.generator > blocks[-1][-1].generator
            if parity_ok and increasing:
                blocks[-1].append(letter)
                break
            if parity_ok and not increasing:
                # same parity but not increasing: the next same-parity row
                # is two blocks away, so an empty row of the other parity
                # sits between them
                blocks.append([])
                blocks.append([letter])
                break
            if blocks[-1]:
                blocks.append([])
                continue
            raise NotStandardForm(
                f"generator {letter.generator} has the wrong parity for row {block_row}",
                index,
            )
    if n is None:
        if len(blocks) % 2 == 1:
            n = len(blocks) + 1
        else:
            raise AmbiguousLength(
                f"{len(blocks)} blocks need at least one empty padding row; supply n"
            )
    if n < 2 or n % 2 != 0:
        raise AmbiguousLength(f"target length must be even and at least 2, got {n}")
    if len(blocks) > n - 1:
        raise NotStandardForm(
            f"word needs {len(blocks)} rows but length {n} allows {n - 1}",
            len(word.letters) - 1,
        )
    rows = []
    for i in range(1, n):
        w = row_width(m, i)
        coeffs = [0] * w
        if i <= len(blocks):
            first_gen = 2 if i % 2 == 1 else 1
            for letter in blocks[i - 1]:
                j = (letter.generator - first_gen) // 2
                if not (0 <= j < w):
                    raise NotStandardForm(
                        f"generator {letter.generator} does not fit a width-{m} plat",
                        len(word.letters) - 1,
                    )
                coeffs[j] = letter.exponent
        rows.append(tuple(coeffs))
    return PlatGrid(width=m, length=n, rows=tuple(rows), closure=Closure.STANDARD)


_TOKEN = re.compile(r"s(\d+)\^(-?\d+)$")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse 's<k>^<e>' tokens.  Strand count is inferred when omitted."""
    letters = []
    max_gen = 0
    pos = 0
    for raw in text.split():
        position = text.index(raw, pos)
        pos = position + len(raw)
        match = _TOKEN.match(raw)
        if not match:
            raise BraidSyntaxError(f"malformed token {raw!r}", position)
        k, e = int(match.group(1)), int(match.group(2))
        if k < 1:
            raise BraidSyntaxError(f"generator out of range in {raw!r}", position)
        if e == 0:
            raise BraidSyntaxError(f"zero exponent in {raw!r}", position)
        if strands is not None and k >= strands:
            raise BraidSyntaxError(f"generator out of range in {raw!r}", position)
        max_gen = max(max_gen, k)
        letters.append(BraidLetter(k, e))
    if strands is None:
        strands = max_gen + 1 if (max_gen + 1) % 2 == 0 else max_gen + 2
        strands = max(strands, 4)
    return BraidWord(strands=strands, letters=tuple(letters))


def serialize_braid(word: BraidWord) -> str:
    """Inverse of parse_braid; the empty word serializes to ''."""
    return " ".join(f"s{letter.generator}^{letter.exponent}" for letter in word.letters)
