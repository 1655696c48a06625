"""
Braid words and the operations that make the braid groups into an operad.

A braid on n strands is a word in the generators 1 .. n-1 and their inverses,
stored as a tuple of nonzero ints: entry ``i`` crosses strands i and i+1 with
the left strand passing over, ``-i`` is the inverse crossing.  Words read left
to right, matching the diagrammatic composition used for permutations: the
word ``(1, 2)`` means "cross 1-2 first, then 2-3".  Strand counts of 0 and 1
are legal; only the empty word exists there.

Word equality is decided by handle reduction: repeatedly locate the first
subword ``i^e ... i^-e`` whose interior only uses generators of larger index,
and rewrite it so the pair cancels.  The rewriting terminates, and a fully
reduced word represents the identity exactly when it is empty (a nonempty
reduced word uses its lowest generator with only one sign, and such words are
never trivial).  For comparisons between positive words there is a much
cheaper route: a positive word whose length equals the crossing number of its
underlying permutation is the unique minimal positive braid for that
permutation, so two such words are equal exactly when the permutations match.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permutations import (
    Permutation,
    adjacent_transposition,
    compose,
    identity as identity_permutation,
    inversions,
    tau,
)


@dataclass(frozen=True)
class BraidWord:
    """A braid group element on ``strands`` strands, as a word in the generators."""

    strands: int
    word: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 0:
            raise ValueError(f"strand count must be nonnegative, got {self.strands}")
        for entry in self.word:
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise ValueError(f"braid word entries must be integers, got {entry!r}")
            if entry == 0:
                raise ValueError("braid word entry 0 is not a generator")
            if abs(entry) >= self.strands:
                raise ValueError(
                    f"generator {entry} does not exist on {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.word)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concatenate(self, other)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-entry for entry in reversed(self.word)))

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {list(self.word)})"


def braid_identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def concatenate(w1: BraidWord, w2: BraidWord) -> BraidWord:
    """Diagrammatic product: first w1, then w2."""
    if w1.strands != w2.strands:
        raise ValueError(f"cannot multiply braids on {w1.strands} and {w2.strands} strands")
    return BraidWord(w1.strands, w1.word + w2.word)


def inverse_word(w: BraidWord) -> BraidWord:
    return w.inverse()


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse a space-separated word such as ``"1 -2 1"``."""
    entries: list[int] = []
    for token in text.split():
        try:
            entry = int(token)
        except ValueError:
            raise ValueError(f"braid word entry {token!r} is not an integer") from None
        if entry == 0:
            raise ValueError("braid word entry 0 is not a generator")
        if abs(entry) >= strands:
            raise ValueError(f"generator {entry} does not exist on {strands} strands")
        entries.append(entry)
    return BraidWord(strands, tuple(entries))


def format_word(w: BraidWord) -> str:
    return " ".join(str(entry) for entry in w.word)


def underlying_permutation(w: BraidWord) -> Permutation:
    """Forget over/under information: each crossing becomes a transposition."""
    perm = identity_permutation(w.strands)
    for entry in w.word:
        perm = compose(perm, adjacent_transposition(w.strands, abs(entry)))
    return perm


def is_positive(w: BraidWord) -> bool:
    """Whether every crossing is positive (the empty word counts as positive)."""
    return all(entry > 0 for entry in w.word)


def is_minimal_positive(w: BraidWord) -> bool:
    """
    Positive, and no pair of strands crosses twice -- equivalently, positive
    with length equal to the crossing number of the underlying permutation.
    """
    return is_positive(w) and len(w.word) == inversions(underlying_permutation(w))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for entry in w.word:
        if stack and stack[-1] == -entry:
            stack.pop()
        else:
            stack.append(entry)
    return BraidWord(w.strands, tuple(stack))


def _first_handle(word: list[int]) -> tuple[int, int] | None:
    """
    Find the handle with the earliest possible end: positions j < k with
    word[j] == -word[k] and every letter strictly between of larger index.
    Scanning backwards from k, the first letter of index <= |word[k]| decides.
    """
    for k in range(len(word)):
        index = abs(word[k])
        for j in range(k - 1, -1, -1):
            if abs(word[j]) > index:
                continue
            if word[j] == -word[k]:
                return j, k
            break
    return None


def handle_reduce(w: BraidWord) -> BraidWord:
    """
    Reduce handles until none remain.  The result represents the same braid;
    it is empty if and only if the braid is trivial.
    """
    word = list(free_reduce(w).word)
    while True:
        found = _first_handle(word)
        if found is None:
            return BraidWord(w.strands, tuple(word))
        j, k = found
        index = abs(word[k])
        sign = 1 if word[j] > 0 else -1
        replacement: list[int] = []
        for entry in word[j + 1:k]:
            if abs(entry) == index + 1:
                inner_sign = 1 if entry > 0 else -1
                replacement.extend(
                    [-sign * (index + 1), inner_sign * index, sign * (index + 1)]
                )
            else:
                replacement.append(entry)
        word[j:k + 1] = replacement
        word = list(free_reduce(BraidWord(w.strands, tuple(word))).word)


def is_trivial(w: BraidWord) -> bool:
    return len(handle_reduce(w).word) == 0


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """
    Decide whether two words present the same braid.

    Minimal positive words are compared through their permutations (they are
    unique per permutation); mirrored all-negative words reduce to that case;
    everything else goes through handle reduction of ``w1 * w2^-1``.
    """
    if w1.strands != w2.strands:
        raise ValueError(f"cannot compare braids on {w1.strands} and {w2.strands} strands")
    a, b = free_reduce(w1), free_reduce(w2)
    if all(entry < 0 for entry in a.word) and all(entry < 0 for entry in b.word):
        # Flipping every crossing is an automorphism, so compare the mirrors.
        a = BraidWord(a.strands, tuple(-entry for entry in a.word))
        b = BraidWord(b.strands, tuple(-entry for entry in b.word))
    if is_minimal_positive(a) and is_minimal_positive(b):
        return underlying_permutation(a) == underlying_permutation(b)
    return is_trivial(concatenate(a, b.inverse()))


def block_sum_braids(braids: Sequence[BraidWord]) -> BraidWord:
    """Place the braids side by side on disjoint strand intervals."""
    word: list[int] = []
    offset = 0
    for braid in braids:
        for entry in braid.word:
            word.append(entry + offset if entry > 0 else entry - offset)
        offset += braid.strands
    return BraidWord(offset, tuple(word))


def _block_swap_word(left: int, right: int) -> list[int]:
    """
    The minimal positive word on ``left + right`` strands moving the first
    ``left`` strands past the next ``right``, each pair crossing once.
    """
    image = [0] * (left + right)
    for i in range(1, left + 1):
        image[i - 1] = i + right
    for i in range(1, right + 1):
        image[left + i - 1] = i
    return list(permutation_braid(Permutation(tuple(image))).word)


def cable(g: BraidWord, sizes: Sequence[int]) -> BraidWord:
    """
    Replace strand i of ``g`` (numbered at the top) by ``sizes[i-1]`` parallel
    strands.  Each crossing of cables becomes a block of crossings in which
    every strand of one cable crosses every strand of the other exactly once,
    with the sign of the original crossing.
    """
    if len(sizes) != g.strands:
        raise ValueError(f"cable needs {g.strands} strand sizes, got {len(sizes)}")
    for size in sizes:
        if size < 0:
            raise ValueError(f"cable sizes must be nonnegative, got {size}")
    current = list(sizes)
    word: list[int] = []
    for entry in g.word:
        i = abs(entry)
        left, right = current[i - 1], current[i]
        start = sum(current[:i - 1])
        if entry > 0:
            word.extend(s + start for s in _block_swap_word(left, right))
        else:
            # The inverse of moving the (eventual) left block past the right.
            word.extend(-(s + start) for s in reversed(_block_swap_word(right, left)))
        current[i - 1], current[i] = right, left
    return BraidWord(sum(sizes), tuple(word))


def mu_br(g: BraidWord, braids: Sequence[BraidWord]) -> BraidWord:
    """
    Operadic composition in the braid groups: substitute the i-th braid into
    the i-th strand of ``g``.  As with permutations, the substituted braids
    sit above the cabled copy of ``g``.
    """
    if len(braids) != g.strands:
        raise ValueError(f"operadic composition needs {g.strands} arguments, got {len(braids)}")
    sizes = [braid.strands for braid in braids]
    return concatenate(block_sum_braids(braids), cable(g, sizes))


def permutation_braid(p: Permutation) -> BraidWord:
    """
    The unique positive braid in which exactly the crossings of ``p`` occur,
    emitted by straight insertion sort on the image array (each recorded swap
    is one positive crossing, so the length is the inversion count).
    """
    image = list(p.image)
    word: list[int] = []
    for j in range(1, len(image)):
        i = j
        while i > 0 and image[i - 1] > image[i]:
            image[i - 1], image[i] = image[i], image[i - 1]
            word.append(i)
            i -= 1
    return BraidWord(p.n, tuple(word))


def t_positive(m: int, n: int) -> BraidWord:
    """
    The unique minimal positive braid on m*n strands whose underlying
    permutation is the transposition-of-a-grid permutation ``tau(m, n)``.
    """
    if m < 1 or n < 1:
        raise ValueError(f"t_positive needs m, n >= 1, got ({m}, {n})")
    return permutation_braid(tau(m, n))


def t_negative(m: int, n: int) -> BraidWord:
    """
    The all-negative counterpart: the inverse of ``t_positive(n, m)``, which
    is the unique minimal negative braid over ``tau(m, n)``.
    """
    if m < 1 or n < 1:
        raise ValueError(f"t_negative needs m, n >= 1, got ({m}, {n})")
    return t_positive(n, m).inverse()


def render_ascii(w: BraidWord) -> str:
    """
    One text row per crossing, strands as columns.  A positive crossing is
    drawn ``\\ /`` (left strand over), a negative one ``/ \\``.  The empty
    word renders as a single row of bars.
    """
    columns = max(2 * w.strands - 1, 0)

    def bar_row() -> list[str]:
        row = [" "] * columns
        for strand in range(w.strands):
            row[2 * strand] = "|"
        return row

    if not w.word:
        return "".join(bar_row()) if w.strands else ""
    lines = []
    for entry in w.word:
        row = bar_row()
        i = abs(entry)
        row[2 * (i - 1)] = "\\" if entry > 0 else "/"
        row[2 * i] = "/" if entry > 0 else "\\"
        lines.append("".join(row))
    return "\n".join(lines)


def render_dot(w: BraidWord) -> str:
    """A plain graph description of the crossing sequence, one node per crossing."""
    lines = [f'graph braid {{', f'  label="strands={w.strands}";']
    for position, entry in enumerate(w.word, start=1):
        sign = "+" if entry > 0 else "-"
        lines.append(f'  c{position} [label="{sign}{abs(entry)}"];')
    for position in range(1, len(w.word)):
        lines.append(f"  c{position} -- c{position + 1};")
    lines.append("}")
    return "\n".join(lines)
