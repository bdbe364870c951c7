"""Free group words, braid words and the Artin action.

Conventions used everywhere in the package:

* Free words are stored reduced, as run-length syllables ``(gen, exp)`` with
  1-based generator indices.
* A braid word acts on the free group letter by letter from left to right:
  the image of ``t_k`` under ``a*b`` is obtained by applying ``a`` first and
  then substituting with ``b``.  With ``compose_endos(f, g)`` meaning "``f``
  then ``g``", :func:`artin_action` is a monoid homomorphism.  The Hurwitz
  action obtained by precomposition is then a left action.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

DEFAULT_MAX_WORD_LEN = 10**6


class IndexOutOfRange(ValueError):
    pass


class RankMismatch(ValueError):
    pass


class StrandMismatch(ValueError):
    pass


class WordLengthOverflow(RuntimeError):
    """Raised when an intermediate word exceeds the syllable cap."""


# ---------------------------------------------------------------------------
# letter level helpers (a letter is a nonzero int, sign = exponent sign)


def _push(stack: list[int], letter: int) -> None:
    if stack and stack[-1] == -letter:
        stack.pop()
    else:
        stack.append(letter)


def _reduce_letters(letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for a in letters:
        _push(out, a)
    return out


def _inv_letters(letters: Sequence[int]) -> list[int]:
    return [-a for a in reversed(letters)]


def _syllables(letters: Sequence[int]) -> tuple[tuple[int, int], ...]:
    out: list[list[int]] = []
    for a in letters:
        g, e = abs(a), (1 if a > 0 else -1)
        if out and out[-1][0] == g:
            out[-1][1] += e
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out if e)


def _letters(syllables: Iterable[tuple[int, int]]) -> list[int]:
    out: list[int] = []
    for g, e in syllables:
        out.extend([g if e > 0 else -g] * abs(e))
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FreeWord:
    """Reduced word in t_1, t_2, ... stored as syllables."""

    syllables: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        syl = tuple((int(g), int(e)) for g, e in self.syllables)
        for g, e in syl:
            if g < 1:
                raise IndexOutOfRange(f"generator index {g} < 1")
        object.__setattr__(self, "syllables", _syllables(_reduce_letters(_letters(syl))))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "FreeWord":
        w = cls.__new__(cls)
        object.__setattr__(w, "syllables", _syllables(_reduce_letters(letters)))
        return w

    @classmethod
    def gen(cls, i: int, e: int = 1) -> "FreeWord":
        return cls(((i, e),))

    def letters(self) -> list[int]:
        return _letters(self.syllables)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord.from_letters(self.letters() + other.letters())

    def __invert__(self) -> "FreeWord":
        return FreeWord.from_letters(_inv_letters(self.letters()))

    def inverse(self) -> "FreeWord":
        return ~self

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def max_index(self) -> int:
        return max((g for g, _ in self.syllables), default=0)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(f"t{g}^{e}" for g, e in self.syllables)

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        syl = []
        for tok in text.split():
            m = re.fullmatch(r"t(\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad free-group token {tok!r}")
            syl.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(syl))


def free_reduce(raw: "FreeWord | Iterable[tuple[int, int]]", rank: int | None = None) -> FreeWord:
    """Reduce a raw syllable list; ``rank`` bounds the generator indices."""
    syl = raw.syllables if isinstance(raw, FreeWord) else tuple(raw)
    if rank is not None:
        for g, _ in syl:
            if not 1 <= g <= rank:
                raise IndexOutOfRange(f"t{g} is not a generator of F_{rank}")
    return FreeWord(syl)


def cyclic_reduce(w: FreeWord) -> FreeWord:
    a = w.letters()
    i, j = 0, len(a) - 1
    while i < j and a[i] == -a[j]:
        i += 1
        j -= 1
    return FreeWord.from_letters(a[i : j + 1])


def _min_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    n = len(seq)
    if n == 0:
        return ()
    doubled = list(seq) * 2
    best = min(range(n), key=lambda k: doubled[k : k + n])
    return tuple(doubled[best : best + n])


def conjugacy_key(w: FreeWord) -> tuple[int, ...]:
    """Canonical representative of the conjugacy class of ``w``."""
    return _min_rotation(cyclic_reduce(w).letters())


def are_conjugate(u: FreeWord, v: FreeWord) -> bool:
    return conjugacy_key(u) == conjugacy_key(v)


def conjugate_up_to_inverse(u: FreeWord, v: FreeWord) -> bool:
    return are_conjugate(u, v) or are_conjugate(u, ~v)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FreeEndo:
    """Endomorphism of F_rank given by the images of t_1..t_rank."""

    images: tuple[FreeWord, ...]

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, rank: int) -> "FreeEndo":
        return cls(tuple(FreeWord.gen(i) for i in range(1, rank + 1)))

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply_endo(self, w)

    def is_identity(self) -> bool:
        return all(img.syllables == ((i, 1),) for i, img in enumerate(self.images, 1))

    def __str__(self) -> str:
        return ", ".join(f"t{i} -> {img}" for i, img in enumerate(self.images, 1))


def apply_endo(f: FreeEndo, w: FreeWord, max_len: int = DEFAULT_MAX_WORD_LEN) -> FreeWord:
    if w.max_index() > f.rank:
        raise RankMismatch(f"word uses t{w.max_index()} but endomorphism has rank {f.rank}")
    imgs = [img.letters() for img in f.images]
    out: list[int] = []
    for g, e in w.syllables:
        piece = imgs[g - 1] if e > 0 else _inv_letters(imgs[g - 1])
        for _ in range(abs(e)):
            for a in piece:
                _push(out, a)
            if len(out) > max_len:
                raise WordLengthOverflow(f"word exceeds {max_len} letters")
    return FreeWord.from_letters(out)


def compose_endos(f: FreeEndo, g: FreeEndo) -> FreeEndo:
    """``f`` followed by ``g``: t -> g(f(t))."""
    if f.rank != g.rank:
        raise RankMismatch(f"ranks {f.rank} and {g.rank} differ")
    return FreeEndo(tuple(apply_endo(g, img) for img in f.images))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators s_1..s_{strands-1}; letter -i is s_i^-1."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.strands < 1:
            raise IndexOutOfRange("need at least one strand")
        for a in self.letters:
            if a == 0 or abs(a) >= self.strands:
                raise IndexOutOfRange(f"generator {a} not in Br_{self.strands}")

    @classmethod
    def gen(cls, strands: int, i: int, e: int = 1) -> "BraidWord":
        return cls(strands, (i if e > 0 else -i,) * abs(e))

    def _check(self, other: "BraidWord") -> None:
        if other.strands != self.strands:
            raise StrandMismatch(f"Br_{self.strands} vs Br_{other.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __invert__(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def inverse(self) -> "BraidWord":
        return ~self

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else ~self
        return BraidWord(self.strands, base.letters * abs(k))

    def conj(self, by: "BraidWord") -> "BraidWord":
        """by * self * by^-1"""
        return by * self * ~by

    def reduced(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(_reduce_letters(self.letters)))

    def reversed(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{a}" if a > 0 else f"S{-a}" for a in self.letters)

    @classmethod
    def parse(cls, strands: int, text: str) -> "BraidWord":
        text = text.strip()
        if text in ("", "1"):
            return cls(strands)
        out = []
        for tok in text.split():
            m = re.fullmatch(r"([sS])(\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad braid token {tok!r}")
            i = int(m.group(2))
            e = int(m.group(3) or 1) * (1 if m.group(1) == "s" else -1)
            out.extend([i if e > 0 else -i] * abs(e))
        return cls(strands, tuple(out))


def braid_product(strands: int, factors: Iterable[BraidWord]) -> BraidWord:
    out: list[int] = []
    for f in factors:
        if f.strands != strands:
            raise StrandMismatch(f"Br_{f.strands} factor in Br_{strands} product")
        out.extend(f.letters)
    return BraidWord(strands, tuple(out))


def hurwitz_letters(images: list[list[int]], letters: Sequence[int], max_len: int) -> list[list[int]]:
    """Left Hurwitz action on a tuple of free words, rightmost letter first."""
    for a in reversed(letters):
        i = abs(a) - 1
        x, y = images[i], images[i + 1]
        if a > 0:
            new = _reduce_letters(x + y + _inv_letters(x))
            images[i], images[i + 1] = new, x
        else:
            new = _reduce_letters(_inv_letters(y) + x + y)
            images[i], images[i + 1] = y, new
        if len(images[i]) > max_len or len(images[i + 1]) > max_len:
            raise WordLengthOverflow(f"Artin image exceeds {max_len} letters")
    return images


def artin_action(b: BraidWord, max_len: int = DEFAULT_MAX_WORD_LEN) -> FreeEndo:
    imgs = [[i] for i in range(1, b.strands + 1)]
    hurwitz_letters(imgs, b.letters, max_len)
    return FreeEndo(tuple(FreeWord.from_letters(w) for w in imgs))


def braids_equal(a: BraidWord, b: BraidWord, max_len: int = DEFAULT_MAX_WORD_LEN) -> bool:
    a._check(b)
    # Cancelling first keeps intermediate images short when a and b are equal.
    return artin_action((a * ~b).reduced(), max_len).is_identity()


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if a > 0 else -1 for a in b.letters)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n}; ``images[k-1]`` is the image of k.

    Products compose right to left: ``(p * q)(k) = p(q(k))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(x) for x in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(tuple(im))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise RankMismatch("permutation degrees differ")
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def __invert__(self) -> "Permutation":
        inv = [0] * self.degree
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def cycle_type(self) -> tuple[int, ...]:
        seen, out = set(), []
        for k in range(1, self.degree + 1):
            if k in seen:
                continue
            n, j = 0, k
            while j not in seen:
                seen.add(j)
                j = self(j)
                n += 1
            out.append(n)
        return tuple(sorted(out, reverse=True))


def permutation_of(b: BraidWord) -> Permutation:
    p = Permutation.identity(b.strands)
    for a in b.letters:
        p = p * Permutation.transposition(b.strands, abs(a), abs(a) + 1)
    return p
