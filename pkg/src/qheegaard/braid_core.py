"""Braid words: parsing, inverses and closure data.

Letters are nonzero ints, ``k`` meaning sigma_|k| to the power sign(k).
Words act left to right: the first letter is applied first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BraidSyntaxError, InvalidIndex

_TOKEN = re.compile(r"^s(\d+)(?:\^([+-]?\d+))?$")


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidIndex(f"strand count must be positive, got {self.n}")
        letters = tuple(int(k) for k in self.letters)
        for k in letters:
            if k == 0 or abs(k) > self.n - 1:
                raise InvalidIndex(f"generator index {abs(k)} outside [1, {self.n - 1}]")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-k for k in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def mirror(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-k for k in self.letters))

    def text(self) -> str:
        if not self.letters:
            return ""
        out = []
        for k in self.letters:
            out.append(f"s{abs(k)}" if k > 0 else f"s{abs(k)}^-1")
        return " ".join(out)

    def compact(self) -> str:
        """Run-length form, e.g. ``s1^3 s2^-1``."""
        out = []
        i = 0
        L = self.letters
        while i < len(L):
            j = i
            while j < len(L) and L[j] == L[i]:
                j += 1
            e = (j - i) * (1 if L[i] > 0 else -1)
            out.append(f"s{abs(L[i])}" if e == 1 else f"s{abs(L[i])}^{e}")
            i = j
        return " ".join(out)


@dataclass(frozen=True)
class ClosureInfo:
    writhe: int
    permutation: tuple[int, ...]  # permutation[i-1] = image of strand i
    components: int

    @property
    def is_knot(self) -> bool:
        return self.components == 1


def parse_braid(text: str, n: int, alphabetic: bool = False) -> BraidWord:
    """Parse ``s1^3 s2^-1`` style text (or ``aaaB`` with alphabetic=True)."""
    if alphabetic:
        return _parse_alpha(text, n)
    letters: list[int] = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.match(tok)
        if not m:
            raise BraidSyntaxError(f"malformed token {tok!r}")
        k = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if e == 0:
            raise BraidSyntaxError(f"zero exponent in {tok!r}")
        if k < 1 or k > n - 1:
            raise InvalidIndex(f"generator s{k} invalid for {n} strands")
        letters.extend([k if e > 0 else -k] * abs(e))
    return BraidWord(n, tuple(letters))


def _parse_alpha(text: str, n: int) -> BraidWord:
    letters = []
    for ch in text.strip():
        if ch.isspace():
            continue
        if not ch.isalpha():
            raise BraidSyntaxError(f"bad character {ch!r}")
        k = ord(ch.lower()) - ord("a") + 1
        if k > n - 1:
            raise InvalidIndex(f"generator {ch!r} invalid for {n} strands")
        letters.append(k if ch.islower() else -k)
    return BraidWord(n, tuple(letters))


def permutation_of(word: BraidWord) -> tuple[int, ...]:
    """Where each strand position ends up, applying letters left to right."""
    # pos[s] = current position of the strand that started at s
    perm = list(range(1, word.n + 1))
    for k in word.letters:
        i = abs(k)
        for s in range(word.n):
            if perm[s] == i:
                perm[s] = i + 1
            elif perm[s] == i + 1:
                perm[s] = i
    return tuple(perm)


def cycles(perm: tuple[int, ...]) -> list[list[int]]:
    seen = set()
    out = []
    for s in range(1, len(perm) + 1):
        if s in seen:
            continue
        cyc = []
        t = s
        while t not in seen:
            seen.add(t)
            cyc.append(t)
            t = perm[t - 1]
        out.append(cyc)
    return out


def closure_info(word: BraidWord) -> ClosureInfo:
    perm = permutation_of(word)
    writhe = sum(1 if k > 0 else -1 for k in word.letters)
    return ClosureInfo(writhe, perm, len(cycles(perm)))


def free_reduce(word: BraidWord) -> BraidWord:
    out: list[int] = []
    for k in word.letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return BraidWord(word.n, tuple(out))


# --- rewriting in the braid group ------------------------------------------------


def _relation_sites(L: tuple[int, ...], n: int):
    """Every single-step rewrite available in L, as (position, old length, replacement)."""
    sites = []
    for p in range(len(L) + 1):
        for i in range(1, n):
            for s in (1, -1):
                sites.append((p, 0, (s * i, -s * i)))
    for p in range(len(L) - 1):
        a, b = L[p], L[p + 1]
        if a == -b:
            sites.append((p, 2, ()))
        if abs(abs(a) - abs(b)) >= 2:
            sites.append((p, 2, (b, a)))
    for p in range(len(L) - 2):
        a, b, c = L[p : p + 3]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            sites.append((p, 3, (b, a, b)))
    return sites


def random_relation(word: BraidWord, rng) -> BraidWord:
    """Apply one random braid relation, commutation, or free (de)insertion."""
    sites = _relation_sites(word.letters, word.n)
    if word.n == 1:
        return word
    p, k, rep = sites[rng.randrange(len(sites))]
    L = word.letters
    return BraidWord(word.n, L[:p] + tuple(rep) + L[p + k :])


def random_conjugate(word: BraidWord, rng) -> BraidWord:
    """Conjugate by a random generator or rotate the word cyclically."""
    if word.n == 1:
        return word
    if word.letters and rng.random() < 0.5:
        r = rng.randrange(len(word.letters))
        return BraidWord(word.n, word.letters[r:] + word.letters[:r])
    g = rng.randrange(1, word.n) * rng.choice((1, -1))
    return BraidWord(word.n, (g,) + word.letters + (-g,))
