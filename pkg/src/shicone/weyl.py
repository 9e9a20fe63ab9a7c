"""Weyl group elements as signed permutations of the positive roots."""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import ConfigError, RootSystem, simple_reflection


class CapExceeded(RuntimeError):
    pass


def parse_word(text: str | Sequence[int], rank: int) -> tuple[int, ...]:
    """Letters are 1-indexed generator numbers, separated by spaces or commas."""
    if isinstance(text, str):
        parts = text.replace(",", " ").split()
        try:
            letters = tuple(int(p) for p in parts)
        except ValueError:
            raise ConfigError(f"cannot parse word {text!r}") from None
    else:
        letters = tuple(int(p) for p in text)
    for a in letters:
        if not 1 <= a <= rank:
            raise ConfigError(f"letter {a} out of range 1..{rank}")
    return letters


@lru_cache(maxsize=None)
def _generator_actions(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    # signed 1-based images of every positive root under each s_i
    out = []
    for i in range(rs.rank):
        img = []
        for r in rs.roots:
            s = simple_reflection(r, i, rs.cartan)
            if s in rs.index:
                img.append(rs.index[s] + 1)
            else:
                img.append(-(rs.index[tuple(-c for c in s)] + 1))
        out.append(tuple(img))
    return tuple(out)


@dataclass(frozen=True)
class WeylElement:
    """action[k] is the signed 1-based index of w(root k)."""

    rs: RootSystem
    action: tuple[int, ...]
    word: tuple[int, ...] = ()

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(self.action[self.rs.simple_index(i)] for i in range(self.rs.rank))

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self) -> int:
        return hash(self.action)

    def __len__(self) -> int:
        return sum(1 for a in self.action if a < 0)

    def apply(self, k: int) -> int:
        return self.action[k]

    def times_generator(self, i: int) -> "WeylElement":
        """w * s_i (0-based i)."""
        gen = _generator_actions(self.rs)[i]
        act = []
        for g in gen:
            img = self.action[abs(g) - 1]
            act.append(img if g > 0 else -img)
        return WeylElement(self.rs, tuple(act), self.word + (i + 1,))

    def inverse(self) -> "WeylElement":
        act = [0] * len(self.action)
        for k, a in enumerate(self.action):
            act[abs(a) - 1] = (k + 1) if a > 0 else -(k + 1)
        return WeylElement(self.rs, tuple(act), tuple(reversed(self.word)))

    def inversions_of_inverse(self) -> frozenset[int]:
        """N(w^-1): positive roots sent to negative roots by w."""
        return frozenset(k for k, a in enumerate(self.action) if a < 0)

    def inversions(self) -> frozenset[int]:
        """N(w) = positive roots alpha with w^-1(alpha) negative."""
        return frozenset(abs(a) - 1 for a in self.action if a < 0)

    def reduced_word(self) -> tuple[int, ...]:
        if len(self.word) == len(self):
            return self.word
        letters = []
        w = self
        while len(w):
            # right descent: w(alpha_i) < 0, then w = (w s_i) s_i
            i = next(i for i in range(self.rs.rank) if w.action[self.rs.simple_index(i)] < 0)
            letters.append(i + 1)
            w = w.times_generator(i)
        return tuple(reversed(letters))

    def ordered_inversions_of_inverse(self) -> list[int]:
        """N(w^-1) listed as s_b1...s_b(k-1)(alpha_bk) along a reduced word b of w^-1."""
        b = tuple(reversed(self.reduced_word()))
        out = []
        for k, letter in enumerate(b):
            root = tuple(int(j == letter - 1) for j in range(self.rs.rank))
            for j in reversed(b[:k]):
                root = simple_reflection(root, j - 1, self.rs.cartan)
            out.append(self.rs.index[root])
        assert set(out) == self.inversions_of_inverse()
        return out


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(range(1, len(rs) + 1)))


def element_of(rs: RootSystem, word: str | Sequence[int]) -> WeylElement:
    """w = s_a1 s_a2 ... s_am as an action on roots."""
    w = identity(rs)
    for a in parse_word(word, rs.rank):
        w = w.times_generator(a - 1)
    return w


def enumerate_group(rs: RootSystem, cap: int = 10**6) -> Iterator[WeylElement]:
    """Breadth-first over right multiplication; words are lexicographically least reduced words."""
    order = rs.invariants.weyl_order
    if order > cap:
        raise CapExceeded(f"|W({rs.type})| = {order} exceeds the cap {cap}")
    start = identity(rs)
    seen = {start.action}
    level = [start]
    while level:
        yield from level
        nxt = []
        for w in level:
            for i in range(rs.rank):
                v = w.times_generator(i)
                if v.action not in seen:
                    seen.add(v.action)
                    nxt.append(v)
        level = nxt
