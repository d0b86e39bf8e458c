"""Ultimately periodic words and word enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian

from .errors import InputError


@dataclass(frozen=True)
class UPWord:
    """The ω-word ``u v^ω`` with ``v`` nonempty."""

    u: tuple
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if not self.v:
            raise InputError("the period of an ultimately periodic word must be nonempty")

    def prefix(self, n: int) -> tuple:
        """The first ``n`` letters of the ω-word."""
        out = list(self.u[:n])
        while len(out) < n:
            out.extend(self.v)
        return tuple(out[:n])

    def canonical(self) -> "UPWord":
        return canonical_up(self)


def primitive_root(v: tuple) -> tuple:
    n = len(v)
    for d in range(1, n + 1):
        if n % d == 0 and v[:d] * (n // d) == v:
            return v[:d]
    return v


def canonical_up(w: UPWord) -> UPWord:
    """Shortest representation of the ω-word ``w``: the period is primitive
    and the spoke does not end with the period's last letter."""
    u = list(w.u)
    v = primitive_root(w.v)
    while u and u[-1] == v[-1]:
        u.pop()
        v = v[-1:] + v[:-1]
    return UPWord(tuple(u), v)


def same_omega_word(w1: UPWord, w2: UPWord) -> bool:
    return canonical_up(w1) == canonical_up(w2)


def words(k: int, max_len: int, min_len: int = 0):
    """All words over ``range(k)`` ordered by length, then lexicographically."""
    for n in range(min_len, max_len + 1):
        yield from _cartesian(range(k), repeat=n)


def upwords(k: int, max_u: int, max_v: int, canonical_only: bool = False):
    """All pairs ``(u, v)`` with ``|u| <= max_u`` and ``1 <= |v| <= max_v``.

    With ``canonical_only`` each ω-word is produced once, in its canonical
    representation.
    """
    seen = set()
    for u in words(k, max_u):
        for v in words(k, max_v, 1):
            w = UPWord(u, v)
            if canonical_only:
                w = canonical_up(w)
                if w in seen:
                    continue
                seen.add(w)
            yield w
