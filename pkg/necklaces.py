#!/usr/bin/env python
# encoding: utf-8
"""
necklaces.py

Copyright (c) 2026 golaytools contributors, MIT License

Description:

Generate canonical representatives of k-ary strings under group actions on the
string indices:

    necklace       - least rotation (j -> j + a mod n)
    bracelet       - least under rotation and reversal
    charm bracelet - least under the affine maps j -> a + d*j mod n, gcd(d, n) = 1

Strings are tuples of ints in [0, k). Generation streams each representative to a
visitor callback in increasing lexicographic order and returns how many it visited.

Examples:
    generate_charm_bracelets(5, 4, print)
    generate_fixed_content(34, (17, 10, 7), mode='charm', visitor=out.append)
"""

import logging
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

log = logging.getLogger(__name__)

Word = tuple
Visitor = Callable[[tuple], None]
Predicate = Callable[[tuple], bool]

MODES = ('necklace', 'bracelet', 'charm')

# Log a progress line every this many visited strings
PROGRESS_EVERY = 100000


def units(n: int) -> list:
    """Multipliers 1 <= d < n coprime to n. Empty for n = 1."""
    if n < 1:
        raise ValueError("n must be positive, got %d" % n)
    return [d for d in range(1, n) if gcd(d, n) == 1]


def validate_word(alpha: Sequence[int], k: int) -> tuple:
    if k < 1:
        raise ValueError("alphabet size must be positive, got %d" % k)
    word = tuple(alpha)
    if not word:
        raise ValueError("strings must be nonempty")
    for s in word:
        if not 0 <= s < k:
            raise ValueError("symbol %r outside alphabet [0, %d)" % (s, k))
    return word


def least_rotation(beta: Sequence) -> int:
    """
    Start index of the lexicographically least rotation of beta.

    Scans two concatenated copies of beta in O(n). For periodic strings the
    smallest such index is returned.
    """
    n = len(beta)
    if n == 0:
        raise ValueError("least_rotation needs a nonempty string")
    # 1-indexed working copy, b[0] is never read
    b = [None]
    b.extend(beta)
    b.extend(beta)
    t = j = p = 1
    while True:
        t = t + p * ((j - t) // p)
        j = t + 1
        p = 1
        while j <= 2 * n and b[j - p] <= b[j]:
            if b[j - p] < b[j]:
                p = j - t + 1
            j += 1
        if p * ((j - t) // p) >= n:
            break
    return t - 1


def necklace(beta: Sequence) -> tuple:
    t = least_rotation(beta)
    word = tuple(beta)
    return word[t:] + word[:t]


def is_necklace(alpha: Sequence) -> bool:
    return necklace(alpha) == tuple(alpha)


@lru_cache(maxsize=None)
def _gather_indices(n: int, d: int) -> tuple:
    return tuple((d * j) % n for j in range(n))


def affine_image(d: int, alpha: Sequence) -> tuple:
    """b_j = a_(d*j mod n); d must be invertible mod n."""
    n = len(alpha)
    if gcd(d, n) != 1:
        raise ValueError("multiplier %d is not invertible mod %d" % (d, n))
    return tuple(alpha[i] for i in _gather_indices(n, d % n))


class AffineMap(NamedTuple):
    """The index map j -> shift + multiplier*j (mod n)."""
    shift: int
    multiplier: int

    def apply(self, alpha: Sequence) -> tuple:
        n = len(alpha)
        if gcd(self.multiplier, n) != 1:
            raise ValueError("multiplier %d is not invertible mod %d" % (self.multiplier, n))
        return tuple(alpha[(self.shift + self.multiplier * j) % n] for j in range(n))


def affine_maps(n: int) -> list:
    """All n*phi(n) affine maps of Z_n (just the identity for n = 1)."""
    multipliers = units(n) or [1]
    return [AffineMap(a, d) for d in multipliers for a in range(n)]


def charm_orbit(alpha: Sequence) -> set:
    word = tuple(alpha)
    return {m.apply(word) for m in affine_maps(len(word))}


def charm_class_necklaces(alpha: Sequence) -> list:
    """The distinct necklaces of alpha's charm bracelet class, sorted."""
    word = tuple(alpha)
    multipliers = units(len(word)) or [1]
    return sorted({necklace(affine_image(d, word)) for d in multipliers})


def is_charm(alpha: Sequence) -> bool:
    """True iff the necklace alpha is the least string of its charm bracelet class."""
    word = tuple(alpha)
    assert necklace(word) == word, "is_charm expects a necklace, got %r" % (word,)
    n = len(word)
    for d in units(n):
        if d == 1:
            continue
        image = tuple(word[i] for i in _gather_indices(n, d))
        if necklace(image) < word:
            return False
    return True


def is_bracelet(alpha: Sequence) -> bool:
    """True iff the necklace alpha is no greater than the necklace of its reversal."""
    word = tuple(alpha)
    return necklace(word[::-1]) >= word


def _mode_test(mode: str) -> Optional[Predicate]:
    if mode == 'necklace':
        return None
    if mode == 'bracelet':
        return is_bracelet
    if mode == 'charm':
        return is_charm
    raise ValueError("unknown mode %r, expected one of %s" % (mode, ", ".join(MODES)))


def _generate(n: int, k: int, tests: Iterable[Optional[Predicate]], visitor: Optional[Visitor],
              content: Optional[Sequence[int]] = None) -> int:
    """
    Recursive necklace generation over a[1..n] with the sentinel a[0] = 0.

    A leaf is a necklace when n is a multiple of the current period p. With a content
    vector only symbols that still have copies left are placed.
    """
    tests = [t for t in tests if t is not None]
    a = [0] * (n + 1)
    remaining = list(content) if content is not None else None
    visited = 0

    def gen(t, p):
        nonlocal visited
        if t > n:
            if n % p:
                return
            word = tuple(a[1:])
            for test in tests:
                if not test(word):
                    return
            visited += 1
            if visited % PROGRESS_EVERY == 0:
                log.info("   %d strings visited (n=%d), last %s", visited, n, format_word(word, k))
            if visitor is not None:
                visitor(word)
            return
        for i in range(a[t - p], k):
            if remaining is not None:
                if not remaining[i]:
                    continue
                remaining[i] -= 1
            a[t] = i
            if i == a[t - p]:
                gen(t + 1, p)
            else:
                gen(t + 1, t)
            if remaining is not None:
                remaining[i] += 1

    gen(1, 1)
    return visited


def _check_size(n: int, k: int):
    if n < 1:
        raise ValueError("n must be positive, got %d" % n)
    if k < 1:
        raise ValueError("k must be positive, got %d" % k)


def generate_necklaces(n: int, k: int, visitor: Optional[Visitor] = None) -> int:
    _check_size(n, k)
    return _generate(n, k, [], visitor)


def generate_bracelets(n: int, k: int, visitor: Optional[Visitor] = None) -> int:
    _check_size(n, k)
    return _generate(n, k, [is_bracelet], visitor)


def generate_charm_bracelets(n: int, k: int, visitor: Optional[Visitor] = None) -> int:
    _check_size(n, k)
    if n == 1:
        # No multipliers to test, every symbol is its own class
        for s in range(k):
            if visitor is not None:
                visitor((s,))
        return k
    return _generate(n, k, [is_charm], visitor)


def generate_fixed_content(n: int, content: Sequence[int], mode: str = 'necklace',
                           accept: Optional[Predicate] = None, visitor: Optional[Visitor] = None) -> int:
    """
    Visit the representatives of the given mode whose symbol counts equal content.

    accept is applied to each representative after the mode test; only strings it
    accepts reach the visitor and the returned count.
    """
    content = tuple(content)
    if not content or any(c < 0 for c in content):
        raise ValueError("content must be a nonempty vector of nonnegative counts, got %r" % (content,))
    if sum(content) != n:
        raise ValueError("content %r sums to %d, expected %d" % (content, sum(content), n))
    _check_size(n, len(content))
    return _generate(n, len(content), [_mode_test(mode), accept], visitor, content=content)


def format_word(alpha: Sequence[int], k: int) -> str:
    """Digits for k <= 10, comma separated integers otherwise."""
    if k <= 10:
        return "".join(str(s) for s in alpha)
    return ",".join(str(s) for s in alpha)


def parse_word(text: str) -> tuple:
    text = text.strip()
    if not text:
        raise ValueError("empty string")
    try:
        if "," in text:
            return tuple(int(s) for s in text.split(","))
        return tuple(int(c) for c in text)
    except ValueError:
        raise ValueError("can't parse string %r" % text) from None
