#!/usr/bin/env python
# encoding: utf-8
"""
charm_count.py

Copyright (c) 2026 golaytools contributors, MIT License

Description:

Closed form counts of k-ary charm bracelets of length n (Titsworth's formula), plus the
Burnside counts of necklaces and bracelets used to sanity check them.

CB(n, k) = 1/(n*phi(n)) * sum over shifts t and units j of k^c(j, t), where c(j, t) is
the number of cycles of the index map u -> j*u + t on Z_n.

Everything is exact: rationals inside c(j, t), Python integers for the powers.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from necklaces import units

log = logging.getLogger(__name__)


class FormulaError(RuntimeError):
    """The counting formula produced a non-integer, a formula domain bug."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive, got %d" % n)
    return 1 if n == 1 else len(units(n))


@lru_cache(maxsize=None)
def repetition_order(j: int, L: int, limit: int = 0) -> int:
    """
    M(j, L): least m > 0 with 1 + j + ... + j^(m-1) = 0 (mod L).

    limit caps the iteration (default L*L, enough whenever j is a unit mod L).
    """
    if L < 1:
        raise ValueError("L must be positive, got %d" % L)
    if j < 0:
        raise ValueError("j must be nonnegative, got %d" % j)
    limit = limit or L * L
    partial = 0
    power = 1
    for m in range(1, limit + 1):
        partial = (partial + power) % L
        power = (power * j) % L
        if partial == 0:
            return m
    raise FormulaError("no repetition order for j=%d, L=%d within %d steps" % (j, L, limit))


def cycle_count(j: int, t: int, n: int) -> int:
    """c(j, t): cycles of u -> j*u + t on Z_n."""
    if gcd(j, n) != 1:
        raise ValueError("j=%d is not a unit mod %d" % (j, n))
    if not 0 <= t < n:
        raise ValueError("shift t=%d outside [0, %d)" % (t, n))
    total = Fraction(0)
    for u in range(n):
        L = n // gcd(n, u * (j - 1) + t)
        total += Fraction(1, repetition_order(j % L, L, n * L))
    if total.denominator != 1:
        raise FormulaError("c(%d, %d) for n=%d is not an integer: %s" % (j, t, n, total))
    return total.numerator


@dataclass(frozen=True)
class CycleCountTable:
    n: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries[key]


def cycle_count_table(n: int) -> CycleCountTable:
    """c(j, t) for every unit j and shift t (j = 1 only, t = 0 only, for n = 1)."""
    multipliers = units(n) or [1]
    return CycleCountTable(n, {(j, t): cycle_count(j, t, n) for j in multipliers for t in range(n)})


def count_charm_bracelets(n: int, k: int) -> int:
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive, got n=%d k=%d" % (n, k))
    if n == 1:
        # The unit sum over j in [1, n-1] is empty; each symbol is its own class
        return k
    table = cycle_count_table(n)
    total = sum(k ** c for c in table.entries.values())
    order = n * euler_phi(n)
    if total % order:
        raise FormulaError("CB(%d, %d): %d is not divisible by %d" % (n, k, total, order))
    log.debug("CB(%d, %d) = %d / %d", n, k, total, order)
    return total // order


def count_necklaces(n: int, k: int) -> int:
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive, got n=%d k=%d" % (n, k))
    total = sum(euler_phi(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def count_bracelets(n: int, k: int) -> int:
    necklace_count = count_necklaces(n, k)
    if n % 2:
        reflections = k ** ((n + 1) // 2)
    else:
        reflections = (k + 1) * k ** (n // 2) // 2
    return (necklace_count + reflections) // 2
