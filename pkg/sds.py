#!/usr/bin/env python
# encoding: utf-8
"""
sds.py

Copyright (c) 2026 golaytools contributors, MIT License

Description:

Supplementary difference sets (SDS) with two base blocks X, Y in Z_v, their
correspondence with periodic Golay pairs, and equivalence of pairs.

An SDS (v; r, s; lambda) has every nonzero residue appearing exactly lambda times among
the differences x1 - x2 (X) and y1 - y2 (Y). It corresponds to a periodic Golay pair
when v = 2(r + s - lambda): a_j = -1 for j in X, +1 otherwise, likewise B from Y.

Pairs are equivalent when one is carried to the other by independent cyclic shifts,
independent reversals and a simultaneous multiplier x_i -> x_(k*i mod v). The extended
group (a flag on the functions below) adds negating either sequence and swapping them.

SDS files come in two flavours, both read by load_sds_file:

    structured:   # label            listing:  1) [[0,1,2,...], [0,2,...]],
                  v = 68                       2) [[...],
                  lambda = 26                     [...]],
                  X = 0,1,2,...
                  Y = 0,2,3,...
"""

import logging
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional

import numpy as np

from necklaces import units
from sequences import GolayPair, check_binary

log = logging.getLogger(__name__)

# The bundled 29-solution listing for (68; 31, 29; 26)
DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
SDS_68_PATH = os.path.join(DATA_DIR, "sds_68.txt")
SDS_68_PARAMS = (68, 31, 29, 26)


@dataclass(frozen=True)
class SupplementaryDifferenceSet:
    v: int
    x: tuple
    y: tuple
    lam: int

    def __post_init__(self):
        if self.v < 1:
            raise ValueError("modulus must be positive, got %d" % self.v)
        for name in ("x", "y"):
            block = list(getattr(self, name))
            if len(set(block)) != len(block):
                raise ValueError("block %s has repeated elements" % name.upper())
            for e in block:
                if not 0 <= e < self.v:
                    raise ValueError("block %s element %d outside Z_%d" % (name.upper(), e, self.v))
            object.__setattr__(self, name, tuple(sorted(block)))
        if self.lam < 0:
            raise ValueError("lambda must be nonnegative, got %d" % self.lam)

    @property
    def r(self) -> int:
        return len(self.x)

    @property
    def s(self) -> int:
        return len(self.y)

    @property
    def params(self) -> tuple:
        return self.v, self.r, self.s, self.lam

    def counting_identity_holds(self) -> bool:
        return self.r * (self.r - 1) + self.s * (self.s - 1) == self.lam * (self.v - 1)


def difference_counts(block: Iterable[int], v: int) -> np.ndarray:
    """counts[g] = #{(e1, e2) in block^2 : e1 - e2 = g mod v}, e1 != e2."""
    elements = np.asarray(list(block), dtype=np.int64)
    if elements.size == 0:
        return np.zeros(v, dtype=np.int64)
    diffs = (elements[:, None] - elements[None, :]) % v
    counts = np.bincount(diffs.ravel(), minlength=v)
    counts[0] -= elements.size
    return counts


def verify_sds(sds: SupplementaryDifferenceSet) -> bool:
    if not sds.counting_identity_holds():
        return False
    total = difference_counts(sds.x, sds.v) + difference_counts(sds.y, sds.v)
    return bool(np.all(total[1:] == sds.lam))


def is_periodic_golay_sds(sds: SupplementaryDifferenceSet) -> bool:
    return sds.v == 2 * (sds.r + sds.s - sds.lam)


def sds_to_pair(sds: SupplementaryDifferenceSet) -> GolayPair:
    a = [1] * sds.v
    b = [1] * sds.v
    for j in sds.x:
        a[j] = -1
    for j in sds.y:
        b[j] = -1
    return GolayPair(tuple(a), tuple(b))


def pair_to_sds(pair, lam: Optional[int] = None) -> SupplementaryDifferenceSet:
    """
    Blocks from the -1 positions of each sequence.

    lambda defaults to the value the counting identity forces.
    """
    a = check_binary(pair[0])
    b = check_binary(pair[1])
    if a.size != b.size:
        raise ValueError("sequence lengths differ: %d vs %d" % (a.size, b.size))
    v = a.size
    x = tuple(int(j) for j in np.flatnonzero(a < 0))
    y = tuple(int(j) for j in np.flatnonzero(b < 0))
    if lam is None:
        pairs = len(x) * (len(x) - 1) + len(y) * (len(y) - 1)
        if v == 1:
            lam = 0
        elif pairs % (v - 1):
            raise ValueError("blocks of sizes %d, %d admit no lambda in Z_%d" % (len(x), len(y), v))
        else:
            lam = pairs // (v - 1)
    return SupplementaryDifferenceSet(v, x, y, lam)


@dataclass(frozen=True)
class PairTransform:
    """
    Multiply indices by k on both sequences, then reverse (x_i -> x_-i) each side
    that asks for it, then shift each side cyclically (x_i -> x_(i+shift)).
    """
    shift_a: int = 0
    shift_b: int = 0
    rev_a: bool = False
    rev_b: bool = False
    k: int = 1

    def side_map(self, side: str, v: int) -> tuple:
        """(alpha, beta) with output_i = input_(alpha*i + beta mod v)."""
        eps = -1 if (self.rev_a if side == "a" else self.rev_b) else 1
        shift = self.shift_a if side == "a" else self.shift_b
        alpha = (self.k * eps) % v
        return alpha, (alpha * shift) % v


def _check_multiplier(k: int, v: int):
    if gcd(k, v) != 1:
        raise ValueError("multiplier %d is not a unit mod %d" % (k, v))


def _apply_side(seq: tuple, alpha: int, beta: int) -> tuple:
    v = len(seq)
    return tuple(seq[(alpha * i + beta) % v] for i in range(v))


def apply_transform(t: PairTransform, pair) -> GolayPair:
    a, b = tuple(pair[0]), tuple(pair[1])
    if len(a) != len(b):
        raise ValueError("sequence lengths differ: %d vs %d" % (len(a), len(b)))
    v = len(a)
    _check_multiplier(t.k, v)
    return GolayPair(_apply_side(a, *t.side_map("a", v)), _apply_side(b, *t.side_map("b", v)))


def compose_transforms(first: PairTransform, second: PairTransform, v: int) -> PairTransform:
    """The transform equal to applying first, then second."""
    _check_multiplier(first.k, v)
    _check_multiplier(second.k, v)
    k = (first.k * second.k) % v
    maps = {}
    for side in ("a", "b"):
        a1, b1 = first.side_map(side, v)
        a2, b2 = second.side_map(side, v)
        maps[side] = ((a1 * a2) % v, (a1 * b2 + b1) % v)
    rev = {side: getattr(first, "rev_" + side) != getattr(second, "rev_" + side) for side in ("a", "b")}
    return _build(k, maps, rev, v)


def invert_transform(t: PairTransform, v: int) -> PairTransform:
    _check_multiplier(t.k, v)
    k = pow(t.k, -1, v) if v > 1 else 0
    maps = {}
    for side in ("a", "b"):
        alpha, beta = t.side_map(side, v)
        inv = pow(alpha, -1, v) if v > 1 else 0
        maps[side] = (inv, (-inv * beta) % v)
    return _build(k, maps, {"a": t.rev_a, "b": t.rev_b}, v)


def _build(k: int, maps: dict, rev: dict, v: int) -> PairTransform:
    if v == 1:
        return PairTransform(0, 0, rev["a"], rev["b"], 0)
    shifts = {side: (pow(alpha, -1, v) * beta) % v for side, (alpha, beta) in maps.items()}
    return PairTransform(shifts["a"], shifts["b"], rev["a"], rev["b"], k)


def random_transform(v: int, rng) -> PairTransform:
    """A uniformly drawn transform; rng is a random.Random."""
    return PairTransform(rng.randrange(v), rng.randrange(v), rng.random() < 0.5, rng.random() < 0.5,
                         rng.choice(units(v) or [1]))


@lru_cache(maxsize=None)
def _orbit_indices(v: int) -> np.ndarray:
    """idx[m, r] holds the gather indices of the r-th (reversal, shift) under the m-th unit."""
    ks = np.array(units(v) or [1], dtype=np.int64)
    eps = np.array([1, -1], dtype=np.int64)
    i = np.arange(v, dtype=np.int64)
    s = np.arange(v, dtype=np.int64)
    idx = ks[:, None, None, None] * eps[None, :, None, None] * (i[None, None, None, :] + s[None, None, :, None])
    return (idx % v).reshape(len(ks), 2 * v, v)


def _least_row(rows: np.ndarray) -> tuple:
    order = np.lexsort(rows.T[::-1])
    return tuple(int(x) for x in rows[order[0]])


def _canonical_default(a: np.ndarray, b: np.ndarray) -> GolayPair:
    best = None
    for idx in _orbit_indices(a.size):
        candidate = (_least_row(a[idx]), _least_row(b[idx]))
        if best is None or candidate < best:
            best = candidate
    return GolayPair(*best)


def _extended_variants(a: np.ndarray, b: np.ndarray) -> list:
    variants = []
    for first, second in ((a, b), (b, a)):
        for sign_a in (1, -1):
            for sign_b in (1, -1):
                variants.append((sign_a * first, sign_b * second))
    return variants


def canonical_form(pair, extended: bool = False) -> GolayPair:
    """
    Least pair of the equivalence class, comparing A then B with '-' < '+'.
    """
    a = check_binary(pair[0])
    b = check_binary(pair[1])
    if a.size != b.size:
        raise ValueError("sequence lengths differ: %d vs %d" % (a.size, b.size))
    if not extended:
        return _canonical_default(a, b)
    return min(_canonical_default(x, y) for x, y in _extended_variants(a, b))


def are_equivalent(pair1, pair2, extended: bool = False) -> bool:
    if len(pair1[0]) != len(pair2[0]):
        raise ValueError("pair lengths differ: %d vs %d" % (len(pair1[0]), len(pair2[0])))
    return canonical_form(pair1, extended) == canonical_form(pair2, extended)


def pair_orbit(pair, extended: bool = False) -> set:
    """Every pair equivalent to the given one."""
    a = check_binary(pair[0])
    b = check_binary(pair[1])
    if a.size != b.size:
        raise ValueError("sequence lengths differ: %d vs %d" % (a.size, b.size))
    variants = _extended_variants(a, b) if extended else [(a, b)]
    orbit = set()
    for x, y in variants:
        for idx in _orbit_indices(a.size):
            rows_a = {tuple(int(e) for e in row) for row in x[idx]}
            rows_b = {tuple(int(e) for e in row) for row in y[idx]}
            orbit.update(GolayPair(ra, rb) for ra in rows_a for rb in rows_b)
    return orbit


def dedupe_pairs(pairs: Iterable, extended: bool = False) -> list:
    """One canonical pair per class, sorted."""
    return sorted({canonical_form(p, extended) for p in pairs})


_ENTRY_RE = re.compile(r"^\s*(\d+)\)", re.MULTILINE)
_INT_RE = re.compile(r"-?\d+")
_BLOCK_RE = re.compile(r"\[([^\[\]]*)\]")


def parse_sds_listing(text: str, v: int, r: int, s: int, lam: int) -> list:
    """
    Read a numbered listing "1) [[x...], [y...]]," into (label, SDS) pairs.

    Entries holding exactly r + s residues are split by count, first r to X, so
    misplaced brackets don't matter. Any other entry falls back to its bracket groups.
    """
    starts = list(_ENTRY_RE.finditer(text))
    solutions = []
    for pos, match in enumerate(starts):
        end = starts[pos + 1].start() if pos + 1 < len(starts) else len(text)
        body = text[match.end():end]
        label = match.group(1)
        values = [int(x) for x in _INT_RE.findall(body)]
        if len(values) == r + s:
            x, y = values[:r], values[r:]
        else:
            groups = [g for g in _BLOCK_RE.findall(body)]
            if len(groups) != 2:
                raise ValueError("entry %s: can't find two blocks (%d residues)" % (label, len(values)))
            x, y = ([int(e) for e in _INT_RE.findall(g)] for g in groups)
            log.warning("Entry %s holds %d residues, expected %d; using its brackets", label, len(values), r + s)
        solutions.append((label, SupplementaryDifferenceSet(v, tuple(x), tuple(y), lam)))
    return solutions


def format_sds(sds: SupplementaryDifferenceSet, label: str = "") -> str:
    lines = []
    if label:
        lines.append("# %s" % label)
    lines.append("v = %d" % sds.v)
    lines.append("lambda = %d" % sds.lam)
    lines.append("X = %s" % ",".join(str(e) for e in sds.x))
    lines.append("Y = %s" % ",".join(str(e) for e in sds.y))
    return "\n".join(lines) + "\n"


def _parse_structured(text: str) -> list:
    solutions = []
    record = {}
    label = None

    def flush():
        if not record:
            return
        missing = {"v", "lambda", "X", "Y"} - set(record)
        if missing:
            raise ValueError("SDS record %s is missing %s" % (label or len(solutions) + 1, ", ".join(sorted(missing))))
        sds = SupplementaryDifferenceSet(int(record["v"]), tuple(int(e) for e in _INT_RE.findall(record["X"])),
                                         tuple(int(e) for e in _INT_RE.findall(record["Y"])), int(record["lambda"]))
        solutions.append((label or str(len(solutions) + 1), sds))
        record.clear()

    for line in text.splitlines():
        line = line.strip()
        if not line:
            flush()
            label = None
            continue
        if line.startswith("#"):
            flush()
            label = line.lstrip("#").strip()
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError("can't parse SDS line %r" % line)
        record[key.strip()] = value.strip()
    flush()
    return solutions


def load_sds_file(path: str, params: tuple = SDS_68_PARAMS) -> list:
    """
    (label, SDS) pairs from a structured file, or from a numbered listing whose
    parameters (v, r, s, lambda) are given by params.
    """
    with open(path) as fp:
        text = fp.read()
    if re.search(r"^\s*v\s*=", text, re.MULTILINE):
        return _parse_structured(text)
    return parse_sds_listing(text, *params)
