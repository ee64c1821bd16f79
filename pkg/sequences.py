#!/usr/bin/env python
# encoding: utf-8
"""
sequences.py

Copyright (c) 2026 golaytools contributors, MIT License

Description:

Periodic and aperiodic autocorrelation, DFT power spectral density and m-compression
of integer sequences, and the Golay pair predicates built on them.

Indices live in Z_v. Anything that must be exact (PAF, the pair tests) is done in
integers; PSD is floating point and only ever compared with a tolerance.

Binary sequences use the customary sign notation, "+" for +1 and "-" for -1:
    parse_signs("--++-+")
Ternary (compressed) sequences are comma separated integers:
    parse_ternary("0,2,-2,0")
"""

import logging
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

log = logging.getLogger(__name__)

# Absolute PSD tolerance per unit of length
PSD_TOLERANCE = 1e-6


class GolayPair(NamedTuple):
    """A pair of +-1 sequences, kept as tuples so pairs hash and sort."""
    a: tuple
    b: tuple

    def __str__(self):
        return "%s %s" % (format_signs(self.a), format_signs(self.b))


def as_sequence(values) -> np.ndarray:
    seq = np.asarray(values, dtype=np.int64)
    if seq.ndim != 1 or seq.size == 0:
        raise ValueError("expected a nonempty 1-d integer sequence")
    return seq


def check_binary(values) -> np.ndarray:
    seq = as_sequence(values)
    if not np.all(np.abs(seq) == 1):
        raise ValueError("binary sequences take values +1/-1 only")
    return seq


def check_ternary(values) -> np.ndarray:
    seq = as_sequence(values)
    if not np.all(np.isin(seq, (0, 2, -2))):
        raise ValueError("compressed sequences take values 0, 2, -2 only")
    return seq


@lru_cache(maxsize=None)
def _shift_indices(v: int) -> np.ndarray:
    # row s holds (i + s) mod v
    return (np.arange(v)[None, :] + np.arange(v)[:, None]) % v


def paf(values) -> np.ndarray:
    """Periodic autocorrelation: paf[s] = sum_i a_i * a_(i+s mod v), exact."""
    seq = as_sequence(values)
    return seq[_shift_indices(seq.size)] @ seq


def paf_batch(rows) -> np.ndarray:
    """PAF of every row of a 2-d integer array, via FFT and rounding."""
    rows = np.asarray(rows)
    spectrum = np.abs(np.fft.fft(rows, axis=-1)) ** 2
    return np.rint(np.fft.ifft(spectrum, axis=-1).real).astype(np.int64)


def dft(values) -> np.ndarray:
    """sum_k a_k w^(k*s) with w = exp(2*pi*i/v), along the last axis."""
    rows = np.asarray(values, dtype=np.float64)
    v = rows.shape[-1]
    return np.fft.ifft(rows, axis=-1) * v


def psd(values) -> np.ndarray:
    """Power spectral density |DFT|^2, along the last axis."""
    return np.abs(dft(values)) ** 2


def psd_from_paf(profile) -> np.ndarray:
    """PSD as the DFT of the PAF (Wiener-Khinchin)."""
    return dft(profile).real


def psd_bound(v: int, tolerance: float = PSD_TOLERANCE) -> float:
    """Largest PSD value a member of a periodic Golay pair of length v can have."""
    return 2 * v + tolerance * v


def aperiodic_autocorrelation(values) -> np.ndarray:
    """N_A(k) = sum_(i < v-k) a_i a_(i+k) for k = 0..v-1."""
    seq = as_sequence(values)
    return np.correlate(seq, seq, mode='full')[seq.size - 1:]


def _pair_arrays(a, b):
    sa = check_binary(a)
    sb = check_binary(b)
    if sa.size != sb.size:
        raise ValueError("sequence lengths differ: %d vs %d" % (sa.size, sb.size))
    return sa, sb


def is_golay_pair(a, b) -> bool:
    sa, sb = _pair_arrays(a, b)
    total = aperiodic_autocorrelation(sa) + aperiodic_autocorrelation(sb)
    return not np.any(total[1:])


def is_periodic_golay_pair(a, b) -> bool:
    sa, sb = _pair_arrays(a, b)
    total = paf(sa) + paf(sb)
    return not np.any(total[1:])


def compress(values, m: int) -> np.ndarray:
    """m-compression: entry i is sum_j a_(i + j*d), d = v/m."""
    seq = as_sequence(values)
    if m < 1 or seq.size % m:
        raise ValueError("compression factor %d does not divide length %d" % (m, seq.size))
    return seq.reshape(m, seq.size // m).sum(axis=0)


def is_golay_number(v: int) -> bool:
    """True iff v = 2^a * 10^b * 26^c."""
    if v < 1:
        raise ValueError("v must be positive, got %d" % v)
    exponents = {}
    for p in (2, 5, 13):
        exponents[p] = 0
        while v % p == 0:
            v //= p
            exponents[p] += 1
    # every factor 5 and 13 needs its own factor 2
    return v == 1 and exponents[2] >= exponents[5] + exponents[13]


def row_sum(values) -> int:
    return int(as_sequence(values).sum())


def zero_count(values) -> int:
    return int(np.count_nonzero(as_sequence(values) == 0))


def parse_signs(text: str) -> tuple:
    text = "".join(text.split()).replace("−", "-")
    if not text or set(text) - {"+", "-"}:
        raise ValueError("expected a run of '+'/'-' characters, got %r" % text)
    return tuple(1 if c == "+" else -1 for c in text)


def format_signs(values) -> str:
    return "".join("+" if x > 0 else "-" for x in check_binary(values))


def parse_ternary(text: str) -> tuple:
    try:
        values = tuple(int(x) for x in text.replace("−", "-").split(","))
    except ValueError:
        raise ValueError("expected comma separated integers, got %r" % text) from None
    check_ternary(values)
    return values


def format_ternary(values) -> str:
    return ",".join(str(int(x)) for x in values)


def parse_sequence(text: str) -> tuple:
    """Sign notation or comma separated integers, whichever the text is."""
    stripped = text.strip()
    if stripped and set(stripped) <= set("+-− "):
        return parse_signs(stripped)
    try:
        return tuple(int(x) for x in stripped.replace("−", "-").split(","))
    except ValueError:
        raise ValueError("can't parse sequence %r" % text) from None
