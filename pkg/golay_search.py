#!/usr/bin/env python
# encoding: utf-8
"""
golay_search.py

Copyright (c) 2026 golaytools contributors, MIT License

Description:

Staged search for periodic Golay pairs of even length v through 2-compression.

    stage 1 - for each side, stream the fixed-content compressed representatives
              (charm bracelets for A, bracelets for B) over {0, +2, -2}, drop those
              with a PSD value above 2v, and write the rest with their PAF to a
              candidate file
    stage 2 - hash join the two candidate files on complementary PAF
    stage 3 - lift each matched compressed pair to length v, PSD filter the lifts
              and keep the pairs that pass the exact periodic Golay test

run_search drives all three over every row-sum split (a, b) with a^2 + b^2 = 2v and
every zero split z_A + z_B = v/2 that gives integral contents.

Examples:
    report = run_search(SearchConfig(v=10, candidate_dir="/tmp/cands"))
    write_report(report, "v10.json")
"""

import dataclasses
import fcntl
import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterator, Optional

import numpy as np

from necklaces import generate_fixed_content
from sds import canonical_form
from sequences import (GolayPair, PSD_TOLERANCE, check_ternary, format_signs, format_ternary, is_periodic_golay_pair,
                       paf, paf_batch, parse_ternary, psd, psd_bound)

log = logging.getLogger(__name__)

DEFAULT_CANDIDATE_DIR = os.environ.get('GOLAY_CANDIDATE_DIR', 'candidates')
DEFAULT_MAX_CANDIDATES = 10 ** 7
DEFAULT_LIFT_CAP = 26
LOCK_NAME = '.search.lock'

# Generation symbol s stands for SYMBOL_VALUES[s], so contents read (zeros, +2s, -2s)
SYMBOL_VALUES = (0, 2, -2)
SIDES = ('A', 'B')
SIDE_MODES = {'A': 'charm', 'B': 'bracelet'}

# Lifts are PSD filtered this many at a time
LIFT_CHUNK = 1 << 16


class ConfigError(ValueError):
    pass


class StageLimitError(RuntimeError):
    pass


class LiftCapError(RuntimeError):
    pass


class SearchLockedError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    v: int
    m: int = 2
    row_split: Optional[tuple] = None
    zero_split: Optional[tuple] = None
    tolerance: float = PSD_TOLERANCE
    candidate_dir: str = DEFAULT_CANDIDATE_DIR
    report_path: Optional[str] = None
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    lift_cap: int = DEFAULT_LIFT_CAP
    threads: int = 1

    def __post_init__(self):
        if not isinstance(self.v, int) or self.v < 2 or self.v % 2:
            raise ConfigError("v must be an even integer >= 2, got %r" % (self.v,))
        if self.m < 1 or self.v % self.m:
            raise ConfigError("compression factor %d does not divide v=%d" % (self.m, self.v))
        if self.m != 2:
            raise ConfigError("the lifting stage handles m=2 only, got m=%d" % self.m)
        if self.row_split is not None:
            a, b = self.row_split
            if a * a + b * b != 2 * self.v:
                raise ConfigError("row sums %d, %d: %d + %d != 2v = %d" % (a, b, a * a, b * b, 2 * self.v))
            object.__setattr__(self, 'row_split', (int(a), int(b)))
        if self.zero_split is not None:
            za, zb = self.zero_split
            if za < 0 or zb < 0 or za > self.d or zb > self.d:
                raise ConfigError("zero counts %d, %d outside [0, %d]" % (za, zb, self.d))
            if za + zb != self.v // 2:
                raise ConfigError("zero counts %d + %d != v/2 = %d" % (za, zb, self.v // 2))
            object.__setattr__(self, 'zero_split', (int(za), int(zb)))
        if self.tolerance < 0:
            raise ConfigError("PSD tolerance must be nonnegative, got %r" % self.tolerance)
        if self.max_candidates < 1:
            raise ConfigError("max_candidates must be positive, got %d" % self.max_candidates)
        if self.lift_cap < 0:
            raise ConfigError("lift_cap must be nonnegative, got %d" % self.lift_cap)
        if self.threads < 1:
            raise ConfigError("threads must be positive, got %d" % self.threads)

    @property
    def d(self) -> int:
        return self.v // self.m

    @property
    def psd_bound(self) -> float:
        return psd_bound(self.v, self.tolerance)

    @classmethod
    def load(cls, path: Optional[str] = None, **overrides) -> 'SearchConfig':
        """Fields from a JSON file, overridden by any non-None keyword."""
        values = {}
        if path:
            with open(path) as fp:
                try:
                    values = json.load(fp)
                except json.JSONDecodeError as e:
                    raise ConfigError("%s is not valid JSON: %s" % (path, e)) from None
            if not isinstance(values, dict):
                raise ConfigError("%s must hold a JSON object" % path)
        values.update({k: v for k, v in overrides.items() if v is not None})
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ConfigError("unknown search settings: %s" % ", ".join(sorted(unknown)))
        if 'v' not in values:
            raise ConfigError("search needs a length v")
        for key in ('row_split', 'zero_split'):
            if values.get(key) is not None:
                split = tuple(values[key])
                if len(split) != 2:
                    raise ConfigError("%s needs two values, got %r" % (key, values[key]))
                values[key] = split
        return cls(**values)


@dataclass(frozen=True)
class CandidateRecord:
    sequence: tuple
    paf: tuple
    psd_max: float

    def to_line(self) -> str:
        return "%s\t%s\t%.6f\n" % (format_ternary(self.sequence), format_ternary(self.paf), self.psd_max)

    @classmethod
    def from_line(cls, line: str) -> 'CandidateRecord':
        try:
            seq, profile, psd_max = line.rstrip("\n").split("\t")
            return cls(parse_ternary(seq), tuple(int(x) for x in profile.split(",")), float(psd_max))
        except ValueError as e:
            raise ValueError("malformed candidate record %r: %s" % (line, e)) from None


@dataclass
class StageResult:
    side: str
    content: tuple
    path: str
    generated: int = 0
    discarded: int = 0
    written: int = 0


@dataclass
class SearchReport:
    v: int
    m: int = 2
    pairs: list = field(default_factory=list)
    splits: list = field(default_factory=list)
    stats: dict = field(default_factory=lambda: {k: 0 for k in ('generated', 'psd_discarded', 'written', 'matched',
                                                                'lifted', 'verified')})

    def to_dict(self) -> dict:
        return {
            'v': self.v,
            'm': self.m,
            'pairs_found': len(self.pairs),
            'pairs': [{'a': format_signs(p.a), 'b': format_signs(p.b)} for p in self.pairs],
            'splits': self.splits,
            'stats': dict(self.stats),
        }


def row_sum_splits(v: int) -> list:
    """Every (a, b), 0 <= a <= b, with a^2 + b^2 = 2v."""
    if v < 1:
        raise ValueError("v must be positive, got %d" % v)
    splits = []
    for a in range(isqrt(v) + 1):
        rest = 2 * v - a * a
        b = isqrt(rest)
        if b >= a and b * b == rest:
            splits.append((a, b))
    return splits


def content_from(d: int, z: int, rowsum: int) -> Optional[tuple]:
    """(zeros, +2s, -2s) for a compressed sequence of length d, or None when infeasible."""
    if not 0 <= z <= d:
        raise ValueError("zero count %d outside [0, %d]" % (z, d))
    if rowsum % 2:
        return None
    total = d - z
    diff = rowsum // 2
    if (total + diff) % 2:
        return None
    p = (total + diff) // 2
    q = (total - diff) // 2
    if p < 0 or q < 0:
        return None
    return z, p, q


def feasible_zero_splits(v: int, a: int, b: int) -> list:
    d = v // 2
    splits = []
    for za in range(d + 1):
        zb = v // 2 - za
        if 0 <= zb <= d and content_from(d, za, a) and content_from(d, zb, b):
            splits.append((za, zb))
    return splits


def candidate_path(config: SearchConfig, side: str, content: tuple) -> str:
    name = "v%d_m%d_%s_z%d_p%d_q%d.txt" % ((config.v, config.m, side) + tuple(content))
    return os.path.join(config.candidate_dir, name)


def to_values(word: tuple) -> np.ndarray:
    return np.array([SYMBOL_VALUES[s] for s in word], dtype=np.int64)


def stage1_candidates(config: SearchConfig, side: str, content: tuple) -> StageResult:
    """
    Write the PSD-surviving representatives of one side and content to its candidate file.

    The file appears only once complete. Any failure removes the partial output;
    hitting max_candidates raises StageLimitError.
    """
    if side not in SIDES:
        raise ValueError("side must be one of %s, got %r" % (", ".join(SIDES), side))
    if len(content) != 3 or sum(content) != config.d:
        raise ValueError("content %r does not describe a length %d sequence" % (content, config.d))
    path = candidate_path(config, side, content)
    result = StageResult(side, tuple(content), path)
    bound = config.psd_bound
    os.makedirs(config.candidate_dir, exist_ok=True)
    log.info("Stage 1 side %s content %s -> %s", side, content, path)

    tmp = path + ".tmp"

    def keep(word):
        result.generated += 1
        values = to_values(word)
        peak = float(psd(values).max())
        if peak > bound:
            result.discarded += 1
            return
        if result.written >= config.max_candidates:
            raise StageLimitError("side %s content %s: more than %d candidates in %s"
                                  % (side, content, config.max_candidates, path))
        record = CandidateRecord(tuple(int(x) for x in values), tuple(int(x) for x in paf(values)), peak)
        fp.write(record.to_line())
        result.written += 1

    try:
        with open(tmp, "w") as fp:
            generate_fixed_content(config.d, content, mode=SIDE_MODES[side], visitor=keep)
    except BaseException:
        # no partial candidate file survives an aborted run
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    os.replace(tmp, path)
    log.info("Stage 1 side %s: %d generated, %d discarded, %d written", side, result.generated, result.discarded,
             result.written)
    return result


def read_candidates(path: str) -> Iterator[CandidateRecord]:
    with open(path) as fp:
        for line in fp:
            if line.strip():
                yield CandidateRecord.from_line(line)


def _complement_key(profile, v: int) -> tuple:
    """The PAF a partner must have: 2v - paf[0] at 0, -paf[s] elsewhere."""
    return (2 * v - int(profile[0]),) + tuple(-int(x) for x in profile[1:])


def match_records(records_a, records_b, v: int) -> list:
    index = {}
    for rec in records_b:
        index.setdefault(tuple(rec.paf), []).append(rec.sequence)
    matches = []
    for rec in records_a:
        for seq_b in index.get(_complement_key(rec.paf, v), ()):
            matches.append((rec.sequence, seq_b))
    return matches


def stage2_match(file_a: str, file_b: str, v: int) -> list:
    """Compressed pairs (A', B') whose PAF sum is 2v at 0 and vanishes elsewhere."""
    matches = match_records(read_candidates(file_a), read_candidates(file_b), v)
    log.info("Stage 2 %s x %s: %d matches", os.path.basename(file_a), os.path.basename(file_b), len(matches))
    return matches


def lift_candidates(compressed, v: int, tolerance: float = PSD_TOLERANCE, chunk: int = LIFT_CHUNK) -> np.ndarray:
    """
    Every length v +-1 sequence whose 2-compression is the given one and whose PSD
    stays under 2v + tolerance*v, one per row.

    A +2 entry at i fixes positions i and i+d to +1, a -2 fixes them to -1, and a 0
    takes (+1, -1) or (-1, +1).
    """
    c = check_ternary(compressed)
    d = c.size
    if 2 * d != v:
        raise ValueError("compressed length %d does not halve v=%d" % (d, v))
    zeros = np.flatnonzero(c == 0)
    z = zeros.size
    base = c // 2
    bound = psd_bound(v, tolerance)
    kept = []
    shifts = np.arange(z, dtype=np.int64)
    for start in range(0, 1 << z, chunk):
        masks = np.arange(start, min(start + chunk, 1 << z), dtype=np.int64)
        bits = (masks[:, None] >> shifts[None, :]) & 1
        first = np.tile(base, (masks.size, 1))
        first[:, zeros] = 1 - 2 * bits
        second = first.copy()
        second[:, zeros] = -first[:, zeros]
        rows = np.concatenate([first, second], axis=1)
        kept.append(rows[psd(rows).max(axis=1) <= bound])
    return np.concatenate(kept) if kept else np.empty((0, v), dtype=np.int64)


def stage3_lift(a_c, b_c, v: int, tolerance: float = PSD_TOLERANCE, lift_cap: int = DEFAULT_LIFT_CAP,
                stats: Optional[dict] = None) -> list:
    """Verified periodic Golay pairs lifted from one compressed pair, sorted."""
    for side, c in (('A', a_c), ('B', b_c)):
        z = int(np.count_nonzero(np.asarray(c) == 0))
        if z > lift_cap:
            raise LiftCapError("side %s has %d zeros: 2^%d = %d lifts exceeds the cap 2^%d"
                               % (side, z, z, 1 << z, lift_cap))
    lifts_a = lift_candidates(a_c, v, tolerance)
    lifts_b = lift_candidates(b_c, v, tolerance)
    index = {}
    for row, profile in zip(lifts_b, paf_batch(lifts_b)):
        index.setdefault(tuple(int(x) for x in profile), []).append(row)
    pairs = set()
    lifted = 0
    for row, profile in zip(lifts_a, paf_batch(lifts_a)):
        for row_b in index.get(_complement_key(profile, v), ()):
            lifted += 1
            if is_periodic_golay_pair(row, row_b):
                pairs.add(GolayPair(tuple(int(x) for x in row), tuple(int(x) for x in row_b)))
    if stats is not None:
        stats['lifted'] = stats.get('lifted', 0) + lifted
        stats['verified'] = stats.get('verified', 0) + len(pairs)
    log.debug("Stage 3 %s / %s: %d x %d lifts, %d verified", format_ternary(a_c), format_ternary(b_c),
              len(lifts_a), len(lifts_b), len(pairs))
    return sorted(pairs)


def get_lock(directory: str):
    """Exclusive lock on the candidate directory; returns the open lock file."""
    os.makedirs(directory, exist_ok=True)
    fp = open(os.path.join(directory, LOCK_NAME), 'w')
    try:
        fcntl.flock(fp.fileno(), fcntl.LOCK_EX | fcntl.LOCK_NB)
    except OSError:
        fp.close()
        raise SearchLockedError("another search holds %s" % os.path.join(directory, LOCK_NAME)) from None
    return fp


def remove_lock(fp):
    """Release the lock. The lock file stays so every searcher locks the same inode."""
    try:
        fcntl.flock(fp.fileno(), fcntl.LOCK_UN)
    except OSError:
        pass
    fp.close()


def _run_splits(config: SearchConfig, report: SearchReport) -> list:
    row_splits = [config.row_split] if config.row_split else row_sum_splits(config.v)
    stage1 = {}
    matched = []

    def candidates(side, content):
        key = (side, content)
        if key not in stage1:
            res = stage1_candidates(config, side, content)
            report.stats['generated'] += res.generated
            report.stats['psd_discarded'] += res.discarded
            report.stats['written'] += res.written
            stage1[key] = res
        return stage1[key].path

    for a, b in row_splits:
        zero_splits = [config.zero_split] if config.zero_split else feasible_zero_splits(config.v, a, b)
        for za, zb in zero_splits:
            content_a = content_from(config.d, za, a)
            content_b = content_from(config.d, zb, b)
            if content_a is None or content_b is None:
                log.info("Split a=%d b=%d zA=%d zB=%d has no integral content", a, b, za, zb)
                continue
            sub = dataclasses.replace(config, row_split=(a, b), zero_split=(za, zb))
            pairs = stage2_match(candidates('A', content_a), candidates('B', content_b), sub.v)
            report.splits.append({'row_split': [a, b], 'zero_split': [za, zb], 'content_a': list(content_a),
                                  'content_b': list(content_b), 'matched': len(pairs)})
            matched.extend(pairs)
    report.stats['matched'] += len(matched)
    return matched


def run_search(config: SearchConfig) -> SearchReport:
    """
    All three stages over every split. Pairs are reported once per equivalence class,
    in canonical form and sorted, whatever the thread count.
    """
    report = SearchReport(config.v, config.m)
    lock = get_lock(config.candidate_dir)
    try:
        log.info("Search v=%d m=%d, row splits %s", config.v, config.m,
                 [config.row_split] if config.row_split else row_sum_splits(config.v))
        matched = sorted(set(_run_splits(config, report)))

        def lift(pair):
            stats = {}
            return stage3_lift(pair[0], pair[1], config.v, config.tolerance, config.lift_cap, stats), stats

        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(lift, matched))
        found = set()
        for pairs, stats in results:
            report.stats['lifted'] += stats.get('lifted', 0)
            report.stats['verified'] += stats.get('verified', 0)
            found.update(canonical_form(p) for p in pairs)
        report.pairs = sorted(found)
    finally:
        remove_lock(lock)
    log.info("Search v=%d done: %d inequivalent pairs from %d compressed matches", config.v, len(report.pairs),
             report.stats['matched'])
    return report


def write_report(report: SearchReport, path: str):
    tmp = path + ".tmp"
    with open(tmp, "w") as fp:
        json.dump(report.to_dict(), fp, indent=2)
        fp.write("\n")
    os.replace(tmp, path)
    log.info("Report written to %s", path)

