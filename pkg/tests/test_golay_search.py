import json
import os

import numpy as np
import pytest

import golay_search
from golay_search import (LOCK_NAME, CandidateRecord, ConfigError, LiftCapError, SYMBOL_VALUES, SearchConfig,
                          SearchLockedError, StageLimitError, candidate_path, content_from, feasible_zero_splits,
                          get_lock, lift_candidates, match_records, read_candidates, remove_lock, row_sum_splits,
                          run_search, stage1_candidates, stage2_match, stage3_lift, write_report)
from necklaces import is_bracelet, is_charm
from sds import pair_orbit
from sequences import (GolayPair, compress, is_periodic_golay_pair, paf, paf_batch, parse_signs, psd, psd_bound,
                       zero_count)
from test_sequences import COMPRESSED_A, COMPRESSED_B, PAIR_68_A, PAIR_68_B


def oracle_pairs(v):
    """Every periodic Golay pair of length v, by PAF hash join over all 2^v sequences."""
    rows = 1 - 2 * ((np.arange(1 << v)[:, None] >> np.arange(v)[None, :]) & 1)
    profiles = paf_batch(rows)
    index = {}
    for row, profile in zip(rows, profiles):
        index.setdefault(tuple(profile[1:]), []).append(tuple(int(x) for x in row))
    pairs = set()
    for row, profile in zip(rows, profiles):
        for b in index.get(tuple(-profile[1:]), ()):
            pairs.add(GolayPair(tuple(int(x) for x in row), b))
    return pairs


def to_word(values):
    return tuple(SYMBOL_VALUES.index(x) for x in values)


@pytest.fixture
def config10(tmp_path):
    return SearchConfig(v=10, candidate_dir=str(tmp_path / "cands"))


@pytest.mark.parametrize("v, expected", [
    (68, [(6, 10)]),
    (10, [(2, 4)]),
    (18, [(0, 6)]),
    (4, [(2, 2)]),
    (1, [(1, 1)]),
    (3, []),
])
def test_row_sum_splits(v, expected):
    assert row_sum_splits(v) == expected


def test_row_sum_splits_satisfy_identity():
    for v in range(1, 200):
        for a, b in row_sum_splits(v):
            assert 0 <= a <= b
            assert a * a + b * b == 2 * v


@pytest.mark.parametrize("d, z, rowsum, expected", [
    (34, 17, 6, (17, 10, 7)),
    (34, 17, 10, (17, 11, 6)),
    (34, 18, 6, None),
    (34, 21, 6, (21, 8, 5)),
    (5, 5, 4, None),
    (5, 0, 3, None),
])
def test_content_from(d, z, rowsum, expected):
    assert content_from(d, z, rowsum) == expected


def test_content_from_range():
    with pytest.raises(ValueError):
        content_from(5, 6, 2)


def test_feasible_zero_splits():
    assert feasible_zero_splits(10, 2, 4) == [(2, 3), (4, 1)]
    assert feasible_zero_splits(18, 0, 6) == [(3, 6), (5, 4), (7, 2), (9, 0)]
    assert (21, 13) in feasible_zero_splits(68, 6, 10)


def test_config_validation(tmp_path):
    with pytest.raises(ConfigError):
        SearchConfig(v=9)
    with pytest.raises(ConfigError):
        SearchConfig(v=10, m=5)
    with pytest.raises(ConfigError):
        SearchConfig(v=10, row_split=(2, 6))
    with pytest.raises(ConfigError):
        SearchConfig(v=10, zero_split=(2, 2))
    with pytest.raises(ConfigError):
        SearchConfig(v=10, threads=0)
    config = SearchConfig(v=68, row_split=[6, 10], zero_split=[21, 13])
    assert config.row_split == (6, 10)
    assert config.d == 34
    assert config.psd_bound == pytest.approx(136 + 68e-6)


def test_config_load(tmp_path):
    path = tmp_path / "search.json"
    path.write_text(json.dumps({"v": 10, "row_split": [2, 4], "lift_cap": 12, "threads": 2}))
    config = SearchConfig.load(str(path), threads=None, lift_cap=20)
    assert (config.v, config.row_split, config.lift_cap, config.threads) == (10, (2, 4), 20, 2)
    path.write_text(json.dumps({"v": 10, "colour": "red"}))
    with pytest.raises(ConfigError):
        SearchConfig.load(str(path))
    path.write_text("[1, 2]")
    with pytest.raises(ConfigError):
        SearchConfig.load(str(path))
    with pytest.raises(ConfigError):
        SearchConfig.load(None)


def test_candidate_record_line():
    record = CandidateRecord((0, 2, -2), (8, -4, -4), 12.0)
    assert record.to_line() == "0,2,-2\t8,-4,-4\t12.000000\n"
    assert CandidateRecord.from_line(record.to_line()) == record
    with pytest.raises(ValueError):
        CandidateRecord.from_line("0,2\t4")


@pytest.mark.parametrize("side, content, mode_test", [("A", (2, 2, 1), is_charm), ("B", (3, 1, 1), is_bracelet)])
def test_stage1_records(config10, side, content, mode_test):
    result = stage1_candidates(config10, side, content)
    assert result.path == candidate_path(config10, side, content)
    assert os.path.exists(result.path)
    assert not os.path.exists(result.path + ".tmp")
    records = list(read_candidates(result.path))
    assert len(records) == result.written
    assert result.generated == result.written + result.discarded
    for rec in records:
        word = to_word(rec.sequence)
        assert tuple(word.count(s) for s in range(3)) == content
        assert mode_test(word)
        assert rec.psd_max <= config10.psd_bound
        assert rec.paf == tuple(paf(rec.sequence))
    assert [r.sequence for r in records] == sorted((r.sequence for r in records), key=to_word)


def test_stage1_all_zero_prefix_first(config10):
    records = list(read_candidates(stage1_candidates(config10, "A", (4, 1, 0)).path))
    assert records[0].sequence == (0, 0, 0, 0, 2)


def test_stage1_limit(tmp_path):
    config = SearchConfig(v=10, tolerance=1e3, max_candidates=1, candidate_dir=str(tmp_path))
    with pytest.raises(StageLimitError) as excinfo:
        stage1_candidates(config, "B", (1, 3, 1))
    assert "B" in str(excinfo.value)
    assert os.listdir(str(tmp_path)) == []


def test_stage1_failure_leaves_no_partial_file(config10, monkeypatch):
    def failing_generation(n, content, mode, visitor):
        visitor((0, 0, 0, 0, 1))
        raise OSError("disk full")

    monkeypatch.setattr(golay_search, "generate_fixed_content", failing_generation)
    with pytest.raises(OSError):
        stage1_candidates(config10, "A", (4, 1, 0))
    assert os.listdir(config10.candidate_dir) == []


def test_stage1_interrupt_leaves_no_partial_file(config10, monkeypatch):
    def interrupted_generation(n, content, mode, visitor):
        visitor((0, 0, 0, 0, 1))
        raise KeyboardInterrupt

    monkeypatch.setattr(golay_search, "generate_fixed_content", interrupted_generation)
    with pytest.raises(KeyboardInterrupt):
        stage1_candidates(config10, "A", (4, 1, 0))
    assert os.listdir(config10.candidate_dir) == []


def test_stage1_bad_side(config10):
    with pytest.raises(ValueError):
        stage1_candidates(config10, "C", (2, 2, 1))
    with pytest.raises(ValueError):
        stage1_candidates(config10, "A", (2, 2, 2))


def brute_match(records_a, records_b, v):
    matches = []
    for ra in records_a:
        for rb in records_b:
            total = np.array(ra.paf) + np.array(rb.paf)
            if total[0] == 2 * v and not np.any(total[1:]):
                matches.append((ra.sequence, rb.sequence))
    return matches


def test_stage2_hash_join_matches_double_loop(config10):
    for (za, zb) in feasible_zero_splits(10, 2, 4):
        file_a = stage1_candidates(config10, "A", content_from(5, za, 2)).path
        file_b = stage1_candidates(config10, "B", content_from(5, zb, 4)).path
        expected = brute_match(list(read_candidates(file_a)), list(read_candidates(file_b)), 10)
        assert sorted(stage2_match(file_a, file_b, 10)) == sorted(expected)


def test_stage2_on_truncated_files(tmp_path):
    config = SearchConfig(v=18, candidate_dir=str(tmp_path))
    for za, zb in feasible_zero_splits(18, 0, 6):
        records_a = list(read_candidates(stage1_candidates(config, "A", content_from(9, za, 0)).path))[:40]
        records_b = list(read_candidates(stage1_candidates(config, "B", content_from(9, zb, 6)).path))[:40]
        assert sorted(match_records(records_a, records_b, 18)) == sorted(brute_match(records_a, records_b, 18))


def test_stage2_rejects_self_pairing():
    record = CandidateRecord((2, 2, 0, 0, 0), tuple(paf((2, 2, 0, 0, 0))), 16.0)
    assert record.paf[1] != 0
    assert match_records([record], [record], 10) == []


def test_stage2_matches_published_compressed_pair():
    rec_a = CandidateRecord(COMPRESSED_A, tuple(paf(COMPRESSED_A)), float(psd(COMPRESSED_A).max()))
    rec_b = CandidateRecord(COMPRESSED_B, tuple(paf(COMPRESSED_B)), float(psd(COMPRESSED_B).max()))
    assert match_records([rec_a], [rec_b], 68) == [(COMPRESSED_A, COMPRESSED_B)]


def test_lift_candidates_structure():
    lifts = lift_candidates((0, 2, 0, -2), 8, tolerance=1e3)
    assert lifts.shape == (4, 8)
    for row in lifts:
        assert tuple(compress(row, 2)) == (0, 2, 0, -2)
    assert len({tuple(r) for r in lifts}) == 4


def test_lift_without_zeros_is_unique():
    lifts = lift_candidates((2, -2, 2), 6, tolerance=1e3)
    assert [tuple(r) for r in lifts] == [(1, -1, 1, 1, -1, 1)]


def test_lift_psd_filter():
    bound = psd_bound(8)
    lifts = lift_candidates((0, 2, 0, -2), 8)
    assert all(psd(row).max() <= bound for row in lifts)


def test_lift_length_mismatch():
    with pytest.raises(ValueError):
        lift_candidates((0, 2), 6)


def test_stage3_cap():
    with pytest.raises(LiftCapError) as excinfo:
        stage3_lift((0, 0, 0, 2), (2, 0, 0, 0), 8, lift_cap=2)
    assert "2^3" in str(excinfo.value)


def test_stage3_v4():
    pairs = stage3_lift((0, 2), (0, 2), 4)
    assert pairs
    assert all(is_periodic_golay_pair(*p) for p in pairs)
    assert pairs == sorted(pairs)


@pytest.mark.slow
def test_stage3_recovers_published_pair():
    stats = {}
    pairs = stage3_lift(COMPRESSED_A, COMPRESSED_B, 68, stats=stats)
    assert GolayPair(parse_signs(PAIR_68_A), parse_signs(PAIR_68_B)) in pairs
    assert all(is_periodic_golay_pair(*p) for p in pairs)
    assert stats['verified'] == len(pairs)


def test_run_search_v4(tmp_path):
    report = run_search(SearchConfig(v=4, candidate_dir=str(tmp_path)))
    assert report.pairs
    assert all(is_periodic_golay_pair(*p) for p in report.pairs)
    covered = set()
    for pair in report.pairs:
        covered |= pair_orbit(pair, extended=True)
    assert oracle_pairs(4) <= covered
    assert GolayPair(parse_signs("+++-"), parse_signs("++-+")) in covered


def test_run_search_v10_complete(tmp_path):
    report = run_search(SearchConfig(v=10, candidate_dir=str(tmp_path)))
    assert len(report.pairs) >= 1
    assert all(is_periodic_golay_pair(*p) for p in report.pairs)
    covered = set()
    for pair in report.pairs:
        covered |= pair_orbit(pair, extended=True)
    oracle = oracle_pairs(10)
    assert oracle
    assert oracle <= covered
    assert report.stats['verified'] >= len(report.pairs)
    assert [s['zero_split'] for s in report.splits] == [[2, 3], [4, 1]]


@pytest.mark.parametrize("v", [4, 10])
def test_oracle_pairs_meet_search_constraints(v):
    bound = psd_bound(v)
    for a, b in oracle_pairs(v):
        assert psd(a).max() <= bound
        assert psd(b).max() <= bound
        assert zero_count(compress(a, 2)) + zero_count(compress(b, 2)) == v // 2


@pytest.mark.parametrize("v", [4, 10])
def test_oracle_pairs_have_flat_psd_sum(v):
    for a, b in oracle_pairs(v):
        assert psd(a) + psd(b) == pytest.approx(np.full(v, 2.0 * v), abs=1e-6)


@pytest.mark.parametrize("v", [4, 10])
def test_compressed_oracle_pairs_are_complementary(v):
    for a, b in oracle_pairs(v):
        total = paf(compress(a, 2)) + paf(compress(b, 2))
        assert total[0] == 2 * v
        assert not np.any(total[1:])


def test_run_search_is_deterministic_across_threads(tmp_path):
    one = run_search(SearchConfig(v=10, candidate_dir=str(tmp_path / "one"), threads=1))
    four = run_search(SearchConfig(v=10, candidate_dir=str(tmp_path / "four"), threads=4))
    assert json.dumps(one.to_dict()) == json.dumps(four.to_dict())


@pytest.mark.slow
def test_run_search_v18_finds_nothing(tmp_path):
    report = run_search(SearchConfig(v=18, candidate_dir=str(tmp_path)))
    assert report.pairs == []
    assert len(report.splits) == 4


def test_write_report(tmp_path):
    report = run_search(SearchConfig(v=4, candidate_dir=str(tmp_path / "cands")))
    path = str(tmp_path / "report.json")
    write_report(report, path)
    with open(path) as fp:
        data = json.load(fp)
    assert data['v'] == 4
    assert data['pairs_found'] == len(report.pairs)
    for pair in data['pairs']:
        assert is_periodic_golay_pair(parse_signs(pair['a']), parse_signs(pair['b']))
    assert set(data['stats']) == {'generated', 'psd_discarded', 'written', 'matched', 'lifted', 'verified'}


def test_search_lock(tmp_path):
    lock = get_lock(str(tmp_path))
    try:
        with pytest.raises(SearchLockedError):
            run_search(SearchConfig(v=4, candidate_dir=str(tmp_path)))
    finally:
        remove_lock(lock)
    assert run_search(SearchConfig(v=4, candidate_dir=str(tmp_path))).pairs


def test_lock_file_is_kept_and_reused(tmp_path):
    lock = get_lock(str(tmp_path))
    inode = os.stat(lock.name).st_ino
    remove_lock(lock)
    assert os.path.exists(str(tmp_path / LOCK_NAME))
    again = get_lock(str(tmp_path))
    try:
        assert os.stat(again.name).st_ino == inode
        with pytest.raises(SearchLockedError):
            get_lock(str(tmp_path))
    finally:
        remove_lock(again)
