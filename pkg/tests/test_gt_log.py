import json
import logging

import pytest

import gt_log


def golay_handlers():
    return [h for h in logging.getLogger().handlers if getattr(h, gt_log._TAG, False)]


def test_stream_only_by_default(monkeypatch):
    monkeypatch.delenv('GOLAY_LOGFILE', raising=False)
    monkeypatch.delenv('GOLAY_LOGLEVEL', raising=False)
    root = gt_log.setup_logging()
    handlers = golay_handlers()
    assert len(handlers) == 1
    assert handlers[0].level == logging.WARNING
    assert root.level == logging.WARNING


def test_logfile_gets_text_and_json(tmp_path):
    logfile = str(tmp_path / "golay.log")
    gt_log.setup_logging(logfile, stream_level=logging.ERROR)
    gt_log.setup_logging(logfile, stream_level=logging.ERROR)
    assert len(golay_handlers()) == 3
    logging.getLogger("golay_search").info("stage 1 wrote %d records", 12)
    with open(logfile) as fp:
        text = fp.read()
    assert "stage 1 wrote 12 records" in text
    assert " : INFO     : " in text
    with open(logfile + ".json") as fp:
        record = json.loads(fp.readline())
    assert record["message"] == "stage 1 wrote 12 records"


def test_logfile_from_environment(tmp_path, monkeypatch):
    logfile = str(tmp_path / "env.log")
    monkeypatch.setenv('GOLAY_LOGFILE', logfile)
    gt_log.setup_logging()
    logging.getLogger("necklaces").debug("visited")
    with open(logfile) as fp:
        assert "visited" in fp.read()


def test_env_level(monkeypatch):
    monkeypatch.setenv('GOLAY_LOGLEVEL', 'info')
    assert gt_log.env_level() == logging.INFO
    monkeypatch.setenv('GOLAY_LOGLEVEL', 'chatty')
    with pytest.raises(ValueError):
        gt_log.env_level()
    monkeypatch.delenv('GOLAY_LOGLEVEL')
    assert gt_log.env_level() == logging.WARNING
