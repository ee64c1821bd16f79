#!/usr/bin/env python
# encoding: utf-8
"""
gt_log.py

Copyright (c) 2026 golaytools contributors, MIT License

Description:

Handler setup for the golaytools command line. Library modules only create their
loggers; this attaches a stderr handler and, when a log file is configured, a rotating
text log plus a rotating JSON twin (<logfile>.json).
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

from pythonjsonlogger import jsonlogger

DEF_FRMT = "%(asctime)s : %(levelname)-8s : %(funcName)-25s:%(lineno)-4s: %(message)s"
STREAM_FRMT = "%(levelname)s: %(message)s"
MAX_BYTES = 5 * 1024 * 1024
BACKUP_COUNT = 8

# Marks handlers installed here so a second setup replaces rather than stacks them
_TAG = '_golaytools'


def env_logfile():
    path = os.environ.get('GOLAY_LOGFILE')
    return os.path.expanduser(path) if path else None


def env_level(default=logging.WARNING):
    name = os.environ.get('GOLAY_LOGLEVEL')
    if not name:
        return default
    level = logging.getLevelName(name.upper())
    if not isinstance(level, int):
        raise ValueError("GOLAY_LOGLEVEL %r is not a logging level" % name)
    return level


def setup_logging(logfile=None, level=logging.DEBUG, stream_level=None):
    """Install the handlers on the root logger and return it."""
    root = logging.getLogger()
    for handler in [h for h in root.handlers if getattr(h, _TAG, False)]:
        root.removeHandler(handler)
        handler.close()

    stream = logging.StreamHandler(sys.stderr)
    stream.setFormatter(logging.Formatter(STREAM_FRMT))
    stream.setLevel(env_level() if stream_level is None else stream_level)
    handlers = [stream]

    logfile = logfile or env_logfile()
    if logfile:
        loghandler1 = RotatingFileHandler(logfile, maxBytes=MAX_BYTES, backupCount=BACKUP_COUNT)
        loghandler2 = RotatingFileHandler(logfile + '.json', maxBytes=MAX_BYTES, backupCount=BACKUP_COUNT)
        loghandler1.setFormatter(logging.Formatter(DEF_FRMT))
        loghandler2.setFormatter(jsonlogger.JsonFormatter())
        handlers += [loghandler1, loghandler2]

    for handler in handlers:
        setattr(handler, _TAG, True)
        root.addHandler(handler)
    root.setLevel(min(level, stream.level) if logfile else stream.level)
    return root
