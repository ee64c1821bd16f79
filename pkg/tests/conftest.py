import logging

import pytest

import gt_log


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop handlers golaytools.main installed so they don't outlive captured streams."""
    root = logging.getLogger()
    level = root.level
    yield
    for handler in [h for h in root.handlers if getattr(h, gt_log._TAG, False)]:
        root.removeHandler(handler)
        handler.close()
    root.setLevel(level)
