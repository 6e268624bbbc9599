# -*- coding: utf-8 -*-
# test_logging
from __future__ import annotations

import json

from tvdepth.logging import create_logger


def test_file_log_is_json_lines(tmp_path) -> None:
    log_file = tmp_path / "tvdepth.log"
    logger = create_logger("test_json_lines", source="pytest", log_file=str(log_file))

    logger.info("hello")
    logger.notice("noted")

    records = [json.loads(line) for line in log_file.read_text().splitlines()]
    assert [r["message"] for r in records] == ["hello", "noted"]
    assert records[1]["level"] == "NOTICE"
    assert records[0]["task"] == "test_json_lines"
    assert records[0]["source"] == "pytest"


def test_loggers_are_reused() -> None:
    first = create_logger("test_reused")
    second = create_logger("test_reused")
    assert first.logger is second.logger
    assert len(first.logger.handlers) == len(second.logger.handlers)
