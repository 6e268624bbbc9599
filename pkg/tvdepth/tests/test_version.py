# -*- coding: utf-8 -*-
from __future__ import annotations

from tvdepth.version import __version__
from tvdepth.version import software_version_info
from tvdepth.version import tuple_to_text


def test_no_zero_padding():
    parts = __version__.split(".")
    for p in parts:
        assert not p.startswith("0")


def test_version_info_round_trips():
    assert tuple_to_text(software_version_info) == __version__
