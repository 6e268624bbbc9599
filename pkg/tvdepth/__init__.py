# -*- coding: utf-8 -*-
from __future__ import annotations

from tvdepth.version import __version__  # noqa: F401
