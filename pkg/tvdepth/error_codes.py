# -*- coding: utf-8 -*-
from __future__ import annotations

# exit codes of the `tvdepth` command
SUCCESS = 0
USAGE_ERROR = 1
DATA_ERROR = 2
NUMERICAL_ERROR = 3
