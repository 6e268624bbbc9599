# -*- coding: utf-8 -*-
from __future__ import annotations

from tvdepth.actions import bench
from tvdepth.actions import consistency
from tvdepth.actions import depth
from tvdepth.actions import detect
from tvdepth.actions import simulate
