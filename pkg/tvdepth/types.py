# -*- coding: utf-8 -*-
# types
from __future__ import annotations

import typing as t

from msgspec import Meta


WeightChoice = t.Literal["sd", "uniform"]
InputFormat = t.Literal["wide_csv", "long_csv", "pgm_dir"]
Method = t.Literal["tvd_msv", "mbd_fbplot"]
ModelId = t.Annotated[int, Meta(ge=1, le=7)]

# curve indices are 0-based everywhere they leave the library
CurveIndex = t.Annotated[int, Meta(ge=0)]

Proportion = t.Annotated[float, Meta(ge=0, le=1)]
CentralProportion = t.Annotated[float, Meta(gt=0, le=1)]
PositiveFactor = t.Annotated[float, Meta(gt=0)]
Percent = t.Annotated[float, Meta(ge=0, le=100)]
Stride = t.Annotated[int, Meta(ge=1)]
Seed = t.Annotated[int, Meta(ge=0)]
