# -*- coding: utf-8 -*-
# test_shape_variation
from __future__ import annotations

import numpy as np
import pytest

from tvdepth.depth import pointwise_depth
from tvdepth.depth import pointwise_rank_proportions
from tvdepth.depth import tvd
from tvdepth.depth import weight_uniform
from tvdepth.exc import DomainError
from tvdepth.shape_variation import magnitude_component
from tvdepth.shape_variation import msv
from tvdepth.shape_variation import msv_all
from tvdepth.shape_variation import pair_proportions
from tvdepth.shape_variation import shape_component
from tvdepth.shape_variation import shape_profile
from tvdepth.shape_variation import shape_ratio
from tvdepth.shape_variation import shape_ratios_all
from tvdepth.shape_variation import sv
from tvdepth.shape_variation import sv_all
from tvdepth.shape_variation import weight_v
from tvdepth.structs import FunctionalDataset
from tvdepth.structs import PairProportions


def test_pair_proportions_of_fix_b(fix_b) -> None:
    # pair 1 is (t_0, t_1)
    assert pair_proportions(fix_b, [1, 1], 1) == PairProportions(0.5, 0.5, 0.5, 0.0)
    assert pair_proportions(fix_b, [2.5, 0.5], 1) == PairProportions(0.75, 0.25, 0.25, 0.0)
    assert pair_proportions(fix_b, [10, 10], 1) == PairProportions(1.0, 1.0, 1.0, 0.0)


def test_pair_index_out_of_range(fix_b) -> None:
    with pytest.raises(DomainError):
        pair_proportions(fix_b, [1, 1], 0)
    with pytest.raises(DomainError):
        pair_proportions(fix_b, [1, 1], 2)


def test_components_of_fix_b(fix_b) -> None:
    comonotone = pair_proportions(fix_b, [1, 1], 1)
    crossing = pair_proportions(fix_b, [2.5, 0.5], 1)

    assert shape_component(comonotone) == pytest.approx(1 / 4, abs=1e-12)
    assert magnitude_component(comonotone) == pytest.approx(0.0, abs=1e-12)
    assert shape_ratio(comonotone) == pytest.approx(1.0, abs=1e-12)

    assert shape_component(crossing) == pytest.approx(1 / 48, abs=1e-12)
    assert magnitude_component(crossing) == pytest.approx(1 / 6, abs=1e-12)
    assert shape_ratio(crossing) == pytest.approx(1 / 9, abs=1e-12)


def test_no_variance_left_to_explain() -> None:
    everything_below = PairProportions(1.0, 1.0, 1.0, 0.0)
    assert shape_component(everything_below) == 0.0
    assert magnitude_component(everything_below) == 0.0
    assert shape_ratio(everything_below) == 1.0

    nothing_below = PairProportions(0.0, 0.0, 0.0, 0.0)
    assert shape_ratio(nothing_below) == 1.0


def test_weight_v() -> None:
    assert weight_v([0, 2, 3]) == pytest.approx([2 / 3, 1 / 3], abs=1e-15)
    assert weight_v([4, 4, 4, 4]).tolist() == [1 / 3] * 3
    assert weight_v([0, 1]).tolist() == [1.0]


def test_sv_and_msv_of_fix_b(fix_b) -> None:
    assert sv(fix_b, [1, 1]) == pytest.approx(1.0, abs=1e-12)
    assert msv(fix_b, [1, 1]) == pytest.approx(1.0, abs=1e-12)

    profile = shape_profile(fix_b, [1, 1])
    assert profile.v_weights == [1.0]
    assert profile.s_pointwise == pytest.approx([1.0], abs=1e-12)


def test_comonotone_rows_have_full_shape_variation() -> None:
    # parallel curves: every shifted pair lands on the median pair
    ds = FunctionalDataset.from_values([[c, c + 1, c + 3] for c in (0, 1, 2, 4, 5)])
    for row in ds.values:
        assert sv(ds, row) == pytest.approx(1.0, abs=1e-12)
        assert msv(ds, row) == pytest.approx(1.0, abs=1e-12)


def test_total_variance_identity_on_random_cases(rng) -> None:
    for case in range(1200):
        n = int(rng.integers(1, 25))
        m = int(rng.integers(2, 8))
        if case % 2:
            # plenty of ties
            values = rng.integers(-2, 3, size=(n, m)).astype(float)
            f = rng.integers(-3, 4, size=m).astype(float)
        else:
            values = rng.standard_normal((n, m))
            f = rng.standard_normal(m)
        ds = FunctionalDataset.from_values(values)
        i = int(rng.integers(1, m))

        pp = pair_proportions(ds, f, i)
        total = pp.p_cur * (1 - pp.p_cur)
        assert pp.p_joint_below + pp.p_joint_above == pytest.approx(pp.p_cur, abs=1e-15)
        assert pp.p_joint_below <= pp.p_prev
        assert pp.p_joint_above <= 1 - pp.p_prev + 1e-15
        assert abs(shape_component(pp) + magnitude_component(pp) - total) <= 1e-12
        assert 0.0 <= shape_ratio(pp) <= 1.0

        assert 0.0 <= pointwise_depth(pointwise_rank_proportions(ds, f)).min()
        assert pointwise_depth(pointwise_rank_proportions(ds, f)).max() <= 0.25
        assert 0.0 <= tvd(ds, f, weight_uniform(ds.grid)) <= 0.25
        assert 0.0 <= msv(ds, f) <= 1.0


def test_batched_kernels_agree_with_single_curve_versions(model_1) -> None:
    sv_values = sv_all(model_1)
    msv_values = msv_all(model_1)
    for j in range(0, model_1.n, 9):
        assert sv_values[j] == pytest.approx(sv(model_1, model_1.values[j]), abs=1e-12)
        assert msv_values[j] == pytest.approx(msv(model_1, model_1.values[j]), abs=1e-12)


def test_shape_ratios_are_ratios(model_1) -> None:
    ratios = shape_ratios_all(model_1, shifted=True)
    assert ratios.shape == (model_1.n, model_1.m - 1)
    assert np.all((0 <= ratios) & (ratios <= 1))


def test_translation_invariance(rng) -> None:
    values = rng.integers(-10, 10, size=(15, 8)).astype(float)
    f = rng.integers(-10, 10, size=8).astype(float)
    ds = FunctionalDataset.from_values(values)
    shifted = FunctionalDataset.from_values(values + 100.0)

    assert sv(shifted, f + 100.0) == sv(ds, f)
    assert msv(shifted, f + 100.0) == msv(ds, f)
    assert msv_all(shifted).tolist() == msv_all(ds).tolist()


def test_shape_outlier_has_small_msv() -> None:
    from tvdepth.simulation.models import simulate
    from tvdepth.structs import ModelSpec

    simulated = simulate(ModelSpec(model_id=6, n=100, m=50, contamination=0.1, seed=11))
    values = msv_all(simulated.dataset)
    outliers = simulated.outlier_indices
    assert outliers
    assert values[outliers].mean() < np.quantile(values[~simulated.truth], 0.25)
