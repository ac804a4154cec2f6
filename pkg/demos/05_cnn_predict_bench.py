"""
CNN depth prediction plumbing, end to end
=========================================

A depth-regression network maps a 128x128 hologram feature to one number
in meters.  This script builds a randomly initialized network with the
full published architecture, round-trips it through the portable weight
file, runs one prediction, and times that prediction against a short
metric sweep.  The weights are untrained, so the predicted depth is
meaningless; the point is the plumbing and the speed comparison.
"""

import os
import time

import numpy as np

from holodepth import (
    MetricKind,
    build_weights,
    canonical_layer_plan,
    forward,
    load_weights,
    point_constellation,
    power_spectrum_feature,
    save_weights,
    sweep_timed,
    synthesize_inline_hologram,
)

PITCH = 10e-6
WAVELENGTH = 633e-9
SIZE = 1024

out_dir = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out_dir, exist_ok=True)

# the published architecture: four conv/pool stages, two 2048-wide fully
# connected layers, one linear output
rng = np.random.default_rng(100)
weights = build_weights(
    canonical_layer_plan(),
    lambda shape: rng.normal(0.0, 0.02, shape),
    feature_kind="spectrum",
)
weights_path = os.path.join(out_dir, "demo.hdcw")
save_weights(weights, weights_path)
weights = load_weights(weights_path)
print(f"weight file {weights_path}: {os.path.getsize(weights_path) / 1e6:.0f} MB, "
      f"{len(weights.layers)} layers")

# one hologram, one feature, one forward pass
holo = synthesize_inline_hologram(point_constellation(SIZE, seed=5), 0.15, PITCH, WAVELENGTH)
t0 = time.perf_counter()
feature = power_spectrum_feature(holo, (weights.feature_min, weights.feature_max))
feature_ms = (time.perf_counter() - t0) * 1e3
prediction = forward(weights, feature)
print(f"feature extraction {feature_ms:.1f} ms, forward pass {prediction.elapsed_ms:.1f} ms")
print(f"predicted depth {prediction.depth:.4f} m (untrained network, arbitrary value)")

# a 21-step sweep over the same hologram for scale; the full 201-step
# search is roughly 10x this
result, sweep_ms = sweep_timed(holo, 0.14, 0.16, 1e-3, MetricKind.TAMURA, PITCH, WAVELENGTH)
per_prediction = feature_ms + prediction.elapsed_ms
print(f"{result.evaluations}-step sweep {sweep_ms:.0f} ms, "
      f"{sweep_ms / per_prediction:.0f}x one prediction")
