"""
Building a training dataset from object images
==============================================

Every image in a directory becomes a stack of holograms at scheduled
depths; every hologram is reduced to a 128x128 feature (here: the log
power spectrum) and written to a flat binary container with a JSON
manifest.  The build is deterministic: same directory, same seed, same
bytes.
"""

import os

from holodepth import load_dataset, build_dataset, split_indices, write_corpus

out_dir = os.path.join(os.path.dirname(__file__), "out")
corpus_dir = os.path.join(out_dir, "corpus")
os.makedirs(out_dir, exist_ok=True)

# a small synthetic corpus standing in for a folder of photographs
paths = write_corpus(corpus_dir, count=4, seed=12)
print(f"wrote {len(paths)} object images into {corpus_dir}")

# 3 depths per object over a narrow range keeps this demo quick; real
# corpora use 20 depths over [0.05, 0.25] m
prefix = os.path.join(out_dir, "demo_set")
manifest_path, container_path = build_dataset(
    corpus_dir, prefix, kind="spectrum", samples_per_object=3, seed=7,
)

manifest, features, labels = load_dataset(manifest_path)
train_rows, val_rows = split_indices(manifest)
print(f"container: {container_path} ({os.path.getsize(container_path)} bytes)")
print(f"{features.shape[0]} samples of {features.shape[1]}x{features.shape[2]}, "
      f"labels {labels.min():.3f} .. {labels.max():.3f} m")
print(f"split by object: {len(train_rows)} train rows, {len(val_rows)} validation rows")
norm = manifest["normalization"]
print(f"normalization stored in manifest: min {norm['feature_min']:.3f}, "
      f"max {norm['feature_max']:.3f}, log applied {norm['log_applied']}")
