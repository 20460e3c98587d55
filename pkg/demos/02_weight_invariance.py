#!/usr/bin/env python3
# Replace every surviving connection by the same constant w and watch accuracy.
#
# Usage: python3 02_weight_invariance.py runs/mnist-bn/checkpoint.spnn

import sys

from spnn import SourceConfig, load_binarized, load_checkpoint
from spnn.analysis import weight_sweep

path = sys.argv[1] if len(sys.argv) > 1 else "runs/mnist-bn/checkpoint.spnn"
net = load_checkpoint(path)
train_set, test_set = load_binarized(SourceConfig(), net.meta.get("dataset", "mnist"))

# Without recalibration the batch-norm statistics still describe w=1, so the
# curve mostly measures the mismatch.  Recalibrating re-estimates them per w.
grid = [0.0, 0.5, 1.0, 2.0, 4.0]
plain = weight_sweep(net, test_set, grid=grid, recalibrate=False)
recal = weight_sweep(net, test_set, train_set, grid=grid, recalibrate=True)

print("   w   frozen BN   recalibrated")
for w, a, b in zip(grid, plain.accuracy, recal.accuracy):
    print(f"{w:4.1f}   {a:9.4f}   {b:12.4f}")
# w=0 removes every connection: the logits are constant and one class is always predicted.
