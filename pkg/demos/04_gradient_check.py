#!/usr/bin/env python3
# Every hand-written backward pass is checked against central finite differences.

import numpy as np

from spnn.layers import BatchNorm, Negation
from spnn.tensor import finite_diff_check

rng = np.random.default_rng(0)
x = rng.normal(size=(8, 5))
r = rng.normal(size=(8, 5))  # random projection turns the layer output into a scalar

bn = BatchNorm(5, dtype=np.float64)
bn.forward(x, training=True)
dx = bn.backward(r)
err = finite_diff_check(lambda z: float((bn.forward(z, training=True) * r).sum()), x, dx)
print(f"batch norm, input gradient: relative error {err:.2e}")

soft = Negation("soft", alpha=0.3, dtype=np.float64)
u = rng.uniform(size=(8, 5))
soft.forward(u, training=True)
soft.backward(r)
f = lambda a: float(((u * (1 - a[0, 0]) + (1 - u) * a[0, 0]) * r).sum())
err = finite_diff_check(f, np.array([[0.3]]), soft.grads["alpha"])
print(f"soft negation, invert-gate gradient: relative error {err:.2e}")
