#!/usr/bin/env python3
# Self-pruning in a few minutes: a 3x256 {0,1}-weight network on binarized MNIST.
#
# Needs the MNIST cache (`spnn fetch mnist`, see README).

import numpy as np

from spnn import NetworkSpec, RngState, SourceConfig, TrainConfig, build_network, load_binarized, train
from spnn.analysis import pruning_stats

train_set, test_set = load_binarized(SourceConfig(), "mnist")
print("train", train_set.images.shape, "pixels are exactly", np.unique(train_set.images))

# Every shadow weight starts at 0 or 1, drawn Bernoulli(p); p=0.01 means 99% of
# connections are absent before training even begins.
spec = NetworkSpec(hidden_units=256)
cfg = TrainConfig(epochs=3)
net = build_network(spec, cfg.init_p, RngState(cfg.seed))
print("initial pruning", round(pruning_stats(net)["overall"], 4))

# The forward pass only ever sees binarize(w); the update moves the real-valued
# shadow weights and clips them back into [0, 1].
report = train(net, train_set, test_set, cfg, on_eval=lambda r: print(
    f"epoch {r['epoch']}: test accuracy {r['accuracy']:.4f}"))

for layer in report.pruning["layers"]:
    print(f"dense layer {layer['layer']}: {layer['pruned']} of {layer['total']} weights are 0 "
          f"({100 * layer['fraction']:.2f}%)")
print(f"overall {100 * report.pruning['overall']:.2f}% pruned, accuracy {report.final_accuracy:.4f}")
