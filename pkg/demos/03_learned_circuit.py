#!/usr/bin/env python3
# With hard negation instead of batch norm, each neuron is an OR of its fan-in
# followed by NOT, i.e. a NOR gate.  Train a small one and read the circuit off.

import numpy as np

from spnn import NetworkSpec, RngState, SourceConfig, TrainConfig, build_network, load_binarized, train
from spnn.analysis import agreement, eval_circuit, extract_circuit

train_set, test_set = load_binarized(SourceConfig(), "mnist")
spec = NetworkSpec(hidden_units=256, norm_mode="hard")
cfg = TrainConfig(epochs=2, learning_rate=1.0, output_lr_scale=0.1)
net = build_network(spec, cfg.init_p, RngState(cfg.seed))
report = train(net, train_set, test_set, cfg)
print(f"network accuracy {report.final_accuracy:.4f}")

netlist = extract_circuit(net)
for k, layer in enumerate(netlist.layers):
    fanin = [len(g) for g in layer["gates"]]
    print(f"gate layer {k}: {len(fanin)} {layer['kind'].upper()} gates, "
          f"median fan-in {int(np.median(fanin))}, {sum(f == 0 for f in fanin)} constant")

# The circuit is evaluated with pure boolean logic and a popcount per class.
x, y = test_set.images[:2000], test_set.labels[:2000]
pred = eval_circuit(netlist, x)
print(f"circuit accuracy {np.mean(pred == y):.4f}, agreement with the network {agreement(netlist, net, x):.4f}")
# Agreement is not exact: tanh(1) is only 0.76, so a single active input is a soft "true".
