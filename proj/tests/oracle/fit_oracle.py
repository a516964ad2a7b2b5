# Copyright (c) 2026 The sdfseg Authors. All Rights Reserved
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Descent experiment on the two-touching-discs fixture with gradients from
torch autograd instead of the closed-form backward pass.

    python3 fit_oracle.py FIXTURES [--cli PATH] [--steps N]

Prints the SEG score and component count of the thresholded fit, fails if
SEG < 0.95 or the count is not 2. With --cli the same fit is run through the
command-line tool and the two results are compared.
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile

import numpy as np
import torch

import oracle


def sigmoid(z, alpha, beta):
    return torch.sigmoid(alpha * z + beta)


def total_loss(phi, phi_gt, s_gt, alpha, beta, weights):
    t_pred = 2.0 * sigmoid(phi, alpha, beta) - 1.0
    t_gt = 2.0 * sigmoid(phi_gt, alpha, beta) - 1.0
    b_gt = sigmoid(phi_gt, alpha, beta) * sigmoid(-phi_gt, alpha, beta)
    b_pred = sigmoid(phi, alpha, beta) * sigmoid(-phi, alpha, beta)
    q = sigmoid(phi, alpha, beta)
    ce = torch.where(s_gt > 0, -torch.log(torch.clamp(q, min=1e-12)),
                     -torch.log(torch.clamp(1.0 - q, min=1e-12)))
    parts = [(b_gt * t_pred.abs()).sum(), (b_pred * t_gt.abs()).sum(),
             ((t_pred - t_gt) ** 2).sum(), ce.sum()]
    return sum(w * p for w, p in zip(weights, parts)), [float(p.detach()) for p in parts]


def fit(phi_gt, s_gt, steps, lr, alpha=4.0, beta=0.0, weights=(0.9, 0.1, 1.0, 1.0)):
    phi_gt = torch.tensor(phi_gt, dtype=torch.float64)
    s_gt = torch.tensor(s_gt, dtype=torch.float64)
    phi = torch.zeros_like(phi_gt, requires_grad=True)
    loss, _ = total_loss(phi, phi_gt, s_gt, alpha, beta, weights)
    for _ in range(steps):
        (grad,) = torch.autograd.grad(loss, phi)
        with torch.no_grad():
            trial = phi - lr * grad
        trial.requires_grad_(True)
        trial_loss, _ = total_loss(trial, phi_gt, s_gt, alpha, beta, weights)
        if float(trial_loss.detach()) > float(loss.detach()):
            lr *= 0.5
            continue
        phi, loss = trial, trial_loss
    _, parts = total_loss(phi, phi_gt, s_gt, alpha, beta, weights)
    return phi.detach().numpy(), float(loss.detach()), parts


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("fixtures")
    parser.add_argument("--cli")
    parser.add_argument("--steps", type=int, default=2000)
    parser.add_argument("--lr", type=float, default=0.1)
    args = parser.parse_args()

    gt = oracle.read_pgm(os.path.join(args.fixtures, "two_discs.pgm"))
    mask = (oracle.clean_borders(gt) > 0).astype(np.int64)
    phi_gt = oracle.signed_distance(mask)
    phi, total, _ = fit(phi_gt, mask, args.steps, args.lr)
    labels = oracle.components(phi > 0.0)
    count = int(labels.max())
    _, seg = oracle.seg_score(gt, labels)
    print("oracle total %r components %d SEG %r" % (total, count, seg))
    ok = seg >= 0.95 and count == 2

    if args.cli:
        with tempfile.TemporaryDirectory() as tmp:
            report = os.path.join(tmp, "fit.json")
            out_labels = os.path.join(tmp, "fit.pgm")
            subprocess.run([args.cli, "fit", os.path.join(args.fixtures, "two_discs.pgm"),
                            "--steps", str(args.steps), "--lr", repr(args.lr),
                            "--report", report, "--out-labels", out_labels],
                           check=True, stdout=subprocess.DEVNULL)
            cli = json.load(open(report))
            cli_labels = oracle.read_pgm(out_labels)
        rel = abs(cli["final"]["total"] - total) / max(abs(total), 1.0)
        print("cli    total %r components %d SEG %r (rel diff %.2e)"
              % (cli["final"]["total"], cli["components"], cli["seg"], rel))
        ok = ok and rel < 1e-6 and cli["components"] == count
        ok = ok and np.array_equal(cli_labels, labels)

    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
