"""Score every combination of the ambiguous conventions against brute force.

Conventions scanned: partial-sum direction for theta, rotation direction of
Omega, and which boundary condition defines B_lambda(mu, nu).  Each row reports
how many exhaustive checks fail for n <= max_n, k <= max_k.
"""
from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from cyldim.combinatorics import BoxShape, as_composition, boundary_pair, conjugate, degree, partition_to_string
from cyldim.crystals import R_lambda, omega, select_B_lambda, signature, tensor_vertices
from cyldim.dimers import count_from, crossing_profile_from, dimer_positions, enumerate_configurations


@dataclass
class ScanConfig:
    max_n: int = 5
    max_k: int = 3


def instances(cfg):
    for n in range(3, cfg.max_n + 1):
        for k in range(1, min(cfg.max_k, n - 1) + 1):
            box = BoxShape(k, n)
            for lam, mu, nu in itertools.product(box.partitions(), repeat=3):
                d = degree(lam.size, mu, nu)
                if d is not None:
                    yield box, as_composition(lam, box), mu, nu, d


def theta_scan(cfg):
    print("theta direction: necessity failures / column-coverage mismatches")
    for direction in ("top", "bottom"):
        nec = cov = 0
        for box, lam, mu, nu, d in instances(cfg):
            pair = boundary_pair(mu, nu, direction)
            if d <= pair.d_min:
                continue
            theta = [d + b - a for a, b in zip(pair.partial_sums_mu, pair.partial_sums_nu)]
            configs = enumerate_configurations(mu, nu, lam)
            if configs and min(theta) <= 0:
                nec += 1
            n = box.n
            for c in configs:
                hist = [0] * n
                for u, m in zip(c.levels, c.moves):
                    for p in dimer_positions(u, m, "start").ones:
                        hist[p - 1] += 1
                # theta_i should count the dimers in column n - i (column 0 is column n)
                if [hist[(n - i - 1) % n] for i in range(1, n + 1)] != theta:
                    cov += 1
        print(f"  {direction:6s}  {nec:5d}  {cov:5d}")


def omega_scan(cfg):
    print("Omega shift: |{b : R-identity}| != |Gamma| count")
    for shift in (1, -1):
        bad = 0
        for box, lam, mu, nu, d in instances(cfg):
            front = partition_to_string(conjugate(mu))
            back = partition_to_string(conjugate(nu))
            hits = sum(R_lambda(front, omega(b, shift)) == (b, back) for b in tensor_vertices(lam.parts, box.n))
            bad += hits != count_from(mu, lam).get(nu, 0)
        print(f"  {shift:+d}  {bad}")


def condition_scan(cfg):
    print("B_lambda definition: mismatches with |Gamma|")
    for cond in ("signature", "rmatrix", "both"):
        bad = sum(
            len(select_B_lambda(mu, nu, lam, cond)) != count_from(mu, lam).get(nu, 0)
            for box, lam, mu, nu, d in instances(cfg)
        )
        print(f"  {cond:9s}  {bad}")


def crossing_scan(cfg):
    print("crossing totals equal d in every class:",
          all(set(h) == {degree(sum(a), mu, w)}
              for n in range(3, cfg.max_n + 1) for k in range(cfg.max_k + 1) if k <= n
              for mu in BoxShape(k, n).partitions()
              for (w, a), h in crossing_profile_from(mu).items()))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-k", type=int, default=3)
    a = ap.parse_args()
    cfg = ScanConfig(a.max_n, a.max_k)
    theta_scan(cfg)
    omega_scan(cfg)
    condition_scan(cfg)
    crossing_scan(cfg)
