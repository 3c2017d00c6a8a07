"""Reproduce the n=9, k=5 worked instance end to end and write SVG pictures."""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from cyldim.combinatorics import BoxShape, Partition, boundary_pair, conjugate, degree, partition_to_string
from cyldim.crystals import satisfies_rmatrix_condition, satisfies_signature_condition
from cyldim.dimers import enumerate_all, enumerate_configurations, to_crystal_vertex
from cyldim.qcohomology import quantum_kostka
from cyldim.render import render_svg


@dataclass
class N9K5Config:
    n: int = 9
    k: int = 5
    mu: tuple[int, ...] = (4, 4, 3, 2, 2)
    nu: tuple[int, ...] = (3, 3, 3, 1, 0)
    lam: tuple[int, ...] = (2, 4, 2, 3, 2)
    svg_dir: Path | None = None


def main(cfg: N9K5Config):
    box = BoxShape(cfg.k, cfg.n)
    mu, nu = Partition(cfg.mu, box), Partition(cfg.nu, box)
    print(f"b^mu = {partition_to_string(mu)}   b^nu = {partition_to_string(nu)}")
    print(f"mu' = {conjugate(mu)}   nu' = {conjugate(nu)}")
    d = degree(sum(cfg.lam), mu, nu)
    pair = boundary_pair(mu, nu)
    print(f"degree d = {d}, d_min = {pair.d_min}, |lambda_min| = {pair.min_dimers}")
    configs = enumerate_configurations(mu, nu, cfg.lam)
    print(f"|Gamma_lambda| = {len(configs)}, K = {quantum_kostka(mu, cfg.lam).get(nu)}")
    for j, c in enumerate(configs):
        b = to_crystal_vertex(c)
        ok = satisfies_signature_condition(b, mu, nu) and satisfies_rmatrix_condition(b, mu, nu)
        vertex = " x ".join(str(x) for x in b)
        print(f"  #{j:2d} crossings={c.crossings} vertex={vertex} conditions={'ok' if ok else 'FAIL'}")
        if cfg.svg_dir:
            cfg.svg_dir.mkdir(parents=True, exist_ok=True)
            (cfg.svg_dir / f"n9k5_{j:02d}.svg").write_text(render_svg(c))
    classes = enumerate_all(mu, nu)
    print(f"|Gamma(mu,nu)| over all compositions = {sum(classes.values())} in {len(classes)} classes")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--svg-dir", type=Path)
    args = ap.parse_args()
    main(N9K5Config(svg_dir=args.svg_dir))
