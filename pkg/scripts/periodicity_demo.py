"""Resolutions of the residue field over x^a + y^b and the matrix factorizations they end in.

    python3 scripts/periodicity_demo.py --max-a 4 --max-b 4 --steps 6
"""

import argparse
import json
from dataclasses import asdict, dataclass

from mfcoh.matfac import resolution_over_hypersurface, stable_hom_dims, validate_mf
from mfcoh.milnor import milnor_algebra
from mfcoh.poly import PolyRing


@dataclass(frozen=True)
class DemoConfig:
    max_a: int = 4
    max_b: int = 4
    steps: int = 6


def main():
    ap = argparse.ArgumentParser()
    for name, default in asdict(DemoConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = DemoConfig(**vars(ap.parse_args()))
    ring = PolyRing(("x", "y"))
    x, y = ring.gens()
    rows = []
    for a in range(2, cfg.max_a + 1):
        for b in range(a, cfg.max_b + 1):
            W = x**a + y**b
            rep = resolution_over_hypersurface(W, [[x, y]], cfg.steps)
            row = {"W": str(W), "mu": milnor_algebra(W).mu_total, "ranks": rep.resolution.ranks}
            if rep.mf is not None:
                end = stable_hom_dims(rep.mf, rep.mf)
                row.update(
                    periodic_from=rep.periodic_index,
                    mf_rank=rep.mf.rank,
                    valid=validate_mf(rep.mf).ok,
                    stable_end=[end.even_dim, end.odd_dim],
                )
            rows.append(row)
    print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))


if __name__ == "__main__":
    main()
