"""Seeded sweeps of the Milnor-number identities and the translation property.

For each sample: Thom-Sebastiani mu(W1 + W2) = mu(W1) mu(W2), Knoerrer
mu(W + u v) = mu(W), and eliminant(W - c)(t) = eliminant(W)(t + c).

    python3 scripts/property_sweep.py --count 50 --seed 1
"""

import argparse
import json
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from mfcoh import univariate as U
from mfcoh.crit import critical_values
from mfcoh.milnor import NON_ISOLATED, milnor_algebra
from mfcoh.poly import PolyRing, Polynomial


@dataclass(frozen=True)
class SweepConfig:
    count: int = 30
    seed: int = 0
    max_degree: int = 4
    max_terms: int = 4


def random_polynomial(rng, ring, max_degree, max_terms):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(ring.nvars)] += 1
        terms[tuple(e)] = Fraction(rng.randint(-3, 3))
    return Polynomial(ring, terms)


def random_isolated(rng, ring, cfg):
    while True:
        p = random_polynomial(rng, ring, cfg.max_degree, cfg.max_terms)
        alg = milnor_algebra(p) if p.total_degree() >= 2 else NON_ISOLATED
        if alg != NON_ISOLATED and alg.mu_total > 0:
            return p, alg.mu_total


def main():
    ap = argparse.ArgumentParser()
    for name, default in asdict(SweepConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    A, B = PolyRing(("x", "y")), PolyRing(("u", "v"))
    big = PolyRing(("x", "y", "u", "v"))
    ts = kn = tr = 0
    failures = []
    start = time.perf_counter()
    for _ in range(cfg.count):
        p, mp = random_isolated(rng, A, cfg)
        q, mq = random_isolated(rng, B, cfg)
        W = p.to_ring(big) + q.to_ring(big)
        if milnor_algebra(W).mu_total == mp * mq:
            ts += 1
        else:
            failures.append({"property": "thom-sebastiani", "W1": str(p), "W2": str(q)})
        if milnor_algebra(p.to_ring(big) + big.parse("u*v")).mu_total == mp:
            kn += 1
        else:
            failures.append({"property": "knoerrer", "W": str(p)})
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        a, b = critical_values(p), critical_values(p - c)
        if list(b.eliminant) == U.monic(U.shift(list(a.eliminant), c)):
            tr += 1
        else:
            failures.append({"property": "translation", "W": str(p), "c": str(c)})
    out = {
        "config": asdict(cfg),
        "thom_sebastiani": f"{ts}/{cfg.count}",
        "knoerrer": f"{kn}/{cfg.count}",
        "translation": f"{tr}/{cfg.count}",
        "failures": failures,
        "seconds": round(time.perf_counter() - start, 3),
    }
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
