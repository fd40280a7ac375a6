"""Worked example: the hypersurface x1*x2 + x3*x4 = 0 in A^5 with g = x2^2 + ... + x5^2.

Runs the full pipeline and prints one JSON document.

    python3 scripts/worked_example.py [--bound 2]
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from mfcoh.cli import RunConfig, report
from mfcoh.crit import is_relative_critical_point
from mfcoh.errors import MfcohError
from mfcoh.lg import LGModel


@dataclass(frozen=True)
class ExampleConfig:
    bound: int = 2
    points: tuple = ((1, 0, 0, 0, 0), (0, 0, 0, 0, 1), (0, 1, 0, 0, 0))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=ExampleConfig.bound)
    cfg = ExampleConfig(bound=ap.parse_args().bound)

    model = LGModel.from_strings(
        ["x1", "x2", "x3", "x4", "x5"], ["x1*x2 + x3*x4"], "x2^2 + x3^2 + x4^2 + x5^2"
    )
    start = time.perf_counter()
    doc = report(model, RunConfig(bound=cfg.bound))
    points = []
    for p in cfg.points:
        try:
            points.append({"point": list(p), **is_relative_critical_point(model, p).to_dict()})
        except MfcohError as exc:  # points off X are reported, not fatal
            points.append({"point": list(p), "error": str(exc)})
    doc["points"] = points
    doc["config"] = asdict(cfg)
    doc["seconds"] = round(time.perf_counter() - start, 3)
    print(json.dumps(doc, indent=2))


if __name__ == "__main__":
    main()
