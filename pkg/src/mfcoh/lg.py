"""LG models (relations + potential) and their regularized potential.

For relations ``f_1..f_m`` and potential ``g`` on ``Q[x_1..x_n]`` the
regularized potential is ``W = g + sum_k f_k * x_{n+k}`` on ``Q[x_1..x_{n+m}]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, NameCollisionError
from .groebner import EMPTY, Ideal, krull_dimension
from .poly import GREVLEX, PolyRing, Polynomial


@dataclass(frozen=True)
class LGModel:
    ambient: PolyRing
    relations: tuple
    potential: Polynomial

    def __post_init__(self):
        rels = tuple(self.ambient(f) for f in self.relations)
        for f in rels + (self.potential,):
            if f.ring.variables != self.ambient.variables:
                raise InputError(f"{f} does not live in {self.ambient}")
        object.__setattr__(self, "relations", rels)

    @property
    def n(self) -> int:
        return self.ambient.nvars

    @property
    def m(self) -> int:
        return len(self.relations)

    @classmethod
    def from_strings(cls, variables, relations, potential) -> "LGModel":
        ring = PolyRing(tuple(variables), GREVLEX)
        return cls(ring, tuple(ring.parse(f) for f in relations), ring.parse(potential))

    @classmethod
    def from_dict(cls, data: dict) -> "LGModel":
        if not isinstance(data, dict):
            raise InputError("model must be a JSON object")
        missing = {"variables", "potential"} - set(data)
        if missing:
            raise InputError(f"model is missing keys {sorted(missing)}")
        rels = data.get("relations", [])
        if not isinstance(data["variables"], list) or not isinstance(rels, list):
            raise InputError("'variables' and 'relations' must be lists")
        return cls.from_strings(data["variables"], rels, data["potential"])

    @classmethod
    def from_json(cls, text: str) -> "LGModel":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid model JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {
            "variables": list(self.ambient.variables),
            "relations": [str(f) for f in self.relations],
            "potential": str(self.potential),
        }


@dataclass(frozen=True)
class RegularizedPotential:
    ring: PolyRing
    W: Polynomial
    source: LGModel
    new_variables: tuple

    def restrict_to_ambient(self) -> Polynomial:
        """``W`` with every added variable set to zero, as a polynomial on the ambient ring."""
        zeroed = self.W.subs({v: 0 for v in self.new_variables})
        amb = self.source.ambient
        return Polynomial(amb, {e[: amb.nvars]: c for e, c in zeroed.terms.items()})


@dataclass(frozen=True)
class RegularSequenceReport:
    ok: bool
    dimensions: tuple  # Krull dimension after each prefix
    expected: tuple
    failing_prefix: int | None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "dimensions": list(self.dimensions),
            "expected": list(self.expected),
            "failing_prefix": self.failing_prefix,
        }


def check_regular_sequence(model: LGModel) -> RegularSequenceReport:
    """Codimension test for ``(f_1, ..., f_m, g)``; prefixes are 1-based."""
    seq = list(model.relations) + [model.potential]
    return check_sequence(model.ambient, seq)


def check_sequence(ring: PolyRing, seq) -> RegularSequenceReport:
    n = ring.nvars
    dims, expected = [], []
    failing = None
    for k in range(1, len(seq) + 1):
        d = krull_dimension(Ideal(ring, seq[:k]))
        dims.append(d)
        expected.append(n - k)
        if failing is None and (d == EMPTY or d != n - k):
            failing = k
            break
    return RegularSequenceReport(failing is None, tuple(dims), tuple(expected), failing)


def regularize(model: LGModel) -> RegularizedPotential:
    n, m = model.n, model.m
    new = tuple(f"x{n + k}" for k in range(1, m + 1))
    clash = set(new) & set(model.ambient.variables)
    if clash:
        raise NameCollisionError(f"regularization variables {sorted(clash)} already in the ambient ring")
    ring = PolyRing(model.ambient.variables + new, GREVLEX)
    W = model.potential.to_ring(ring)
    for f, v in zip(model.relations, new):
        W = W + f.to_ring(ring) * ring.var(v)
    return RegularizedPotential(ring, W, model, new)


def translate(model: LGModel, c) -> LGModel:
    c = Fraction(c)
    return LGModel(model.ambient, model.relations, model.potential - c)
