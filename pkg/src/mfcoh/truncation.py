"""Degree-truncated cohomology of complexes of free polynomial modules.

Given ``R^a --A--> R^b --C--> R^c`` this computes, by plain linear algebra on
monomial bases, the dimension of

    ker(C restricted to R^b_{<=B}) / (A(R^a_{<=B'}) cap R^b_{<=B})

where ``_{<=B}`` bounds the total degree of coefficients. No Groebner bases
are involved, so it serves as an independent check on module computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .linalg import sparse_rank


def monomials_up_to(nvars: int, bound: int):
    out = []
    for d in range(bound + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _images(matrix, ncols, nvars, bound):
    """Image vectors ``{(row, exp): coeff}`` of every ``(col, monomial)`` source basis element."""
    mons = monomials_up_to(nvars, bound)
    images = []
    for j in range(ncols):
        column = [(i, row[j]) for i, row in enumerate(matrix) if row[j]]
        for m in mons:
            img = {}
            for i, p in column:
                for e, c in p.terms.items():
                    key = (i, tuple(a + b for a, b in zip(e, m)))
                    v = img.get(key, 0) + c
                    if v:
                        img[key] = v
                    else:
                        img.pop(key, None)
            images.append(img)
    return images


def _rank(images, keep=None):
    index = {}
    rows = []
    for img in images:
        row = {}
        for key, c in img.items():
            if keep is not None and not keep(key):
                continue
            col = index.setdefault(key, len(index))
            row[col] = c
        rows.append(row)
    return sparse_rank(rows)


@dataclass(frozen=True)
class WindowDims:
    bound: int
    space: int
    cycles: int
    boundaries: int

    @property
    def homology(self) -> int:
        return self.cycles - self.boundaries


def window_homology(incoming, outgoing, middle_rank: int, nvars: int, bound: int, preimage_bound=None) -> WindowDims:
    """Truncated homology at the middle term; ``incoming``/``outgoing`` may be ``None``."""
    preimage_bound = bound if preimage_bound is None else preimage_bound
    space = middle_rank * len(monomials_up_to(nvars, bound))
    if outgoing is not None and outgoing and middle_rank:
        r_out = _rank(_images(outgoing, middle_rank, nvars, bound))
    else:
        r_out = 0
    cycles = space - r_out
    if incoming is not None and incoming and incoming[0]:
        imgs = _images(incoming, len(incoming[0]), nvars, preimage_bound)
        r_in = _rank(imgs)
        r_high = _rank(imgs, keep=lambda key: sum(key[1]) > bound)
        boundaries = r_in - r_high
    else:
        boundaries = 0
    return WindowDims(bound, space, cycles, boundaries)
