"""Evaluation conventions frozen by the rank-1 brute-force oracle.

scripts/convention_oracle.py re-derives everything below; docs/conventions.md
records the derivation.  Summary of the frozen choices:

* Orthogonality / inversion measure.  Grid sums use the weight
  |D(tau)|^2 = D(tau) * conj(D(tau)) and the prefactor 1/|M*/(k+h^v)M| on the
  shifted grid, with an extra 1/|W| on the full grid (each regular full-grid
  orbit has |W| points over one shifted representative).  The literal
  (-1)^l * D(tau)^2 reading reproduces the identity matrix only for A1 at
  k = 1 and fails everywhere else; the oracle rejects it.

* Subset identity.  The alternating subset sum evaluates to 1 for every
  system when the generating set is the simple roots and the empty subset
  contributes +1 per Weyl element.  Dropping the empty subset fails on A1 by
  exactly 2 (the |W| offset).  With fundamental weights as generators the sum
  is the product of the exponents of W instead (1, 2, 3, 5 for A1, A2, B2,
  G2) - recorded as a finding, not used.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import chareval
from .chareval import GRID_FULL, GRID_SHIFTED
from .rootdata import RootSystem, lattice_index
from .weyl import weyl_order


@dataclass(frozen=True)
class GridConventions:
    grid_mode: str = GRID_SHIFTED
    include_empty_subset: bool = True


FROZEN = GridConventions()


def grid_measure(rs: RootSystem, k: int, mode: str | None = None,
                 orbit_correction: bool = True):
    """(label, point, weight) triples defining the inversion measure.

    Summing chi_b * conj(chi_a) against the weights gives delta_ab exactly
    (up to float noise) in either grid mode; non-regular full-grid points
    carry weight 0 because the denominator vanishes there.

    orbit_correction=False drops the full-grid 1/|W| factor, leaving the
    single shared prefactor of the orthogonality contract; the full grid then
    overshoots by exactly |W|, which is the grid-mode discriminator.
    """
    mode = mode or FROZEN.grid_mode
    pref = 1.0 / lattice_index(rs, k)
    if mode == GRID_FULL and orbit_correction:
        pref /= weyl_order(rs)
    out = []
    for label, point in chareval.special_grid(rs, k, mode):
        d = chareval.weyl_denominator(rs, point)
        out.append((label, point, (d * d.conjugate()).real * pref))
    return out
