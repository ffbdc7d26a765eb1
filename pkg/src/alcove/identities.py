"""Numerical certification of the standalone algebraic identities.

Three families: the vanishing double Weyl sum, the alternating subset sum,
and the grid orthogonality of characters.  Sample points are random rationals
with prime denominators, pole-tested exactly before any float evaluation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import chareval, conventions, weyl
from .rootdata import RootSystem, TorusPoint, Weight, weights_at_level

PRIME_DENOMINATORS = (101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
                      157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211,
                      223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271,
                      277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347,
                      349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409,
                      419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467,
                      479, 487, 491, 499)


class PoleError(ValueError):
    """A factor in the requested sum vanishes at the sample point; resample."""


@dataclass
class IdentityReport:
    name: str
    system: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {"name": self.name, "system": self.system, "samples": self.samples,
                "max_residual": self.max_residual, "tolerance": self.tolerance,
                "passed": self.passed, "detail": self.detail}


def random_rational_point(rs: RootSystem, rng: random.Random) -> TorusPoint:
    den = rng.choice(PRIME_DENOMINATORS)
    coords = [Fraction(rng.randrange(1, den), den) for _ in range(rs.rank)]
    return TorusPoint(rs.weight_from_coords(coords))


def _sample_pole_free(rs: RootSystem, rng: random.Random, check) -> TorusPoint:
    for _ in range(64):
        x = random_rational_point(rs, rng)
        try:
            check(x)
            return x
        except PoleError:
            continue
    raise PoleError("could not find a pole-free sample point")


# -- the vanishing double Weyl sum --------------------------------------------

def fundamental_formula_residual(rs: RootSystem, x: TorusPoint, y: TorusPoint) -> complex:
    """Double sum over Weyl pairs of reciprocal root/weight products.

    The sum vanishes identically; the returned value is therefore the
    residual.  Raises PoleError if any factor vanishes (tested exactly).
    """
    group = weyl.enumerate_weyl(rs)
    fund = [rs.fundamental_weight(i) for i in range(rs.rank)]
    root_x, root_y, fund_x, fund_y = {}, {}, {}, {}
    for w in group:
        root_x[w.word] = [chareval.pairing(rs, weyl.act(w, a), x) for a in rs.positive_roots]
        root_y[w.word] = [chareval.pairing(rs, weyl.act(w, a), y) for a in rs.positive_roots]
        fund_x[w.word] = [chareval.pairing(rs, weyl.act(w, f), x) for f in fund]
        fund_y[w.word] = [chareval.pairing(rs, weyl.act(w, f), y) for f in fund]
        if any(p.denominator == 1 for p in root_x[w.word] + root_y[w.word]):
            raise PoleError("root factor vanishes")
    for w in group:
        for v in group:
            if any((fund_x[w.word][i] + fund_y[v.word][i]).denominator == 1
                   for i in range(rs.rank)):
                raise PoleError("weight factor vanishes")

    den_x = {}
    den_y = {}
    for w in group:
        dx = 1 + 0j
        dy = 1 + 0j
        for p in root_x[w.word]:
            dx *= 1 - chareval.unit_phase(-p)
        for p in root_y[w.word]:
            dy *= 1 - chareval.unit_phase(-p)
        den_x[w.word], den_y[w.word] = dx, dy
    total = 0j
    for w in group:
        for v in group:
            mid = 1 + 0j
            for i in range(rs.rank):
                mid *= 1 - chareval.unit_phase(fund_x[w.word][i] + fund_y[v.word][i])
            total += 1 / (den_x[w.word] * mid * den_y[v.word])
    return total


def fundamental_formula_suite(rs: RootSystem, samples: int, seed: int,
                              tolerance: float = 1e-8) -> IdentityReport:
    rng = random.Random(seed)
    worst = 0.0
    done = 0
    while done < samples:
        x = random_rational_point(rs, rng)
        y = random_rational_point(rs, rng)
        try:
            worst = max(worst, abs(fundamental_formula_residual(rs, x, y)))
        except PoleError:
            continue
        done += 1
    return IdentityReport("fundamental_formula", f"{rs.series}{rs.rank}", samples,
                          worst, tolerance, worst < tolerance)


# -- the alternating subset sum ------------------------------------------------

def subset_identity_residual(rs: RootSystem, x: TorusPoint,
                             include_empty: bool = True,
                             generators: list[Weight] | None = None) -> complex:
    """Alternating sum over subsets of the simple roots and over W.

    With the empty subset included (the oracle-selected convention) the value
    is exactly 1 for every simple type; without it the A1 value is -1, off by
    exactly 2.  Passing the fundamental weights as generators instead yields
    the product of the exponents of W.
    """
    if generators is None:
        generators = [rs.simple_root(i) for i in range(rs.rank)]
    group = weyl.enumerate_weyl(rs)
    m = len(generators)
    total = 0j
    for w in group:
        pairings = [chareval.pairing(rs, weyl.act(w, g), x) for g in generators]
        if any(p.denominator == 1 for p in pairings):
            raise PoleError("subset factor vanishes")
        vals = [chareval.unit_phase(p) for p in pairings]
        for size in range(0 if include_empty else 1, m + 1):
            for subset in combinations(range(m), size):
                term = complex((-1) ** size)
                for i in subset:
                    term /= 1 - vals[i]
                total += term
    return total


def subset_identity_suite(rs: RootSystem, samples: int, seed: int,
                          tolerance: float = 1e-8) -> IdentityReport:
    rng = random.Random(seed)
    worst = 0.0
    done = 0
    include = conventions.FROZEN.include_empty_subset
    while done < samples:
        x = random_rational_point(rs, rng)
        try:
            worst = max(worst, abs(subset_identity_residual(rs, x, include) - 1))
        except PoleError:
            continue
        done += 1
    return IdentityReport("subset_identity", f"{rs.series}{rs.rank}", samples,
                          worst, tolerance, worst < tolerance)


# -- orthogonality on the evaluation grid ---------------------------------------

def orthogonality_matrix(rs: RootSystem, k: int, grid_mode: str | None = None,
                         orbit_correction: bool = False):
    """Gram matrix of the level-k characters over the chosen grid.

    Entry (a, b) is the grid sum of chi_b * conj(chi_a) * |D|^2 times the
    shared prefactor 1/|M*/(k+h^v)M|; exactly one grid mode (the frozen
    shifted one) then produces the identity matrix, and the full grid
    overshoots by |W| unless orbit_correction is set.  Returns
    (weights, matrix).
    """
    lams = weights_at_level(rs, k)
    measure = conventions.grid_measure(rs, k, grid_mode, orbit_correction)
    columns = []
    for _, point, wgt in measure:
        if wgt == 0.0:
            columns.append([0j] * len(lams))
        else:
            columns.append([chareval.character(rs, lam, point) for lam in lams])
    n = len(lams)
    matrix = [[0j] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            s = 0j
            for col, (_, _, wgt) in zip(columns, measure):
                if wgt:
                    s += col[b] * col[a].conjugate() * wgt
            matrix[a][b] = s
    return lams, matrix


def orthogonality_suite(rs: RootSystem, k: int, grid_mode: str | None = None,
                        tolerance: float = 1e-7) -> IdentityReport:
    lams, matrix = orthogonality_matrix(rs, k, grid_mode)
    worst = max(abs(matrix[a][b] - (1.0 if a == b else 0.0))
                for a in range(len(lams)) for b in range(len(lams)))
    return IdentityReport("orthogonality", f"{rs.series}{rs.rank}", len(lams) ** 2,
                          worst, tolerance, worst < tolerance,
                          {"k": k, "grid_mode": grid_mode or conventions.FROZEN.grid_mode})
