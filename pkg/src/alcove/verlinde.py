"""Level-k dominant weights, multiplicity extraction and fusion coefficients.

Multiplicities are recovered by summing character data against the frozen
grid measure (the inversion dual to the orthogonality relation); fusion
coefficients are that inversion applied to pointwise products of characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import chareval, conventions, weyl
from .rootdata import RootSystem, Weight, weights_at_level

ROUNDING_ERROR_THRESHOLD = 1e-4
INTEGRALITY_TOLERANCE = 1e-6
DEFAULT_TABLE_CAP = 500_000


class InconsistentInputError(ValueError):
    """Grid values are not a character combination at this level."""


class ResourceError(RuntimeError):
    pass


@dataclass(frozen=True)
class LevelWeightSet:
    k: int
    weights: tuple[Weight, ...]

    def index_of(self, lam: Weight) -> int:
        return self.weights.index(lam)


@dataclass
class ExtractionResult:
    multiplicities: dict[Weight, int]
    max_residual: float


@dataclass
class FusionTable:
    k: int
    weights: tuple[Weight, ...]
    entries: dict[tuple[Weight, Weight, Weight], int]
    max_residual: float

    def coefficient(self, a: Weight, b: Weight, c: Weight) -> int:
        return self.entries.get((a, b, c), 0)


def dominant_weights(rs: RootSystem, k: int) -> LevelWeightSet:
    """P_+ cap kC in the canonical lexicographic order."""
    return LevelWeightSet(k, tuple(weights_at_level(rs, k)))


def contragredient(rs: RootSystem, a: Weight) -> Weight:
    """w_L(-a): the highest weight of the dual module."""
    if not a.is_dominant:
        raise ValueError("contragredient expects a dominant weight")
    return weyl.act(weyl.longest_element(rs), -a)


@lru_cache(maxsize=64)
def _measure_and_columns(rs: RootSystem, k: int, grid_mode: str | None):
    """Grid measure plus character columns, cached; treat results as read-only."""
    measure = conventions.grid_measure(rs, k, grid_mode)
    lams = weights_at_level(rs, k)
    columns: dict[Weight, list[complex]] = {lam: [] for lam in lams}
    for _, point, wgt in measure:
        for lam in lams:
            columns[lam].append(chareval.character(rs, lam, point) if wgt else 0j)
    return measure, tuple(lams), columns


def synthesize(rs: RootSystem, k: int, multiplicities: dict[Weight, int],
               grid_mode: str | None = None) -> dict:
    """Grid values of sum m_a chi_a, keyed by grid label (for round-trips)."""
    measure, lams, columns = _measure_and_columns(rs, k, grid_mode)
    out = {}
    for idx, (label, point, _) in enumerate(measure):
        out[label] = sum(multiplicities.get(lam, 0) * columns[lam][idx] for lam in lams)
    return out


def extract_multiplicities(rs: RootSystem, k: int, values: dict,
                           grid_mode: str | None = None) -> ExtractionResult:
    """Invert grid values of a level-k character combination.

    values maps every grid label (of the chosen mode) to the sampled value;
    each multiplicity comes out as a weighted sum against conj(chi_a), is
    rounded to the nearest integer, and the worst distance to an integer is
    reported.  A residual above 1e-4 signals that the input was not a level-k
    character combination.
    """
    measure, lams, columns = _measure_and_columns(rs, k, grid_mode)
    result: dict[Weight, int] = {}
    worst = 0.0
    for lam in lams:
        s = 0j
        for idx, (label, _, wgt) in enumerate(measure):
            if wgt:
                s += values[label] * columns[lam][idx].conjugate() * wgt
        nearest = round(s.real)
        worst = max(worst, abs(s - nearest))
        result[lam] = int(nearest)
    if worst > ROUNDING_ERROR_THRESHOLD:
        raise InconsistentInputError(
            f"rounding residual {worst:.3e} exceeds {ROUNDING_ERROR_THRESHOLD}")
    return ExtractionResult(result, worst)


def fusion_coefficients(rs: RootSystem, k: int, a: Weight, b: Weight,
                        grid_mode: str | None = None) -> dict[Weight, int]:
    """Fusion row N_{ab}^* via inversion of the pointwise product chi_a chi_b."""
    lws = dominant_weights(rs, k)
    if a not in lws.weights or b not in lws.weights:
        raise ValueError("fusion labels must be level-k dominant weights")
    measure, _, columns = _measure_and_columns(rs, k, grid_mode)
    values = {label: columns[a][idx] * columns[b][idx]
              for idx, (label, _, _) in enumerate(measure)}
    extraction = extract_multiplicities(rs, k, values, grid_mode)
    for c, n in extraction.multiplicities.items():
        if n < 0:
            raise InconsistentInputError(f"negative fusion coefficient at {c}")
    return extraction.multiplicities


def fusion_table(rs: RootSystem, k: int, grid_mode: str | None = None,
                 cap: int = DEFAULT_TABLE_CAP) -> FusionTable:
    """Complete fusion table, with unit and symmetry invariants verified."""
    lws = dominant_weights(rs, k)
    n = len(lws.weights)
    if n ** 3 > cap:
        raise ResourceError(f"table size {n ** 3} exceeds cap {cap}")
    measure, lams, columns = _measure_and_columns(rs, k, grid_mode)
    weights_per_point = [wgt for _, _, wgt in measure]
    conj_columns = {lam: [v.conjugate() for v in columns[lam]] for lam in lams}

    entries: dict[tuple[Weight, Weight, Weight], int] = {}
    worst = 0.0
    for i, a in enumerate(lws.weights):
        for b in lws.weights[i:]:
            prod = [columns[a][t] * columns[b][t] for t in range(len(measure))]
            for c in lws.weights:
                s = 0j
                for t, wgt in enumerate(weights_per_point):
                    if wgt:
                        s += prod[t] * conj_columns[c][t] * wgt
                nearest = round(s.real)
                worst = max(worst, abs(s - nearest))
                if nearest < 0:
                    raise InconsistentInputError("negative fusion coefficient")
                if nearest:
                    entries[(a, b, c)] = int(nearest)
                    entries[(b, a, c)] = int(nearest)
    if worst > ROUNDING_ERROR_THRESHOLD:
        raise InconsistentInputError(
            f"rounding residual {worst:.3e} exceeds {ROUNDING_ERROR_THRESHOLD}")
    zero = rs.zero_weight()
    for b in lws.weights:
        for c in lws.weights:
            expected = 1 if b == c else 0
            if (entries.get((zero, b, c), 0)) != expected:
                raise AssertionError("unit law failed in fusion table")
    return FusionTable(k, lws.weights, entries, worst)
