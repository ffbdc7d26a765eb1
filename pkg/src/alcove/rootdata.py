"""Static data of a simple root system, normalized so (theta|theta) = 2.

All arithmetic is exact rational: weights live in fundamental-weight
coordinates, coroots in simple-coroot coordinates, and every derived quantity
(Gram matrices, marks, lattices) is computed from the Cartan matrix alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import intlinalg
from .intlinalg import Mat

SERIES_RANKS = {
    "A": lambda l: l >= 1,
    "B": lambda l: l >= 2,
    "C": lambda l: l >= 2,
    "D": lambda l: l >= 4,
    "E": lambda l: l in (6, 7, 8),
    "F": lambda l: l == 4,
    "G": lambda l: l == 2,
}


class ConfigurationError(ValueError):
    """Invalid (series, rank) or other bad build input."""


@dataclass(frozen=True)
class Weight:
    """Exact-rational vector in fundamental-weight coordinates.

    root_coords is the same vector expanded in simple roots; both are kept in
    sync because dominance tests want one basis and pairings want the other.
    """

    coords: tuple[Fraction, ...]
    root_coords: tuple[Fraction, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)),
                      tuple(a + b for a, b in zip(self.root_coords, other.root_coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)),
                      tuple(a - b for a, b in zip(self.root_coords, other.root_coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), tuple(-a for a in self.root_coords))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.coords), tuple(c * a for a in self.root_coords))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    @property
    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coords)


@dataclass(frozen=True)
class TorusPoint:
    """Point of the maximal torus, recorded through the bilinear form.

    mu_star is the image in weight space of the Lie-algebra representative, so
    a weight lam pairs with the point as (lam|mu_star); exponentials of
    integral weights at the point are roots of unity.
    """

    mu_star: Weight

    @property
    def is_zero(self) -> bool:
        return self.mu_star.is_zero


def _cartan_matrix(series: str, rank: int) -> list[list[int]]:
    c = [[2 * (i == j) for j in range(rank)] for i in range(rank)]

    def chain(upto):
        for i in range(upto):
            c[i][i + 1] = -1
            c[i + 1][i] = -1

    if series in ("A", "B", "C", "D", "E"):
        chain(rank - 1)
    if series == "B":        # last simple root short
        c[rank - 2][rank - 1] = -1
        c[rank - 1][rank - 2] = -2
    elif series == "C":      # last simple root long
        c[rank - 2][rank - 1] = -2
        c[rank - 1][rank - 2] = -1
    elif series == "D":
        c[rank - 2][rank - 1] = 0
        c[rank - 1][rank - 2] = 0
        c[rank - 3][rank - 1] = -1
        c[rank - 1][rank - 3] = -1
    elif series == "E":
        c[rank - 2][rank - 1] = 0
        c[rank - 1][rank - 2] = 0
        c[rank - 4][rank - 1] = -1
        c[rank - 1][rank - 4] = -1
    elif series == "F":
        c = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    elif series == "G":
        c = [[2, -3], [-1, 2]]
    return c


def _symmetrizers(cartan: list[list[int]]) -> list[Fraction]:
    """Solve d_i c_ij = d_j c_ji over the (connected) Dynkin graph."""
    rank = len(cartan)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise ConfigurationError("Dynkin diagram is not connected")
    return d  # type: ignore[return-value]


def _positive_root_closure(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """All positive roots in simple-root coordinates, by reflection closure."""
    rank = len(cartan)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(rank):
            pairing = sum(cartan[i][j] * beta[j] for j in range(rank))
            image = list(beta)
            image[i] -= pairing
            image_t = tuple(image)
            if all(x >= 0 for x in image_t) and image_t not in roots:
                roots.add(image_t)
                frontier.append(image_t)
    return sorted(roots, key=lambda r: (sum(r), r))


class RootSystem:
    """Immutable bundle of root-system data; build via build_root_system."""

    def __init__(self, series: str, rank: int):
        if series not in SERIES_RANKS or not SERIES_RANKS[series](rank):
            raise ConfigurationError(f"invalid simple type {series}{rank}")
        self.series = series
        self.rank = rank
        self.cartan = _cartan_matrix(series, rank)
        self.inv_cartan: Mat = intlinalg.mat_inverse(intlinalg.frac_matrix(self.cartan))

        d = _symmetrizers(self.cartan)
        pos = _positive_root_closure(self.cartan)
        # highest root = the unique root dominating all others coordinatewise
        theta_rc = max(pos, key=sum)
        if any(any(b > t for b, t in zip(beta, theta_rc)) for beta in pos):
            raise AssertionError("highest root is not unique in the root order")
        # rescale the form so that (theta|theta) = 2 exactly
        theta_norm = sum(d[i] * self.cartan[i][j] * theta_rc[i] * theta_rc[j]
                         for i in range(rank) for j in range(rank))
        scale = Fraction(2) / theta_norm
        self.symmetrizers = tuple(x * scale for x in d)

        # (Lambda_i | Lambda_j) = d_i * inv_cartan[i][j]
        self.gram_weights: Mat = [[self.symmetrizers[i] * self.inv_cartan[i][j]
                                   for j in range(rank)] for i in range(rank)]
        # (alpha_i^v | alpha_j^v) = cartan[i][j] / d_j
        self.gram_coroots: Mat = [[Fraction(self.cartan[i][j]) / self.symmetrizers[j]
                                   for j in range(rank)] for i in range(rank)]

        self.positive_roots = tuple(self.weight_from_root_coords(rc) for rc in pos)
        self.highest_root = self.weight_from_root_coords(theta_rc)
        self.marks = tuple(int(x) for x in theta_rc)
        comarks = [Fraction(a) * di for a, di in zip(theta_rc, self.symmetrizers)]
        if not intlinalg.is_integral(comarks):
            raise AssertionError("comarks must be integers")
        self.comarks = tuple(int(x) for x in comarks)
        self.highest_coroot = self.comarks
        self.dual_coxeter = 1 + sum(self.comarks)
        self.rho = self.weight_from_coords([1] * rank)

        self.lattice_M_basis = self._long_coweight_lattice()
        self.lattice_Mstar_basis = self._dual_lattice(self.lattice_M_basis)

    # -- coordinates ---------------------------------------------------------

    def weight_from_coords(self, coords) -> Weight:
        coords = tuple(Fraction(x) for x in coords)
        rc = intlinalg.mat_vec(self.inv_cartan, coords)
        return Weight(coords, rc)

    def weight_from_root_coords(self, rc) -> Weight:
        rc = tuple(Fraction(x) for x in rc)
        coords = tuple(sum(Fraction(self.cartan[k][j]) * rc[j] for j in range(self.rank))
                       for k in range(self.rank))
        return Weight(coords, rc)

    def zero_weight(self) -> Weight:
        return self.weight_from_coords([0] * self.rank)

    def simple_root(self, i: int) -> Weight:
        return self.weight_from_root_coords([int(i == j) for j in range(self.rank)])

    def fundamental_weight(self, i: int) -> Weight:
        return self.weight_from_coords([int(i == j) for j in range(self.rank)])

    def coroot_to_weight_space(self, coroot_coords) -> Weight:
        """Image under the bilinear-form identification: alpha_j^v -> alpha_j / d_j."""
        rc = tuple(Fraction(v) / self.symmetrizers[j] for j, v in enumerate(coroot_coords))
        return self.weight_from_root_coords(rc)

    def coroot_of(self, root: Weight) -> tuple[Fraction, ...]:
        """Coordinates of root^v = 2 root/(root|root) in the simple-coroot basis."""
        norm = inner(self, root, root)
        return tuple(root.root_coords[j] * self.symmetrizers[j] * 2 / norm
                     for j in range(self.rank))

    def pairing_with_coroot_vector(self, lam: Weight, coroot_coords) -> Fraction:
        """<lam, t> for t given in simple-coroot coordinates."""
        return sum(c * Fraction(t) for c, t in zip(lam.coords, coroot_coords))

    # -- lattices ------------------------------------------------------------

    def _long_coweight_lattice(self) -> tuple[tuple[int, ...], ...]:
        """Basis (rows, coroot coordinates) of the span of the Weyl orbit of theta^v."""
        orbit = {self.comarks}
        frontier = [self.comarks]
        while frontier:
            v = frontier.pop()
            for i in range(self.rank):
                w = list(v)
                # s_i on coroot coordinates: only the i-th entry moves
                w[i] -= sum(self.cartan[j][i] * v[j] for j in range(self.rank))
                w_t = tuple(w)
                if w_t not in orbit:
                    orbit.add(w_t)
                    frontier.append(w_t)
        basis = intlinalg.hermite_normal_form([list(v) for v in sorted(orbit)])
        if len(basis) != self.rank:
            raise AssertionError("orbit of theta^v does not span")
        return tuple(tuple(row) for row in basis)

    def _dual_lattice(self, basis_rows) -> tuple[tuple[Fraction, ...], ...]:
        """{t : (t|n) in Z for all n in the given lattice}, rows in coroot coords."""
        e = [[sum(Fraction(basis_rows[r][k]) * self.gram_coroots[k][j]
                  for k in range(self.rank)) for j in range(self.rank)]
             for r in range(self.rank)]
        inv = intlinalg.mat_inverse(e)
        return tuple(tuple(inv[i][j] for i in range(self.rank)) for j in range(self.rank))

    def gram_of_M(self) -> list[list[int]]:
        b = self.lattice_M_basis
        g = [[sum(Fraction(b[r][i]) * self.gram_coroots[i][j] * b[s][j]
                  for i in range(self.rank) for j in range(self.rank))
              for s in range(self.rank)] for r in range(self.rank)]
        assert all(x.denominator == 1 for row in g for x in row)
        return [[int(x) for x in row] for row in g]

    def in_lattice_M(self, coroot_coords) -> bool:
        coords = intlinalg.solve(
            [[Fraction(self.lattice_M_basis[r][j]) for r in range(self.rank)]
             for j in range(self.rank)],
            [Fraction(x) for x in coroot_coords])
        return intlinalg.is_integral(coords)

    def in_lattice_Mstar(self, coroot_coords) -> bool:
        for row in self.lattice_M_basis:
            p = sum(Fraction(coroot_coords[i]) * self.gram_coroots[i][j] * row[j]
                    for i in range(self.rank) for j in range(self.rank))
            if p.denominator != 1:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "cartan": self.cartan,
            "symmetrizers": [str(d) for d in self.symmetrizers],
            "positive_roots": [[str(x) for x in r.root_coords] for r in self.positive_roots],
            "highest_root": [str(x) for x in self.highest_root.root_coords],
            "marks": list(self.marks),
            "comarks": list(self.comarks),
            "dual_coxeter": self.dual_coxeter,
            "weyl_order": None,  # filled by the CLI when the group is enumerated
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.series}{self.rank})"

    def __hash__(self) -> int:
        return hash((self.series, self.rank))

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and (self.series, self.rank) == (other.series, other.rank)


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct (and memoize) the root system of the given simple type."""
    return RootSystem(series, rank)


def from_name(name: str) -> RootSystem:
    """Parse names like 'A2' or 'G2'."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise ConfigurationError(f"cannot parse root system name {name!r}")
    return build_root_system(name[0].upper(), int(name[1:]))


def inner(rs: RootSystem, a: Weight, b: Weight) -> Fraction:
    """Invariant bilinear form (a|b) via the fundamental-weight Gram matrix."""
    return sum(a.coords[i] * rs.gram_weights[i][j] * b.coords[j]
               for i in range(rs.rank) for j in range(rs.rank))


def lattice_index(rs: RootSystem, k: int) -> int:
    """Order of M*/(k+h^v)M, via Smith normal form.

    The change-of-basis matrix of (k+h^v) * (M basis) in the M* basis is
    exactly (k+h^v) * Gram(M basis), which is integral because M is contained
    in M*.
    """
    if k < 0:
        raise ConfigurationError("level must be nonnegative")
    n = k + rs.dual_coxeter
    x = [[n * v for v in row] for row in rs.gram_of_M()]
    divisors = intlinalg.elementary_divisors(x)
    out = 1
    for d in divisors:
        out *= d
    return out


def weights_at_level(rs: RootSystem, k: int) -> list[Weight]:
    """Dominant integral weights with (lam|theta) <= k, lexicographic order.

    (Lambda_i|theta) equals the i-th comark, so the constraint is an integer
    knapsack bound on the coordinates.
    """
    if k < 0:
        raise ConfigurationError("level must be nonnegative")
    out: list[list[int]] = []

    def rec(prefix: list[int], budget: int):
        if len(prefix) == rs.rank:
            out.append(prefix[:])
            return
        a = rs.comarks[len(prefix)]
        for c in range(budget // a + 1):
            rec(prefix + [c], budget - c * a)

    rec([], k)
    return [rs.weight_from_coords(c) for c in sorted(out)]


def longest_element(rs: RootSystem):
    """The unique Weyl element sending every positive root to a negative one."""
    from . import weyl
    return weyl.longest_element(rs)
