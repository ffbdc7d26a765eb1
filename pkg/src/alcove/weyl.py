"""Finite and affine Weyl group machinery.

Elements act on fundamental-weight coordinates by integer matrices; affine
elements are (finite part, translation) pairs with the translation stored in
simple-coroot coordinates.  The level enters only when an element acts on a
torus point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import intlinalg
from .rootdata import RootSystem, TorusPoint, Weight, inner

DEFAULT_GROUP_CAP = 10**6

IntMat = tuple[tuple[int, ...], ...]


class ResourceError(RuntimeError):
    """Enumeration would exceed the configured cap."""


class MismatchError(ValueError):
    """An affine element does not factor through the requested finite part."""


@dataclass(frozen=True)
class WeylElement:
    """Finite Weyl group element.

    action, action_root and action_coroot are the integer matrices on
    fundamental-weight, simple-root and simple-coroot coordinates; sign is the
    determinant; word is a reduced word in simple reflections.
    """

    action: IntMat
    action_root: IntMat
    action_coroot: IntMat
    sign: int
    word: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(_mat_mul_int(self.action, other.action),
                           _mat_mul_int(self.action_root, other.action_root),
                           _mat_mul_int(self.action_coroot, other.action_coroot),
                           self.sign * other.sign,
                           self.word + other.word)

    @property
    def is_identity(self) -> bool:
        return self.action == _identity_mat(len(self.action))


@dataclass(frozen=True)
class AffineWeylElement:
    """Pair (finite part, translation), composing as a semidirect product."""

    finite: WeylElement
    translation: tuple[int, ...]

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        moved = act_on_coroot_coords(self.finite, other.translation)
        trans = tuple(a + b for a, b in zip(self.translation, moved))
        return AffineWeylElement(self.finite * other.finite, trans)

    @property
    def is_identity(self) -> bool:
        return self.finite.is_identity and all(t == 0 for t in self.translation)


@dataclass(frozen=True)
class AlcovePoint:
    """A torus point with its alcove-membership certificate.

    The certificate lists <alpha_i^v, x> for each simple root and then
    k - (theta|x); membership in the closed alcove means all entries >= 0.
    """

    point: TorusPoint
    level: int
    chamber_certificate: tuple[Fraction, ...]


def _mat_mul_int(a: IntMat, b: IntMat) -> IntMat:
    n = len(a)
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n))
                 for i in range(n))


def _identity_mat(n: int) -> IntMat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def identity_element(rs: RootSystem) -> WeylElement:
    n = rs.rank
    return WeylElement(_identity_mat(n), _identity_mat(n), _identity_mat(n), 1, ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    return _reflection_matrices(rs, rs.simple_root(i), word=(i,))


def reflection_in_root(rs: RootSystem, root: Weight) -> WeylElement:
    """Reflection in an arbitrary root, with a reduced word found by descent."""
    w = _reflection_matrices(rs, root, word=None)
    return WeylElement(w.action, w.action_root, w.action_coroot,
                       w.sign, _descent_word(rs, w))


def _reflection_matrices(rs: RootSystem, root: Weight, word) -> WeylElement:
    """x -> x - <x, root^v> root on each coordinate system."""
    n = rs.rank
    covec = rs.coroot_of(root)                      # coroot coordinates of root^v
    pair_from_rc = tuple(sum(rs.cartan[k][m] * covec[k] for k in range(n))
                         for m in range(n))         # <alpha_m, root^v> per root basis slot
    action = tuple(tuple(int(Fraction(k == j) - root.coords[k] * covec[j])
                         for j in range(n)) for k in range(n))
    action_root = tuple(tuple(int(Fraction(k == j) - root.root_coords[k] * pair_from_rc[j])
                              for j in range(n)) for k in range(n))
    action_coroot = tuple(tuple(int(Fraction(k == j) - covec[k] * root.coords[j])
                                for j in range(n)) for k in range(n))
    return WeylElement(action, action_root, action_coroot, -1, word if word is not None else ())


def _descent_word(rs: RootSystem, w: WeylElement) -> tuple[int, ...]:
    """Greedy descent: repeatedly strip a simple reflection that shortens w."""
    v = w
    applied: list[int] = []
    while not v.is_identity:
        i = next(i for i in range(rs.rank)
                 if all(x <= 0 for x in act(v, rs.simple_root(i)).root_coords))
        applied.append(i)
        v = v * simple_reflection(rs, i)
    return tuple(reversed(applied))


def act(w: WeylElement, a: Weight) -> Weight:
    n = len(w.action)
    coords = tuple(sum(Fraction(w.action[i][j]) * a.coords[j] for j in range(n))
                   for i in range(n))
    rc = tuple(sum(Fraction(w.action_root[i][j]) * a.root_coords[j] for j in range(n))
               for i in range(n))
    return Weight(coords, rc)


def act_on_coroot_coords(w: WeylElement, v) -> tuple:
    n = len(w.action_coroot)
    return tuple(sum(w.action_coroot[i][j] * v[j] for j in range(n)) for i in range(n))


def inverse(rs: RootSystem, w: WeylElement) -> WeylElement:
    def inv(m: IntMat) -> IntMat:
        rows = intlinalg.mat_inverse(intlinalg.frac_matrix(m))
        return tuple(tuple(int(x) for x in row) for row in rows)

    return WeylElement(inv(w.action), inv(w.action_root), inv(w.action_coroot),
                       w.sign, tuple(reversed(w.word)))


def order_formula(rs: RootSystem) -> int:
    """Classical group order: product of (degree) factors per series."""
    from math import factorial
    l = rs.rank
    if rs.series == "A":
        return factorial(l + 1)
    if rs.series in ("B", "C"):
        return 2 ** l * factorial(l)
    if rs.series == "D":
        return 2 ** (l - 1) * factorial(l)
    return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840,
            ("E", 7): 2903040, ("E", 8): 696729600}[(rs.series, l)]


@lru_cache(maxsize=None)
def _enumerate_cached(rs: RootSystem, cap: int) -> tuple[WeylElement, ...]:
    if order_formula(rs) > cap:
        raise ResourceError(f"Weyl group of order {order_formula(rs)} exceeds cap {cap}")
    gens = [simple_reflection(rs, i) for i in range(rs.rank)]
    ident = identity_element(rs)
    seen: dict[IntMat, WeylElement] = {ident.action: ident}
    frontier = [ident]
    while frontier:
        nxt: list[WeylElement] = []
        for w in frontier:
            for s in gens:
                u = s * w  # BFS: words come out geodesic, hence reduced
                if u.action not in seen:
                    if len(seen) + 1 > cap:
                        raise ResourceError(f"Weyl group larger than cap {cap}")
                    seen[u.action] = u
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda w: (len(w.word), w.word)))


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> tuple[WeylElement, ...]:
    """All Weyl group elements, sorted by word length then word."""
    return _enumerate_cached(rs, cap)


def weyl_order(rs: RootSystem) -> int:
    return len(enumerate_weyl(rs))


def longest_element(rs: RootSystem) -> WeylElement:
    """Walk -rho back to the dominant chamber; reversing the walk gives w_L."""
    v = -rs.rho
    applied: list[int] = []
    while True:
        i = next((i for i in range(rs.rank) if v.coords[i] < 0), None)
        if i is None:
            break
        applied.append(i)
        v = act(simple_reflection(rs, i), v)
    w = identity_element(rs)
    for i in applied:
        w = w * simple_reflection(rs, i)
    assert all(not act(w, beta).is_dominant for beta in rs.positive_roots)
    return w


# -- affine action -----------------------------------------------------------

def identity_affine(rs: RootSystem) -> AffineWeylElement:
    return AffineWeylElement(identity_element(rs), (0,) * rs.rank)


def affine_from_finite(w: WeylElement, rank: int) -> AffineWeylElement:
    return AffineWeylElement(w, (0,) * rank)


def affine_reflection_theta(rs: RootSystem) -> AffineWeylElement:
    """Reflection through (theta|x) = k: s_theta followed by translation by theta^v."""
    return AffineWeylElement(reflection_in_root(rs, rs.highest_root), rs.comarks)


def affine_act(rs: RootSystem, g: AffineWeylElement, x: TorusPoint, k: int) -> TorusPoint:
    """Level-k action: finite part first, then translate by k * nu(translation)."""
    if k < 1:
        raise ValueError("affine action needs a positive level")
    moved = act(g.finite, x.mu_star)
    shift = rs.coroot_to_weight_space(g.translation).scale(k)
    return TorusPoint(moved + shift)


def alcove_certificate(rs: RootSystem, k: int, x: TorusPoint) -> tuple[Fraction, ...]:
    pairings = [x.mu_star.coords[i] for i in range(rs.rank)]  # <alpha_i^v, x>
    pairings.append(Fraction(k) - inner(rs, rs.highest_root, x.mu_star))
    return tuple(pairings)


def in_closed_alcove(rs: RootSystem, k: int, x: TorusPoint) -> bool:
    return all(p >= 0 for p in alcove_certificate(rs, k, x))


def find_alcove(rs: RootSystem, k: int, x: TorusPoint) -> tuple[AffineWeylElement, AlcovePoint]:
    """Reflect x through violated walls until it lands in the closed alcove kC.

    Returns the group element g that was applied, so affine_act(rs, g, x, k)
    is the certified representative.
    """
    g = identity_affine(rs)
    current = x
    r_theta = affine_reflection_theta(rs)
    simples = [affine_from_finite(simple_reflection(rs, i), rs.rank) for i in range(rs.rank)]
    while True:
        cert = alcove_certificate(rs, k, current)
        bad = next((i for i, p in enumerate(cert) if p < 0), None)
        if bad is None:
            return g, AlcovePoint(current, k, cert)
        step = simples[bad] if bad < rs.rank else r_theta
        g = step * g
        current = affine_act(rs, step, current, k)


def factor_affine(rs: RootSystem, w_aff: AffineWeylElement, w_fin: WeylElement) -> tuple[int, ...]:
    """Translation v with w_aff = (translate by v) o w_fin, v in the orbit lattice of theta^v.

    Raises MismatchError when the pair does not correspond (different finite
    parts, or a translation escaping that lattice).
    """
    if w_aff.finite.action != w_fin.action:
        raise MismatchError("finite parts differ; the pair is not corresponding")
    if not rs.in_lattice_M(w_aff.translation):
        raise MismatchError("translation is not in the long-coweight lattice")
    return w_aff.translation
