"""The level-k transformation rule bridging affine and finite Weyl elements.

For a wall face with stabilizer pair (w_fin, w_aff = translate(v) o w_fin)
and a level-k weight lam, the two function-level sides

    w_fin(e^lam / D)   and   e^{-(k+h^v) nu(v)} (D_sub/D) w_aff(e^lam / D_sub)

agree everywhere, and on the lattice nu(M*)/(k+h^v) the exponential prefactor
is exactly 1, so the sides agree with it dropped.  D_sub is the Weyl
denominator of the face's sub-root-system; the affine action on the level-k
exponential contributes e^{w_fin lam + k nu(v)}.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import chareval, stabilizers, weyl
from .identities import PoleError
from .rootdata import RootSystem, TorusPoint, Weight, inner
from .stabilizers import FaceData
from .weyl import AffineWeylElement, WeylElement


@dataclass(frozen=True)
class ShiftWitness:
    """A factored stabilizer pair with its level-k context."""

    face: FaceData
    w_aff: AffineWeylElement
    w_fin: WeylElement
    v: tuple[int, ...]          # translation, simple-coroot coordinates
    k: int
    lam: Weight


def make_witness(rs: RootSystem, face: FaceData, w_aff: AffineWeylElement,
                 w_fin: WeylElement, k: int, lam: Weight) -> ShiftWitness:
    v = weyl.factor_affine(rs, w_aff, w_fin)
    return ShiftWitness(face, w_aff, w_fin, v, k, lam)


def wall_witnesses(rs: RootSystem, face: FaceData, k: int, lam: Weight) -> list[ShiftWitness]:
    """One witness per stabilizer element of a face meeting the affine wall."""
    if not face.on_affine_wall:
        raise ValueError("witnesses are built on faces meeting the affine wall")
    out = []
    for fin, aff in stabilizers.stabilizer_subgroup(rs, face):
        out.append(make_witness(rs, face, aff, fin, k, lam))
    return out


def lattice_exponential_is_one(rs: RootSystem, witness: ShiftWitness, x: TorusPoint) -> bool:
    """Exact check that (k+h^v) <nu(v), x> is an integer angle."""
    n = witness.k + rs.dual_coxeter
    angle = n * inner(rs, rs.coroot_to_weight_space(witness.v), x.mu_star)
    return angle.denominator == 1


def _side_values(rs: RootSystem, witness: ShiftWitness, x: TorusPoint) -> tuple[complex, complex]:
    if not chareval.is_regular(rs, x):
        raise PoleError("denominator factor vanishes at the sample point")
    w, k, lam = witness.w_fin, witness.k, witness.lam

    lhs = chareval.eval_exp(rs, weyl.act(w, lam), x)
    for alpha in rs.positive_roots:
        lhs /= 1 - chareval.eval_exp(rs, -weyl.act(w, alpha), x)

    sub_roots = stabilizers.sub_positive_roots(rs, witness.face)
    d_sub = 1 + 0j
    moved_den = 1 + 0j
    for beta in sub_roots:
        d_sub *= 1 - chareval.eval_exp(rs, -beta, x)
        moved_den *= 1 - chareval.eval_exp(rs, -weyl.act(w, beta), x)
    d_full = chareval.weyl_denominator(rs, x)
    moved_exp = weyl.act(w, lam) + rs.coroot_to_weight_space(witness.v).scale(k)
    rhs = (d_sub / d_full) * chareval.eval_exp(rs, moved_exp, x) / moved_den
    return lhs, rhs


def shift_rule_residual(rs: RootSystem, witness: ShiftWitness, x: TorusPoint,
                        lattice_form: bool = True) -> complex:
    """Difference of the two sides of the transformation rule at x.

    lattice_form=True drops the exponential prefactor (valid on the lattice
    nu(M*)/(k+h^v)); lattice_form=False keeps it, and the residual then
    vanishes at every pole-free point.
    """
    lhs, rhs = _side_values(rs, witness, x)
    if not lattice_form:
        n = witness.k + rs.dual_coxeter
        angle = -n * inner(rs, rs.coroot_to_weight_space(witness.v), x.mu_star)
        rhs *= chareval.unit_phase(angle)
    return lhs - rhs


def regular_lattice_points(rs: RootSystem, k: int) -> list[TorusPoint]:
    """Regular points of the full evaluation grid at level k."""
    return [p for _, p in chareval.full_grid(rs, k) if chareval.is_regular(rs, p)]
