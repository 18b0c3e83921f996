"""Homological algebra over the group ring F_N[Z/N].

The trivial module has the 2-periodic free resolution

    ... -> F_N[G] --norm--> F_N[G] --(g-1)--> F_N[G] --aug--> F_N -> 0

with norm = 1 + g + ... + g^(N-1); applying module homs into the
trivial module kills every differential, so Ext^i is one-dimensional in
every degree i >= 0.  The same machinery computes the F_N cohomology of
the quotient of an odd sphere by a free weighted rotation action: the
equivariant cell complex has one free module in each degree 0..2d-1
(d = number of weights), odd differentials multiply by (g^w - 1) with
the weight of the corresponding complex coordinate and even ones by the
norm.  Its hom-complex into the trivial module has one-dimensional
cohomology in every degree up to the top; the point with trivial action
yields the same dimensions in every degree without bound, and the
mechanized dichotomy between the two behaviours is the contradiction
engine of the certificate.

All computations run through exact Gaussian elimination mod N; the
module-hom spaces are realized concretely as invariant functionals of
the regular representation, and the induced cochain maps are obtained
by restricting transposed differentials to those subspaces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidInput, NonFreeAction
from .fp import FpMatrix, cochain_cohomology_dims, restricted_map
from .primes import is_prime


@dataclass
class GradedFpVector:
    """Graded dimensions of an F_N vector space, with a boundedness flag.

    top is the largest degree carrying a nonzero dimension, or None when
    the pattern continues without bound beyond the computed window.
    """

    dims: dict[int, int] = field(default_factory=dict)
    top: int | None = None

    def __post_init__(self):
        if self.top is not None:
            for deg, dim in self.dims.items():
                if dim and deg > self.top:
                    raise ValueError("nonzero dimension above the declared top")

    @property
    def bounded(self) -> bool:
        return self.top is not None

    def dim(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())


@dataclass(frozen=True)
class LensData:
    """Modulus N and the unit weights of a free cyclic sphere action."""

    N: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.N <= 2 or not is_prime(self.N):
            raise ValueError("N must be an odd prime")


class Dichotomy(enum.Enum):
    CONTRADICTION = "contradiction"


def generator_matrix(N: int) -> FpMatrix:
    """Permutation matrix of g acting on the regular representation."""
    return FpMatrix.from_rows(
        [[1 if i == (j + 1) % N else 0 for j in range(N)] for i in range(N)], N
    )


def _power_minus_one(N: int, w: int) -> FpMatrix:
    g = generator_matrix(N)
    power = FpMatrix.identity(N, N)
    for _ in range(w % N):
        power = g @ power
    ident = FpMatrix.identity(N, N)
    return FpMatrix.from_rows(
        [[(a - b) % N for a, b in zip(ra, rb)] for ra, rb in zip(power.entries, ident.entries)],
        N,
    )


def resolution_maps(N: int) -> tuple[FpMatrix, FpMatrix]:
    """Multiplication by (g - 1) and by the norm on the regular representation.

    rank(g - 1) = N - 1 and rank(norm) = 1, and the two compose to zero
    in both orders: the 2-periodic resolution of the trivial module.
    """
    if not is_prime(N) or N == 2:
        raise ValueError("N must be an odd prime")
    tminus1 = _power_minus_one(N, 1)
    norm = FpMatrix.from_rows([[1] * N for _ in range(N)], N)
    return tminus1, norm


def _invariant_basis(N: int) -> list[tuple[int, ...]]:
    """Basis of module homs K[G] -> trivial K, as invariant functionals."""
    g = generator_matrix(N)
    return _power_minus_one_t(g).kernel_basis()


def _power_minus_one_t(g: FpMatrix) -> FpMatrix:
    ident = FpMatrix.identity(g.rows, g.p)
    gt = g.transpose()
    return FpMatrix.from_rows(
        [[(a - b) % g.p for a, b in zip(ra, rb)] for ra, rb in zip(gt.entries, ident.entries)],
        g.p,
    )


def _hom_complex_dims(differentials: list[FpMatrix], N: int) -> list[int]:
    """H^0..H^m of hom(C_., trivial) for a complex of single regular reps.

    differentials[i-1] is the chain map C_i -> C_(i-1); the hom spaces
    are the invariant functionals and the cochain maps are transposed
    differentials restricted to them.
    """
    basis = _invariant_basis(N)
    deltas = [restricted_map(d.transpose(), basis, basis) for d in differentials]
    dims = [len(basis)] * (len(differentials) + 1)
    return cochain_cohomology_dims(deltas, dims)


def _periodic_differentials(N: int, count: int) -> list[FpMatrix]:
    tminus1, norm = resolution_maps(N)
    return [tminus1 if i % 2 == 1 else norm for i in range(1, count + 1)]


def ext_trivial(N: int, degree: int) -> int:
    """dim Ext^degree between trivial F_N[Z/N]-modules; equals 1 for all degrees."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if not is_prime(N) or N == 2:
        raise ValueError("N must be an odd prime")
    dims = _hom_complex_dims(_periodic_differentials(N, degree + 1), N)
    return dims[degree]


def yoneda_degree(d1: int, d2: int) -> int:
    """Degree of a concatenated pair of composable classes: additivity."""
    if d1 < 0 or d2 < 0:
        raise ValueError("degrees must be >= 0")
    return d1 + d2


def lens_cohomology(lens: LensData) -> GradedFpVector:
    """F_N cohomology of the quotient of the free weighted sphere action.

    For d weights the sphere has dimension 2d - 1 and the result is
    one-dimensional in every degree 0..2d-1, zero above: bounded with
    top = 2d - 1.  Raises NonFreeAction when a weight is 0 mod N (the
    action fixes a subsphere and the quotient is not a manifold of this
    shape).
    """
    if not lens.weights:
        raise ValueError("weight list must be nonempty")
    N = lens.N
    for w in lens.weights:
        if w % N == 0:
            raise NonFreeAction(f"weight {w} is not a unit mod {N}")
    d = len(lens.weights)
    tminus1, norm = resolution_maps(N)
    differentials = []
    for i in range(1, 2 * d):
        if i % 2 == 1:
            differentials.append(_power_minus_one(N, lens.weights[(i - 1) // 2]))
        else:
            differentials.append(norm)
    dims = _hom_complex_dims(differentials, N)
    return GradedFpVector({i: dims[i] for i in range(2 * d) if dims[i]}, top=2 * d - 1)


def point_equivariant_cohomology(N: int, max_degree: int) -> GradedFpVector:
    """H^i(Z/N; F_N) for i = 0..max_degree: all one-dimensional, unbounded.

    The boundedness flag is left unset: the fixed point of the trivial
    action keeps contributing in every degree.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    dims = _hom_complex_dims(_periodic_differentials(N, max_degree + 1), N)
    return GradedFpVector({i: dims[i] for i in range(max_degree + 1) if dims[i]}, top=None)


def boundedness_dichotomy(free_part: GradedFpVector, fixed_part: GradedFpVector) -> Dichotomy:
    """Certify the contradiction between a bounded and an unbounded profile.

    The cone of the restriction class cannot be both the bounded lens
    cohomology (free action side) and the unbounded split cohomology
    (fixed point side); given one profile of each kind the verdict is
    Contradiction.  Raises InvalidInput when the flags do not match the
    preconditions.
    """
    if not free_part.bounded:
        raise InvalidInput("free-action side must be bounded")
    if fixed_part.bounded:
        raise InvalidInput("fixed-point side must be unbounded")
    return Dichotomy.CONTRADICTION
