"""Bundle classes on a product of projective spaces.

A bundle is tracked only through the pair (rank, total Chern class); that is
enough for every operation offered here.  Direct sums multiply total Chern
classes (Whitney), duals flip the sign of the odd-degree parts, rank-1 twists
have the classical binomial closed form, and short exact sequences determine
the kernel class by division in the Chow ring.  Virtual differences B - A are
allowed to carry any integer rank.

>>> from .chow import ProductSpace
>>> P13 = ProductSpace((1, 3))
>>> middle = direct_sum(line_bundle(P13, (1, 0), 8), line_bundle(P13, (0, -1)))
>>> E = kernel_from_sequence(middle, line_bundle(P13, (1, 1), 4))
>>> E.rank, str(chern(E, 1))
(5, '4*H1 + -5*H2')
>>> B = twist(E, line_bundle(P13, (0, 2)))
>>> str(chern(B, 1))
'4*H1 + 5*H2'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chow import ChowElement, ProductSpace, hyperplane
from .errors import RankError, SpaceMismatchError


@dataclass(frozen=True)
class BundleClass:
    """A vector bundle or virtual class: rank plus total Chern class.

    The rank may be negative for virtual differences.  The degree-0 part of
    ``total_chern`` must be 1.
    """

    space: ProductSpace
    rank: int
    total_chern: ChowElement

    def __post_init__(self):
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise TypeError(f"rank must be an integer, got {self.rank!r}")
        if self.total_chern.space != self.space:
            raise SpaceMismatchError(
                "total Chern class lives on a different space than the bundle"
            )
        if self.total_chern.constant_term() != 1:
            raise ValueError(
                "total Chern class must have degree-0 part 1, got "
                f"{self.total_chern.constant_term()}"
            )


def _check_same_space(E: BundleClass, F: BundleClass):
    if E.space != F.space:
        raise SpaceMismatchError(
            f"bundles live on different spaces: {E.space} vs {F.space}"
        )


def line_bundle(
    space: ProductSpace, degrees, multiplicity: int = 1
) -> BundleClass:
    """O(a_1,...,a_k)^m: rank m with total Chern class (1 + sum a_i H_i)^m."""
    degrees = tuple(degrees)
    if len(degrees) != space.num_factors:
        raise ValueError(
            f"expected {space.num_factors} twisting degrees, got {len(degrees)}"
        )
    for a in degrees:
        if not isinstance(a, int) or isinstance(a, bool):
            raise ValueError(f"twisting degrees must be integers, got {a!r}")
    if not isinstance(multiplicity, int) or isinstance(multiplicity, bool) or multiplicity <= 0:
        raise ValueError(
            f"multiplicity must be a positive integer, got {multiplicity!r}"
        )
    c1 = ChowElement.zero(space)
    for i, a in enumerate(degrees, start=1):
        c1 = c1 + a * hyperplane(space, i)
    total = (ChowElement.one(space) + c1) ** multiplicity
    return BundleClass(space, multiplicity, total)


def trivial_bundle(space: ProductSpace, rank: int = 1) -> BundleClass:
    """O^rank: the trivial bundle with total Chern class 1."""
    return line_bundle(space, (0,) * space.num_factors, rank)


def direct_sum(E: BundleClass, F: BundleClass) -> BundleClass:
    """Whitney sum: ranks add, total Chern classes multiply."""
    _check_same_space(E, F)
    return BundleClass(E.space, E.rank + F.rank, E.total_chern * F.total_chern)


def dual(E: BundleClass) -> BundleClass:
    """Dual class: c_i(E^v) = (-1)^i c_i(E); rank unchanged."""
    flipped = ChowElement(
        E.space,
        {
            exps: c if sum(exps) % 2 == 0 else -c
            for exps, c in E.total_chern.terms.items()
        },
    )
    return BundleClass(E.space, E.rank, flipped)


def _binomial(n: int, j: int) -> Fraction:
    """Generalized binomial coefficient n(n-1)...(n-j+1)/j! for integer n."""
    num = 1
    for t in range(j):
        num *= n - t
    den = 1
    for t in range(1, j + 1):
        den *= t
    return Fraction(num, den)


def twist(E: BundleClass, L: BundleClass) -> BundleClass:
    """Tensor by a line bundle: c_k(E(x)L) = sum_i C(r-i, k-i) c_i(E) c_1(L)^{k-i}.

    Only honest bundles may be twisted; virtual classes of negative rank are
    refused because the rank argument of the binomial loses its meaning.
    """
    _check_same_space(E, L)
    if L.rank != 1:
        raise RankError(f"twisting requires a rank-1 bundle, got rank {L.rank}")
    if E.rank < 0:
        raise RankError(
            f"cannot twist a virtual class of negative rank {E.rank}"
        )
    space = E.space
    ell = L.total_chern.graded_part(1)
    total = ChowElement.zero(space)
    for k in range(space.total_dimension + 1):
        ck = ChowElement.zero(space)
        for i in range(k + 1):
            ci = E.total_chern.graded_part(i)
            if ci.is_zero():
                continue
            ck = ck + _binomial(E.rank - i, k - i) * ci * ell ** (k - i)
        total = total + ck
    return BundleClass(space, E.rank, total)


def kernel_from_sequence(middle: BundleClass, quotient: BundleClass) -> BundleClass:
    """The kernel class of a short exact sequence 0 -> K -> middle -> quotient -> 0."""
    _check_same_space(middle, quotient)
    if middle.rank < quotient.rank:
        raise RankError(
            f"middle rank {middle.rank} is smaller than quotient rank {quotient.rank}"
        )
    total = middle.total_chern * quotient.total_chern.invert_unit_series()
    return BundleClass(middle.space, middle.rank - quotient.rank, total)


def virtual_difference(B: BundleClass, A: BundleClass) -> BundleClass:
    """The K-theory difference B - A with total Chern class c(B)/c(A)."""
    _check_same_space(B, A)
    total = B.total_chern * A.total_chern.invert_unit_series()
    return BundleClass(B.space, B.rank - A.rank, total)


def chern(E: BundleClass, i: int) -> ChowElement:
    """The i-th Chern class, the degree-i part of the total Chern class."""
    if not isinstance(i, int) or isinstance(i, bool) or i < 0:
        raise ValueError(f"Chern-class index must be a nonnegative integer, got {i!r}")
    return E.total_chern.graded_part(i)
