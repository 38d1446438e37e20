"""Hypothesis strategies shared by the property suites and unit tests."""

from fractions import Fraction

from hypothesis import strategies as st

from degloci import (
    BaseChangeParams,
    BundleClass,
    ChowElement,
    ProductSpace,
    direct_sum,
    line_bundle,
)

CHOW_SPACES = (
    ProductSpace((1,)),
    ProductSpace((3,)),
    ProductSpace((1, 1)),
    ProductSpace((1, 2)),
    ProductSpace((1, 3)),
    ProductSpace((2, 2)),
    ProductSpace((1, 1, 2)),
)

DIM4_SPACES = (
    ProductSpace((4,)),
    ProductSpace((1, 3)),
    ProductSpace((2, 2)),
    ProductSpace((1, 1, 2)),
)

rationals = st.fractions(
    min_value=Fraction(-6), max_value=Fraction(6), max_denominator=12
)


def spaces(pool=CHOW_SPACES):
    return st.sampled_from(pool)


def exponent_vectors(space: ProductSpace, slack: int = 0):
    """Exponent tuples; with slack > 0 some exceed the truncation bounds."""
    return st.tuples(*[st.integers(0, n + slack) for n in space.dims])


@st.composite
def chow_elements(draw, space: ProductSpace, max_terms: int = 6):
    terms = draw(
        st.dictionaries(exponent_vectors(space), rationals, max_size=max_terms)
    )
    return ChowElement(space, terms)


@st.composite
def element_triples(draw):
    """Three elements sharing one randomly chosen space."""
    space = draw(spaces())
    return tuple(draw(chow_elements(space)) for _ in range(3))


@st.composite
def raw_term_dicts(draw):
    """(space, dict) where exponents may exceed the truncation bounds."""
    space = draw(spaces())
    terms = draw(
        st.dictionaries(exponent_vectors(space, slack=2), rationals, max_size=6)
    )
    return space, terms


@st.composite
def unit_elements(draw):
    """Elements with constant term exactly 1."""
    space = draw(spaces())
    x = draw(chow_elements(space))
    positive_part = {e: c for e, c in x.terms.items() if sum(e) > 0}
    return ChowElement.one(space) + ChowElement(space, positive_part)


def degree_vectors(space: ProductSpace, lo: int = -3, hi: int = 3):
    return st.tuples(*[st.integers(lo, hi) for _ in space.dims])


@st.composite
def line_summands(draw, space: ProductSpace, max_summands: int = 3, max_mult: int = 3):
    """A list of (degrees, multiplicity) pairs describing a sum of line bundles."""
    count = draw(st.integers(1, max_summands))
    return [
        (draw(degree_vectors(space)), draw(st.integers(1, max_mult)))
        for _ in range(count)
    ]


def bundle_from_summands(space: ProductSpace, summands) -> BundleClass:
    acc = None
    for degrees, mult in summands:
        piece = line_bundle(space, degrees, mult)
        acc = piece if acc is None else direct_sum(acc, piece)
    return acc


@st.composite
def line_sum_pairs(draw):
    """(space, E, F) with E, F honest sums of line bundles on one space."""
    space = draw(spaces(DIM4_SPACES))
    E = bundle_from_summands(space, draw(line_summands(space)))
    F = bundle_from_summands(space, draw(line_summands(space)))
    return space, E, F


@st.composite
def twist_setups(draw):
    """(K, Q, L): kernel and quotient line sums plus a twisting line bundle."""
    space = draw(spaces(DIM4_SPACES))
    K = bundle_from_summands(space, draw(line_summands(space)))
    Q = bundle_from_summands(space, draw(line_summands(space)))
    L = line_bundle(space, draw(degree_vectors(space)))
    return K, Q, L


@st.composite
def honest_degeneracy_data(draw):
    """(space, A summands, B summands, twist degrees) with rank B = rank A + 1."""
    space = draw(spaces(DIM4_SPACES))
    r = draw(st.integers(1, 3))
    a_summands = [(draw(degree_vectors(space, -2, 2)), 1) for _ in range(r)]
    b_summands = [(draw(degree_vectors(space, -2, 2)), 1) for _ in range(r + 1)]
    twist_degrees = draw(degree_vectors(space, -2, 2))
    return space, a_summands, b_summands, twist_degrees


@st.composite
def base_change_params(draw, nonzero_lambda: bool = False):
    lam = draw(rationals)
    if nonzero_lambda and lam == 0:
        lam = Fraction(1)
    return BaseChangeParams(
        m1=draw(st.integers(1, 20)),
        m2=draw(st.integers(1, 20)),
        g_A1=draw(st.integers(0, 120)),
        g_A2=draw(st.integers(0, 120)),
        A1_sq=draw(st.integers(-25, 25)),
        A2_sq=draw(st.integers(-25, 25)),
        A12=draw(st.integers(0, 25)),
        base_genus=draw(st.integers(0, 3)),
        base_lambda=lam,
        base_delta0=draw(rationals),
        base_delta_rest=tuple(draw(st.lists(rationals, max_size=3))),
    )
