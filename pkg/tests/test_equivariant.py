import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cck.equivariant import (
    Dichotomy,
    GradedFpVector,
    LensData,
    boundedness_dichotomy,
    ext_trivial,
    lens_cohomology,
    point_equivariant_cohomology,
    resolution_maps,
    yoneda_degree,
)
from cck.errors import InvalidInput, NonFreeAction
from cck.fp import FpMatrix

PRIMES = (3, 5, 7, 11)


@pytest.mark.parametrize("N", PRIMES)
def test_resolution_map_ranks(N):
    tminus1, norm = resolution_maps(N)
    assert tminus1.rank() == N - 1
    assert norm.rank() == 1


@pytest.mark.parametrize("N", PRIMES)
def test_resolution_products_vanish(N):
    tminus1, norm = resolution_maps(N)
    assert (tminus1 @ norm).is_zero()
    assert (norm @ tminus1).is_zero()


@pytest.mark.parametrize("N", PRIMES)
def test_resolution_is_exact(N):
    # products vanish, so image sits in kernel; dimensions force equality
    tminus1, norm = resolution_maps(N)
    assert tminus1.nullity() == norm.rank()
    assert norm.nullity() == tminus1.rank()


def test_kernel_of_shift_is_norm_line():
    tminus1, norm = resolution_maps(3)
    kernel = tminus1.kernel_basis()
    assert len(kernel) == 1
    image_gen = norm.apply((1, 0, 0))
    k = kernel[0]
    # the kernel line is spanned by the all-ones vector, the norm image
    scale = next(x for x in k if x)
    assert all((x * image_gen[0]) % 3 == (scale * y) % 3 for x, y in zip(k, image_gen))


def test_ext_first_degrees():
    assert ext_trivial(5, 0) == 1
    assert ext_trivial(5, 1) == 1


def test_ext_unbounded_pattern():
    assert [ext_trivial(5, d) for d in range(21)] == [1] * 21


@pytest.mark.parametrize("N", (3, 7))
def test_ext_two_periodic(N):
    for d in range(8):
        assert ext_trivial(N, d) == ext_trivial(N, d + 2)


def test_yoneda_degree_additivity():
    assert yoneda_degree(0, 7) == 7
    assert yoneda_degree(2, 3) == 5
    assert yoneda_degree(6, 4) == 10


@given(st.integers(min_value=0, max_value=1000), st.integers(min_value=0, max_value=1000))
def test_yoneda_degree_is_addition(d1, d2):
    assert yoneda_degree(d1, d2) == d1 + d2


def test_lens_two_weights():
    graded = lens_cohomology(LensData(5, (1, 2)))
    assert graded.dims == {0: 1, 1: 1, 2: 1, 3: 1}
    assert graded.top == 3
    assert graded.bounded


def test_lens_four_weights():
    graded = lens_cohomology(LensData(5, (1, 2, 3, 4)))
    assert graded.dims == {i: 1 for i in range(8)}
    assert graded.top == 7


def test_lens_rejects_non_unit_weight():
    with pytest.raises(NonFreeAction):
        lens_cohomology(LensData(5, (5,)))
    with pytest.raises(NonFreeAction):
        lens_cohomology(LensData(5, (1, 10, 2)))


def test_lens_rejects_empty_weights():
    with pytest.raises(ValueError):
        lens_cohomology(LensData(5, ()))


def test_lens_independent_of_unit_weights():
    base = lens_cohomology(LensData(5, (1, 2, 3, 4))).dims
    for perm in itertools.permutations((1, 2, 3, 4)):
        assert lens_cohomology(LensData(5, perm)).dims == base
    for scale in (2, 3, 4):
        rescaled = tuple((scale * w) % 5 for w in (1, 2, 3, 4))
        assert lens_cohomology(LensData(5, rescaled)).dims == base


@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_lens_total_dimension(weights):
    weights = tuple(w % 7 or 1 for w in weights)
    graded = lens_cohomology(LensData(7, weights))
    d = len(weights)
    assert graded.total_dim == 2 * d
    # Euler characteristic vanishes in positive dimension
    assert sum((-1) ** k * v for k, v in graded.dims.items()) == 0


def test_point_cohomology_degree_zero():
    graded = point_equivariant_cohomology(5, 0)
    assert graded.dims == {0: 1}
    assert not graded.bounded


def test_point_cohomology_all_ones():
    graded = point_equivariant_cohomology(5, 10)
    assert graded.dims == {i: 1 for i in range(11)}
    assert graded.top is None


def test_dichotomy_contradiction():
    lens = lens_cohomology(LensData(5, (1, 2, 3, 4)))
    point = point_equivariant_cohomology(5, 20)
    assert boundedness_dichotomy(lens, point) is Dichotomy.CONTRADICTION


def test_dichotomy_rejects_matching_flags():
    lens = lens_cohomology(LensData(5, (1, 2)))
    point = point_equivariant_cohomology(5, 10)
    with pytest.raises(InvalidInput):
        boundedness_dichotomy(lens, lens)
    with pytest.raises(InvalidInput):
        boundedness_dichotomy(point, point)


def test_graded_vector_validates_top():
    with pytest.raises(ValueError):
        GradedFpVector({0: 1, 5: 2}, top=3)
    assert GradedFpVector({0: 1, 3: 1}, top=3).bounded


def test_fp_matrix_basics():
    m = FpMatrix.from_rows([[1, 2], [3, 4]], 5)
    assert m.rank() == 2
    ident = FpMatrix.identity(2, 5)
    assert (m @ ident).entries == m.entries
    with pytest.raises(ValueError):
        FpMatrix.from_rows([[1, 2], [3]], 5)
    with pytest.raises(ValueError):
        FpMatrix.from_rows([[1]], 4)  # modulus not prime


def test_fp_matrix_kernel():
    m = FpMatrix.from_rows([[1, 1, 1], [0, 0, 0]], 3)
    basis = m.kernel_basis()
    assert len(basis) == 2
    for v in basis:
        assert m.apply(v) == (0, 0)
