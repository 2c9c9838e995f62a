import random

import pytest

from gridask.linalg import Mat, divisor_profile, image_size, kernel_size, rank
from gridask.rings import make_ring

from oracles import brute_image_size, brute_kernel_size, naive_rank_modp

RINGS = [make_ring("field", 3), make_ring("field", 5),
         make_ring("padic", 2, 2), make_ring("padic", 3, 2),
         make_ring("ext", 2, 2)]


def test_profile_diag_example():
    R = make_ring("padic", 5, 2)
    m = Mat.from_int_rows(R, [[1, 0], [0, 5]])
    assert divisor_profile(m) == (0, 1)


def test_profile_zero_matrix_capped():
    R = make_ring("padic", 5, 2)
    assert divisor_profile(Mat.zero(R, 2, 3)) == (2, 2)


def test_profile_all_ones_rank_one():
    F = make_ring("field", 3)
    m = Mat.from_int_rows(F, [[1, 1, 1]] * 3)
    assert divisor_profile(m) == (0, 1, 1)
    assert rank(m) == 1


def test_kernel_identity_and_zero():
    F5 = make_ring("field", 5)
    assert kernel_size(Mat.identity(F5, 3)) == 1
    F3 = make_ring("field", 3)
    assert kernel_size(Mat.zero(F3, 2, 2)) == 9


def test_kernel_diag_5_1_over_z25():
    R = make_ring("padic", 5, 2)
    m = Mat.from_int_rows(R, [[5, 0], [0, 1]])
    assert kernel_size(m) == 5
    assert brute_kernel_size(m) == 5


def _random_mat(ring, rows, cols, rng):
    elems = list(ring.elements())
    return Mat(ring, rows, cols,
               tuple(rng.choice(elems) for _ in range(rows * cols)))


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_kernel_times_image_is_domain_size(ring):
    rng = random.Random(11)
    for _ in range(25):
        rows, cols = rng.randrange(1, 4), rng.randrange(1, 4)
        m = _random_mat(ring, rows, cols, rng)
        assert kernel_size(m) * image_size(m) == ring.cardinality() ** rows


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_kernel_and_image_match_enumeration(ring):
    rng = random.Random(23)
    for _ in range(15):
        rows, cols = rng.randrange(1, 4), rng.randrange(1, 4)
        m = _random_mat(ring, rows, cols, rng)
        assert kernel_size(m) == brute_kernel_size(m)
        assert image_size(m) == brute_image_size(m)


def test_rank_matches_naive_row_reduction():
    rng = random.Random(37)
    for p in (2, 3, 5):
        F = make_ring("field", p)
        for _ in range(40):
            rows = [[rng.randrange(-9, 10) for _ in range(rng.randrange(1, 5))]
                    for _ in range(rng.randrange(1, 5))]
            rows = [r[:len(rows[0])] + [0] * (len(rows[0]) - len(r)) for r in rows]
            m = Mat.from_int_rows(F, rows)
            assert rank(m) == naive_rank_modp(rows, p)


def _random_invertible(ring, n, rng):
    elems = list(ring.elements())
    while True:
        m = Mat(ring, n, n, tuple(rng.choice(elems) for _ in range(n * n)))
        if kernel_size(m) == 1:
            return m


@pytest.mark.parametrize("ring", [make_ring("field", 3), make_ring("padic", 3, 2)],
                         ids=str)
def test_profile_invariant_under_invertible_multiplication(ring):
    rng = random.Random(53)
    for _ in range(100):
        rows, cols = rng.randrange(1, 4), rng.randrange(1, 4)
        m = _random_mat(ring, rows, cols, rng)
        u = _random_invertible(ring, rows, rng)
        v = _random_invertible(ring, cols, rng)
        assert divisor_profile(u.mul(m).mul(v)) == divisor_profile(m)


def test_profile_reduction_compatibility():
    # reduce a Z/p^n matrix mod p: residue-field rank = number of zero valuations
    rng = random.Random(71)
    R = make_ring("padic", 3, 3)
    F = make_ring("field", 3)
    for _ in range(50):
        rows, cols = rng.randrange(1, 4), rng.randrange(1, 4)
        ints = [[rng.randrange(27) for _ in range(cols)] for _ in range(rows)]
        prof = divisor_profile(Mat.from_int_rows(R, ints))
        zero_count = sum(1 for v in prof if v == 0)
        assert zero_count == rank(Mat.from_int_rows(F, ints))


def test_act_left_matches_mul():
    F = make_ring("field", 5)
    m = Mat.from_int_rows(F, [[1, 2], [3, 4], [0, 1]])
    x = (1, 2, 3)
    row = Mat.from_int_rows(F, [list(x)])
    assert m.act_left(x) == row.mul(m).entries


def test_transpose_preserves_profile():
    rng = random.Random(97)
    R = make_ring("padic", 2, 3)
    for _ in range(30):
        m = _random_mat(R, rng.randrange(1, 4), rng.randrange(1, 4), rng)
        assert divisor_profile(m) == divisor_profile(m.transpose())
