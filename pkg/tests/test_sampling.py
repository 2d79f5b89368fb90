from fractions import Fraction

from clawpoly.halfspaces import kimura3_prime_system
from clawpoly.matrices import Matrix
from clawpoly.sampling import (
    sample_box_points,
    sample_prime_points,
    sample_prime_segment_points,
)


def test_same_seed_same_points():
    a = sample_prime_points(3, 20, seed=5)
    b = sample_prime_points(3, 20, seed=5)
    assert a == b
    c = sample_prime_points(3, 20, seed=6)
    assert a != c


def test_segment_sampler_deterministic():
    a = sample_prime_segment_points(4, 15, seed=1)
    b = sample_prime_segment_points(4, 15, seed=1)
    assert a == b


def test_box_sampler_deterministic():
    a = sample_box_points(3, 30, seed=2)
    assert a == sample_box_points(3, 30, seed=2)


def test_prime_samples_are_members():
    sys3 = kimura3_prime_system(3)
    for p in sample_prime_points(3, 50, seed=0):
        assert sys3.membership(p).status != "outside"
    for p in sample_prime_segment_points(3, 50, seed=0):
        assert sys3.membership(p).status != "outside"


def test_sample_shapes():
    for p in sample_prime_points(4, 5, seed=0):
        assert isinstance(p, Matrix)
        assert (p.nrows, p.ncols) == (3, 4)


def test_box_points_range_and_denominator():
    lo, hi = Fraction(-1, 4), Fraction(5, 4)
    for p in sample_box_points(3, 40, seed=9):
        for x in p.flatten():
            assert lo <= x <= hi
            assert 8 % Fraction(x).denominator == 0


def test_box_sampler_straddles_unit_box():
    pts = sample_box_points(3, 200, seed=3)
    assert any(x < 0 for p in pts for x in p.flatten())
    assert any(x > 1 for p in pts for x in p.flatten())
    sys3 = kimura3_prime_system(3)
    statuses = {sys3.membership(p).status for p in pts}
    assert "outside" in statuses
