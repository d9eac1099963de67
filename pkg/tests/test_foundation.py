import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavepack.errors import CapacityError, DomainError
from wavepack.foundation import (PhysicalConfig, binomial,
                                 reduced_time, sqrt_principal)


class TestReducedTime:
    def test_natural_units_identity(self):
        assert reduced_time(1.0) == 1.0
        assert reduced_time(2 - 0.1j) == 2 - 0.1j

    def test_ratio_forced(self):
        cfg = PhysicalConfig(hbar=2.0, mass=1.0)
        assert reduced_time(1.0, cfg) == 1.0

    def test_explicit_config(self):
        cfg = PhysicalConfig(hbar=3.0, mass=0.75)
        assert reduced_time(1.0 + 1.0j, cfg) == (1.0 + 1.0j) * 2.0

    def test_linearity(self):
        cfg = PhysicalConfig(hbar=1.3, mass=0.9)
        rng = np.random.default_rng(1)
        for _ in range(100):
            t1 = complex(rng.normal(), rng.normal())
            t2 = complex(rng.normal(), rng.normal())
            c = complex(rng.normal(), rng.normal())
            lhs = reduced_time(t1 + c * t2, cfg)
            rhs = reduced_time(t1, cfg) + c * reduced_time(t2, cfg)
            assert abs(lhs - rhs) <= 1e-12 * (1 + abs(lhs))

    def test_invalid_config(self):
        with pytest.raises(DomainError):
            PhysicalConfig(hbar=0.0, mass=1.0)
        with pytest.raises(DomainError):
            PhysicalConfig(hbar=1.0, mass=-2.0)

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            reduced_time(complex(math.inf, 0.0))


class TestSqrtPrincipal:
    def test_examples(self):
        assert sqrt_principal(4.0) == 2.0
        assert sqrt_principal(-1.0) == 1j
        assert abs(sqrt_principal(1j) - (1 + 1j) / math.sqrt(2)) < 1e-15

    def test_round_trip_many(self):
        rng = np.random.default_rng(7)
        for _ in range(10_000):
            z = complex(rng.normal(scale=10), rng.normal(scale=10))
            w = sqrt_principal(z)
            assert abs(w * w - z) <= 1e-13 * (1 + abs(z))
            assert w.real >= 0 or (w.real == 0 and w.imag >= 0)

    @given(st.complex_numbers(max_magnitude=1e8, allow_nan=False, allow_infinity=False))
    def test_branch_property(self, z):
        w = sqrt_principal(z)
        assert w.real >= 0.0 or (w.real == 0.0 and w.imag >= 0.0)


class TestBinomial:
    def test_examples(self):
        assert binomial(4, 2) == 6
        assert binomial(17, 0) == 1
        assert binomial(6, 3) == 20

    @given(st.integers(min_value=1, max_value=64), st.integers(min_value=0, max_value=64))
    @settings(max_examples=200)
    def test_pascal_recurrence(self, n, k):
        if k > n:
            return
        if 0 < k < n:
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    def test_caps_and_domain(self):
        with pytest.raises(CapacityError):
            binomial(129, 2)
        with pytest.raises(DomainError):
            binomial(3, 5)
        with pytest.raises(DomainError):
            binomial(-1, 0)
        assert binomial(128, 64) > 0
