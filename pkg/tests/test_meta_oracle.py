"""Independent high-precision cross-checks (mpmath as a second, unrelated
oracle): frozen reference digits and two packet values by rotated-contour
quadrature.  These guard the main oracle itself.
"""
import math

import pytest

mp = pytest.importorskip("mpmath")

from wavepack.asymptotics import glaisher_packet_exact, sech_packet_exact
from wavepack.wavepacket import glaisher_kernel
from wavepack.zeta import dirichlet_eta, zeta_half_reference


def test_zeta_references_against_mpmath():
    mp.mp.dps = 25
    for m in (1, 2, 3, 4):
        assert abs(zeta_half_reference(m) - float(mp.zeta(m + 0.5))) <= 1e-13
    assert abs(dirichlet_eta(0.5) - float(mp.altzeta(0.5))) <= 1e-14


def test_sech_packet_against_rotated_contour():
    mp.mp.dps = 25
    beta, x, tau = mp.pi / 2, 1, mp.mpc(1, "-0.2")
    rot = mp.e ** (-0.3j)

    def f(r):
        z = r * rot
        return mp.cos(x * z) / mp.cosh(beta * z) * mp.e ** (-1j * tau * z * z)

    ref = complex(rot * mp.quad(f, [0, mp.inf]))
    got = sech_packet_exact(math.pi / 2, 1.0, 1.0 - 0.2j)
    assert abs(got - ref) <= 1e-11


def test_glaisher_packet_against_rotated_contour():
    mp.mp.dps = 25
    x, tau = 2, mp.mpc(2, "-0.5")
    rot = mp.e ** (-0.22j)

    def K(z):
        c = (mp.pi / 2) * mp.sqrt(z / 2)
        return mp.cosh(c) * mp.cos(c) / (mp.cosh(2 * c) + mp.cos(2 * c))

    def f(r):
        z = r * rot
        return K(z) * mp.cos(x * z) * mp.e ** (-1j * tau * z * z)

    ref = complex(rot * mp.quad(f, [0, mp.inf], maxdegree=8))
    got = glaisher_packet_exact(2.0, 2.0 - 0.5j)
    assert abs(got - ref) <= 1e-10


def test_kernel_partial_fraction_identity():
    # K(z) = (2/pi) sum (-1)^n (2n+1)^3 / ((2n+1)^4 + z^2), checked at high
    # precision; this is the resummation behind the exact erfc route
    mp.mp.dps = 30
    for z in (0.3, 1.0, 5.0):
        pf = (2 / mp.pi) * mp.nsum(
            lambda k: (-1) ** k * (2 * k + 1) ** 3 / ((2 * k + 1) ** 4 + z * z),
            [0, mp.inf], method="a")
        assert abs(float(pf) - glaisher_kernel(z)) <= 1e-12
