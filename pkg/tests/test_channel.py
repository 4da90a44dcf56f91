"""Test the Lambertian LOS channel gain."""
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.channel import (
    ConcentratorForm,
    Emitter,
    EmitterOptics,
    Receiver,
    ReceiverOptics,
    concentrator_gain,
    lambertian_order,
    los_gain,
)
from src.errors import DomainError
from src.geometry import DOWN, UP, Point3, Pose

AP = Emitter(Pose(Point3(2, 5, 3), DOWN), EmitterOptics(math.radians(60), 1.0))
OPTICS = ReceiverOptics(detector_area=1e-4, fov=math.radians(60))


def receiver_at(x, y, z=1.0, optics=OPTICS):
    return Receiver(Pose(Point3(x, y, z), UP), optics)


def test_lambertian_orders():
    assert lambertian_order(math.radians(60)) == pytest.approx(1.0, rel=1e-12)
    assert lambertian_order(math.radians(45)) == pytest.approx(2.0, rel=1e-12)
    assert lambertian_order(math.radians(30)) == pytest.approx(4.8188, rel=1e-4)


@pytest.mark.parametrize("angle", [0.0, math.pi / 2, -0.1])
def test_lambertian_order_domain(angle):
    with pytest.raises(DomainError):
        lambertian_order(angle)


def test_concentrator_gain_forms():
    assert concentrator_gain(1.5, math.radians(60)) == pytest.approx(3.0, rel=1e-12)
    assert concentrator_gain(1.5, math.radians(60), ConcentratorForm.PAPER_LITERAL) == \
        pytest.approx(2.0, rel=1e-12)


def test_nadir_gain():
    assert los_gain(AP, receiver_at(2, 5)) == pytest.approx(2.3873e-5, rel=1e-4)
    assert los_gain(AP, receiver_at(2, 5)) == pytest.approx(3e-4 / (4 * math.pi), rel=1e-9)


def test_stationary_user_gain():
    # d^2 = 14, cos = 2 / sqrt(14)
    expected = 2e-4 / (2 * math.pi * 14) * (4 / 14) * 3.0
    assert los_gain(AP, receiver_at(1, 2)) == pytest.approx(expected, rel=1e-9)
    assert los_gain(AP, receiver_at(1, 2)) == pytest.approx(1.9488e-6, rel=1e-4)


def test_outside_fov_is_exactly_zero():
    assert los_gain(AP, receiver_at(2, 8.6)) == 0.0


def test_receiver_facing_away_is_zero():
    rx = Receiver(Pose(Point3(2, 5, 1), DOWN), OPTICS)
    assert los_gain(AP, rx) == 0.0


def test_gain_falls_with_distance():
    gains = [los_gain(AP, receiver_at(2, y)) for y in (5.0, 5.5, 6.0, 6.5, 7.0)]
    assert gains == sorted(gains, reverse=True)


def test_gain_scales_with_detector_area():
    big = ReceiverOptics(detector_area=2e-4, fov=math.radians(60))
    assert los_gain(AP, receiver_at(1, 4, optics=big)) == \
        pytest.approx(2 * los_gain(AP, receiver_at(1, 4)), rel=1e-12)


def brute_force_gain(ap_pos, rx_pos, semi_angle, area, fov, n):
    """Direct transcription for vertically facing devices."""
    dx, dy, dz = (r - a for r, a in zip(rx_pos, ap_pos))
    d = math.sqrt(dx * dx + dy * dy + dz * dz)
    cos_angle = -dz / d
    psi = math.acos(cos_angle)
    if psi > fov:
        return 0.0, psi
    m = math.log(0.5) / math.log(math.cos(semi_angle))
    g = n ** 2 / math.sin(fov) ** 2
    return (m + 1) * area / (2 * math.pi * d ** 2) * cos_angle ** m * g * cos_angle, psi


def test_gain_matches_brute_force():
    rng = np.random.default_rng(20240101)
    checked = 0
    for _ in range(1000):
        ap_pos = (rng.uniform(0, 4), rng.uniform(0, 8), 3.0)
        rx_pos = (rng.uniform(0, 4), rng.uniform(0, 8), rng.uniform(0, 2.5))
        semi_angle = rng.uniform(math.radians(10), math.radians(80))
        fov = rng.uniform(math.radians(20), math.radians(90))
        area = rng.uniform(1e-5, 1e-3)
        n = rng.uniform(1.0, 2.0)

        expected, psi = brute_force_gain(ap_pos, rx_pos, semi_angle, area, fov, n)
        if abs(psi - fov) < 1e-9:
            continue
        tx = Emitter(Pose(Point3(*ap_pos), DOWN), EmitterOptics(semi_angle, 1.0))
        rx = Receiver(Pose(Point3(*rx_pos), UP),
                      ReceiverOptics(detector_area=area, fov=fov, refractive_index=n))
        actual = los_gain(tx, rx)
        if expected == 0.0:
            assert actual == 0.0
        else:
            assert actual == pytest.approx(expected, rel=1e-12)
        checked += 1
    assert checked > 990


offset = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
inside_fov = st.floats(min_value=0.0, max_value=3.4, allow_nan=False)


@given(offset, offset)
def test_gain_is_mirror_symmetric_about_the_nadir(dx, dy):
    assert los_gain(AP, receiver_at(2 + dx, 5 + dy)) == \
        pytest.approx(los_gain(AP, receiver_at(2 - dx, 5 - dy)), rel=1e-9)


@given(st.floats(min_value=0.0, max_value=2.9))
def test_nadir_gain_follows_inverse_square(z):
    d = 3.0 - z
    assert los_gain(AP, receiver_at(2, 5, z)) * d ** 2 == pytest.approx(3e-4 / math.pi, rel=1e-9)


@given(offset, offset, st.floats(min_value=0.0, max_value=10.0))
def test_gain_is_linear_in_filter_gain(dx, dy, T):
    filtered = ReceiverOptics(detector_area=1e-4, fov=math.radians(60), filter_gain=T)
    assert los_gain(AP, receiver_at(2 + dx, 5 + dy, optics=filtered)) == \
        pytest.approx(T * los_gain(AP, receiver_at(2 + dx, 5 + dy)), rel=1e-12, abs=1e-30)


@given(inside_fov, inside_fov, st.floats(min_value=0.0, max_value=2 * math.pi))
def test_gain_falls_with_radius(r1, r2, theta):
    near, far = sorted((r1, r2))

    def gain(r):
        return los_gain(AP, receiver_at(2 + r * math.cos(theta), 5 + r * math.sin(theta)))

    assert gain(near) >= gain(far) * (1 - 1e-12)
