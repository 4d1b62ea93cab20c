import numpy as np
import pytest

import fdgst


def random_image(shape, seed):
    return np.random.default_rng(seed).random(shape)


def test_dft2_matches_numpy():
    x = random_image((3, 12, 10), 0)
    np.testing.assert_allclose(fdgst.dft2(x), np.fft.fft2(x), atol=1e-9)


def test_idft2_round_trip():
    x = random_image((2, 7, 9), 1)
    back, residual = fdgst.idft2(fdgst.dft2(x))
    np.testing.assert_allclose(back, x, atol=1e-12)
    assert residual < 1e-12


def test_decompose_recompose():
    spectrum = fdgst.dft2(random_image((1, 8, 8), 2))
    amplitude, phase = fdgst.decompose(spectrum)
    assert amplitude.min() >= 0
    assert phase.max() <= np.pi and phase.min() > -np.pi
    np.testing.assert_allclose(fdgst.recompose(amplitude, phase), spectrum, atol=1e-12)


def test_augment_matches_numpy_reference():
    src = random_image((3, 16, 16), 3)
    tgt = random_image((3, 16, 16), 4)
    lam, alpha = 0.6, 0.05
    s, t = np.fft.fft2(src), np.fft.fft2(tgt)
    a_t = np.abs(t)
    thresholds = alpha * a_t.reshape(3, -1).max(axis=1)[:, None, None]
    mixed = (1 - lam) * np.abs(s) + lam * np.maximum(a_t - thresholds, 0)
    expected = np.fft.ifft2(mixed * np.exp(1j * np.angle(s))).real
    np.testing.assert_allclose(fdgst.fdg_st_augment(src, tgt, lam, alpha), expected, atol=1e-9)
    plain = np.fft.ifft2(((1 - lam) * np.abs(s) + lam * a_t) * np.exp(1j * np.angle(s))).real
    np.testing.assert_allclose(fdgst.fdg_augment(src, tgt, lam), plain, atol=1e-9)


def test_soft_threshold_and_mix():
    a = np.array([[[1.0, 3.0, 0.5]]])
    np.testing.assert_array_equal(fdgst.soft_threshold(a, [1.0]), [[[0.0, 2.0, 0.0]]])
    assert fdgst.compute_thresholds(a, 0.1) == pytest.approx([0.3])
    np.testing.assert_array_equal(fdgst.mix_amplitudes(a, 3 * a, 0.5), 2 * a)


def test_metrics_hand_cases():
    a = np.zeros((5, 5), np.uint8)
    b = np.zeros((5, 5), np.uint8)
    a[0, 0] = 1
    b[3, 4] = 1
    assert fdgst.hausdorff(fdgst.extract_boundary(a), fdgst.extract_boundary(b)) == 5.0
    left = np.zeros((4, 6), bool)
    right = np.zeros((4, 6), bool)
    left[1:3, 1:3] = True
    right[1:3, 2:4] = True
    assert fdgst.dice(left, right) == 0.5
    report = fdgst.evaluate(left, np.zeros_like(left))
    assert report["empty_prediction"] and report["hd"] is None


def test_errors_raise():
    with pytest.raises(fdgst.FdgstError):
        fdgst.fdg_augment(np.zeros((1, 4, 4)), np.zeros((1, 4, 5)), 0.5)
    with pytest.raises(ValueError):
        fdgst.extract_boundary(np.zeros((3, 3), np.uint8))
