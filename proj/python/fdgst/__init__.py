"""Fourier-domain augmentation with soft thresholding, and segmentation metrics.

Images are float64 arrays shaped (C, H, W) or (H, W); spectra are complex128
arrays of the same shape. Masks are 2-D arrays where any non-zero value is
foreground.
"""

from ._core import (
    FdgstError,
    average_surface_distance,
    compute_thresholds,
    decompose,
    dft2,
    dice,
    evaluate,
    extract_boundary,
    fdg_augment,
    fdg_st_augment,
    hausdorff,
    idft2,
    leave_one_out_splits,
    mix_amplitudes,
    recompose,
    soft_threshold,
)

__all__ = [
    "FdgstError",
    "average_surface_distance",
    "compute_thresholds",
    "decompose",
    "dft2",
    "dice",
    "evaluate",
    "extract_boundary",
    "fdg_augment",
    "fdg_st_augment",
    "hausdorff",
    "idft2",
    "leave_one_out_splits",
    "mix_amplitudes",
    "recompose",
    "soft_threshold",
]
