"""Elliptical decomposition of N-dimensional vector signals.

Thin re-export of the compiled core: canonical ellipse extraction from
same-frequency superpositions, per-frequency ellipse spectra of sampled
signals, and Fourier transforms built on matrix roots of -1.
"""

from ellspec._core import (
    EllipseAB,
    EllipseCS,
    EllipseSpectrum,
    MatrixRoot,
    PlanePair,
    Sinusoid,
    SpectrumBin,
    VectorSignal,
    ab_from_cs,
    canonical_root,
    classify_polarization,
    cs_from_sinusoids,
    ellipse_spectrum,
    eval_ab,
    eval_cs,
    eval_superposition,
    generalized_exp,
    matrix_dft,
    matrix_idft,
    planarity_residual,
    psi_from_cs,
    root_from_planes,
    root_residual,
    spectrum_from_json,
    spectrum_to_json,
    synthesize_spectrum,
    unitary_dft,
    unitary_idft,
)

__all__ = [
    "EllipseAB",
    "EllipseCS",
    "EllipseSpectrum",
    "MatrixRoot",
    "PlanePair",
    "Sinusoid",
    "SpectrumBin",
    "VectorSignal",
    "ab_from_cs",
    "canonical_root",
    "classify_polarization",
    "cs_from_sinusoids",
    "ellipse_spectrum",
    "eval_ab",
    "eval_cs",
    "eval_superposition",
    "generalized_exp",
    "matrix_dft",
    "matrix_idft",
    "planarity_residual",
    "psi_from_cs",
    "root_from_planes",
    "root_residual",
    "spectrum_from_json",
    "spectrum_to_json",
    "synthesize_spectrum",
    "unitary_dft",
    "unitary_idft",
]

__version__ = "0.1.0"
