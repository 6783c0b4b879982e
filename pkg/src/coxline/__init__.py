"""Line codes generated by reflection groups: exact design, error analysis and
Monte Carlo simulation for b bits over b+1 wires."""

__version__ = "0.1.0"

from .analysis import (  # noqa: E402
    PerformanceProfile,
    alphas,
    asymptotic_wer,
    codebook_min_distance,
    exact_word_error,
    qfunc,
    snr_noise_map,
    union_bound,
)
from .codec import decode, encode, peterson_project  # noqa: E402
from .coxeter import RootSet, find_rootset  # noqa: E402
from .linecode import LineCode, design_code, verify_code  # noqa: E402
from .pmset import InitialVector, initial_vector_from_partition  # noqa: E402

__all__ = [
    "InitialVector",
    "LineCode",
    "PerformanceProfile",
    "RootSet",
    "alphas",
    "asymptotic_wer",
    "codebook_min_distance",
    "decode",
    "design_code",
    "encode",
    "exact_word_error",
    "find_rootset",
    "initial_vector_from_partition",
    "peterson_project",
    "qfunc",
    "snr_noise_map",
    "union_bound",
    "verify_code",
]
