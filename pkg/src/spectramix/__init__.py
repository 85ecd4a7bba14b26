"""Paint-like color mixing via reflectance recovery.

The package turns sRGB colors into plausible 36-sample reflectance
curves, mixes the curves with a weighted geometric mean (the rule that
makes yellow and blue give green, as paints do), and converts back to
sRGB.  Submodules:

- colorimetry: curve-to-color conversions and the fixed D65/sRGB tables
- recovery: least-slope-squared solvers (ilss, llss, illss)
- mixing: weighted-geometric-mean blending and mixing paths
- catalog: named curve collections with nearest-color queries
- pipeline / cli / service: shared orchestration, CLI, and HTTP front ends
"""

from .colorimetry import Lab, LinearRgb, Srgb8, Xyz
from .errors import (
    CatalogError,
    DegenerateIlluminantError,
    DomainError,
    NonConvergenceError,
    SpectraMixError,
)

__version__ = "0.1.0"

__all__ = [
    "Lab",
    "LinearRgb",
    "Srgb8",
    "Xyz",
    "CatalogError",
    "DegenerateIlluminantError",
    "DomainError",
    "NonConvergenceError",
    "SpectraMixError",
    "__version__",
]
