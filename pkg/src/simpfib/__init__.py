"""simpfib - BG as a twisted Cartesian product, checked on finite group extensions."""

__version__ = "0.1.0"

from simpfib.config import load_config  # noqa: E402
from simpfib.validators import validate_ses, validate_twisting, verify_theorem  # noqa: E402

__all__ = [
    "__version__",
    "load_config",
    "validate_ses",
    "validate_twisting",
    "verify_theorem",
]
