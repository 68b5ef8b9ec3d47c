"""mfsr: multiplicity-free symplectic representations, decided by extremal-weight reduction."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("mfsr")
except PackageNotFoundError:
    # Fallback for editable/local runs before package metadata is installed.
    __version__ = "0.0.0+local"
