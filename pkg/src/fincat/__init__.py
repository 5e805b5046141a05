"""Category theory internal to finite sets, with brute-force verification of
universal properties at desk scale."""

__version__ = "0.1.0"
