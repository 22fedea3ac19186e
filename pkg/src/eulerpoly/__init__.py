"""Exact characteristic-class invariants of smooth hypersurfaces in projective space."""

__version__ = "0.1.0"
