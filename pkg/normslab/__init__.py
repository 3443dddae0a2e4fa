"""norms-lab: exact p-adic arithmetic over the cyclotomic tower."""

__version__ = "0.1.0"
