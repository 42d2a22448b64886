"""rootforge: exact root systems, Clifford double covers, icosahedral arrays."""

__version__ = "0.1.0"
