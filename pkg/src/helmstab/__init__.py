"""helmstab: increasing stability for the 2D Helmholtz inverse source problem."""

__version__ = "0.1.0"
