"""Exact arithmetic for Casselman-Shalika values on the metaplectic double cover of GL_2k."""

__version__ = "0.1.0"
