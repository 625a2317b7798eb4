"""HTTP service wrapping the core operations."""

from .app import app

__all__ = ["app"]
