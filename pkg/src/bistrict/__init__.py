"""Strictification of bipermutative categories, checked on finite instances."""

from .checks import TOOL_VERSION as __version__

__all__ = ["__version__"]
