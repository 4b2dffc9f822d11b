"""Python access to the cubicwalls engine."""

from ._core import (
    catalog_keys,
    chambers,
    check,
    evaluate,
    exceptional_curves,
    global_chambers,
    volume,
)

__all__ = [
    "catalog_keys",
    "chambers",
    "check",
    "evaluate",
    "exceptional_curves",
    "global_chambers",
    "volume",
]
