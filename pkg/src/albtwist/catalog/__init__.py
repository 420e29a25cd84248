"""Named objects, the dual of a plane cubic and the two-power decomposition search."""

from .dual import DualError, dual_cubic, is_smooth_cubic, smoothness_resultant
from .entries import CatalogEntry, CatalogError, catalog_get, catalog_keys
from .search import Decomposition, DecompositionSearch, SearchError, certify, find_two_power_decomposition

__all__ = [
    "DualError", "dual_cubic", "is_smooth_cubic", "smoothness_resultant", "CatalogEntry",
    "CatalogError", "catalog_get", "catalog_keys", "Decomposition", "DecompositionSearch",
    "SearchError", "certify", "find_two_power_decomposition",
]
