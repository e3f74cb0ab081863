"""
Utility modules for the m-closed graph toolkit.

graph_io and corpus build Graph objects through src.graph_core and are
imported by module path to keep this package free of import cycles.
"""

from . import settings
from .path_utils import (
    ensure_output_directory,
    resolve_input_path,
    write_report,
)
from .polynomial import Monomial, Polynomial
from .progress_tracker import ProgressTracker
from .search import PartialLabeling, hamiltonian_path, neighbor_masks, vertex_orbits

__all__ = [
    # Configuration
    'settings',

    # Path utilities
    'ensure_output_directory',
    'resolve_input_path',
    'write_report',

    # Exact polynomial arithmetic
    'Monomial',
    'Polynomial',

    # Progress tracking
    'ProgressTracker',

    # Labeling search
    'PartialLabeling',
    'hamiltonian_path',
    'neighbor_masks',
    'vertex_orbits',
]
