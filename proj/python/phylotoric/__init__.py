"""Algebraic invariants of group-based phylogenetic models.

Thin wrapper over the compiled extension; see the README for the catalog and
file formats.
"""

from _phylotoric import (  # noqa: F401
    __version__,
    build_db,
    canonical_newick,
    catalog,
    compute,
    emit_entry,
    fourier_ideal,
    models,
    parametrizations,
    verify,
    verify_commutes,
)
