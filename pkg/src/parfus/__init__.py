"""Exact computations in partial group algebras of finite groups."""

__version__ = "0.1.0"

from .group_core import (  # noqa: E402
    FiniteGroup,
    Subgroup,
    adapted_basis,
    elementary_decomposition,
    from_cayley,
    make_cyclic,
    make_direct_product,
    make_symmetric,
    subgroups,
)
from .groupoid import AlgebraElement, Arrow, arrows, dimension, lambda_gen  # noqa: E402
from .blocks import blocks, phi_block, psi_block, wedderburn_summary  # noqa: E402
from .rep_theory import SimpleLabel, simple_labels  # noqa: E402
from .fusion import fuse, fusion_table, unit_decomposition  # noqa: E402

__all__ = [
    "AlgebraElement",
    "Arrow",
    "FiniteGroup",
    "SimpleLabel",
    "Subgroup",
    "adapted_basis",
    "arrows",
    "blocks",
    "dimension",
    "elementary_decomposition",
    "from_cayley",
    "fuse",
    "fusion_table",
    "lambda_gen",
    "make_cyclic",
    "make_direct_product",
    "make_symmetric",
    "phi_block",
    "psi_block",
    "simple_labels",
    "subgroups",
    "unit_decomposition",
    "wedderburn_summary",
]
