"""Bipolar soft sets: a finite algebra of paired approve/reject object sets.

Each value assigns, to every positive parameter, a set of approving objects
and a disjoint set of rejecting objects, leaving the rest neutral.  The
package provides the order and lattice operations, an indicator-pair table
encoding with a canonical JSON document format, and/or-products over the
squared parameter space, score-based decision making, and a brute-force
checker for the algebra's laws.
"""

from . import errors
from .codec import dump, from_document, load, parse, serialize, to_document
from .core import BipolarSoftSet, ensure_same_space
from .decision import (
    DecisionResult,
    ScoreRow,
    decide,
    render_scores_csv,
    render_scores_text,
    scores,
    scores_document,
)
from .laws import (
    Law,
    LawReport,
    catalogue,
    check_law,
    enumerate_bss,
    exhaustive_tuples,
    gen_bss,
    get_law,
    random_tuples,
    recheck,
    run_catalogue,
    standard_space,
)
from .products import and_product, or_product, product_space
from .space import ParameterSpace
from .table import (
    CellValue,
    TabularForm,
    from_table,
    render_table_csv,
    render_table_text,
    table_document,
    to_table,
)

__version__ = "0.1.0"

__all__ = [
    "BipolarSoftSet",
    "CellValue",
    "DecisionResult",
    "Law",
    "LawReport",
    "ParameterSpace",
    "ScoreRow",
    "TabularForm",
    "and_product",
    "catalogue",
    "check_law",
    "decide",
    "dump",
    "ensure_same_space",
    "enumerate_bss",
    "errors",
    "exhaustive_tuples",
    "from_document",
    "from_table",
    "gen_bss",
    "get_law",
    "load",
    "or_product",
    "parse",
    "product_space",
    "random_tuples",
    "recheck",
    "render_scores_csv",
    "render_scores_text",
    "render_table_csv",
    "render_table_text",
    "run_catalogue",
    "scores",
    "scores_document",
    "serialize",
    "standard_space",
    "table_document",
    "to_document",
    "to_table",
]
