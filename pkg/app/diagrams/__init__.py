from .model import (
    DiagramClass,
    InflatedMatching,
    TangledDiagram,
    classify,
    deflate,
    format_diagram,
    inflate,
    is_braid,
    is_matching,
    is_partition,
    is_two_regular,
    make_diagram,
    make_matching,
    parse_diagram,
)
from .bijections import diagram_to_tableau, tableau_to_diagram, theta, theta_inv

__all__ = [
    "DiagramClass",
    "InflatedMatching",
    "TangledDiagram",
    "classify",
    "deflate",
    "diagram_to_tableau",
    "format_diagram",
    "inflate",
    "is_braid",
    "is_matching",
    "is_partition",
    "is_two_regular",
    "make_diagram",
    "make_matching",
    "parse_diagram",
    "tableau_to_diagram",
    "theta",
    "theta_inv",
]
