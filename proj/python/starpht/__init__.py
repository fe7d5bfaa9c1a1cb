from ._core import (
    GeometryError,
    NotSimpleError,
    Polygon,
    bottleneck,
    center,
    decompose_check,
    diagram,
    is_general_position,
    is_star_shaped,
    kernel_vertices,
    monodromy,
    pht,
    random_convex,
    random_star,
    regular_ngon,
    spiral,
)

__all__ = [
    "GeometryError",
    "NotSimpleError",
    "Polygon",
    "bottleneck",
    "center",
    "decompose_check",
    "diagram",
    "is_general_position",
    "is_star_shaped",
    "kernel_vertices",
    "monodromy",
    "pht",
    "random_convex",
    "random_star",
    "regular_ngon",
    "spiral",
]
