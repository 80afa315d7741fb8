"""Precubical sets, their reductions, and fundamental bipartite graph counts.

Thin layer over the compiled ``_precubical`` module. Certificates and FBG
tables come back as plain dicts.
"""

from ._precubical import (
    Complex,
    ConditionsFailed,
    DocumentSyntaxError,
    GuaranteeLost,
    NotAcyclic,
    PathExplosion,
    PrecubicalError,
    RecipeStepFailed,
    ValidationFailed,
    are_isomorphic,
    auto_reduce,
    dihomotopy_classes,
    edge_collapse,
    euler_characteristic,
    example_recipe,
    export_dot,
    extremal_vertices,
    fbg,
    fbg_equal,
    fixture_names,
    grid_with_holes,
    is_regular,
    is_subcomplex,
    maximal_vertices,
    minimal_vertices,
    named_fixture,
    one_skeleton_is_acyclic,
    opposite,
    parse,
    serialize,
    square_one_free,
    square_two_free,
    standard_cube,
    transpose,
    validate,
)


def class_count(complex, source, target):
    """Number of dihomotopy classes of edge paths from source to target."""
    return len(dihomotopy_classes(complex, source, target))


__all__ = [name for name in dir() if not name.startswith("_")]
