class DomainError(ValueError):
    """A formula or constructor was called outside its published parameter range."""


class InvalidIncidence(ValueError):
    """Vertex-facet data that cannot be the boundary of a polytope."""


class GeometryError(ValueError):
    """Degenerate or non-convex-position input to the exact hull kernel."""
