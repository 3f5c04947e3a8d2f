from .complex import (
    DEFAULT_ENUMERATION_BUDGET,
    EnumerationBudgetExceeded,
    MalformedRational,
    Point,
    Simplex,
    SimplicialComplex,
    Violation,
    barycentric_subdivide_edge,
    closure,
    enumerate_subcomplexes,
    format_rational,
    parse_rational,
    point_membership,
    validate,
)
from .fixtures import fixture
