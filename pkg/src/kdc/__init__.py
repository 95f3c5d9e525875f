"""Combinatorics of degeneration strata.

Line charts with their admissibility calculus, labeled strata and the
occupancy-weight obstruction oracles, abstract face lattices, and the
glued dual complexes with their exports live in the submodules; the
most commonly used entry points are re-exported here.
"""

from .counting import a, ballot, m_k, m_profile, n3_counts, sum_of_three
from .dualcomplex import (
    Cell,
    DualComplex,
    build,
    delta_K,
    export,
    grow_rows,
    local_chart,
    parse_complex,
    verify_disk,
)
from .errors import InvariantError
from .linechart import (
    Classification,
    LatticeVertex,
    LineChart,
    canonicalize,
    classify,
    is_admissible,
    parse_chart,
    format_chart,
    subcharts,
    valid_neutral_levels,
    validate,
)
from .strata import (
    ExpansionTuple,
    OccupancyVector,
    PointLabel,
    Stratum,
    cell_dimension,
    chart_of,
    dimension,
    enumerate_admissible,
    faces,
    find_admissible_r,
    format_stratum,
    m_vector,
    occupancy,
    parse_stratum,
    quotient_dimension,
    r_exists,
    smooth,
    specializations,
    stratum_from_chart,
    valid_levels,
)

__version__ = "0.1.0"
