"""Exact lattice cones, staircase surfaces, triangle-tile trajectories
and the U/D shape codec, plus the algebra of roofs over them."""

from .cones import (
    ConjUpSet,
    StdUpSet,
    conj_contains,
    conj_height,
    conj_roof_generators,
    is_roof,
    minimalize,
    roof_add,
    std_contains,
    std_roof_generators,
)
from .dynamics import (
    Chart,
    Trajectory,
    chart_cover,
    closed_trajectories_of_roof,
    closed_trajectory_roofs,
    decode,
    encode,
    step,
    trace,
)
from .errors import (
    BudgetExceeded,
    ChartCoverError,
    DeadEndError,
    EmptyRegionError,
    ForkError,
    GeometryError,
    LemmaViolationError,
    NormPartitionError,
    NotOnSurfaceError,
    SectionError,
    WindowOverflowError,
)
from .lattice import (
    LHalf,
    PlanePoint,
    QPoint,
    embed,
    inverse_embed,
    monomial_text,
    project,
)
from .surface import (
    Classification,
    Window,
    classify,
    flat_tiles_in,
    in_tiles_expanded,
    is_consistent,
    norm,
    on_surface,
    section_at,
    seed_window,
    surface_tiles,
    vector_field_at,
)
from .tiles import (
    FlatTile,
    Port,
    SlantTile,
    TangentElement,
    flatten,
    gradient,
    parse_tile,
    port_candidates,
    sigma,
    sigma_inv,
    tangent,
    tile,
    vertices,
)

__version__ = "0.1.0"
