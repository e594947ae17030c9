"""Fair partitions of nested convex bodies by straight cuts."""
from .errors import (GeometryError, NumericalFailure, OddNError, PizzaError,
                     TheoremViolation, WitnessFailure)
from .geom import (ConvexPolygon, OrientedLine, Pizza, Point2, alpha_section, area, clip,
                   direction_vectors, section_fraction, side_of)
from .sections import (SectionProfile, SimultaneousSection, find_corollary_section,
                       find_halving_cut, find_simultaneous_section, profile)
from .partition import (CutNode, FairnessReport, Slice, check_disk_deficiency,
                        fair_partition, fair_slice_from_half, verify_partition)
from .chain import (BoundaryPoint, ChainReport, build_chain, covering_number,
                    next_chain_point)

__version__ = "0.1.0"

__all__ = [
    "BoundaryPoint", "ChainReport", "ConvexPolygon", "CutNode", "FairnessReport",
    "GeometryError", "NumericalFailure", "OddNError", "OrientedLine", "Pizza", "PizzaError",
    "Point2", "SectionProfile", "SimultaneousSection", "Slice", "TheoremViolation",
    "WitnessFailure", "alpha_section", "area", "build_chain", "check_disk_deficiency", "clip",
    "covering_number", "direction_vectors", "fair_partition", "fair_slice_from_half",
    "find_corollary_section", "find_halving_cut", "find_simultaneous_section",
    "next_chain_point", "profile", "section_fraction", "side_of", "verify_partition",
]
