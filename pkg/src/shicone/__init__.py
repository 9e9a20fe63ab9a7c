"""Count Shi-arrangement regions in each Weyl cone with path determinants."""
from .det import count_regions, forbidden_count, poincare_polynomial, region_table
from .digraph import build_digraph
from .oracle import count_antichains
from .rootsystem import parse_type, root_system
from .weyl import element_of, enumerate_group

__all__ = ["build_digraph", "count_antichains", "count_regions", "element_of", "enumerate_group",
           "forbidden_count", "parse_type", "poincare_polynomial", "region_table", "root_system"]
