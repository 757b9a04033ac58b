"""Cohen-Macaulayness of graph independence complexes, specialized for
triangular graphs."""

from . import cmcheck, complexes, graphs, homology, ideals

__all__ = ["graphs", "complexes", "homology", "cmcheck", "ideals"]
__version__ = "0.1.0"
