"""Randomized exact dimensions of secant varieties and their Grassmannians."""

from .errors import SecgrassError
from .exactfield import DEFAULT_PRIME, FieldCtx, Jet, RationalCtx, Rng, make_field
from .polymap import PolyMap, Term
from .secdim import (CheckResult, ComputeCfg, DimensionEstimate, Dims, check_inequalities,
                     expdim_Ghk, expdim_Gk, expdim_Sk, fiber_dim, grass_dim, grass_secant_dim,
                     secant_dim, span_dim)
from .varieties import (Variety, catalog, cone_over, from_selector, load_variety, project,
                        save_variety, scroll, segre, validate, veronese)

__version__ = "0.1.0"
