"""Exact mixed Hodge and E-polynomials of character varieties."""

from .abelmhp import MhpResult, mhp_generic, mhp_gl, mhp_sl, mhp_sp, specialize
from .combinat import (Bipartition, Partition, bipartitions, divisors, hyperoct_class_size,
                       moebius, multinomial, parse_partition, partitions, sn_class_size)
from .errors import (CapacityError, CharVarError, ConsistencyError, DivisibilityError,
                     DomainError, StructureError)
from .freegrp import (EPolyReport, b_polys, e_irr_gl, e_sl_pgl, e_stratum_gl, e_total_gl)
from .groups import GroupSpec
from .plethys import TruncSeries, pexp, plog, psi, series_mul, sym_power_e
from .polycore import ExactPoly, exact_div

__version__ = "0.1.0"
