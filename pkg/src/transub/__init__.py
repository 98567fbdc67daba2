"""Upper bounds and exact search for transitive subtournaments in digraphs."""

from .bip import (AdjPolynomial, BipInput, adjacency_poly, bip_bound, bip_feasible,
                  block_intersection_coeffs, block_intersection_poly, falling_factorial,
                  thm54_bound)
from .bounds import (BoundReport, BoundSummary, best_bound, drt_bound_exact, drt_upper_bound,
                     hoffman_general, hoffman_regular, interlacing_bound, parity_refine)
from .digraph import (Digraph, DigraphClass, DigraphError, classify, directed_cycle,
                      paley_tournament, random_tournament, read_digraph, transitive_tournament,
                      validate_digraph, write_digraph)
from .field import FiniteField, build_field
from .search import (SearchResult, balance_check, max_transitive, max_transitive_bb,
                     max_transitive_brute, verify_transitive)
from .spectral import (SeidelSpectrum, quadratic_form_F, quadratic_form_SS, seidel_action,
                       spectrum)

__version__ = "0.1.0"
