"""Exact finite-field coding theory and entanglement-assisted MDS codes.

Layers, bottom to top:

  gf          arithmetic in GF(p^e), Frobenius maps, twisted bilinear forms
  fmatrix     dense exact matrices: RREF, rank, kernels, entrywise Frobenius
  lincode     linear codes, duals, intersections, distance, MDS certificates
  rankmetric  rank weight, Moore matrices, MRD certification
  eaqec       ebit counts (two routes) and [[n,k,d;c]]_q assembly
  families    the three verified constructions and the published tables
  cli         command-line front end
"""
from .errors import CodingError
from .gf import Element, FieldSpec, enumerate_elements, field_new, frobenius, galois_form, primitive_element
from .fmatrix import FMatrix
from .lincode import (DistanceReport, LinearCode, MdsReport, code_frobenius,
                      euclidean_dual, from_generator, from_parity_check,
                      galois_dual, intersection_basis_bruteforce,
                      intersection_dim, is_mds, min_distance)
from .rankmetric import (MooreSpec, MrdReport, is_mrd, linearly_independent_over_base,
                         min_rank_distance_exhaustive, moore_matrix, rank_weight)
from .eaqec import EaqecParams, PairReport, assemble, ebits_product, ebits_stack, singleton_slack
from .families import (TABLE1_ROWS, TABLE2_ROWS, FamilyCertificate, GrsSpec,
                       gabidulin_family, grs_extended_family,
                       grs_extended_generator, grs_extended_spec, table1,
                       table2, vandermonde_family)

__version__ = "1.0.0"
