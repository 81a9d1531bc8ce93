"""Exact split-quaternion algebra and toric hypersymplectic quotients.

The package has three layers: exact algebra (split quaternions, the flat
structure on B^n, rational linear algebra, integer lattices, LP and
second-order-cone feasibility), the toric layer (moment maps for subtorus
actions, fibers, and the connectedness / compactness / freeness /
degeneracy / smoothness decision procedures), and instance verifiers for
the nilpotent Lie-algebra construction and the pseudo-sphere Killing
triples.  All verdicts are exact unless explicitly tagged as
resolution-limited.
"""

__version__ = "0.1.0"

from .algebra import (BASIS, BMatrix, BVector, I, ONE, S, SplitQuaternion,
                      Square, T, abelian_element, classify_square,
                      classify_square_criterion, from_complex_pair,
                      group_membership, module_action, to_complex_pair)
from .analysis import (AnalysisReport, Options, analyze, cint_probe,
                       compactness_test, connectedness_test, degeneracy_test,
                       freeness_test, smoothness_test)
from .cones import (Affine, Cone, SOCSystem, Verdict, boundary_meet,
                    circle_points, positively_spanning, soc_feasible,
                    strict_interior_point)
from .exact import ComplexRational, QuadraticValue, sqrt_fraction
from .flat import FlatStructure, flat_structure
from .induced import (DegenerateAtPoint, InducedStructure, NotOnLevelSet,
                      induced_structure)
from .lattice import (extends_to_lattice_basis, integral_kernel_basis,
                      smith_normal_form)
from .liealg import (DegenerateMetric, Form, LieAlgebra, ce_differential,
                     closedness_report, endo_from_pair, jacobi_check,
                     nilpotency_step, nilpotent5_example, wedge_form)
from .lp import LPResult, lp_feasible, solve_lp, verify_farkas
from .sasaki import (NoConsistentAssignment, cone_compare, find_assignment,
                     positive_norm_points, sasaki_check, unit_sphere_points)
from .symmetric import (ConstructionError, QuarticData, SymmetricConstruction,
                        build_symmetric_hs)
from .toric import (FiberOrbit, Incidence, ToricConfig, TorusData,
                    build_torus_data, cone_system, derived_values,
                    example_family, fiber_enumerate, incidence, level_witness,
                    moment_map, point_to_coords, coords_to_point)
