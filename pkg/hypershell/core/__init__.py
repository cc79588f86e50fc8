# @Email: hypershell-dev@users.noreply.github.com
# @Website: https://github.com/hypershell/hypershell
# @License: https://github.com/hypershell/hypershell/blob/master/LICENSE
# @github: https://github.com/hypershell/hypershell
#
# Copyright (c) 2018-2020 the HyperShell authors and collaborators

# constants.py
from .constants import *

# Exceptions.py
from .Exceptions import HypershellError
from .Exceptions import CycloError
from .Exceptions import HermitianError
from .Exceptions import EigenvectorError
from .Exceptions import NotHyperbolic
from .Exceptions import HypothesisFailure
from .Exceptions import PreconditionUnmet
from .Exceptions import CatalogError
from .Exceptions import RelationError
from .Exceptions import StageError
from .Exceptions import PipelineError
from .Exceptions import ExceedsCap
from .Exceptions import NotRational
from .Exceptions import INFINITY

# util.py
from .util import timer
from .util import timer_ms
from .util import Timer
from .util import lcm
from .util import as_fraction
from .util import fraction_str

# cyclo.py
from .cyclo import CycNum
from .cyclo import RealInterval
from .cyclo import real_sign
from .cyclo import real_interval
from .cyclo import complex_interval
from .cyclo import numeric
from .cyclo import root_of_unity
from .cyclo import lift
from .cyclo import is_zero
from .cyclo import galois_apply
from .cyclo import galois_group
from .cyclo import galois_orbit
from .cyclo import min_poly
from .cyclo import as_cyc
from .cyclo import field_degree
from .cyclo import unit_root
from .cyclo import unit_root_angle

# hlinalg.py
from .hlinalg import Vec3
from .hlinalg import Mat3
from .hlinalg import HermForm
from .hlinalg import IsometryType
from .hlinalg import herm_inner
from .hlinalg import box
from .hlinalg import proj_equal
from .hlinalg import proj_key
from .hlinalg import classify
from .hlinalg import proj_order
from .hlinalg import is_infinite_order
from .hlinalg import signature
from .hlinalg import eigenvector
from .hlinalg import repeated_eigenvalues

# words.py
from .words import parse_word
from .words import free_reduce
from .words import expand
from .words import shift_word
from .words import inverse_word
from .words import word_label
from .words import label_order

# families.py
from .families import GroupSpec
from .families import CatalogEntry
from .families import TriangleGroup
from .families import TriangleParams
from .families import unit
from .families import sporadic_group
from .families import thompson_group
from .families import mostow_tau
from .families import mostow_group
from .families import triangle_params
from .families import params_of
from .families import dm_exponents
from .families import on_mostow_curve
from .families import on_sauter_curve
from .families import e2_symmetry
from .families import sqrt_cyc
from .families import field_generators
from .families import field_names
from .families import named_parameter
from .families import thompson_parameter
from .families import canonical_name
from .families import top_status
from .families import catalog
from .families import parse_label
from .families import build_group

# braid.py
from .braid import CONTROL_PAIRS
from .braid import GroupType
from .braid import braid_length
from .braid import braid_angle
from .braid import braid_length_closed_form
from .braid import control_word_pairs
from .braid import group_type
from .braid import expected_central_angle
from .braid import central_element
from .braid import central_angle_matches

# Shell.py
from .Shell import Word
from .Shell import WordTable
from .Shell import Pyramid
from .Shell import OrbitClass
from .Shell import Shell
from .Shell import ShellBuilder
from .Shell import make_pyramid
from .Shell import cyclic_key
from .Shell import shift_for_ridge
from .Shell import conjugate_pyramid
from .Shell import conjugation_by_P
from .Shell import conjugation_by_P_inverse
from .Shell import ridge_report
from .Shell import build_shell

# realize.py
from .realize import EMBEDDED
from .realize import NOT_EMBEDDED
from .realize import UNRESOLVED
from .realize import polar_vector
from .realize import realize
from .realize import ideal_vertices
from .realize import bottom_polygon_embedded
from .realize import write_bottom_svg
from .realize import stabilizer_order
from .realize import vertex_stabilizers
from .realize import fixed_point
from .realize import fixed_point_incidences
from .realize import ShellRealization
from .realize import realize_shell

# invariants.py
from .invariants import control_traces
from .invariants import trace_field
from .invariants import match_field
from .invariants import sqrt_identity
from .invariants import signature_spectrum
from .invariants import is_cocompact
from .invariants import parabolic_tau_norm
from .invariants import vertical_translation
from .invariants import cusp_bounds
from .invariants import reflection_volume_bound
from .invariants import chi_bound
from .invariants import minimal_index
from .invariants import same_trace_field
from .invariants import commensurability_screen
from .invariants import verify_relations
from .invariants import relation_exponent
from .invariants import reflection_angle
from .invariants import check_failure
from .invariants import ISOMORPHISMS
from .invariants import Isomorphism
from .invariants import check_isomorphism

# Stage.py
from .Stage import Stage

# stage_subclasses.py
from .stage_subclasses import TypeStage
from .stage_subclasses import ShellStage
from .stage_subclasses import RealizeStage
from .stage_subclasses import InvariantsStage
from .stage_subclasses import VerifyStage

# Pipeline.py
from .Pipeline import Pipeline
