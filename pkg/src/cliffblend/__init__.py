"""Exact computations with blends of parallelisms and Clifford-like parallelisms
in the projective 3-space over a rational quaternion skew field."""

from .blendcore import FinitePartition, blend_from_seed, enumerate_blends, is_blend, join_partitions
from .doublespace import LEFT, RIGHT, Side, common_lines, lr_equivalent, subfield_invariant, transversal
from .exactnum import is_division, same_square_class, squarefree_part
from .projgeom import Line, Point, line_from_span, meet, polar_line
from .quat import HAMILTON, AlgebraSpec, Quaternion
from .cliffordlike import ParallelismDescriptor, are_parallel, class_line, ds_check

__version__ = "0.1.0"
