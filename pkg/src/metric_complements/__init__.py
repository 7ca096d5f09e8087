"""Metric complements and double complements of convex bodies in Euclidean space."""
from .bodies import (
    Ball, BallCertificate, ConvexBody, HPolytope, MembershipVerdict, SandwichSet, Status,
    VPolytope, bounding_box, chebyshev_ball, contains, distance, distances, interior_margin,
    interior_margins, project, sample_points, translate,
)
from .complements import (
    double_complement_membership, double_complement_verdicts, in_metric_complement,
    metric_complement_witness, sandwich_double_complement,
)
from .errors import (
    ContractViolation, DimensionMismatch, EmptyBody, EmptyComplementSample, EmptyInterior,
    GeometryError, GridTooLarge, NoConvergence, NotLocated, OutOfBall, PreconditionFailed,
    SingularMatrix, Unbounded,
)
from .lab import (
    GridOracle, Label, VerificationReport, build_grid_oracle, oracle_double_complement,
    oracle_double_complements, random_body, verify_theorem,
)
from .linalg import Hyperplane, affine_system, barycentric, solve_linear
from .shapes import body_from_dict, body_to_dict, load_shape, save_shape
from .simplex import (
    Simplex, barycentre, facet_hyperplanes, inradius_at, is_simplex, perturbation_check,
    perturbation_tolerance, regular_simplex, scaled_simplex,
)
from .witnesses import (
    SegmentWitness, ball_transport, closure_interior_witness, density_witness,
    segment_interior, segment_interior_ball, verify_certificate,
)

__version__ = "0.1.0"
