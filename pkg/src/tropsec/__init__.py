"""Tropical lower bounds on dimensions of joins and secant varieties.

The package evaluates the linear, affine and Voronoi partition problems on
monomial-support configurations exactly over the rationals, builds witnesses
from codes and tilings, searches for good witnesses, and cross-checks the
resulting bounds with a Terracini rank computation over a prime field.
"""

from tropsec.geometry import GramForm, affine_dim, dist_sq, rank
from tropsec.models import (
    ModelDescriptor,
    PointConfig,
    expected_secant_dim,
    grassmann_config,
    model_dims,
    segre_config,
    segre_veronese_config,
    veronese_config,
)
from tropsec.bounds import (
    PartitionResult,
    Witness,
    affine_to_linear_witness,
    eval_affine_partition,
    eval_linear_partition,
    eval_voronoi_partition,
    project_config,
    voronoi_to_affine_witness,
)

__version__ = "0.1.0"

__all__ = [
    "GramForm",
    "ModelDescriptor",
    "PartitionResult",
    "PointConfig",
    "Witness",
    "affine_dim",
    "affine_to_linear_witness",
    "dist_sq",
    "eval_affine_partition",
    "eval_linear_partition",
    "eval_voronoi_partition",
    "expected_secant_dim",
    "grassmann_config",
    "model_dims",
    "project_config",
    "rank",
    "segre_config",
    "segre_veronese_config",
    "veronese_config",
    "voronoi_to_affine_witness",
]
