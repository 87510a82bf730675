"""qspace: exact symbolic and lattice-numeric toolkit for q-deformed quantum kinematics.

The package implements the coordinate algebras of four quantum spaces with a
confluent normal-ordering engine, their conjugation and star-product
structure, the extended position-momentum algebras with both differential
calculi, exactly solved momentum-eigenfunction series, the fully finite
Grassmann sector, and quasipoint lattices with Jackson integration, spectral
projectors and expectation values.  Everything symbolic runs over exact
Laurent polynomials in q^(1/2) with Gaussian-rational coefficients.

Entry points: the ``qspace`` command line (``qspace verify --suite all``),
the HTTP service (``qspace serve`` / ``qspace.service:app``), and the module
APIs re-exported below.
"""

from .scalar import LAMBDA, LAMBDA_PLUS, ONE, Q, QRational, QScalar, qpow
from .spaces import SPACE_NAMES, SpaceSpec, load_space, space
from .ncalg import (NCPoly, from_real_coords, nc_conjugate, ncmul, normal_order,
                    star_product, to_real_coords)
from .rmatrix import RMatrix, load_rmatrix
from .phasespace import PhaseAlgebra, phase_algebra
from .qexp import BiSeries, residual, solve_qexp, solve_qexp_dual
from .grassmann import (GrassmannSpace, Supernumber, combined_form, gram_determinant,
                        grassmann_delta, grassmann_space, grassmann_vol, sesquilinear)
from .lattice import (LatticeFunction, LatticeSpec, Quasipoint, density,
                      expectation_position, integrate, jackson_1d, lattice_delta,
                      projector_E, spectral_apply)
from .verify import Report, combined_integral, run_suite

__version__ = "0.1.0"

__all__ = [
    "QScalar", "QRational", "qpow", "ONE", "Q", "LAMBDA", "LAMBDA_PLUS",
    "SpaceSpec", "space", "load_space", "SPACE_NAMES",
    "NCPoly", "normal_order", "ncmul", "nc_conjugate", "star_product",
    "to_real_coords", "from_real_coords",
    "RMatrix", "load_rmatrix", "PhaseAlgebra", "phase_algebra",
    "BiSeries", "solve_qexp", "solve_qexp_dual", "residual",
    "GrassmannSpace", "Supernumber", "grassmann_space", "sesquilinear",
    "combined_form", "grassmann_delta", "grassmann_vol", "gram_determinant",
    "LatticeSpec", "LatticeFunction", "Quasipoint", "jackson_1d", "integrate",
    "lattice_delta", "projector_E", "spectral_apply", "density",
    "expectation_position", "combined_integral",
    "Report", "run_suite",
    "__version__",
]
