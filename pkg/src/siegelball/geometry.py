"""Ball and Siegel-domain coordinates and the Cayley transform between them.

The unit ball sits in C^n with distinguished boundary point P = e_n.  A ball
point Z splits as (zeta, eta) with eta = Z_n the coordinate along P.  The
Siegel upper half-space is {(z, w) in C^(n-1) x C : Im w > ||z||^2}; its
boundary hypersurface is {Im w = ||z||^2}.  The Cayley transform

    z = zeta / (1 + eta),   w = i (1 - eta) / (1 + eta)

carries the ball onto the half-space and the sphere minus {-P} onto the
boundary hypersurface, sending P to the origin.  Its inverse is

    zeta = 2 i z / (i + w),   eta = (i - w) / (i + w).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hilbert import as_vector, norm

#: Guard threshold for denominators near a pole.
EPS_DENOM = 1e-12

#: Default tolerance for classifying a point as on-boundary.
DEFECT_TOL = 1e-9


class CayleyPoleError(ValueError):
    """Raised when a point sits on the Cayley pole (eta = -1, resp. w = -i)."""


@dataclass(frozen=True, eq=False)
class SiegelPoint:
    """A point (z, w) of C^(n-1) x C in Siegel coordinates."""

    z: np.ndarray
    w: complex

    def __post_init__(self):
        object.__setattr__(self, "z", as_vector(self.z))
        w = complex(self.w)
        if not (np.isfinite(w.real) and np.isfinite(w.imag)):
            msg = "w must be finite"
            raise ValueError(msg)
        object.__setattr__(self, "w", w)

    @property
    def dim(self) -> int:
        """Dimension of the z-part (one less than the ball dimension)."""
        return self.z.shape[0]


@dataclass(frozen=True)
class DefectReport:
    """Signed distance-like defect of a point plus its classification.

    ``classification`` is one of ``"interior"``, ``"boundary"``,
    ``"exterior"``, decided at tolerance ``tol``.
    """

    value: float
    classification: str
    tol: float


def ball_point(zeta, eta) -> np.ndarray:
    """Assemble a ball point from its (zeta, eta) decomposition."""
    zeta = as_vector(zeta)
    return np.append(zeta, complex(eta))


def ball_parts(Z) -> tuple[np.ndarray, complex]:
    """Split a ball point into (zeta, eta) with eta the last coordinate."""
    Z = as_vector(Z)
    if Z.shape[0] < 1:
        msg = "ball point must have at least one coordinate"
        raise ValueError(msg)
    return Z[:-1], complex(Z[-1])


def cayley(Z, eps: float = EPS_DENOM) -> SiegelPoint:
    """Cayley transform of a ball point into Siegel coordinates.

    Raises :class:`CayleyPoleError` when ``|1 + eta| <= eps`` (the pole at
    the antipode -P of the distinguished boundary point).
    """
    zeta, eta = ball_parts(Z)
    den = 1.0 + eta
    if abs(den) <= eps:
        msg = f"Cayley pole: |1 + eta| = {abs(den):.3e}"
        raise CayleyPoleError(msg)
    return SiegelPoint(zeta / den, 1j * (1.0 - eta) / den)


def inverse_cayley(p: SiegelPoint, eps: float = EPS_DENOM) -> np.ndarray:
    """Inverse Cayley transform of a Siegel point back onto the ball.

    Raises :class:`CayleyPoleError` when ``|i + w| <= eps``.
    """
    den = 1j + p.w
    if abs(den) <= eps:
        msg = f"Cayley pole: |i + w| = {abs(den):.3e}"
        raise CayleyPoleError(msg)
    zeta = 2j * p.z / den
    eta = (1j - p.w) / den
    return np.append(zeta, eta)


def siegel_defect(p: SiegelPoint, tol: float = DEFECT_TOL) -> DefectReport:
    """Defect ``Im w - ||z||^2`` of a Siegel point (positive = interior)."""
    value = float(p.w.imag - norm(p.z) ** 2)
    if abs(value) <= tol:
        cls = "boundary"
    elif value > 0:
        cls = "interior"
    else:
        cls = "exterior"
    return DefectReport(value, cls, tol)


def ball_defect(Z, tol: float = DEFECT_TOL) -> DefectReport:
    """Defect ``||Z||^2 - 1`` of a ball point (negative = interior)."""
    value = float(norm(Z) ** 2 - 1.0)
    if abs(value) <= tol:
        cls = "boundary"
    elif value < 0:
        cls = "interior"
    else:
        cls = "exterior"
    return DefectReport(value, cls, tol)


def _unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return g / np.linalg.norm(g)


def sample_siegel_boundary(
    n: int,
    seed,
    count: int,
    rho_max: float = 1.0,
    t_max: float = 1.0,
) -> list[SiegelPoint]:
    """Deterministic samples on the boundary hypersurface ``Im w = ||z||^2``.

    ``n`` is the ball dimension (so z has n - 1 coordinates); z is drawn with
    ``||z|| <= rho_max`` and ``w = t + i ||z||^2`` with ``|t| <= t_max``.
    """
    if n < 2:
        msg = f"ball dimension must be >= 2, got {n}"
        raise ValueError(msg)
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        z = _unit_vector(rng, n - 1) * (rho_max * rng.uniform())
        t = rng.uniform(-t_max, t_max)
        points.append(SiegelPoint(z, t + 1j * float(np.vdot(z, z).real)))
    return points


def sample_sphere(
    n: int,
    seed,
    count: int,
    min_pole_dist: float = 0.0,
) -> list[np.ndarray]:
    """Uniform samples on the unit sphere of C^n.

    With ``min_pole_dist > 0`` samples are redrawn until
    ``|1 + eta| > min_pole_dist``, keeping them away from the Cayley pole.
    """
    if n < 1:
        msg = f"dimension must be >= 1, got {n}"
        raise ValueError(msg)
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        Z = _unit_vector(rng, n)
        if abs(1.0 + Z[-1]) > min_pole_dist:
            points.append(Z)
    return points


def sample_ball(n: int, seed, count: int, radius: float = 0.9) -> list[np.ndarray]:
    """Uniform samples in the closed ball of the given radius in C^n."""
    if n < 1:
        msg = f"dimension must be >= 1, got {n}"
        raise ValueError(msg)
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        r = radius * rng.uniform() ** (1.0 / (2 * n))
        points.append(_unit_vector(rng, n) * r)
    return points
