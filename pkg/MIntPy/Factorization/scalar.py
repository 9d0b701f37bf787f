import numpy as np
from scipy.signal import find_peaks

from MIntPy.Blaschke import scalar_blaschke_product
from MIntPy.ProdInt import herglotz_kernel

LOG_INTEGRAL_FLOOR = -1e6


def herglotz_arc_integral(z, a, b):
    """Closed form of int_a^b h_z(phi) dphi = (b - a) + 2i log((z - e^{ib}) / (z - e^{ia})), vectorized over arcs.

    The principal logarithm is exact as long as z does not lie between an arc and its chord, which is guaranteed
    by |z| < cos((b - a) / 2).
    """
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    assert np.all(b >= a) and np.all(b - a <= np.pi / 2), 'Expected arcs of length at most pi/2.'
    assert np.all(abs(z) < np.cos((b - a) / 2)), f'The point {z} is too close to one of the arcs.'
    return (b - a) + 2j * np.log((z - np.exp(1j * b)) / (z - np.exp(1j * a)))


def linear_measure_herglotz(z, nodes, values):
    """int h_z dmu for the measure whose distribution function linearly interpolates values at the nodes."""
    nodes, values = np.asarray(nodes, dtype=float), np.asarray(values, dtype=float)
    slopes = np.diff(values) / np.diff(nodes)
    active = slopes != 0
    return complex(np.sum(slopes[active] * herglotz_arc_integral(z, nodes[:-1][active], nodes[1:][active])))


def singular_inner_value(z, angles, masses):
    """exp(sum_k mu_k h_z(theta_k)), the scalar singular inner function of a finite atomic measure."""
    exponent = np.sum(np.asarray(masses, dtype=float) * herglotz_kernel(z, np.asarray(angles, dtype=float)))
    return complex(np.exp(exponent))


class ScalarFactorization:
    """Scalar inner-outer factorization f = c B S O of a bounded analytic function on the disk.

    The Blaschke part B has the given zeros, the singular part S = exp(sum mu_k h_z(theta_k)) the given atoms, and
    the outer part O(z) = exp(-(1/2pi) int h_z(phi) log|f(e^{i phi})| dphi) the given boundary log-modulus, sampled
    on a uniform grid of [0, 2pi) and integrated with the periodic trapezoidal rule.
    """
    def __init__(self, log_modulus, zeros=(), singular_masses=(), constant=1.0):
        self.log_modulus = np.asarray(log_modulus, dtype=float).ravel()
        self.angles = 2 * np.pi * np.arange(len(self.log_modulus)) / len(self.log_modulus)
        self.zeros = np.asarray(zeros, dtype=complex).ravel()
        atoms = list(singular_masses)
        self.atom_angles = np.array([float(angle) for angle, _ in atoms])
        self.atom_masses = np.array([float(mass) for _, mass in atoms])
        self.constant = complex(constant)
        assert abs(abs(self.constant) - 1) <= 1e-12, 'The constant should be unimodular.'

    def blaschke(self, z):
        return complex(scalar_blaschke_product(self.zeros, np.ones(len(self.zeros), dtype=int), z))

    def singular(self, z):
        if len(self.atom_masses) == 0:
            return 1 + 0j
        return singular_inner_value(z, self.atom_angles, self.atom_masses)

    def outer(self, z):
        assert abs(z) < 1, f'The outer part is evaluated inside the disk, found |z| = {abs(z)}.'
        return complex(np.exp(-np.mean(herglotz_kernel(complex(z), self.angles) * self.log_modulus)))

    def inner(self, z):
        return self.blaschke(z) * self.singular(z)

    def __call__(self, z):
        return self.constant * self.inner(z) * self.outer(z)

    def boundary_modulus_residual(self, exclusion=1e-3):
        """max | |B S|(e^{i phi}) - 1 | |f(e^{i phi})| over the boundary samples away from the atoms."""
        points = np.exp(1j * self.angles)
        inner = scalar_blaschke_product(self.zeros, np.ones(len(self.zeros), dtype=int), points)
        keep = np.ones(len(points), dtype=bool)
        for angle, mass in zip(self.atom_angles, self.atom_masses):
            distance = np.abs(np.angle(np.exp(1j * (self.angles - angle))))
            keep &= distance > exclusion
            with np.errstate(divide='ignore', invalid='ignore'):
                inner = inner * np.exp(mass * herglotz_kernel(points, angle))
        modulus = np.exp(self.log_modulus)
        return float(np.max(np.abs(np.abs(inner[keep]) - 1) * modulus[keep]))


def scalar_inner_outer(boundary_log_modulus, zeros=(), singular_masses=(), constant=1.0, n_samples=4096):
    """Builds the scalar factorization f = c B S O from boundary data.

    Args:
        boundary_log_modulus: log|f(e^{i phi})|, either sampled on the uniform grid 2pi k / N or as a vectorized
            callable sampled on n_samples points.
        zeros: Optional zeros of f in the open disk, repeated by multiplicity. Default: ().
        singular_masses: Optional atoms (theta_k, mu_k) of the singular measure, mu_k > 0. Default: ().
        constant: Optional unimodular constant c. Default: 1.
        n_samples: Optional number of boundary samples taken from a callable. Default: 4096.

    Returns:
        A ScalarFactorization.
    """
    if callable(boundary_log_modulus):
        angles = 2 * np.pi * np.arange(n_samples) / n_samples
        boundary_log_modulus = boundary_log_modulus(angles)
    samples = np.asarray(boundary_log_modulus, dtype=float).ravel()
    assert len(samples) >= 2, 'Expected at least two boundary samples.'

    log_integral = 2 * np.pi * np.mean(samples) if np.all(np.isfinite(samples)) else -np.inf
    if not log_integral >= LOG_INTEGRAL_FLOOR:
        raise LogIntegrabilityException(f'The sampled integral of log|f| ({log_integral}) is below '
                                        f'{LOG_INTEGRAL_FLOOR}.')
    zeros = np.asarray(zeros, dtype=complex).ravel()
    assert np.all(np.abs(zeros) < 1), 'The zeros should lie in the open disk.'
    assert all(mass > 0 and 0 <= angle < 2 * np.pi for angle, mass in singular_masses), \
        'Atoms should have a positive mass and an angle in [0, 2pi).'
    return ScalarFactorization(samples, zeros, singular_masses, constant)


def recover_singular_masses(f, r=0.999, n_angles=2 ** 15, boundary_log_modulus=None, logarithmic=False,
                            height_ratio=0.05, min_mass=1e-6):
    """Recovers the atoms of the singular measure of a scalar function from its modulus on the circle of radius r.

    The measure -log|f(r e^{i phi})| dphi / 2pi converges weakly to the singular measure plus the absolutely
    continuous part -log|f(e^{i phi})| dphi / 2pi, which is subtracted when the boundary log-modulus is given. The
    atoms are located at the peaks of the sampled density and receive the mass of the angles closest to them.

    Args:
        f: Scalar callable on the disk, vectorized over arrays of points.
        r: Optional sampling radius. Default: 0.999.
        n_angles: Optional number of uniformly spaced angles. Default: 2^15.
        boundary_log_modulus: Optional vectorized callable phi -> log|f(e^{i phi})|. Default: None.
        logarithmic: Optional boolean; when True, f returns a logarithm of the function instead of its values, which
            avoids the underflow of |f| next to heavy atoms. Default: False.
        height_ratio: Optional minimum peak height, relative to the highest peak. Default: 0.05.
        min_mass: Optional minimum mass of a reported atom. Default: 1e-6.

    Returns:
        A list of tuples (angle, mass) sorted by angle.
    """
    assert 0 < r < 1, f'The radius ({r}) should lie in (0, 1).'
    angles = 2 * np.pi * np.arange(n_angles) / n_angles
    values = np.asarray(f(r * np.exp(1j * angles)), dtype=complex)
    log_modulus = np.real(values) if logarithmic else np.log(np.abs(values))
    density = -log_modulus / (2 * np.pi)
    if boundary_log_modulus is not None:
        density += np.asarray(boundary_log_modulus(angles), dtype=float) / (2 * np.pi)
    if not np.all(np.isfinite(density)) or np.max(density) <= 0:
        return []

    extended = np.concatenate([density[-1:], density, density[:1]])
    peaks, _ = find_peaks(extended, height=height_ratio * np.max(density))
    peaks = np.unique((peaks - 1) % n_angles)
    if len(peaks) == 0:
        return []

    weights = density * 2 * np.pi / n_angles
    distances = np.abs(np.angle(np.exp(1j * (angles[:, None] - angles[peaks][None, :]))))
    owner = np.argmin(distances, axis=1)
    masses = np.bincount(owner, weights=weights, minlength=len(peaks))
    return [(float(angles[p]), float(m)) for p, m in zip(peaks, masses) if m >= min_mass]


class LogIntegrabilityException(Exception):
    pass
