import numpy as np

INNER_LIKE = 'inner-like'
OUTER_LIKE = 'outer-like'
MIXED = 'mixed'
UNDETERMINED = 'undetermined'
LABELS = (INNER_LIKE, OUTER_LIKE, MIXED, UNDETERMINED)


def det_ring_samples(A, r, n_angles=256):
    """det A(r e^{i phi_j}) on the half-offset angles phi_j = 2pi (j + 1/2) / n_angles."""
    angles = 2 * np.pi * (np.arange(n_angles) + 0.5) / n_angles
    return np.array([A.det(r * np.exp(1j * phi)) for phi in angles])


def classify_by_det(A, radii=(0.9, 0.99, 0.999), n_angles=256, inner_tol=1e-2, outer_tol=1e-3,
                    return_details=False):
    """Classifies a matrix function through the boundary behavior of its determinant.

    A is inner exactly when det A is a scalar inner function, and outer exactly when det A is a scalar outer
    function. Both properties are tested on sampled rings:

    - inner-like: the median of |1 - |det A|| over every ring does not increase with the radius and is at most
      inner_tol on the outermost ring;
    - outer-like: log|det A(0)| matches the mean of log|det A| over the outermost ring within outer_tol (any inner
      factor makes the ring mean strictly larger);
    - mixed: neither test passes while the ring mean exceeds log|det A(0)|;
    - undetermined: det A vanishes at 0 or on a ring, or the samples contradict the mean value inequality.

    When both tests pass, the boundary modulus defect decides: a median of |1 - |det A|| at most outer_tol on the
    outermost ring (a unitary constant, both inner and outer) gives inner-like, a larger one (a near-constant outer
    function) gives outer-like. The outcome of each test is kept in the details.

    Args:
        A: A MatrixFunction handle (its det_fn is used when available).
        radii: Optional increasing radii of the rings. Default: (0.9, 0.99, 0.999).
        n_angles: Optional number of angles per ring. Default: 256.
        inner_tol: Optional tolerance of the inner test on the outermost ring. Default: 1e-2.
        outer_tol: Optional tolerance of the mean value test. Default: 1e-3.
        return_details: Optional boolean; when True, a dict with the measured quantities is returned as well.
            Default: False.

    Returns:
        One of 'inner-like', 'outer-like', 'mixed' or 'undetermined' (and the details dict if requested).
    """
    radii = np.asarray(radii, dtype=float)
    assert len(radii) >= 1 and np.all(np.diff(radii) > 0) and radii[0] > 0 and radii[-1] < 1, \
        f'The radii {radii.tolist()} should be increasing inside (0, 1).'

    rings = [np.abs(det_ring_samples(A, r, n_angles)) for r in radii]
    center = abs(A.det(0))
    medians = [float(np.median(np.abs(1 - ring))) for ring in rings]
    details = {'medians': medians, 'log_det_center': None, 'ring_log_mean': None, 'mean_value_gap': None,
               'inner_like': False, 'outer_like': False}

    if center == 0 or not np.isfinite(center) or any(np.min(ring) == 0 or not np.all(np.isfinite(ring))
                                                      for ring in rings):
        label = UNDETERMINED
    else:
        details['log_det_center'] = float(np.log(center))
        details['ring_log_mean'] = float(np.mean(np.log(rings[-1])))
        gap = details['ring_log_mean'] - details['log_det_center']
        details['mean_value_gap'] = gap

        inner_like = all(b <= a for a, b in zip(medians[:-1], medians[1:])) and medians[-1] <= inner_tol
        outer_like = abs(gap) <= outer_tol
        details['inner_like'], details['outer_like'] = inner_like, outer_like
        if inner_like and outer_like:
            label = INNER_LIKE if medians[-1] <= outer_tol else OUTER_LIKE
        elif inner_like:
            label = INNER_LIKE
        elif outer_like:
            label = OUTER_LIKE
        elif gap > outer_tol:
            label = MIXED
        else:
            label = UNDETERMINED

    return (label, details) if return_details else label
