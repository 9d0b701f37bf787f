from scipy.integrate import cumulative_trapezoid
import numpy as np

from MIntPy.MatCore import hermitian_part
from MIntPy.MatCore import imaginary_part
from MIntPy.MatCore import stack_norms

NEGATIVITY_TOL = 1e-9


def _is_power_of_two(k):
    return k >= 1 and (k & (k - 1)) == 0


def _boundary_density(T, r, thetas):
    """Im T(r e^{i theta}) / 2pi at the given angles, checked for positivity."""
    density = imaginary_part(T.evaluate_many(r * np.exp(1j * np.asarray(thetas, dtype=float))))
    least = float(np.min(np.linalg.eigvalsh(density)))
    scale = max(1.0, float(np.max(np.abs(density))))
    if least < -NEGATIVITY_TOL * scale:
        raise NegativeImaginaryPartException(f'Im T has eigenvalue {least:.3e} on the circle of radius {r}: '
                                             f'T is not a Herglotz function.')
    return density / (2 * np.pi)


def herglotz_extract(T, r, num_angles):
    """Recovers the nondecreasing Hermitian function sigma of the Herglotz representation of z -> T(rz):

        sigma(t) = (1 / 2pi) int_0^t Im T(r e^{is}) ds,

    integrated with the trapezoidal rule on num_angles equal cells of [0, 2pi]. As r -> 1 these functions converge
    weakly to the representing function of T.

    Args:
        T: A MatrixFunction with nonnegative imaginary part on the disk.
        r: A radius in (0, 1).
        num_angles: A power of two, the number of cells of [0, 2pi].

    Returns:
        A tuple (angles, sigma): the num_angles + 1 grid angles and the values of sigma, shape (num_angles + 1, n, n),
        with sigma[0] = 0.
    """
    assert 0 < r < 1, f'The extraction radius ({r}) should lie in (0, 1).'
    assert _is_power_of_two(num_angles), f'The number of angles ({num_angles}) should be a power of two.'
    angles = 2 * np.pi * np.arange(num_angles + 1) / num_angles
    density = _boundary_density(T, r, angles[:-1])
    density = np.concatenate([density, density[:1]])
    sigma = cumulative_trapezoid(density, angles, axis=0, initial=0)
    return angles, hermitian_part(sigma)


def herglotz_extract_adaptive(T, r, num_angles, rtol=1e-10, max_angles=2 ** 20, min_width=1e-13):
    """Same function sigma as :func:`herglotz_extract`, on a grid refined where Im T(r e^{is}) is sharply peaked.

    Every cell of the uniform grid carries a Simpson estimate of its mass. A cell is halved while the Simpson
    estimates on the cell and on its two halves differ by more than rtol times the mass of the cell (plus rtol times
    the mean density times its width), so peaks of width 1 - r are resolved without refining the whole circle.

    Args:
        T: A MatrixFunction with nonnegative imaginary part on the disk.
        r: A radius in (0, 1).
        num_angles: A power of two, the number of cells of the initial uniform grid.
        rtol: Optional relative tolerance on the cell masses. Default: 1e-10.
        max_angles: Optional budget of grid cells. Default: 2^20.
        min_width: Optional width below which cells are no longer halved. Default: 1e-13.

    Returns:
        A tuple (angles, sigma) as for :func:`herglotz_extract`, with increasing but not equally spaced angles.
    """
    assert 0 < r < 1, f'The extraction radius ({r}) should lie in (0, 1).'
    assert _is_power_of_two(num_angles), f'The number of angles ({num_angles}) should be a power of two.'
    assert rtol > 0, f'The tolerance ({rtol}) should be > 0.'

    samples = _boundary_density(T, r, np.pi * np.arange(2 * num_angles) / num_angles)
    lefts = 2 * np.pi * np.arange(num_angles) / num_angles
    widths = np.full(num_angles, 2 * np.pi / num_angles)
    f_left, f_mid = samples[0::2], samples[1::2]
    f_right = np.roll(f_left, -1, axis=0)
    mean_density = float(np.max(stack_norms(np.sum(f_left, axis=0)[None]))) / num_angles

    done_lefts, done_masses = [], []
    n_cells = num_angles
    while len(lefts) > 0:
        quarters = _boundary_density(T, r, np.concatenate([lefts + widths / 4, lefts + 3 * widths / 4]))
        f_ql, f_qr = quarters[:len(lefts)], quarters[len(lefts):]
        h = widths[:, None, None]
        coarse = h / 6 * (f_left + 4 * f_mid + f_right)
        left_half = h / 12 * (f_left + 4 * f_ql + f_mid)
        right_half = h / 12 * (f_mid + 4 * f_qr + f_right)
        gaps = stack_norms(left_half + right_half - coarse)
        accept = (gaps <= rtol * (stack_norms(left_half + right_half) + mean_density * widths)) | \
                 (widths / 2 < min_width)

        done_lefts += [lefts[accept], lefts[accept] + widths[accept] / 2]
        done_masses += [left_half[accept], right_half[accept]]

        split = ~accept
        n_cells += int(np.sum(split))
        if n_cells > max_angles:
            raise ExtractionBudgetException(f'The extraction on the circle of radius {r} needs more than '
                                            f'{max_angles} cells.')
        half = widths[split] / 2
        lefts = np.concatenate([lefts[split], lefts[split] + half])
        widths = np.concatenate([half, half])
        f_left, f_mid, f_right = (np.concatenate([f_left[split], f_mid[split]]),
                                  np.concatenate([f_ql[split], f_qr[split]]),
                                  np.concatenate([f_mid[split], f_right[split]]))

    lefts, masses = np.concatenate(done_lefts), np.concatenate(done_masses)
    order = np.argsort(lefts, kind='stable')
    angles = np.append(lefts[order], 2 * np.pi)
    sigma = np.concatenate([np.zeros_like(masses[:1]), np.cumsum(masses[order], axis=0)])
    return angles, hermitian_part(sigma)


def herglotz_offset(T, num_angles=64, radius=0.5):
    """The Hermitian constant T0 = Re T(0) of the Herglotz representation, with T(0) taken as the mean of T over the
    circle of the given radius."""
    assert _is_power_of_two(num_angles), f'The number of angles ({num_angles}) should be a power of two.'
    samples = T.evaluate_many(radius * np.exp(2j * np.pi * np.arange(num_angles) / num_angles))
    return hermitian_part(np.mean(samples, axis=0))


class NegativeImaginaryPartException(Exception):
    pass


class ExtractionBudgetException(Exception):
    pass
