import numpy as np

from MIntPy.MatCore import EXP_NORM_CAP
from MIntPy.MatCore import DimensionMismatchException
from MIntPy.MatCore import mat_exp
from MIntPy.MatCore import mat_exp_batch
from MIntPy.MatCore import scaled_hermitian_exp
from .partition import dyadic_points

CHUNK_LEVEL = 15


def forced_points(f, E, a, b):
    """Sorted partition points every refinement must contain: a, b, the breakpoints of E and f and the jump
    locations of E lying strictly inside (a, b)."""
    candidates = np.concatenate([E.breakpoints(), E.jumps()[0], f.breakpoints()])
    return np.union1d([a, b], candidates[(candidates > a) & (candidates < b)])


def cell_exponentials(coeffs, increments, hermitian, norm_cap=EXP_NORM_CAP):
    """exp(c_i dE_i) for every cell; cells with a zero increment or a zero coefficient give the identity."""
    n = increments.shape[-1]
    out = np.broadcast_to(np.eye(n, dtype=complex), increments.shape).copy()
    active = np.any(increments != 0, axis=(-2, -1)) & (coeffs != 0)
    if not np.any(active):
        return out
    if hermitian:
        out[active] = scaled_hermitian_exp(coeffs[active], increments[active], norm_cap)
    else:
        out[active] = mat_exp_batch(coeffs[active][:, None, None] * increments[active], norm_cap)
    return out


def ordered_product(stack):
    """Left-to-right product stack[0] stack[1] ... stack[-1] by pairwise (tree) reduction."""
    stack = np.asarray(stack, dtype=complex)
    n = stack.shape[-1]
    if len(stack) == 0:
        return np.eye(n, dtype=complex)
    while len(stack) > 1:
        if len(stack) % 2:
            stack = np.concatenate([stack, np.eye(n, dtype=complex)[None]])
        stack = stack[0::2] @ stack[1::2]
    return stack[0]


def _grouped_products(stack):
    """Reduces axis 1 of a (segments, 2^level, n, n) stack to the ordered product of each segment."""
    while stack.shape[1] > 1:
        stack = stack[:, 0::2] @ stack[:, 1::2]
    return stack[:, 0]


def segment_products(f, E, forced, level, norm_cap=EXP_NORM_CAP):
    """Ordered products of the cell exponentials of each segment between consecutive forced points, with every
    segment split into 2^level equal cells tagged at their midpoints.

    Work is split into chunks of at most 2^15 cells.

    Returns:
        An array of shape (len(forced) - 1, n, n).
    """
    n_seg, n = len(forced) - 1, E.dim
    if level > CHUNK_LEVEL:
        out = np.empty((n_seg, n, n), dtype=complex)
        pieces = 2 ** (level - CHUNK_LEVEL)
        for k in range(n_seg):
            bounds = np.linspace(forced[k], forced[k + 1], pieces + 1)
            out[k] = ordered_product(segment_products(f, E, bounds, CHUNK_LEVEL, norm_cap))
        return out

    segs_per_chunk = 2 ** (CHUNK_LEVEL - level)
    out = []
    for start in range(0, n_seg, segs_per_chunk):
        sub = forced[start:start + segs_per_chunk + 1]
        points = dyadic_points(sub, level)
        tags = (points[:-1] + points[1:]) / 2
        factors = cell_exponentials(f(tags), E.continuous_increments(points), E.hermitian, norm_cap)
        out.append(_grouped_products(factors.reshape(len(sub) - 1, 2 ** level, n, n)))
    return np.concatenate(out)


def jump_factors(f, E, forced, a, b, norm_cap=EXP_NORM_CAP):
    """Maps the index k of each forced point carrying a jump in (a, b] to the exact factor exp(f(t_k) J_k)."""
    locs, mats = E.jumps_in(a, b)
    factors = {}
    for loc, mat in zip(locs, mats):
        k = int(np.argmin(np.abs(forced - loc)))
        factors[k] = mat_exp(complex(f(np.array([loc]))[0]) * mat, norm_cap)
    return factors


def level_product(f, E, forced, jumps, level, norm_cap=EXP_NORM_CAP):
    """Product over the level-`level` dyadic refinement; jump factors follow the segment ending at their location."""
    products = segment_products(f, E, forced, level, norm_cap)
    for k, factor in jumps.items():
        products[k - 1] = products[k - 1] @ factor
    return ordered_product(products)


def riemann_product(f, E, tau, norm_cap=EXP_NORM_CAP):
    """Ordered product of exp(f(xi_i) (E(t_i) - E(t_{i-1}))) over the cells of a tagged partition.

    Args:
        f: A kernel.
        E: An integrator.
        tau: A TaggedPartition spanning the domain of E.

    Returns:
        The n x n product.
    """
    slack = 1e-12 * max(1.0, abs(E.a), abs(E.b))
    if abs(tau.a - E.a) > slack or abs(tau.b - E.b) > slack:
        raise DimensionMismatchException(f'The partition [{tau.a}, {tau.b}] does not span [{E.a}, {E.b}].')
    if tau.n_cells == 0:
        return np.eye(E.dim, dtype=complex)
    increments = np.diff(E.value(tau.points), axis=0)
    return ordered_product(cell_exponentials(f(tau.tags), increments, E.hermitian, norm_cap))
