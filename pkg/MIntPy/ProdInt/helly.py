import numpy as np

from MIntPy.MatCore import spectral_norm
from .product_integral import ProductIntegrator


def helly_convergence_harness(specs, limit, tol=1e-8, slack=None, **kwds):
    """Empirical harness for the convergence of multiplicative integrals int exp(f_k dE_k) to int exp(f dE) when
    uniformly Lipschitz increasing integrators E_k converge to E and uniformly bounded kernels f_k converge to f.

    Violated assumptions (non-increasing integrators, domain mismatches) are reported, not raised.

    Args:
        specs: Sequence of (f_k, E_k) pairs.
        limit: The (f, E) pair of the limit.
        tol: Target certificate of every evaluation. Default: 1e-8.
        slack: Optional allowed increase between consecutive gaps when judging the trend. Default: 10 * tol.
        kwds: Extra keyword arguments forwarded to the ProductIntegrator.

    Returns:
        A dict with the keys 'gaps', 'certificates', 'lipschitz', 'monotone', 'final_gap' and 'violations'.
    """
    slack = 10 * tol if slack is None else slack
    integrator = ProductIntegrator(tol=tol, **kwds)
    f, E = limit
    reference = integrator.integrate(f, E)

    gaps, certificates, lipschitz, violations = [], [], [], []
    for k, (f_k, E_k) in enumerate(specs):
        if (E_k.a, E_k.b) != (E.a, E.b):
            violations.append(f'spec {k}: domain [{E_k.a}, {E_k.b}] differs from [{E.a}, {E.b}]')
            continue
        if not E_k.is_increasing_on():
            violations.append(f'spec {k}: integrator "{E_k.name}" is not increasing')
        result = integrator.integrate(f_k, E_k)
        gaps.append(spectral_norm(result.value - reference.value))
        certificates.append(result.error_certificate + reference.error_certificate)
        lipschitz.append(E_k.lipschitz_constant())

    if len(lipschitz) > 0 and not np.all(np.isfinite(lipschitz)):
        violations.append('the integrators are not uniformly Lipschitz')

    return {
        'gaps': gaps,
        'certificates': certificates,
        'lipschitz': lipschitz,
        'monotone': all(b <= a + slack for a, b in zip(gaps, gaps[1:])),
        'final_gap': gaps[-1] if len(gaps) > 0 else None,
        'violations': violations
    }
