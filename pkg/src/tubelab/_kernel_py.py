"""Pure-Python tracking kernels.

Fallback twin of the compiled extension module ``tubelab._kernel``: same
algorithms, same operation order, so the two backends agree on every
discrete output (permutations) and differ in floats only at rounding level.

Written polymorphically over the scalar type: hardware ``complex`` by
default, but ``mpmath.mpc`` values pass through untouched, which is how the
tracker escalates to software extended precision when a guard trips.
"""

from __future__ import annotations

import math

BACKEND = "python"

# status codes shared with the compiled kernel
OK = 0
STEP_UNDERFLOW = 1
LEAD_SMALL = 2


def eval_poly(coeffs, z):
    """Horner evaluation; coeffs ascending."""
    acc = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        acc = acc * z + coeffs[k]
    return acc


def eval_poly_dp(coeffs, z):
    """(p(z), p'(z)) in one Horner pass."""
    p = coeffs[-1]
    dp = p * 0
    for k in range(len(coeffs) - 2, -1, -1):
        dp = dp * z + p
        p = p * z + coeffs[k]
    return p, dp


def coeffs_at(cmat, t):
    """Specialize a coefficient family at parameter t.

    cmat[j] lists the ascending parameter-coefficients of the x^j slot;
    the output keeps all slots (formal degree preserved even if the lead
    evaluates small -- the caller guards that).
    """
    return [eval_poly(row, t) for row in cmat]


def _min_pairwise(roots):
    best = None
    n = len(roots)
    for i in range(n):
        for j in range(i + 1, n):
            d = abs(roots[i] - roots[j])
            if best is None or d < best:
                best = d
    # single-root fibers have nothing to swap with: no separation guard
    return best if best is not None else math.inf


def aberth(coeffs, tol=1e-13, max_iter=100):
    """Simultaneous root finding (Aberth-Ehrlich), hardware precision.

    Deterministic: fixed start circle at the Cauchy bound with a fixed
    angular offset breaking conjugation symmetry.
    """
    n = len(coeffs) - 1
    if n <= 0:
        return []
    lead = coeffs[-1]
    if lead == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    if n == 1:
        return [-coeffs[0] / coeffs[1]]
    radius = 1.0 + max(abs(c / lead) for c in coeffs[:-1])
    roots = [
        radius * complex(math.cos(2.0 * math.pi * k / n + 0.4),
                         math.sin(2.0 * math.pi * k / n + 0.4))
        for k in range(n)
    ]
    for _ in range(max_iter):
        done = True
        for i in range(n):
            z = roots[i]
            p, dp = eval_poly_dp(coeffs, z)
            if p == 0:
                continue
            if dp == 0:
                roots[i] = z * 1.0001 + 1e-12
                done = False
                continue
            newton = p / dp
            s = 0j
            for j in range(n):
                if j != i:
                    s += 1.0 / (z - roots[j])
            denom = 1.0 - newton * s
            w = newton if denom == 0 else newton / denom
            roots[i] = z - w
            if abs(w) > tol * max(1.0, abs(roots[i])):
                done = False
        if done:
            break
    return roots


def newton_refine(coeffs, z, tol, max_iter):
    """Newton polish; returns (z, converged flag, last step size)."""
    last = 0.0
    for _ in range(max_iter):
        p, dp = eval_poly_dp(coeffs, z)
        if dp == 0:
            return z, False, last
        dz = p / dp
        z = z - dz
        last = abs(dz)
        if last <= tol * max(1.0, abs(z)):
            return z, True, last
    return z, False, last


def track_polyline(cmat, roots, vertices, newton_tol, min_lead,
                   initial_step, max_halvings, max_newton):
    """Continue all roots along a polyline in the parameter plane.

    Zeroth-order predictor plus Newton corrector; a step is accepted only
    if every root's total correction stays below a quarter of the current
    minimum pairwise root separation and Newton converged within the
    iteration budget.  Returns (roots, status, accepted step count).
    """
    roots = list(roots)
    min_sep = _min_pairwise(roots)
    floor = 0.5 ** max_halvings
    n_steps = 0
    for seg in range(len(vertices) - 1):
        a = vertices[seg]
        b = vertices[seg + 1]
        if a == b:
            continue
        s = 0.0
        h = initial_step
        while s < 1.0:
            step = h if h <= 1.0 - s else 1.0 - s
            t_new = a + (s + step) * (b - a)
            cs = coeffs_at(cmat, t_new)
            scale = max(abs(c) for c in cs)
            if abs(cs[-1]) < min_lead * (scale if scale > 1.0 else 1.0):
                return roots, LEAD_SMALL, n_steps
            limit = 0.25 * min_sep
            ok = True
            new_roots = []
            for z0 in roots:
                z = z0
                converged = False
                for _ in range(max_newton):
                    p, dp = eval_poly_dp(cs, z)
                    if dp == 0:
                        break
                    dz = p / dp
                    z = z - dz
                    if abs(dz) <= newton_tol * max(1.0, abs(z)):
                        converged = True
                        break
                if not converged or abs(z - z0) >= limit:
                    ok = False
                    break
                new_roots.append(z)
            if ok:
                roots = new_roots
                s += step
                n_steps += 1
                min_sep = _min_pairwise(roots)
                h = h * 2.0 if h * 2.0 <= 1.0 else 1.0
            else:
                h = step * 0.5
                if h < floor:
                    return roots, STEP_UNDERFLOW, n_steps
    return roots, OK, n_steps
