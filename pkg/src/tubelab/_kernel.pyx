# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled tracking kernels.

Mirror of tubelab._kernel_py (the reference implementation): identical
algorithms and operation order on C double complex arithmetic.  The hot
polyline loop runs without the GIL so distinct lassos can track on real
threads.
"""

from libc.stdlib cimport free, malloc
from libc.math cimport INFINITY, cos, sin

BACKEND = "cython"

cdef enum:
    C_OK = 0
    C_STEP_UNDERFLOW = 1
    C_LEAD_SMALL = 2

OK = C_OK
STEP_UNDERFLOW = C_STEP_UNDERFLOW
LEAD_SMALL = C_LEAD_SMALL

DEF PI = 3.141592653589793


cdef inline double complex _eval(double complex *cs, int n, double complex z) noexcept nogil:
    cdef double complex acc = cs[n - 1]
    cdef int k
    for k in range(n - 2, -1, -1):
        acc = acc * z + cs[k]
    return acc


cdef inline void _eval_dp(double complex *cs, int n, double complex z,
                          double complex *p_out, double complex *dp_out) noexcept nogil:
    cdef double complex p = cs[n - 1]
    cdef double complex dp = 0
    cdef int k
    for k in range(n - 2, -1, -1):
        dp = dp * z + p
        p = p * z + cs[k]
    p_out[0] = p
    dp_out[0] = dp


def eval_poly(coeffs, z):
    """Horner evaluation; coeffs ascending."""
    cdef int n = len(coeffs)
    cdef double complex acc = coeffs[n - 1]
    cdef double complex zz = z
    cdef int k
    for k in range(n - 2, -1, -1):
        acc = acc * zz + complex(coeffs[k])
    return acc


def eval_poly_dp(coeffs, z):
    """(p(z), p'(z)) in one Horner pass."""
    cdef int n = len(coeffs)
    cdef double complex p = coeffs[n - 1]
    cdef double complex dp = 0
    cdef double complex zz = z
    cdef int k
    for k in range(n - 2, -1, -1):
        dp = dp * zz + p
        p = p * zz + complex(coeffs[k])
    return p, dp


def coeffs_at(cmat, t):
    """Specialize a coefficient family at parameter t (all slots kept)."""
    return [eval_poly(row, t) for row in cmat]


def aberth(coeffs, double tol=1e-13, int max_iter=100):
    """Simultaneous root finding (Aberth-Ehrlich), deterministic start."""
    cdef int n = len(coeffs) - 1
    if n <= 0:
        return []
    cdef double complex lead = coeffs[n]
    if lead == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    if n == 1:
        return [complex(-complex(coeffs[0]) / complex(coeffs[1]))]
    cdef double complex *cs = <double complex *> malloc((n + 1) * sizeof(double complex))
    cdef double complex *roots = <double complex *> malloc(n * sizeof(double complex))
    if cs == NULL or roots == NULL:
        if cs != NULL:
            free(cs)
        if roots != NULL:
            free(roots)
        raise MemoryError()
    cdef int i, j, it
    cdef double radius = 0.0, r
    cdef double complex z, p, dp, newton, s, denom, w
    cdef bint done
    try:
        for i in range(n + 1):
            cs[i] = coeffs[i]
        for i in range(n):
            r = abs(cs[i] / lead)
            if r > radius:
                radius = r
        radius += 1.0
        for i in range(n):
            roots[i] = radius * (cos(2.0 * PI * i / n + 0.4)
                                 + 1j * sin(2.0 * PI * i / n + 0.4))
        with nogil:
            for it in range(max_iter):
                done = True
                for i in range(n):
                    z = roots[i]
                    _eval_dp(cs, n + 1, z, &p, &dp)
                    if p == 0:
                        continue
                    if dp == 0:
                        roots[i] = z * 1.0001 + 1e-12
                        done = False
                        continue
                    newton = p / dp
                    s = 0
                    for j in range(n):
                        if j != i:
                            s = s + 1.0 / (z - roots[j])
                    denom = 1.0 - newton * s
                    if denom == 0:
                        w = newton
                    else:
                        w = newton / denom
                    roots[i] = z - w
                    if abs(w) > tol * max(1.0, abs(roots[i])):
                        done = False
                if done:
                    break
        return [complex(roots[i]) for i in range(n)]
    finally:
        free(cs)
        free(roots)


def newton_refine(coeffs, z, double tol, int max_iter):
    """Newton polish; returns (z, converged flag, last step size)."""
    cdef int n = len(coeffs)
    cdef double complex *cs = <double complex *> malloc(n * sizeof(double complex))
    if cs == NULL:
        raise MemoryError()
    cdef double complex zz = z, p, dp, dz
    cdef double last = 0.0
    cdef bint converged = False
    cdef int i
    try:
        for i in range(n):
            cs[i] = coeffs[i]
        for i in range(max_iter):
            _eval_dp(cs, n, zz, &p, &dp)
            if dp == 0:
                return complex(zz), False, last
            dz = p / dp
            zz = zz - dz
            last = abs(dz)
            if last <= tol * max(1.0, abs(zz)):
                converged = True
                break
        return complex(zz), converged, last
    finally:
        free(cs)


cdef double _min_pairwise(double complex *roots, int d) noexcept nogil:
    cdef double best = INFINITY
    cdef double v
    cdef int i, j
    for i in range(d):
        for j in range(i + 1, d):
            v = abs(roots[i] - roots[j])
            if v < best:
                best = v
    return best


cdef int _track(double complex *flat, int nslots, int width, int *widths,
                double complex *roots, int d,
                double complex *verts, int nverts,
                double newton_tol, double min_lead, double initial_step,
                int max_halvings, int max_newton,
                double complex *scratch, long *steps_out) noexcept nogil:
    cdef double min_sep = _min_pairwise(roots, d)
    cdef double floor = 0.5 ** max_halvings
    cdef double s, h, step, scale, v, limit
    cdef double complex a, b, t_new, z, z0, p, dp, dz
    cdef double complex *cs = scratch
    cdef int seg, i, j, k
    cdef bint ok, converged
    cdef long n_steps = 0
    for seg in range(nverts - 1):
        a = verts[seg]
        b = verts[seg + 1]
        if a == b:
            continue
        s = 0.0
        h = initial_step
        while s < 1.0:
            step = h if h <= 1.0 - s else 1.0 - s
            t_new = a + (s + step) * (b - a)
            scale = 0.0
            for j in range(nslots):
                cs[j] = _eval(flat + j * width, widths[j], t_new)
                v = abs(cs[j])
                if v > scale:
                    scale = v
            if abs(cs[nslots - 1]) < min_lead * (scale if scale > 1.0 else 1.0):
                steps_out[0] = n_steps
                return C_LEAD_SMALL
            limit = 0.25 * min_sep
            ok = True
            for i in range(d):
                z0 = roots[i]
                z = z0
                converged = False
                for k in range(max_newton):
                    _eval_dp(cs, nslots, z, &p, &dp)
                    if dp == 0:
                        break
                    dz = p / dp
                    z = z - dz
                    if abs(dz) <= newton_tol * max(1.0, abs(z)):
                        converged = True
                        break
                if (not converged) or abs(z - z0) >= limit:
                    ok = False
                    break
                scratch[nslots + i] = z
            if ok:
                for i in range(d):
                    roots[i] = scratch[nslots + i]
                s += step
                n_steps += 1
                min_sep = _min_pairwise(roots, d)
                h = h * 2.0 if h * 2.0 <= 1.0 else 1.0
            else:
                h = step * 0.5
                if h < floor:
                    steps_out[0] = n_steps
                    return C_STEP_UNDERFLOW
    steps_out[0] = n_steps
    return C_OK


def track_polyline(cmat, roots, vertices, double newton_tol, double min_lead,
                   double initial_step, int max_halvings, int max_newton):
    """Continue all roots along a polyline; see the reference kernel."""
    cdef int nslots = len(cmat)
    cdef int d = len(roots)
    cdef int nverts = len(vertices)
    cdef int width = 0
    cd_rows = [list(row) for row in cmat]
    for row in cd_rows:
        if len(row) > width:
            width = len(row)
    cdef double complex *flat = <double complex *> malloc(nslots * width * sizeof(double complex))
    cdef int *widths = <int *> malloc(nslots * sizeof(int))
    cdef double complex *croots = <double complex *> malloc(d * sizeof(double complex))
    cdef double complex *cverts = <double complex *> malloc(nverts * sizeof(double complex))
    cdef double complex *scratch = <double complex *> malloc((nslots + d) * sizeof(double complex))
    if flat == NULL or widths == NULL or croots == NULL or cverts == NULL or scratch == NULL:
        if flat != NULL: free(flat)
        if widths != NULL: free(widths)
        if croots != NULL: free(croots)
        if cverts != NULL: free(cverts)
        if scratch != NULL: free(scratch)
        raise MemoryError()
    cdef int i, j
    cdef long n_steps = 0
    cdef int status
    try:
        for j in range(nslots):
            row = cd_rows[j]
            widths[j] = len(row)
            for i in range(width):
                flat[j * width + i] = row[i] if i < len(row) else 0
        for i in range(d):
            croots[i] = roots[i]
        for i in range(nverts):
            cverts[i] = vertices[i]
        with nogil:
            status = _track(flat, nslots, width, widths, croots, d, cverts, nverts,
                            newton_tol, min_lead, initial_step, max_halvings,
                            max_newton, scratch, &n_steps)
        return [complex(croots[i]) for i in range(d)], status, n_steps
    finally:
        free(flat)
        free(widths)
        free(croots)
        free(cverts)
        free(scratch)
