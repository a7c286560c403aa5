"""Low-level numeric kernels for the optimal-containment linear program.

The containment problem  min { lam : K subset t + lam*C }  is a linear program
in the three variables (t1, t2, lam) with one inequality per (vertex of K,
edge of C) pair.  We solve its dual -- a standard-form LP with three equality
rows -- by a dense two-phase simplex with Bland's rule, which is deterministic
and immune to cycling.  The optimal basis names the three tight constraints,
from which (t, lam) is recovered by solving a 3x3 system against the original
data, so the result does not inherit accumulated pivot round-off.

Everything here is numba-compiled; the angle sweeps used by the reflection
profile run entirely inside compiled code.
"""

import numpy as np
from numba import njit

_PIVOT_TOL = 1e-10

STATUS_OK = 0
STATUS_INFEASIBLE = 1
STATUS_UNBOUNDED = 2
STATUS_SINGULAR = 3


@njit(cache=True)
def _pivot(T, basis, row, col):
    piv = T[row, col]
    ncols = T.shape[1]
    for j in range(ncols):
        T[row, j] /= piv
    for i in range(T.shape[0]):
        if i != row:
            factor = T[i, col]
            if factor != 0.0:
                for j in range(ncols):
                    T[i, j] -= factor * T[row, j]
    basis[row] = col


@njit(cache=True)
def _iterate(T, basis, ncols_real, limit):
    """Bland-rule simplex iterations on the prepared tableau (row 3 = obj)."""
    rhs = T.shape[1] - 1
    for _ in range(limit):
        enter = -1
        for j in range(ncols_real):
            if T[3, j] > _PIVOT_TOL:
                enter = j
                break
        if enter < 0:
            return STATUS_OK
        row = -1
        best = 0.0
        for i in range(3):
            a = T[i, enter]
            if a > _PIVOT_TOL:
                ratio = T[i, rhs] / a
                if row < 0 or ratio < best - 1e-15 or (
                    abs(ratio - best) <= 1e-15 and basis[i] < basis[row]
                ):
                    row = i
                    best = ratio
        if row < 0:
            return STATUS_UNBOUNDED
        _pivot(T, basis, row, enter)
    return STATUS_INFEASIBLE


@njit(cache=True)
def _solve_dual(A, rhs, f):
    """min f.z  s.t.  A z = rhs (3 rows), z >= 0.

    Returns (status, objective, basis) with basis the 3 basic column indices.
    """
    m = A.shape[1]
    n = m + 3
    T = np.zeros((4, n + 1))
    basis = np.empty(3, dtype=np.int64)
    for i in range(3):
        for j in range(m):
            T[i, j] = A[i, j]
        T[i, m + i] = 1.0
        T[i, n] = rhs[i]
        basis[i] = m + i
    # phase 1: minimize the sum of the artificials
    for j in range(n + 1):
        s = 0.0
        for i in range(3):
            s += T[i, j]
        T[3, j] = s
    for i in range(3):
        T[3, m + i] = 0.0
    limit = 200 + 10 * m
    status = _iterate(T, basis, m, limit)
    if status != STATUS_OK:
        return status, 0.0, basis
    if T[3, n] > 1e-7:
        return STATUS_INFEASIBLE, 0.0, basis
    # drive leftover zero-level artificials out of the basis where possible
    for i in range(3):
        if basis[i] >= m:
            for j in range(m):
                if abs(T[i, j]) > 1e-9:
                    _pivot(T, basis, i, j)
                    break
    # phase 2 objective row: z_j - f_j
    for j in range(n + 1):
        s = 0.0
        for i in range(3):
            bi = basis[i]
            if bi < m:
                s += f[bi] * T[i, j]
        T[3, j] = s
    for j in range(m):
        T[3, j] -= f[j]
    for i in range(3):
        T[3, m + i] = -1e30  # artificials must never re-enter
    status = _iterate(T, basis, m, limit)
    if status != STATUS_OK:
        return status, 0.0, basis
    obj = 0.0
    for i in range(3):
        bi = basis[i]
        if bi < m:
            obj += f[bi] * T[i, n]
    return STATUS_OK, obj, basis


@njit(cache=True)
def _edge_normals(verts):
    """Outward unit normals and origin offsets of a CCW polygon."""
    m = verts.shape[0]
    normals = np.empty((m, 2))
    offsets = np.empty(m)
    for i in range(m):
        j = (i + 1) % m
        ex = verts[j, 0] - verts[i, 0]
        ey = verts[j, 1] - verts[i, 1]
        ln = np.sqrt(ex * ex + ey * ey)
        nx = ey / ln
        ny = -ex / ln
        normals[i, 0] = nx
        normals[i, 1] = ny
        offsets[i] = nx * verts[i, 0] + ny * verts[i, 1]
    return normals, offsets


@njit(cache=True)
def _polygon_centroid(verts):
    m = verts.shape[0]
    a = 0.0
    cx = 0.0
    cy = 0.0
    for i in range(m):
        j = (i + 1) % m
        cross = verts[i, 0] * verts[j, 1] - verts[j, 0] * verts[i, 1]
        a += cross
        cx += (verts[i, 0] + verts[j, 0]) * cross
        cy += (verts[i, 1] + verts[j, 1]) * cross
    a *= 0.5
    return cx / (6.0 * a), cy / (6.0 * a)


@njit(cache=True)
def circumradius_lp(vk, vc):
    """Smallest lam with vk's polygon inside t + lam * (vc's polygon).

    Both vertex arrays must be CCW.  Returns (status, lam, t1, t2).
    """
    gx, gy = _polygon_centroid(vc)
    normals, _ = _edge_normals(vc)
    mc = vc.shape[0]
    mk = vk.shape[0]
    b = np.empty(mc)
    for i in range(mc):
        b[i] = normals[i, 0] * (vc[i, 0] - gx) + normals[i, 1] * (vc[i, 1] - gy)
    m = mc * mk
    A = np.empty((3, m))
    f = np.empty(m)
    for i in range(mc):
        for k in range(mk):
            col = i * mk + k
            A[0, col] = normals[i, 0]
            A[1, col] = normals[i, 1]
            A[2, col] = b[i]
            f[col] = -(normals[i, 0] * vk[k, 0] + normals[i, 1] * vk[k, 1])
    rhs = np.array([0.0, 0.0, 1.0])
    status, obj, basis = _solve_dual(A, rhs, f)
    if status != STATUS_OK:
        return status, 0.0, 0.0, 0.0
    lam_tab = -obj
    # re-solve the three tight constraints against the original data
    M = np.zeros((3, 3))
    c = np.zeros(3)
    nb = 0
    for i in range(3):
        col = basis[i]
        if col < m:
            M[nb, 0] = A[0, col]
            M[nb, 1] = A[1, col]
            M[nb, 2] = A[2, col]
            c[nb] = -f[col]
            nb += 1
    lam = lam_tab
    t1 = 0.0
    t2 = 0.0
    solved = False
    if nb == 3:
        det = (
            M[0, 0] * (M[1, 1] * M[2, 2] - M[1, 2] * M[2, 1])
            - M[0, 1] * (M[1, 0] * M[2, 2] - M[1, 2] * M[2, 0])
            + M[0, 2] * (M[1, 0] * M[2, 1] - M[1, 1] * M[2, 0])
        )
        if abs(det) > 1e-13:
            t1 = (
                c[0] * (M[1, 1] * M[2, 2] - M[1, 2] * M[2, 1])
                - M[0, 1] * (c[1] * M[2, 2] - M[1, 2] * c[2])
                + M[0, 2] * (c[1] * M[2, 1] - M[1, 1] * c[2])
            ) / det
            t2 = (
                M[0, 0] * (c[1] * M[2, 2] - M[1, 2] * c[2])
                - c[0] * (M[1, 0] * M[2, 2] - M[1, 2] * M[2, 0])
                + M[0, 2] * (M[1, 0] * c[2] - c[1] * M[2, 0])
            ) / det
            lam = (
                M[0, 0] * (M[1, 1] * c[2] - c[1] * M[2, 1])
                - M[0, 1] * (M[1, 0] * c[2] - c[1] * M[2, 0])
                + c[0] * (M[1, 0] * M[2, 1] - M[1, 1] * M[2, 0])
            ) / det
            solved = True
    if not solved or abs(lam - lam_tab) > 1e-7 * (1.0 + abs(lam_tab)):
        # degenerate basis: keep the tableau optimum and find a feasible t
        lam = lam_tab
        t1 = 0.0
        t2 = 0.0
        for _ in range(64):
            moved = False
            for i in range(mc):
                worst = -1e300
                for k in range(mk):
                    viol = (
                        normals[i, 0] * vk[k, 0]
                        + normals[i, 1] * vk[k, 1]
                        - normals[i, 0] * t1
                        - normals[i, 1] * t2
                        - lam * b[i]
                    )
                    if viol > worst:
                        worst = viol
                if worst > 1e-12:
                    t1 += normals[i, 0] * worst
                    t2 += normals[i, 1] * worst
                    moved = True
            if not moved:
                break
    # shift from centroid coordinates back to the original copy of C
    t1 -= lam * gx
    t2 -= lam * gy
    return STATUS_OK, lam, t1, t2


@njit(cache=True)
def _reflected_ccw(verts, theta):
    """Vertices of the mirror image across the axis at angle theta, CCW."""
    c = np.cos(2.0 * theta)
    s = np.sin(2.0 * theta)
    m = verts.shape[0]
    out = np.empty((m, 2))
    for i in range(m):
        x = verts[m - 1 - i, 0]
        y = verts[m - 1 - i, 1]
        out[i, 0] = c * x + s * y
        out[i, 1] = s * x - c * y
    return out


@njit(cache=True)
def profile_value(verts, theta):
    """R(K, reflection of K across the axis at angle theta)."""
    status, lam, _, _ = circumradius_lp(verts, _reflected_ccw(verts, theta))
    if status != STATUS_OK:
        return np.nan
    return lam


@njit(cache=True)
def profile_grid(verts, thetas):
    out = np.empty(thetas.shape[0])
    for idx in range(thetas.shape[0]):
        out[idx] = profile_value(verts, thetas[idx])
    return out


@njit(cache=True)
def profile_value_symmetric(verts, normals, offsets, theta):
    """Same as profile_value for 0-symmetric K: no translation is needed,
    so R is the largest gauge value max_{i,k} n_i . (Phi_theta v_k) / b_i."""
    c = np.cos(2.0 * theta)
    s = np.sin(2.0 * theta)
    mk = verts.shape[0]
    mn = normals.shape[0]
    best = -1e300
    for k in range(mk):
        wx = c * verts[k, 0] + s * verts[k, 1]
        wy = s * verts[k, 0] - c * verts[k, 1]
        g = -1e300
        for i in range(mn):
            val = (normals[i, 0] * wx + normals[i, 1] * wy) / offsets[i]
            if val > g:
                g = val
        if g > best:
            best = g
    return best


@njit(cache=True)
def profile_grid_symmetric(verts, normals, offsets, thetas):
    out = np.empty(thetas.shape[0])
    for idx in range(thetas.shape[0]):
        out[idx] = profile_value_symmetric(verts, normals, offsets, thetas[idx])
    return out
