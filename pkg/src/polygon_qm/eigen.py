"""Dense real-symmetric eigensolver.

Householder reduction to tridiagonal form followed by the implicit-shift QL
iteration. Pure numpy/Python; no LAPACK driver is called, so results do not
depend on the platform's numerics library.
"""

import math

import numpy as np

from ._validation import check_symmetric

__all__ = ["symmetric_eigensolve", "tridiagonalize", "tridiagonal_ql"]

MAX_DIMENSION = 4096


def _is_tridiagonal(a):
    n = a.shape[0]
    if n < 3:
        return True
    band = np.abs(np.triu(a, 2))
    return not band.any()


def tridiagonalize(a, want_vectors=False):
    """Reduce symmetric ``a`` to tridiagonal ``(d, e, Q)`` with ``a = Q T Q^T``.

    ``e[i]`` is ``T[i, i+1]``; ``e[-1]`` is 0. ``Q`` is None unless requested.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    q = np.eye(n) if want_vectors else None
    d = np.zeros(n)
    e = np.zeros(n)
    for k in range(n - 2):
        x = a[k + 1 :, k]
        sigma = float(np.linalg.norm(x[1:]))
        x0 = float(x[0])
        if sigma == 0.0:
            d[k] = a[k, k]
            e[k] = x0
            continue
        alpha = -math.copysign(math.hypot(x0, sigma), x0)
        v = x.copy()
        v[0] -= alpha
        v /= np.linalg.norm(v)
        sub = a[k + 1 :, k + 1 :]
        p = sub @ v
        w = 2.0 * (p - float(v @ p) * v)
        sub -= np.outer(v, w) + np.outer(w, v)
        if q is not None:
            qv = q[:, k + 1 :] @ v
            q[:, k + 1 :] -= 2.0 * np.outer(qv, v)
        d[k] = a[k, k]
        e[k] = alpha
    if n >= 2:
        d[n - 2] = a[n - 2, n - 2]
        e[n - 2] = a[n - 2, n - 1]
    if n >= 1:
        d[n - 1] = a[n - 1, n - 1]
    return d, e, q


def tridiagonal_ql(d, e, z=None, max_iter=60):
    """Implicit-shift QL on a symmetric tridiagonal matrix.

    ``d`` is the diagonal, ``e[i]`` the coupling between rows i and i+1
    (``e[-1]`` ignored). If ``z`` is given its columns are rotated in place so
    that on return column j is the eigenvector for eigenvalue j (unsorted).
    """
    d = [float(x) for x in d]
    e = [float(x) for x in e]
    n = len(d)
    if n:
        e[n - 1] = 0.0
    hypot = math.hypot
    copysign = math.copysign
    for l in range(n):  # noqa: E741
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                raise np.linalg.LinAlgError("QL iteration did not converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    zi = z[:, i].copy()
                    z[:, i] = c * zi - s * z[:, i + 1]
                    z[:, i + 1] = s * zi + c * z[:, i + 1]
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.array(d)


def symmetric_eigensolve(matrix, eigenvectors=False):
    """All eigenvalues of a real symmetric matrix, ascending.

    With ``eigenvectors=True`` returns ``(values, vectors)`` with vectors as
    columns. Vector accumulation is O(M^3) in Python-level rotations, so it is
    meant for modest sizes.
    """
    a = check_symmetric(matrix)
    n = a.shape[0]
    if n > MAX_DIMENSION:
        raise ValueError(f"dimension {n} exceeds {MAX_DIMENSION}")
    if n == 0:
        return (np.zeros(0), np.zeros((0, 0))) if eigenvectors else np.zeros(0)
    a = 0.5 * (a + a.T)
    if _is_tridiagonal(a):
        d = np.diag(a).copy()
        e = np.append(np.diag(a, 1), 0.0)
        q = np.eye(n) if eigenvectors else None
    else:
        d, e, q = tridiagonalize(a, want_vectors=eigenvectors)
    values = tridiagonal_ql(d, e, z=q)
    order = np.argsort(values, kind="stable")
    if eigenvectors:
        return values[order], q[:, order]
    return values[order]
