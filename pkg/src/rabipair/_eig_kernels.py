"""Dense Hermitian eigensolver kernels.

Householder reduction of a complex Hermitian matrix to a real symmetric
tridiagonal, followed by implicit-shift QL with eigenvector accumulation.
Written once in numba-compatible vectorized numpy; `maybe_jit` selects the
jitted or pure-numpy execution path at import time.

Layout notes: all block updates act on contiguous row slabs (``A[k+1:, :]``)
so that ``np.dot`` stays on the fast path under numba; eigenvector rotations
run on a transposed copy for the same reason.
"""

from __future__ import annotations

import numpy as np

from ._backend import maybe_jit

_EPS = float(np.finfo(np.float64).eps)
_MAX_QL_SWEEPS = 60


@maybe_jit
def _householder_tridiag(A):
    """Reduce Hermitian A to real tridiagonal form.

    Returns ``(d, e, Q)`` with ``Q`` unitary and ``Q^H A Q`` real tridiagonal
    with diagonal ``d`` and subdiagonal ``e >= 0``.  ``A`` is consumed as
    scratch space (reflector vectors are stored below the subdiagonal).
    """
    n = A.shape[0]
    sub = np.zeros(n - 1, dtype=np.complex128) if n > 1 else np.zeros(0, dtype=np.complex128)

    for k in range(n - 2):
        x = A[k + 1:, k].copy()
        xnorm = np.sqrt(np.sum(np.abs(x) ** 2))
        if xnorm == 0.0:
            sub[k] = 0.0
            A[k + 1:, k] = 0.0
            continue
        x0 = x[0]
        if np.abs(x0) == 0.0:
            phase = 1.0 + 0.0j
        else:
            phase = x0 / np.abs(x0)
        alpha = -phase * xnorm
        v = x
        v[0] = v[0] - alpha
        vnorm = np.sqrt(np.sum(np.abs(v) ** 2))
        sub[k] = alpha
        if vnorm == 0.0:
            A[k + 1:, k] = 0.0
            continue
        v = v / vnorm

        # Rank-2 Hermitian update of the trailing block, carried out on the
        # contiguous row slab A[k+1:, :].  vfull/pfull vanish on columns <= k,
        # so the stored reflectors in those columns stay intact.
        vfull = np.zeros(n, dtype=np.complex128)
        vfull[k + 1:] = v
        w = 2.0 * np.dot(A[k + 1:, :], vfull)
        tau = np.real(np.sum(np.conj(v) * w))
        p = w - tau * v
        pfull = np.zeros(n, dtype=np.complex128)
        pfull[k + 1:] = p
        A[k + 1:, :] -= v.reshape(-1, 1) * np.conj(pfull).reshape(1, -1)
        A[k + 1:, :] -= p.reshape(-1, 1) * np.conj(vfull).reshape(1, -1)
        A[k + 1:, k] = v  # stash reflector for the back-transform

    if n > 1:
        sub[n - 2] = A[n - 1, n - 2]

    d = np.zeros(n, dtype=np.float64)
    for i in range(n):
        d[i] = np.real(A[i, i])

    # Back-accumulate Q = P_0 P_1 ... P_{n-3} (row-slab updates, contiguous).
    Q = np.eye(n, dtype=np.complex128)
    for k in range(n - 3, -1, -1):
        v = A[k + 1:, k].copy()
        vnorm = np.sqrt(np.sum(np.abs(v) ** 2))
        if vnorm == 0.0:
            continue
        proj = np.dot(np.conj(v), Q[k + 1:, :])
        Q[k + 1:, :] -= 2.0 * v.reshape(-1, 1) * proj.reshape(1, -1)

    # Diagonal phase transform making the subdiagonal real nonnegative.
    e = np.zeros(n - 1, dtype=np.float64) if n > 1 else np.zeros(0, dtype=np.float64)
    u = np.ones(n, dtype=np.complex128)
    for j in range(n - 1):
        t = sub[j]
        at = np.abs(t)
        e[j] = at
        if at == 0.0:
            u[j + 1] = u[j]
        else:
            u[j + 1] = t * u[j] / at
    Q = Q * u.reshape(1, -1)
    return d, e, Q


@maybe_jit
def _tql2(d, e_in, QT):
    """Implicit-shift QL on a real symmetric tridiagonal.

    ``d``/``e_in`` are diagonal and subdiagonal; ``QT`` holds basis vectors in
    its *rows* and is rotated in place.  Returns 0 on success, 1 if a QL sweep
    failed to converge.
    """
    n = d.shape[0]
    if n <= 1:
        return 0
    e = np.zeros(n, dtype=np.float64)
    e[: n - 1] = e_in

    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = np.abs(d[m]) + np.abs(d[m + 1])
                if np.abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_QL_SWEEPS:
                return 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            if g >= 0.0:
                g = d[m] - d[l] + e[l] / (g + r)
            else:
                g = d[m] - d[l] + e[l] / (g - r)
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
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
                tmp = QT[i + 1].copy()
                QT[i + 1] = s * QT[i] + c * tmp
                QT[i] = c * QT[i] - s * tmp
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return 0


def tridiag_ql_eig(M):
    """Full Hermitian eigendecomposition via Householder + implicit QL.

    Returns ``(values, vectors)`` unsorted (QL order); callers sort and fix
    the phase gauge.  Raises ``ArithmeticError`` if QL fails to converge.
    """
    A = np.array(M, dtype=np.complex128, order="C", copy=True)
    d, e, Q = _householder_tridiag(A)
    QT = np.ascontiguousarray(Q.T)
    status = _tql2(d, e, QT)
    if status != 0:
        raise ArithmeticError("QL iteration failed to converge")
    return d, np.ascontiguousarray(QT.T)
