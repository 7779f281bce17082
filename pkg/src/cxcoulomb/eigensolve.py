"""Dense complex non-Hermitian eigenvalue kernel (eigenvalues only).

Pipeline: Osborne balancing (powers of two, exact in floating point),
Householder reduction to upper Hessenberg form, then single-shift complex QR
with Wilkinson shifts and local-neighbor deflation.  Everything is
deterministic: identical input bits give identical output bits.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import NotConverged

# Deflation threshold relative to the local diagonal neighborhood.
DEFLATION_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: tuple
    iterations: int
    converged: bool


def balance(a: np.ndarray, radix: float = 2.0) -> np.ndarray:
    """Osborne balancing with power-of-radix scale factors (similarity by a
    diagonal matrix, so the spectrum is unchanged and no rounding is added)."""
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    done = False
    while not done:
        done = True
        for i in range(n):
            r = np.sum(np.abs(a[i, :])) - abs(a[i, i])
            c = np.sum(np.abs(a[:, i])) - abs(a[i, i])
            if r == 0.0 or c == 0.0:
                continue
            f = 1.0
            s = c + r
            while c < r / radix:
                c *= radix
                r /= radix
                f *= radix
            while c >= r * radix:
                c /= radix
                r *= radix
                f /= radix
            if (c + r) < 0.95 * s and f != 1.0:
                done = False
                a[i, :] /= f
                a[:, i] *= f
    return a


def hessenberg_reduce(a: np.ndarray) -> np.ndarray:
    """Unitary similarity reduction to upper Hessenberg form (Householder)."""
    h = np.array(a, dtype=complex)
    n = h.shape[0]
    if h.shape != (n, n):
        raise ValueError("matrix must be square")
    for k in range(n - 2):
        x = h[k + 1:, k].copy()
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * norm_x
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        # H = I - 2 v v^H applied from both sides
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _givens(f: complex, g: complex) -> tuple[complex, complex, complex]:
    """Unitary rotation G = [[c, s], [-conj(s), conj(c)]]... returns (c, s, r)
    with [conj(f), conj(g)]-style normalization so that the pair (f, g)
    maps to (r, 0)."""
    d = np.hypot(abs(f), abs(g))
    if d == 0.0:
        return 1.0, 0.0, 0.0
    c = f.conjugate() / d
    s = g.conjugate() / d
    return c, s, d


def _qr_sweep(h: np.ndarray, lo: int, hi: int, mu: complex) -> None:
    """One explicit single-shift QR step (QR then RQ) on the active diagonal
    block [lo, hi].  The block is decoupled from the rest by a zero
    subdiagonal, and only eigenvalues are wanted, so the similarity need not
    touch the off-block coupling entries."""
    b = h[lo:hi + 1, lo:hi + 1]
    m = b.shape[0]
    idx = np.arange(m)
    b[idx, idx] -= mu
    rots = []
    for k in range(m - 1):
        c, s, r = _givens(b[k, k], b[k + 1, k])
        rots.append((c, s))
        row_k = b[k, k:].copy()
        row_k1 = b[k + 1, k:].copy()
        b[k, k:] = c * row_k + s * row_k1
        b[k + 1, k:] = -np.conj(s) * row_k + np.conj(c) * row_k1
    for k, (c, s) in enumerate(rots):
        top = min(k + 2, m - 1) + 1
        col_k = b[:top, k].copy()
        col_k1 = b[:top, k + 1].copy()
        b[:top, k] = col_k * np.conj(c) + col_k1 * np.conj(s)
        b[:top, k + 1] = -col_k * s + col_k1 * c
    b[idx, idx] += mu


def _wilkinson_shift(h: np.ndarray, hi: int) -> complex:
    """Eigenvalue of the trailing 2x2 block closest to h[hi, hi]."""
    a, b = h[hi - 1, hi - 1], h[hi - 1, hi]
    c, d = h[hi, hi - 1], h[hi, hi]
    tr = a + d
    disc = cmath.sqrt((a - d) ** 2 + 4.0 * b * c)
    mu1 = (tr + disc) / 2.0
    mu2 = (tr - disc) / 2.0
    return mu1 if abs(mu1 - d) < abs(mu2 - d) else mu2


def qr_eigenvalues(h: np.ndarray, max_iter_per_eig: int = 60) -> EigenResult:
    """Eigenvalues of an upper Hessenberg matrix by shifted QR with
    deflation when a subdiagonal entry is negligible relative to its
    diagonal neighbors."""
    h = np.array(h, dtype=complex)
    n = h.shape[0]
    eigs: list[complex] = [0.0] * n
    total_iters = 0
    hi = n - 1
    iters_this_eig = 0
    while hi >= 0:
        if hi == 0:
            eigs[0] = h[0, 0]
            break
        # deflate any negligible subdiagonal in the active window
        lo = hi
        while lo > 0:
            s = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if s == 0.0:
                s = np.linalg.norm(h, ord="fro")
            if abs(h[lo, lo - 1]) <= DEFLATION_EPS * s:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eigs[hi] = h[hi, hi]
            hi -= 1
            iters_this_eig = 0
            continue
        if iters_this_eig >= max_iter_per_eig:
            # flag and return the current diagonal as a partial answer
            for k in range(hi + 1):
                eigs[k] = h[k, k]
            return EigenResult(tuple(eigs), total_iters, converged=False)
        if iters_this_eig > 0 and iters_this_eig % 10 == 0:
            # exceptional shift: breaks the cycling that exact symmetry
            # (e.g. circulant blocks) induces under the Wilkinson shift
            extra = abs(h[hi, hi - 1])
            if hi >= 2:
                extra += abs(h[hi - 1, hi - 2])
            mu = h[hi, hi] + 0.75 * extra * (1.0 + 0.5j)
        else:
            mu = _wilkinson_shift(h, hi)
        _qr_sweep(h, lo, hi, mu)
        total_iters += 1
        iters_this_eig += 1
    return EigenResult(tuple(eigs), total_iters, converged=True)


def eigenvalues(a: np.ndarray, max_iter_per_eig: int = 60, do_balance: bool = True) -> EigenResult:
    """Eigenvalues of a general dense complex matrix."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    work = balance(a) if do_balance else a
    h = hessenberg_reduce(work)
    return qr_eigenvalues(h, max_iter_per_eig=max_iter_per_eig)
