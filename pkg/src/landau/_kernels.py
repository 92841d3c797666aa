"""Hot numeric kernels: numba-compiled with a pure-numpy fallback.

Backend selection: set ``LANDAU_KERNELS`` to ``numba``, ``numpy`` or
``auto`` (default; numba when importable).  ``set_backend`` overrides at
runtime, which the benchmark and the determinism tests use.  Both paths
execute the same IEEE-754 operations in the same order, so results are
bitwise identical regardless of backend or thread count.

Cell values are natural-log sums carried as double-double pairs (hi, lo).
A candidate whose log lands within GUARD of the running best is flagged for
exact big-integer arbitration by the caller.
"""

import os

import numpy as np

from .errors import DomainError
from .factorization import LOG_GUARD as GUARD

try:
    from numba import njit, prange

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):  # type: ignore
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap

    prange = range  # type: ignore


_VALID = ("auto", "numba", "numpy")
_backend = os.environ.get("LANDAU_KERNELS", "auto").lower()
if _backend not in _VALID:
    raise DomainError(
        f"LANDAU_KERNELS must be one of {_VALID}, got {_backend!r}"
    )
_parallel = os.environ.get("LANDAU_PARALLEL", "0") not in ("0", "", "false")


def set_backend(name: str) -> None:
    global _backend
    if name not in _VALID:
        raise DomainError(f"backend must be one of {_VALID}, got {name!r}")
    if name == "numba" and not NUMBA_AVAILABLE:
        raise DomainError("numba backend requested but numba is unavailable")
    _backend = name


def active_backend() -> str:
    if _backend == "auto":
        return "numba" if NUMBA_AVAILABLE else "numpy"
    return _backend


def set_parallel(flag: bool) -> None:
    global _parallel
    _parallel = bool(flag)


def parallel_enabled() -> bool:
    return _parallel


# ---------------------------------------------------------------------------
# Knapsack stage: one prime, all budgets.
#
# new[m] = max(old[m], max_a p^a * old[m - p^a]), reads exclusively from the
# previous stage, so every budget is independent and the loop parallelizes
# without changing results.  arow[m] records the winning exponent (0 = prime
# unused); tie_mark[m] flags budgets where some candidate came within GUARD
# of the running best.
# ---------------------------------------------------------------------------


def _dp_stage_py(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark):
    n = old_hi.shape[0] - 1
    np.copyto(new_hi, old_hi)
    np.copyto(new_lo, old_lo)
    arow[:] = 0
    tie_mark[:] = 0
    for t in range(powers.shape[0]):
        pw = int(powers[t])
        if pw > n:
            break
        a = old_hi[: n + 1 - pw]
        al = old_lo[: n + 1 - pw]
        b = pow_hi[t]
        bl = pow_lo[t]
        s = a + b
        bb = s - a
        err = (a - (s - bb)) + (b - bb)
        lo = err + (al + bl)
        ch = s + lo
        cl = lo - (ch - s)
        th = new_hi[pw:]
        tl = new_lo[pw:]
        d = (ch - th) + (cl - tl)
        scale = np.maximum(th, 1.0)
        tie_mark[pw:] = np.where(np.abs(d) <= GUARD * scale, 1, tie_mark[pw:])
        upd = d > 0.0
        new_hi[pw:][upd] = ch[upd]
        new_lo[pw:][upd] = cl[upd]
        arow[pw:][upd] = t + 1


def _dp_stage_scalar(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark, m):
    bh = old_hi[m]
    bl = old_lo[m]
    ba = 0
    tie = 0
    for t in range(powers.shape[0]):
        pw = powers[t]
        if pw > m:
            break
        a = old_hi[m - pw]
        b = pow_hi[t]
        s = a + b
        bb = s - a
        err = (a - (s - bb)) + (b - bb)
        lo = err + (old_lo[m - pw] + pow_lo[t])
        ch = s + lo
        cl = lo - (ch - s)
        d = (ch - bh) + (cl - bl)
        scale = bh if bh > 1.0 else 1.0
        ad = -d if d < 0.0 else d
        if ad <= GUARD * scale:
            tie = 1
        if d > 0.0:
            bh = ch
            bl = cl
            ba = t + 1
    new_hi[m] = bh
    new_lo[m] = bl
    arow[m] = ba
    tie_mark[m] = tie


if NUMBA_AVAILABLE:
    _dp_cell = njit(cache=True, inline="always")(_dp_stage_scalar)

    @njit(cache=True)
    def _dp_stage_nb(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark):
        for m in range(old_hi.shape[0]):
            _dp_cell(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark, m)

    @njit(cache=True, parallel=True)
    def _dp_stage_nb_par(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark):
        for m in prange(old_hi.shape[0]):
            _dp_cell(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark, m)


def dp_stage(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark) -> None:
    if active_backend() == "numba":
        fn = _dp_stage_nb_par if _parallel else _dp_stage_nb
        fn(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark)
    else:
        _dp_stage_py(old_hi, old_lo, powers, pow_hi, pow_lo, new_hi, new_lo, arow, tie_mark)


# ---------------------------------------------------------------------------
# Backpointer walks.  amat[j, m] is the exponent stage j chose at budget m;
# walking stages top-down recovers the optimal factorization for each n.
# ---------------------------------------------------------------------------


def _walk_summaries_py(amat, primes, pmax, ellv, nsel):
    k = amat.shape[0]
    top = amat.shape[1] - 1
    m = np.arange(top + 1, dtype=np.int64)
    pmax[:] = 0
    nsel[:] = 0
    for j in range(k - 1, -1, -1):
        a = amat[j, m]
        sel = a > 0
        if not sel.any():
            continue
        p = int(primes[j])
        first = sel & (pmax == 0)
        pmax[first] = p
        m[sel] -= p ** a[sel].astype(np.int64)
        nsel[sel] += 1
    ellv[:] = np.arange(top + 1, dtype=np.int64) - m


def _walk_summaries_nb_py(amat, primes, pmax, ellv, nsel):
    k = amat.shape[0]
    top = amat.shape[1] - 1
    for n in range(top + 1):
        m = n
        pm = 0
        cnt = 0
        for j in range(k - 1, -1, -1):
            a = amat[j, m]
            if a:
                p = primes[j]
                pw = np.int64(1)
                for _ in range(a):
                    pw *= p
                if pm == 0:
                    pm = p
                m -= pw
                cnt += 1
        pmax[n] = pm
        ellv[n] = n - m
        nsel[n] = cnt


def _walk_pairs_py(amat, primes, offsets, stage_out, expo_out):
    k = amat.shape[0]
    top = amat.shape[1] - 1
    m = np.arange(top + 1, dtype=np.int64)
    ns, js, exps = [], [], []
    for j in range(k - 1, -1, -1):
        a = amat[j, m]
        sel = np.flatnonzero(a > 0)
        if not sel.size:
            continue
        p = int(primes[j])
        ns.append(sel.astype(np.int64))
        js.append(np.full(sel.size, j, dtype=np.int32))
        exps.append(a[sel])
        m[sel] -= p ** a[sel].astype(np.int64)
    if not ns:
        return
    ncat = np.concatenate(ns)
    jcat = np.concatenate(js)
    ecat = np.concatenate(exps)
    order = np.lexsort((jcat, ncat))
    stage_out[:] = jcat[order]
    expo_out[:] = ecat[order]


def _walk_pairs_nb_py(amat, primes, offsets, stage_out, expo_out):
    k = amat.shape[0]
    top = amat.shape[1] - 1
    for n in range(top + 1):
        m = n
        pos = offsets[n + 1]
        for j in range(k - 1, -1, -1):
            a = amat[j, m]
            if a:
                pos -= 1
                stage_out[pos] = j
                expo_out[pos] = a
                p = primes[j]
                pw = np.int64(1)
                for _ in range(a):
                    pw *= p
                m -= pw


if NUMBA_AVAILABLE:
    _walk_summaries_nb = njit(cache=True)(_walk_summaries_nb_py)
    _walk_pairs_nb = njit(cache=True)(_walk_pairs_nb_py)


def walk_summaries(amat, primes):
    """Per-n largest prime, ell of the optimum, and factor count."""
    top = amat.shape[1] - 1
    pmax = np.zeros(top + 1, dtype=np.int64)
    ellv = np.zeros(top + 1, dtype=np.int64)
    nsel = np.zeros(top + 1, dtype=np.int64)
    if amat.shape[0]:
        if active_backend() == "numba":
            _walk_summaries_nb(amat, primes, pmax, ellv, nsel)
        else:
            _walk_summaries_py(amat, primes, pmax, ellv, nsel)
    return pmax, ellv, nsel


def walk_pairs(amat, primes, nsel):
    """Flattened (stage, exponent) pairs per n, primes ascending within n.

    Returns (offsets, stage_idx, exponents): row n occupies
    stage_idx[offsets[n]:offsets[n+1]].
    """
    offsets = np.zeros(nsel.shape[0] + 1, dtype=np.int64)
    np.cumsum(nsel, out=offsets[1:])
    total = int(offsets[-1])
    stage_out = np.zeros(total, dtype=np.int32)
    expo_out = np.zeros(total, dtype=np.uint8)
    if total:
        if active_backend() == "numba":
            _walk_pairs_nb(amat, primes, offsets, stage_out, expo_out)
        else:
            _walk_pairs_py(amat, primes, offsets, stage_out, expo_out)
    return offsets, stage_out, expo_out
