"""Dense linear algebra over small finite fields.

Matrices are numpy int64 arrays of element codes paired with a
:class:`~qconv.galois.Field` context.  Everything here is exact; there is
no floating point anywhere.

The minimum-kernel-weight search is the workhorse for all distance
computations.  It picks between three strategies:

* enumerate the kernel span outright when it is small;
* prove "no w columns are dependent" for growing w by batched Gaussian
  elimination over all column subsets;
* for matrices whose columns form a weighted geometric progression
  (w_j * gamma_j^s), certify full subset independence from pairwise
  distinctness of the gamma_j.  The determinant identity behind the
  shortcut is expanded symbolically over the integers at the exact size
  used, once per size, so the certificate does not lean on unchecked
  theory.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .galois import Field

DEFAULT_ENUM_LIMIT = 1 << 21
DEFAULT_SUBSET_LIMIT = 4_000_000
_CHUNK = 1 << 16


class SearchBudgetExceeded(RuntimeError):
    """An exhaustive search ran out of its configured budget.

    Carries the bounds established before the budget ran out.
    """

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class KernelWeight:
    """Outcome of a minimum-kernel-weight search."""

    lower: int
    upper: int
    vector: np.ndarray | None  # a kernel word of weight == upper, if found
    method: str

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise SearchBudgetExceeded(
                f"distance only bounded to [{self.lower}, {self.upper}]",
                self.lower,
                self.upper,
            )
        return self.lower


def as_matrix(fld: Field, rows) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a[None, :]
    if a.size and (a.min() < 0 or a.max() >= fld.q):
        raise ValueError("matrix entries out of field range")
    return a


def matmul(fld: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.atleast_2d(a)
    b = np.atleast_2d(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[1]):
        out = fld.add(out, fld.mul(a[:, i, None], b[i, None, :]))
    return out


def matvec(fld: Field, a: np.ndarray, v: np.ndarray) -> np.ndarray:
    return matmul(fld, a, np.asarray(v)[:, None])[:, 0]


def rref(fld: Field, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = np.array(mat, dtype=np.int64)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = fld.mul(fld.inv(int(m[r, c])), m[r])
        others = np.flatnonzero(m[:, c])
        others = others[others != r]
        if others.size:
            m[others] = fld.sub(m[others], fld.mul(m[others, c, None], m[r][None, :]))
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(fld: Field, mat: np.ndarray) -> int:
    return len(rref(fld, mat)[1])


def right_kernel(fld: Field, mat: np.ndarray) -> np.ndarray:
    """Basis (as rows) of {v : mat @ v = 0}."""
    r, pivots = rref(fld, mat)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = fld.neg(int(r[row, fc]))
    return basis


def row_space_contains(fld: Field, mat: np.ndarray, v: np.ndarray) -> bool:
    r, pivots = rref(fld, mat)
    v = np.array(v, dtype=np.int64)
    for row, pc in enumerate(pivots):
        if v[pc]:
            v = fld.sub(v, fld.mul(int(v[pc]), r[row]))
    return not v.any()


def row_spaces_equal(fld: Field, a: np.ndarray, b: np.ndarray) -> bool:
    ra, pa = rref(fld, a)
    rb, pb = rref(fld, b)
    return pa == pb and ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def batch_full_column_rank(fld: Field, mats: np.ndarray) -> np.ndarray:
    """For a batch of (r x w) matrices, w <= r: does each have rank w?"""
    m = np.array(mats, dtype=np.int64)
    nbatch, r, w = m.shape
    if w > r:
        return np.zeros(nbatch, dtype=bool)
    ok = np.ones(nbatch, dtype=bool)
    bidx = np.arange(nbatch)
    for j in range(w):
        col = m[:, j:, j] != 0
        has = col.any(axis=1)
        ok &= has
        piv = j + col.argmax(axis=1)
        rj = m[bidx, j].copy()
        m[bidx, j] = m[bidx, piv]
        m[bidx, piv] = rj
        pivval = m[:, j, j].copy()
        pivval[~has] = 1
        m[:, j, j:] = fld.mul(fld.inv(pivval)[:, None], m[:, j, j:])
        if j + 1 < r:
            fac = m[:, j + 1 :, j]
            m[:, j + 1 :, j:] = fld.sub(
                m[:, j + 1 :, j:], fld.mul(fac[..., None], m[:, j, None, j:])
            )
    return ok


def _chunked_combinations(n: int, w: int, chunk: int):
    it = itertools.combinations(range(n), w)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def find_dependent_columns(
    fld: Field, mat: np.ndarray, w: int, chunk: int = _CHUNK
) -> np.ndarray | None:
    """First (lexicographic) w-subset of dependent columns, or None."""
    for cols in _chunked_combinations(mat.shape[1], w, chunk):
        sub = mat[:, cols].transpose(1, 0, 2)  # (B, r, w)
        ok = batch_full_column_rank(fld, sub)
        if not ok.all():
            return cols[int(np.flatnonzero(~ok)[0])]
    return None


# -- weighted geometric column structure ------------------------------


def _perm_sign(perm: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def vandermonde_identity_holds(w: int) -> bool:
    """Expand det(x_j^i) and prod_{a<b}(x_b - x_a) symbolically over Z and
    compare.  Cached per size; sizes used here are tiny (w <= 8)."""
    det: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(w)):
        det[perm] = det.get(perm, 0) + _perm_sign(perm)
    rhs: dict[tuple[int, ...], int] = {tuple([0] * w): 1}
    for a in range(w):
        for b in range(a + 1, w):
            nxt: dict[tuple[int, ...], int] = {}
            for exps, c in rhs.items():
                for idx, sign in ((b, c), (a, -c)):
                    e = list(exps)
                    e[idx] += 1
                    key = tuple(e)
                    nxt[key] = nxt.get(key, 0) + sign
            rhs = {k: v for k, v in nxt.items() if v}
    det = {k: v for k, v in det.items() if v}
    return det == rhs


def geometric_column_points(fld: Field, mat: np.ndarray) -> np.ndarray | None:
    """If every column j equals w_j * (1, g_j, g_j^2, ...) with w_j != 0,
    return the g_j; otherwise None."""
    r, n = mat.shape
    if r < 2:
        return None
    w = mat[0]
    if np.any(w == 0):
        return None
    gamma = fld.div(mat[1], w)
    cur = np.array(w)
    for s in range(1, r):
        cur = fld.mul(cur, gamma)
        if np.any(cur != mat[s]):
            return None
    return gamma


def _structured_kernel_weight(fld: Field, mat: np.ndarray) -> KernelWeight | None:
    r, n = mat.shape
    if n <= r:
        return None
    gamma = geometric_column_points(fld, mat)
    if gamma is None:
        return None
    if len(np.unique(gamma)) != n:
        return None
    if rank(fld, mat) != r:
        return None
    if not all(vandermonde_identity_holds(w) for w in range(2, r + 1)):
        return None
    # Every subset of <= r columns is a weighted Vandermonde block on
    # distinct points, hence independent; the kernel has no word of weight
    # <= r.  Any r+1 columns are dependent, and the dependency has full
    # support for the same reason.
    cols = np.arange(r + 1)
    vec = right_kernel(fld, mat[:, cols])
    if vec.shape[0] != 1:
        return None
    word = np.zeros(n, dtype=np.int64)
    word[cols] = vec[0]
    wt = int(np.count_nonzero(word))
    if wt != r + 1 or matvec(fld, mat, word).any():
        raise AssertionError("structured kernel certificate failed verification")
    return KernelWeight(r + 1, r + 1, word, "vandermonde")


# -- span / kernel enumeration -----------------------------------------


def _coeff_block(fld: Field, start: int, stop: int, k: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((idx.size, k), dtype=np.int64)
    for i in range(k):
        out[:, i] = idx % fld.q
        idx = idx // fld.q
    return out


def span_min_weight(
    fld: Field,
    gen: np.ndarray,
    limit: int = DEFAULT_ENUM_LIMIT,
    chunk: int = _CHUNK,
) -> tuple[int, np.ndarray, np.ndarray]:
    """Minimum Hamming weight over the nonzero row span of gen, by full
    enumeration.  Returns (weight, coefficients, word)."""
    gen = np.atleast_2d(gen)
    k, n = gen.shape
    if k == 0:
        raise ValueError("span of an empty generator has no nonzero words")
    total = fld.q**k
    if total - 1 > limit:
        raise SearchBudgetExceeded(
            f"span enumeration needs {total - 1} words, limit {limit}"
        )
    best = (n + 1, None, None)
    for start in range(1, total, chunk):
        stop = min(start + chunk, total)
        coeffs = _coeff_block(fld, start, stop, k)
        words = np.zeros((stop - start, n), dtype=np.int64)
        for i in range(k):
            words = fld.add(words, fld.mul(coeffs[:, i, None], gen[i][None, :]))
        wts = np.count_nonzero(words, axis=1)
        j = int(wts.argmin())
        if wts[j] < best[0]:
            best = (int(wts[j]), coeffs[j].copy(), words[j].copy())
    return best


def min_kernel_weight(
    fld: Field,
    mat: np.ndarray,
    w_cap: int | None = None,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
    subset_limit: int = DEFAULT_SUBSET_LIMIT,
    structured_equivalents: tuple[np.ndarray, ...] = (),
) -> KernelWeight | float:
    """Minimum Hamming weight of a nonzero vector in the right kernel.

    Returns math.inf when the kernel is trivial.  Raises
    :class:`SearchBudgetExceeded` only from :attr:`KernelWeight.value`;
    bounded outcomes are returned, not raised.
    """
    mat = np.atleast_2d(np.asarray(mat, dtype=np.int64))
    red, pivots = rref(fld, mat)
    r = len(pivots)
    n = mat.shape[1]
    if r == n:
        return math.inf

    kdim = n - r
    if fld.q**kdim - 1 <= enum_limit:
        kern = right_kernel(fld, red)
        wt, _, word = span_min_weight(fld, kern, limit=enum_limit)
        return KernelWeight(wt, wt, word, "kernel-enumeration")

    for cand in (mat, *structured_equivalents):
        cand = np.atleast_2d(np.asarray(cand, dtype=np.int64))
        if cand.shape[1] != n:
            raise ValueError("structured equivalent has wrong width")
        if cand is not mat and not row_spaces_equal(fld, cand, mat):
            raise ValueError("structured equivalent spans a different row space")
        out = _structured_kernel_weight(fld, cand)
        if out is not None:
            return out

    # subset search: certify no dependency of weight < w, stop at first hit
    def fallback_word() -> np.ndarray:
        # any r+1 columns of a rank-r matrix are dependent
        cols = np.arange(r + 1)
        vec = right_kernel(fld, mat[:, cols])
        word = np.zeros(n, dtype=np.int64)
        word[cols] = vec[0]
        if not word.any() or matvec(fld, mat, word).any():
            raise AssertionError("kernel fallback word failed verification")
        return word

    cap = min(w_cap, r + 1) if w_cap is not None else r + 1
    spent = 0
    for w in range(1, cap + 1):
        count = math.comb(n, w)
        if spent + count > subset_limit:
            word = fallback_word()
            return KernelWeight(w, int(np.count_nonzero(word)), word, "subset-bounded")
        cols = find_dependent_columns(fld, mat, w)
        spent += count
        if cols is not None:
            vec = right_kernel(fld, mat[:, cols])
            pick = vec[np.count_nonzero(vec, axis=1).argmax()]
            word = np.zeros(n, dtype=np.int64)
            word[cols] = pick
            wt = int(np.count_nonzero(word))
            if wt != w:
                # dependency involving a sub-subset was already ruled out
                raise AssertionError("dependent subset produced lighter word")
            if matvec(fld, mat, word).any():
                raise AssertionError("subset kernel word failed verification")
            return KernelWeight(w, w, word, "subset-search")
    word = fallback_word()
    return KernelWeight(cap + 1, int(np.count_nonzero(word)), word, "subset-capped")
