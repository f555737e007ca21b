"""Algorithm Affine: randomized inductive construction of a (d+1)-dimensional
faithful representation in strictly-lower-triangular affine block form.

Induction runs along a central series with one-dimensional steps (the adapted
basis order).  At each step the space of 1-cocycles of the next quotient with
values in the current module is computed exactly; any cocycle with nonzero
value on the adjoined central generator yields a faithful extension

    psi(a_j) = [[M_j, delta(a_j)], [0, 0]].

The written condition "v_{d+1} != 0" is read as: the cocycle value on the
adjoined generator is nonzero -- only v_1..v_d exist at that point, and this
reading makes the faithfulness argument (ker psi contained in <a_new>, killed
by delta(a_new) != 0) go through.  If no such cocycle exists the attempt
fails; the driver restarts with fresh randomness up to a retry budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .liealg import AdaptedBasis, LieAlgebra
from .linalg import SparseEliminator, SparseMatrix, Subspace
from .representation import Representation

_RANDOM_BOUND = 5  # rational runs draw cocycle mix coefficients from [-5, 5]
_MIX_ATTEMPTS = 20


class AffineTimeout(Exception):
    """Raised when a cooperative deadline expires inside algorithm_affine."""


@dataclass
class AffineFail:
    """Outcome value when no attempt reached a full extension."""

    deepest_step: int
    attempts: int

    def __repr__(self):
        return "AffineFail(deepest_step=%d, attempts=%d)" % (self.deepest_step, self.attempts)


@dataclass
class AffineState:
    """Faithful block representation of g/g_i during the induction."""

    algebra: LieAlgebra  # full algebra in the adapted (central series) basis
    step: int  # dimension i of the quotient currently represented
    matrices: list  # dense (i+1)x(i+1) matrices for a_1..a_i
    rng: random.Random


def _truncated_quotient(adapted_algebra: LieAlgebra, k: int) -> LieAlgebra:
    """g/g_k in the adapted basis: keep indices < k, drop bracket tails."""
    table = {}
    for (i, j), terms in adapted_algebra.table.items():
        if i < k and j < k:
            entry = {t: c for t, c in terms.items() if t < k}
            if entry:
                table[(i, j)] = entry
    return LieAlgebra(adapted_algebra.field, k, table)


def _dense_mul(a: Sequence, b: Sequence, fld) -> list:
    n = len(a)
    out = [[fld.zero] * n for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(n):
            f = arow[t]
            if f == 0:
                continue
            brow = b[t]
            for j in range(n):
                x = brow[j]
                if x != 0:
                    orow[j] = orow[j] + f * x
    return [[fld.canon(x) for x in row] for row in out]


def _check_representation(q: LieAlgebra, rho: Sequence) -> Optional[tuple]:
    fld = q.field
    n = len(rho[0])
    for i in range(q.dim):
        for j in range(i + 1, q.dim):
            lhs = _dense_mul(rho[i], rho[j], fld)
            rhs = _dense_mul(rho[j], rho[i], fld)
            diff = [[fld.sub(x, y) for x, y in zip(r1, r2)] for r1, r2 in zip(lhs, rhs)]
            for k, c in q.table.get((i, j), {}).items():
                mk = rho[k]
                diff = [
                    [fld.sub(x, fld.mul(c, y)) for x, y in zip(r1, r2)]
                    for r1, r2 in zip(diff, mk)
                ]
            if any(x != 0 for row in diff for x in row):
                return (i, j)
    return None


def one_cocycles(q: LieAlgebra, rho: Sequence, check: bool = True) -> Subspace:
    """Z¹(q, K^m) for the module given by the matrices rho, as stacked vectors.

    Unknowns are the stacked images delta(a_1)..delta(a_k) in K^m; the rows
    encode delta([a_j, a_l]) = rho(a_j) delta(a_l) - rho(a_l) delta(a_j) for
    all basis pairs.  ``rho`` must be a representation of q.
    """
    fld = q.field
    k = q.dim
    if len(rho) != k:
        raise ValueError("need one matrix per basis vector of q")
    m = len(rho[0])
    if check:
        bad = _check_representation(q, rho)
        if bad is not None:
            raise ValueError("rho is not a representation: pair %r fails" % (bad,))
    elim = SparseEliminator(fld, k * m)
    for j in range(k):
        mj = rho[j]
        for l in range(j + 1, k):
            ml = rho[l]
            terms = q.table.get((j, l), {})
            for t in range(m):
                row: dict = {}
                for s, c in terms.items():
                    row[s * m + t] = row.get(s * m + t, 0) + c
                for u, x in enumerate(mj[t]):
                    if x != 0:
                        row[l * m + u] = row.get(l * m + u, 0) - x
                for u, x in enumerate(ml[t]):
                    if x != 0:
                        row[j * m + u] = row.get(j * m + u, 0) + x
                row = {c: fld.canon(v) for c, v in row.items() if not fld.is_zero(v)}
                if row:
                    elim.add(row)
    return elim.kernel()


def _random_scalar(fld, rng: random.Random):
    if fld.characteristic:
        return rng.randrange(fld.characteristic)
    return fld.from_int(rng.randint(-_RANDOM_BOUND, _RANDOM_BOUND))


def extend_step(state: AffineState, greedy: bool = False) -> Optional[AffineState]:
    """Extend a faithful representation of g/g_i to g/g_{i+1}, or fail.

    Fail (None) means: no cocycle of the next quotient evaluates to a nonzero
    vector on the adjoined central generator.  That verdict is exact for the
    current state, but earlier random choices may be to blame.

    The cocycle is chosen among the echelon basis vectors of Z¹ with nonzero
    evaluation: the first one when ``greedy``, otherwise a random one,
    occasionally perturbed by a random multiple of another basis cocycle.
    Generic mixtures over the whole of Z¹ stall on the benchmark inputs, so
    the randomness stays close to the simple candidates.
    """
    fld = state.algebra.field
    i = state.step
    m = i + 1  # current module dimension
    qnext = _truncated_quotient(state.algebra, i + 1)
    rho = list(state.matrices) + [[[fld.zero] * m for _ in range(m)]]
    cocycles = one_cocycles(qnext, rho, check=False)
    eval_lo = i * m
    rows = list(cocycles.rows)
    candidates = [r for r in rows if any(x != 0 for x in r[eval_lo:eval_lo + m])]
    if not candidates:
        return None
    if greedy:
        delta = list(candidates[0])
    else:
        rng = state.rng
        delta = list(candidates[rng.randrange(len(candidates))])
        others = [r for r in rows if r is not delta]
        if others and rng.random() < 0.5:
            for _ in range(_MIX_ATTEMPTS):
                extra = others[rng.randrange(len(others))]
                f = _random_scalar(fld, rng)
                mixed = [fld.canon(x + f * y) for x, y in zip(delta, extra)]
                if any(x != 0 for x in mixed[eval_lo:eval_lo + m]):
                    delta = mixed
                    break
    new_size = m + 1
    new_mats = []
    for j in range(i + 1):
        vj = delta[j * m:(j + 1) * m]
        block = state.matrices[j] if j < i else [[fld.zero] * m for _ in range(m)]
        mat = [list(block[t]) + [vj[t]] for t in range(m)]
        mat.append([fld.zero] * new_size)
        new_mats.append(mat)
    _assert_trivial_kernel(qnext, new_mats, fld)
    return AffineState(state.algebra, i + 1, new_mats, state.rng)


def _assert_trivial_kernel(q: LieAlgebra, mats: Sequence, fld):
    elim = SparseEliminator(fld, q.dim)
    n = len(mats[0])
    for r in range(n):
        for c in range(n):
            row = {}
            for s, mat in enumerate(mats):
                v = mat[r][c]
                if v != 0:
                    row[s] = v
            if row:
                elim.add(row)
        if elim.rank == q.dim:
            break
    assert elim.rank == q.dim, "affine extension lost faithfulness"


def algorithm_affine(
    g: LieAlgebra,
    seed: int = 0,
    retries: int = 10,
    adapted: Optional[AdaptedBasis] = None,
    deadline: Optional[float] = None,
):
    """Try to build a faithful representation of dimension dim(g) + 1.

    Returns a Representation on success and an AffineFail value otherwise;
    runs are reproducible for a fixed seed.  ``deadline`` (time.monotonic
    value) aborts cooperatively via AffineTimeout.
    """
    adapted = adapted or g.adapted_basis()
    fld = g.field
    d = g.dim
    deepest = 0
    for attempt in range(max(1, retries)):
        rng = random.Random(seed * 1_000_003 + attempt)
        base = [[[fld.zero, fld.zero], [fld.one, fld.zero]]]
        state = AffineState(adapted.algebra, 1, base, rng)
        failed_at = None
        while state.step < d:
            if deadline is not None and time.monotonic() > deadline:
                raise AffineTimeout("affine run exceeded its deadline")
            nxt = extend_step(state, greedy=(attempt == 0))
            if nxt is None:
                failed_at = state.step
                break
            state = nxt
        if failed_at is None:
            deepest = d
            mats_adapted = [
                SparseMatrix.from_dense(fld, mat) for mat in state.matrices
            ]
            mats = []
            for l in range(d):
                coeffs = adapted.inverse[l]
                acc = SparseMatrix.zero(fld, d + 1, d + 1)
                for cj, mat in zip(coeffs, mats_adapted):
                    if not fld.is_zero(cj):
                        acc = acc.add_scaled(mat, cj)
                mats.append(acc)
            return Representation(
                g,
                mats,
                {"algorithm": "affine", "dim": d + 1, "seed": seed, "attempt": attempt},
            )
        deepest = max(deepest, failed_at)
    return AffineFail(deepest_step=deepest, attempts=max(1, retries))
