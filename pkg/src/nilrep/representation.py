"""Representations of a Lie algebra and exact verification of their properties.

A ``Representation`` stores one sparse matrix per basis vector of the input
algebra, always relative to the algebra's original basis (algorithms that work
in an adapted basis convert before emitting).  Matrices act on column vectors,
so the defining relation is [M_i, M_j] = sum_k c_{ij}^k M_k.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Tuple

from .liealg import LieAlgebra
from .linalg import (
    SparseEliminator,
    Subspace,
    is_nilpotent,
    lincomb,
    matrix_kernel,
)


@dataclass
class Representation:
    """Matrices for every basis vector of ``algebra`` acting on K^dim."""

    algebra: LieAlgebra
    matrices: list
    provenance: dict = dc_field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.matrices[0].nrows if self.matrices else 0

    @property
    def field(self):
        return self.algebra.field

    def __repr__(self):
        return "Representation(dim=%d, algebra_dim=%d, provenance=%r)" % (
            self.dim,
            self.algebra.dim,
            self.provenance.get("algorithm"),
        )


def homomorphism_failure(rep: Representation) -> Optional[Tuple[int, int]]:
    """First pair (i, j) with [M_i, M_j] != sum_k c_{ij}^k M_k, or None."""
    g = rep.algebra
    mats = rep.matrices
    fld = g.field
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = mats[i].commutator(mats[j])
            terms = g.table.get((i, j), {})
            for k, c in terms.items():
                lhs = lhs.add_scaled(mats[k], fld.neg(c))
            if not lhs.is_zero_matrix():
                return (i, j)
    return None


def is_homomorphism(rep: Representation) -> bool:
    return homomorphism_failure(rep) is None


def kernel(rep: Representation) -> Subspace:
    """{x in g : sum_l x_l M_l = 0}, the kernel of the representation."""
    g = rep.algebra
    rows: dict = {}
    for l, mat in enumerate(rep.matrices):
        for j, col in mat.cols.items():
            for i, v in col.items():
                rows.setdefault((i, j), {})[l] = v
    elim = SparseEliminator(g.field, g.dim)
    for key in sorted(rows):
        elim.add(rows[key])
        if elim.rank == g.dim:
            break
    return elim.kernel()


def is_faithful(rep: Representation) -> bool:
    return kernel(rep).dim == 0


def annihilated_subspace(rep: Representation) -> Subspace:
    """S = {v in V : M_l v = 0 for every basis vector}, computed incrementally."""
    fld = rep.field
    cur: Optional[Subspace] = None
    for mat in rep.matrices:
        if cur is None:
            cur = matrix_kernel(mat)
        else:
            if cur.dim == 0:
                break
            images = [mat.apply_dense(b) for b in cur.rows]
            rows: dict = {}
            for k, img in enumerate(images):
                for t, v in enumerate(img):
                    if v != 0:
                        rows.setdefault(t, {})[k] = v
            elim = SparseEliminator(fld, cur.dim)
            for t in sorted(rows):
                elim.add(rows[t])
            coeff_kernel = elim.kernel()
            vecs = []
            for kv in coeff_kernel.rows:
                w = [fld.zero] * rep.dim
                for k, u in enumerate(kv):
                    if u == 0:
                        continue
                    row = cur.rows[k]
                    w = [fld.canon(x + u * y) for x, y in zip(w, row)]
                vecs.append(w)
            cur = Subspace.from_vectors(fld, rep.dim, vecs)
    if cur is None:
        cur = Subspace.full_space(fld, rep.dim)
    return cur


def center_image(rep: Representation) -> Subspace:
    """C = sum over central z of the column space of M_z."""
    g = rep.algebra
    fld = g.field
    elim = SparseEliminator(fld, rep.dim)
    for z in g.center().rows:
        mz = lincomb(fld, z, rep.matrices)
        for j in sorted(mz.cols):
            elim.add(mz.cols[j])
    return elim.row_space()


def verify_report(rep: Representation) -> dict:
    """Full verification used by the CLI: homomorphism, faithfulness, nilpotency."""
    failure = homomorphism_failure(rep)
    faithful = is_faithful(rep)
    nilpotent = all(is_nilpotent(m) for m in rep.matrices)
    return {
        "homomorphism": "ok" if failure is None else "fail(%d,%d)" % failure,
        "faithful": faithful,
        "nilpotent_matrices": nilpotent,
        "ok": failure is None and faithful and nilpotent,
    }
