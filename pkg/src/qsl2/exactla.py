"""Exact sparse linear algebra over Q(q).

Vectors are dicts keyed by any orderable hashable (words, index pairs).
Echelon keeps pivot-normalized rows; everything is exact CycRat arithmetic.
"""

from __future__ import annotations

from .cyclo import CycRat


class Echelon:
    """Incremental row echelon form for sparse vectors."""

    def __init__(self):
        self.rows: dict = {}  # pivot key -> vector with that pivot, coeff 1

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        while vec:
            pivot = max(vec)
            row = self.rows.get(pivot)
            if row is None:
                return vec
            c = vec[pivot]
            for k, v in row.items():
                acc = vec.get(k)
                nv = acc - c * v if acc is not None else -c * v
                if nv.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = nv
        return vec

    def add(self, vec: dict) -> bool:
        """Insert the vector; True if it enlarged the span."""
        res = self.reduce(vec)
        if not res:
            return False
        pivot = max(res)
        inv = res[pivot].inverse()
        self.rows[pivot] = {k: v * inv for k, v in res.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    @property
    def dim(self) -> int:
        return len(self.rows)


def kernel_of_columns(cols: list[dict], ell: int) -> list[dict]:
    """Kernel of the linear map e_i -> cols[i], as sparse coefficient dicts.

    Deterministic: columns are consumed in order and each kernel vector is
    normalized so its highest-index entry is 1.
    """
    ech = Echelon()
    combos: dict = {}  # pivot key -> combo dict over column indices
    kernel = []
    one = CycRat.one(ell)
    for i, col in enumerate(cols):
        vec = dict(col)
        combo = {i: one}
        while vec:
            pivot = max(vec)
            row = ech.rows.get(pivot)
            if row is None:
                break
            c = vec[pivot]
            for k, v in row.items():
                acc = vec.get(k)
                nv = acc - c * v if acc is not None else -c * v
                if nv.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = nv
            for k, v in combos[pivot].items():
                acc = combo.get(k)
                nv = acc - c * v if acc is not None else -c * v
                if nv.is_zero():
                    combo.pop(k, None)
                else:
                    combo[k] = nv
        if not vec:
            top = max(combo)
            inv = combo[top].inverse()
            kernel.append({k: v * inv for k, v in combo.items()})
        else:
            pivot = max(vec)
            inv = vec[pivot].inverse()
            ech.rows[pivot] = {k: v * inv for k, v in vec.items()}
            combos[pivot] = {k: v * inv for k, v in combo.items()}
    return kernel


def span_dim(vecs) -> int:
    ech = Echelon()
    for v in vecs:
        ech.add(v)
    return ech.dim
