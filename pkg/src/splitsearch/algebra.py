"""Commutative hypercomplex algebra used for signed-weight retrieval.

The algebra of dimension 2N is a direct sum of N split-complex blocks:
basis elements pair up as (e_{2i-1}, e_{2i}) with

    e_p * e_p = e_p,   e_p * e_q = e_q,   e_q * e_q = e_p

inside a block, and every cross-block product equal to zero.  A document
over an N-term vocabulary embeds as

    d = e_1 w_1(+) + e_2 w_1(-) + e_3 w_2(+) + e_4 w_2(-) + ...

so each term occupies one block, carrying its positive weight on the odd
basis element and its negative weight on the even one.  Relevance is the
evaluation functional ``est`` (+1 on odd, -1 on even basis elements)
applied to the query-document product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import numpy as np

#: Sentinel returned by :meth:`MultiplicationTable.entry` for a vanishing
#: basis product.  Basis indices themselves are 1-based, so 0 is free.
ZERO = 0

#: Largest supported vocabulary size; guards accidental dense allocations.
MAX_TERMS = 2**20


@dataclass(frozen=True)
class MultiplicationTable:
    """Structure constants of the 2N-dimensional block algebra.

    The table is never materialised: all entries are 0 or 1 and follow
    the block pattern, so ``entry`` computes them on demand.
    """

    n_terms: int

    def __post_init__(self) -> None:
        if self.n_terms < 1:
            raise ValueError("n_terms must be >= 1")
        if self.n_terms > MAX_TERMS:
            raise ValueError(f"n_terms {self.n_terms} exceeds cap {MAX_TERMS}")

    @property
    def dim(self) -> int:
        return 2 * self.n_terms

    def entry(self, a: int, b: int) -> int:
        """Basis product e_a * e_b: a basis index, or ``ZERO``.

        Indices are 1-based.  Cross-block products vanish; within block i
        (p = 2i-1, q = 2i): e_p*e_p = e_p, e_p*e_q = e_q, e_q*e_q = e_p.
        """
        if not (1 <= a <= self.dim and 1 <= b <= self.dim):
            raise ValueError(f"basis index out of range [1, {self.dim}]")
        if (a + 1) // 2 != (b + 1) // 2:
            return ZERO
        if a == b:
            return a if a % 2 == 1 else a - 1
        return max(a, b)


def build_ir_table(n_terms: int) -> MultiplicationTable:
    """Table for an N-term vocabulary (dimension 2N)."""
    return MultiplicationTable(n_terms)


@dataclass(frozen=True, eq=True)
class HyperNumber:
    """Element of the algebra: sparse real coefficients over e_1..e_dim.

    ``coeffs`` maps 1-based basis index to a nonzero finite coefficient;
    absent indices are zero.  Instances are immutable; all arithmetic
    lives in module-level functions.
    """

    dim: int
    coeffs: Dict[int, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 2 or self.dim % 2 != 0:
            raise ValueError("dim must be a positive even integer")
        cleaned = {}
        for idx, c in self.coeffs.items():
            if not (1 <= idx <= self.dim):
                raise ValueError(f"basis index {idx} out of range [1, {self.dim}]")
            c = float(c)
            if not math.isfinite(c):
                raise ValueError(f"non-finite coefficient at e_{idx}")
            if c != 0.0:
                cleaned[idx] = c
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def zero(cls, dim: int) -> "HyperNumber":
        return cls(dim, {})

    @classmethod
    def basis(cls, dim: int, index: int) -> "HyperNumber":
        return cls(dim, {index: 1.0})

    @classmethod
    def from_dense(cls, values: Iterable[float]) -> "HyperNumber":
        vals = list(values)
        return cls(len(vals), {i + 1: v for i, v in enumerate(vals) if v != 0.0})

    def coeff(self, index: int) -> float:
        return self.coeffs.get(index, 0.0)

    def dense(self) -> List[float]:
        return [self.coeffs.get(i, 0.0) for i in range(1, self.dim + 1)]

    def __repr__(self) -> str:
        terms = " + ".join(
            f"{c:g}*e{i}" for i, c in sorted(self.coeffs.items())
        )
        return f"HyperNumber(dim={self.dim}, {terms or '0'})"


@dataclass(frozen=True)
class SignedProjection:
    """Per-term net weights s_i = w_i(+) - w_i(-), one value per block."""

    values: Tuple[float, ...]

    def dot(self, other: "SignedProjection") -> float:
        if len(self.values) != len(other.values):
            raise ValueError("dimension mismatch")
        return sum(a * b for a, b in zip(self.values, other.values))


def _require_same_dim(x: HyperNumber, y: HyperNumber) -> None:
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} != {y.dim}")


def add(x: HyperNumber, y: HyperNumber) -> HyperNumber:
    """Componentwise sum."""
    _require_same_dim(x, y)
    out = dict(x.coeffs)
    for idx, c in y.coeffs.items():
        out[idx] = out.get(idx, 0.0) + c
    return HyperNumber(x.dim, out)


def scale(c: float, x: HyperNumber) -> HyperNumber:
    """Scalar multiple."""
    return HyperNumber(x.dim, {i: c * v for i, v in x.coeffs.items()})


def _touched_blocks(x: HyperNumber, y: HyperNumber) -> List[int]:
    blocks = {(i + 1) // 2 for i in x.coeffs} & {(i + 1) // 2 for i in y.coeffs}
    return sorted(blocks)


def mul(t: MultiplicationTable, x: HyperNumber, y: HyperNumber) -> HyperNumber:
    """Bilinear extension of the table to arbitrary elements.

    Equivalent to summing e_a*e_b products over all coefficient pairs,
    but computed blockwise: within block i (p = 2i-1, q = 2i) the product
    is (x_p y_p + x_q y_q) e_p + (x_p y_q + x_q y_p) e_q, and distinct
    blocks never interact.
    """
    _require_same_dim(x, y)
    if x.dim != t.dim:
        raise ValueError(f"dimension mismatch: operand {x.dim} vs table {t.dim}")
    out: Dict[int, float] = {}
    for block in _touched_blocks(x, y):
        p = 2 * block - 1
        q = p + 1
        xp, xq = x.coeffs.get(p, 0.0), x.coeffs.get(q, 0.0)
        yp, yq = y.coeffs.get(p, 0.0), y.coeffs.get(q, 0.0)
        zp = xp * yp + xq * yq
        zq = xp * yq + xq * yp
        if zp != 0.0:
            out[p] = zp
        if zq != 0.0:
            out[q] = zq
    return HyperNumber(x.dim, out)


def unit_element(t: MultiplicationTable) -> HyperNumber:
    """Multiplicative unit: coefficient 1 on every odd basis element."""
    return HyperNumber(t.dim, {2 * i - 1: 1.0 for i in range(1, t.n_terms + 1)})


def est(x: HyperNumber) -> float:
    """Additive evaluation functional: +1 on odd, -1 on even basis elements."""
    total = 0.0
    for idx in sorted(x.coeffs):
        c = x.coeffs[idx]
        total += c if idx % 2 == 1 else -c
    return total


def sim(t: MultiplicationTable, a: HyperNumber, b: HyperNumber) -> float:
    """Relevance score: ``est`` of the blockwise product of a and b.

    Algebraically equal to sum_i (a_i+ - a_i-)(b_i+ - b_i-); may be
    negative.  Higher means more relevant.
    """
    return est(mul(t, a, b))


def _part(x: HyperNumber, parity: int) -> HyperNumber:
    return HyperNumber(x.dim, {i: c for i, c in x.coeffs.items() if i % 2 == parity})


def sim1(t: MultiplicationTable, a: HyperNumber, b: HyperNumber) -> float:
    """Difference-based score, lower is closer: sum_i (d_i+)^2 (d_i-)^2.

    Each squared difference is computed inside the algebra, where it
    lands on the block's odd basis element, so ``est`` collects every
    block with a + sign and the result is never negative.  Kept for
    inspection only; ranking does not use it because a zero query still
    yields a document-dependent nonzero value.
    """
    _require_same_dim(a, b)
    diff = add(a, scale(-1.0, b))
    dplus = _part(diff, 1)
    dminus = _part(diff, 0)
    return est(mul(t, mul(t, dplus, dplus), mul(t, dminus, dminus)))


def signed_projection(x: HyperNumber) -> SignedProjection:
    """Collapse each block to its net weight x_{2i-1} - x_{2i}."""
    n = x.dim // 2
    vals = [x.coeffs.get(2 * i - 1, 0.0) - x.coeffs.get(2 * i, 0.0) for i in range(1, n + 1)]
    return SignedProjection(tuple(vals))


def matrix_rep(t: MultiplicationTable, x: HyperNumber) -> np.ndarray:
    """Faithful matrix image of x: N diagonal blocks [[x_p, x_q], [x_q, x_p]].

    Multiplication oracle: matrix_rep(mul(x, y)) equals
    matrix_rep(x) @ matrix_rep(y).  Dense; intended for small dimensions.
    """
    if x.dim != t.dim:
        raise ValueError(f"dimension mismatch: operand {x.dim} vs table {t.dim}")
    m = np.zeros((t.dim, t.dim))
    for block in range(1, t.n_terms + 1):
        p = 2 * block - 1
        q = p + 1
        xp, xq = x.coeffs.get(p, 0.0), x.coeffs.get(q, 0.0)
        i = p - 1
        m[i, i] = xp
        m[i + 1, i + 1] = xp
        m[i, i + 1] = xq
        m[i + 1, i] = xq
    return m
