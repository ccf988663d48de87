"""Rank-metric machinery over GF(l^m) with l = p prime.

The rank weight of a vector is the dimension over the prime field of the
span of its coordinates; coordinates are expanded to their coefficient
vectors, so the base field is always the prime subfield.  Moore matrices
apply successive Frobenius powers l^(t), l^(t+1), ... to a generator
vector of coordinates that are independent over the prime field.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import errors
from .fmatrix import FMatrix
from .gf import Element, FieldSpec, field_new
from .lincode import LinearCode

DEFAULT_SAMPLE_SIZE = 10_000
DEFAULT_SAMPLE_SEED = 20240913


@dataclass(frozen=True)
class MooreSpec:
    """Inputs of a Moore matrix: generators g, row count k, Frobenius offset t."""
    field: FieldSpec
    g: tuple[Element, ...]
    k: int
    t: int = 0


@dataclass(frozen=True)
class MrdReport:
    is_mrd: bool
    method: str  # "exhaustive" or "sampled"
    min_rank: Optional[int] = None  # exact for exhaustive, best bound for sampled
    seed: Optional[int] = None
    samples: Optional[int] = None

    def __bool__(self):
        return self.is_mrd


def _coefficient_matrix(v: Sequence[Element]) -> FMatrix:
    """n x e matrix over GF(p) whose rows are the coordinate coefficient vectors."""
    field = v[0].field
    prime = field_new(field.p, 1)
    return FMatrix(prime, [[prime.element(c) for c in x.coeffs] for x in v],
                   field.e)


def rank_weight(v: Sequence[Element]) -> int:
    """Dimension over GF(p) of the span of the vector's coordinates."""
    if not v:
        return 0
    if any(x.enc for x in v):
        return _coefficient_matrix(v).rank()
    return 0


def linearly_independent_over_base(g: Sequence[Element]) -> bool:
    """True iff the coordinates are linearly independent over GF(p)."""
    if not g:
        return True
    return _coefficient_matrix(g).rank() == len(g)


def moore_matrix(spec: MooreSpec) -> FMatrix:
    """k x n matrix with entry (i, j) = g_j^(l^((t+i) mod m))."""
    field = spec.field
    n, m = len(spec.g), field.e
    if n > m:
        raise errors.LengthExceedsDegree(f"n={n} generators but extension degree m={m}")
    if spec.k < 1:
        raise errors.ShapeMismatch("k must be at least 1")
    if not linearly_independent_over_base(spec.g):
        raise errors.DependentGenerators(
            "generators are dependent over the prime subfield")
    rows = []
    for i in range(spec.k):
        exp = field.p ** ((spec.t + i) % m)
        rows.append([g**exp for g in spec.g])
    return FMatrix(field, rows, n)


def min_rank_distance_exhaustive(C: LinearCode, budget: int = 2**22) -> int:
    """Exact minimum rank weight over nonzero codewords.

    Enumerates one representative per projective message class; scaling by a
    nonzero field constant is a GF(p)-linear bijection on coordinates, so it
    preserves rank weight.
    """
    if C.k < 1:
        raise errors.ZeroCode("rank distance of the zero code is undefined")
    if C.field.q**C.k > budget:
        raise errors.BudgetExceeded(f"{C.field.q}^{C.k} codewords exceed budget {budget}")
    els = C.field.elements()
    best = min(C.n, C.field.e) + 1
    rows = C.G.rows
    for lead in range(C.k):
        base = rows[lead]
        for tail in itertools.product(els, repeat=C.k - lead - 1):
            word = list(base)
            for m, grow in zip(tail, rows[lead + 1:]):
                if m:
                    word = [w + m * g for w, g in zip(word, grow)]
            best = min(best, rank_weight(word))
            if best == 1:
                return 1
    return best


def is_mrd(C: LinearCode, budget: int = 2**22,
           samples: int = DEFAULT_SAMPLE_SIZE,
           seed: int = DEFAULT_SAMPLE_SEED) -> MrdReport:
    """True iff the minimum rank distance attains n - k + 1.

    Exhaustive (a proof) when q^k is within budget; otherwise a fixed-seed
    random sample of nonzero codewords, reported as a "sampled" verdict and
    never as a proof.
    """
    if C.n > C.field.e:
        raise errors.LengthExceedsDegree(
            f"rank-metric certification needs n <= m ({C.n} > {C.field.e})")
    target = C.n - C.k + 1
    if C.field.q**C.k <= budget:
        dr = min_rank_distance_exhaustive(C, budget)
        return MrdReport(dr == target, "exhaustive", min_rank=dr)
    rng = random.Random(seed)
    q = C.field.q
    best = C.n
    for _ in range(samples):
        msg = [rng.randrange(q) for _ in range(C.k)]
        if not any(msg):
            msg[rng.randrange(C.k)] = 1 + rng.randrange(q - 1)
        word = None
        for menc, grow in zip(msg, C.G.rows):
            if menc:
                m = C.field.element(menc)
                scaled = [m * g for g in grow]
                word = scaled if word is None else [w + x for w, x in zip(word, scaled)]
        best = min(best, rank_weight(word))
        if best < target:
            return MrdReport(False, "sampled", min_rank=best, seed=seed, samples=samples)
    return MrdReport(best == target, "sampled", min_rank=best, seed=seed, samples=samples)
