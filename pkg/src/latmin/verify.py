"""Exhaustive checks of submodularity, the M♮ exchange axiom, the minimizer
condition, and the exchange axiom for set families.

Every negative answer comes with a ``ViolationWitness``: the first failing
``(X, Y, i)`` with X, then Y, scanned in graded subset order (smaller
cardinality first, ties by table index) and then i ascending. The pair
scans are vectorized with numpy over blocks of X rows.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np

from latmin.config import caps
from latmin.constructions import SetFunctionTable
from latmin.errors import (
    DimensionMismatchError,
    EmptyFamilyError,
    InfiniteValueError,
    SizeError,
)
from latmin.matching import NEG_INF
from latmin.poset import Poset, SubsetFamily, from_mask, graded_key, graded_masks, ideal_masks

# elements per numpy block of the (X, Y) grid
_BLOCK = 1 << 20


class ViolationKind(enum.Enum):
    SUBMODULARITY = "submodularity"
    MNAT_EXCHANGE = "mnat-exchange"
    GENERALIZED_MATROID = "generalized-matroid"


@dataclass(frozen=True)
class ViolationWitness:
    """A failing instance of one of the axioms.

    For SUBMODULARITY, ``lhs = f(X) + f(Y)`` and ``rhs = f(X ∪ Y) + f(X ∩ Y)``.
    For MNAT_EXCHANGE, ``lhs = f(X) + f(Y)``, ``rhs = f(X - i) + f(Y + i)`` and
    ``rhs_j[k] = f(X - i + j) + f(Y + i - j)`` for ``j = tried_j[k]``.
    For GENERALIZED_MATROID the values are unused (membership is what fails).
    """

    kind: ViolationKind
    X: frozenset[int]
    Y: frozenset[int]
    i: int | None = None
    tried_j: tuple[int, ...] = ()
    lhs: int | float | None = None
    rhs: int | float | None = None
    rhs_j: tuple[int | float, ...] = ()

    def reproduces(self, host: SetFunctionTable | SubsetFamily) -> bool:
        """Re-evaluate the cited inequality (or membership test) on ``host``."""
        X, Y = self.X, self.Y
        if self.kind is ViolationKind.SUBMODULARITY:
            f = host
            return f(X) + f(Y) < f(X | Y) + f(X & Y)
        i = self.i
        if i is None or i not in X or i in Y:
            return False
        if sorted(self.tried_j) != sorted(Y - X):
            return False
        if self.kind is ViolationKind.MNAT_EXCHANGE:
            f = host
            lhs = f(X) + f(Y)
            if lhs <= f(X - {i}) + f(Y | {i}):
                return False
            return all(lhs > f((X - {i}) | {j}) + f((Y | {i}) - {j}) for j in self.tried_j)
        F = host
        if X not in F.members or Y not in F.members:
            return False
        if (X - {i}) in F.members and (Y | {i}) in F.members:
            return False
        return not any(
            ((X - {i}) | {j}) in F.members and ((Y | {i}) - {j}) in F.members
            for j in self.tried_j
        )

    def to_dict(self, *, one_indexed: bool = True) -> dict:
        s = 1 if one_indexed else 0
        out: dict = {
            "kind": self.kind.value,
            "X": sorted(e + s for e in self.X),
            "Y": sorted(e + s for e in self.Y),
        }
        if self.i is not None:
            out["i"] = self.i + s
            out["tried_j"] = [j + s for j in self.tried_j]
        if self.lhs is not None:
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        if self.rhs_j:
            out["rhs_j"] = list(self.rhs_j)
        return out

    def describe(self, *, one_indexed: bool = True) -> str:
        s = 1 if one_indexed else 0

        def fmt(A: frozenset[int]) -> str:
            return "{" + ",".join(str(e + s) for e in sorted(A)) + "}"

        text = f"X={fmt(self.X)} Y={fmt(self.Y)}"
        if self.i is not None:
            text += f" i={self.i + s}"
        if self.kind is ViolationKind.SUBMODULARITY:
            text += f" f(X)+f(Y)={self.lhs} < f(X|Y)+f(X&Y)={self.rhs}"
        elif self.kind is ViolationKind.MNAT_EXCHANGE:
            text += f" f(X)+f(Y)={self.lhs} > f(X-i)+f(Y+i)={self.rhs}"
            for j, r in zip(self.tried_j, self.rhs_j):
                text += f"; j={j + s}: f(X-i+j)+f(Y+i-j)={r}"
        else:
            tried = ",".join(str(j + s) for j in self.tried_j)
            text += f" no exchange (tried j in {{{tried}}})"
        return text


def _finite_array(f: SetFunctionTable) -> np.ndarray:
    if any(v == NEG_INF for v in f.values):
        raise InfiniteValueError("table contains -inf entries")
    return np.asarray(f.values)


def _check_verify_cap(n: int, cap: int | None) -> None:
    cap = caps().verify if cap is None else cap
    if n > cap:
        raise SizeError(f"n={n} exceeds the verification cap {cap}")


def _block_rows(rows: np.ndarray, width: int) -> list[np.ndarray]:
    step = max(1, _BLOCK // max(1, width))
    return [rows[s : s + step, None] for s in range(0, len(rows), step)]


def _first_exchange_violation(
    rows: np.ndarray,
    cols: np.ndarray,
    n: int,
    holds: Callable[[np.ndarray, np.ndarray, np.ndarray, np.ndarray], np.ndarray],
) -> tuple[int, int, int] | None:
    """First ``(X, Y, i)`` with ``i ∈ X∖Y`` where neither the single move
    ``(X-i, Y+i)`` nor any swap ``(X-i+j, Y+i-j)``, ``j ∈ Y∖X``, satisfies ``holds``.

    ``rows``/``cols`` are bitmask arrays in scan order; ``holds(X, Y, X2, Y2)``
    broadcasts over a block of the grid.
    """
    ys = cols[None, :]
    for xs in _block_rows(rows, len(cols) * max(n, 1)):
        viol = np.zeros((xs.shape[0], len(cols), n), dtype=bool)
        for i in range(n):
            bi = 1 << i
            cond = ((xs & bi) != 0) & ((ys & bi) == 0)
            if not cond.any():
                continue
            xi, yi = xs ^ bi, ys | bi
            ok = holds(xs, ys, xi, yi)
            for j in range(n):
                if j == i:
                    continue
                bj = 1 << j
                cond_j = ((ys & bj) != 0) & ((xs & bj) == 0)
                ok |= cond_j & holds(xs, ys, xi | bj, yi ^ bj)
            viol[:, :, i] = cond & ~ok
        if viol.any():
            a, b, i = np.unravel_index(int(np.argmax(viol)), viol.shape)
            return int(xs[a, 0]), int(cols[b]), int(i)
    return None


def is_submodular(f: SetFunctionTable, cap: int | None = None) -> ViolationWitness | None:
    vals = _finite_array(f)
    _check_verify_cap(f.n, cap)
    masks = np.asarray(graded_masks(f.n))
    ys = masks[None, :]
    for xs in _block_rows(masks, len(masks)):
        viol = vals[xs] + vals[ys] < vals[xs | ys] + vals[xs & ys]
        if viol.any():
            a, b = np.unravel_index(int(np.argmax(viol)), viol.shape)
            x, y = int(xs[a, 0]), int(masks[b])
            return ViolationWitness(
                ViolationKind.SUBMODULARITY,
                from_mask(x),
                from_mask(y),
                lhs=f.values[x] + f.values[y],
                rhs=f.values[x | y] + f.values[x & y],
            )
    return None


def is_mnat_concave(f: SetFunctionTable, cap: int | None = None) -> ViolationWitness | None:
    """Exchange axiom: for all X, Y and i ∈ X∖Y,
    ``f(X)+f(Y) <= f(X-i)+f(Y+i)`` or ``f(X)+f(Y) <= f(X-i+j)+f(Y+i-j)`` for some j ∈ Y∖X."""
    vals = _finite_array(f)
    _check_verify_cap(f.n, cap)
    masks = np.asarray(graded_masks(f.n))

    def holds(xs, ys, x2, y2):
        return vals[xs] + vals[ys] <= vals[x2] + vals[y2]

    hit = _first_exchange_violation(masks, masks, f.n, holds)
    if hit is None:
        return None
    x, y, i = hit
    v = f.values
    bi = 1 << i
    tried = [j for j in range(f.n) if (y >> j & 1) and not (x >> j & 1)]
    return ViolationWitness(
        ViolationKind.MNAT_EXCHANGE,
        from_mask(x),
        from_mask(y),
        i=i,
        tried_j=tuple(tried),
        lhs=v[x] + v[y],
        rhs=v[x ^ bi] + v[y | bi],
        rhs_j=tuple(v[(x ^ bi) | 1 << j] + v[(y | bi) ^ 1 << j] for j in tried),
    )


def _finite_extreme(f: SetFunctionTable, pick: Callable) -> SubsetFamily:
    finite = [v for v in f.values if v != NEG_INF]
    if not finite:
        raise InfiniteValueError("table has no finite entry")
    target = pick(finite)
    return SubsetFamily.from_masks(f.n, (m for m, v in enumerate(f.values) if v == target))


def minimizers(f: SetFunctionTable) -> SubsetFamily:
    """Subsets attaining the least finite value (-inf marks points outside the domain)."""
    return _finite_extreme(f, min)


def maximizers(f: SetFunctionTable) -> SubsetFamily:
    return _finite_extreme(f, max)


def check_min_condition(f: SetFunctionTable, P: Poset) -> bool:
    """True iff f vanishes exactly on the ideals of P and is positive elsewhere."""
    if f.n != P.n:
        raise DimensionMismatchError(f"table has n={f.n}, poset has n={P.n}")
    ideals = set(ideal_masks(P))
    for m, v in enumerate(f.values):
        if m in ideals:
            if v != 0:
                return False
        elif not v > 0:
            return False
    return True


def is_generalized_matroid(F: SubsetFamily, cap: int | None = None) -> ViolationWitness | None:
    """For A, B ∈ F and i ∈ A∖B: both A-i, B+i ∈ F, or both A-i+j, B+i-j ∈ F for some j ∈ B∖A."""
    if not F.members:
        raise EmptyFamilyError("family is empty")
    _check_verify_cap(F.n, cap)
    member = np.zeros(1 << F.n, dtype=bool)
    masks = np.asarray(sorted(F.masks, key=graded_key), dtype=np.int64)
    member[masks] = True

    def holds(xs, ys, x2, y2):
        return member[x2] & member[y2]

    hit = _first_exchange_violation(masks, masks, F.n, holds)
    if hit is None:
        return None
    a, b, i = hit
    tried = tuple(j for j in range(F.n) if (b >> j & 1) and not (a >> j & 1))
    return ViolationWitness(
        ViolationKind.GENERALIZED_MATROID, from_mask(a), from_mask(b), i=i, tried_j=tried
    )
