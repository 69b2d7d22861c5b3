"""Finite posets, their ideals, and the Birkhoff correspondence.

Elements are ``0..n-1`` throughout the library; only the file formats and
the CLI present them as ``1..n``. Element-sets are ``frozenset[int]`` at the
API boundary and bitmasks (bit k set iff element k is present) inside.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from latmin.config import caps
from latmin.errors import (
    CycleError,
    EmptyFamilyError,
    InputFormatError,
    NotLatticeError,
    SizeError,
)


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return frozenset(out)


def graded_key(mask: int) -> tuple[int, int]:
    """Sort key for graded subset order: cardinality first, then index."""
    return bin(mask).count("1"), mask


def graded_masks(n: int) -> list[int]:
    return sorted(range(1 << n), key=graded_key)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """A finite partial order; ``leq[j][i]`` is true iff ``j ≼ i``."""

    n: int
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        n, leq = self.n, self.leq
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError(f"leq must be {n}x{n}")
        for i in range(n):
            if not leq[i][i]:
                raise ValueError(f"not reflexive at {i}")
            for j in range(n):
                if i != j and leq[i][j] and leq[j][i]:
                    raise ValueError(f"not antisymmetric at ({i}, {j})")
                if leq[j][i]:
                    for k in range(n):
                        if leq[i][k] and not leq[j][k]:
                            raise ValueError(f"not transitive at ({j}, {i}, {k})")

    def less(self, j: int, i: int) -> bool:
        return j != i and self.leq[j][i]

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Bitmask of the principal ideal of each element."""
        return tuple(
            sum(1 << j for j in range(self.n) if self.leq[j][i]) for i in range(self.n)
        )

    @cached_property
    def strict_down(self) -> tuple[int, ...]:
        return tuple(d & ~(1 << i) for i, d in enumerate(self.down))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse cover pairs ``(j, i)`` with ``j ⋖ i``, sorted."""
        out = []
        for i in range(self.n):
            below = self.strict_down[i]
            for j in _bits(below):
                # j is covered by i unless some k sits strictly between them
                if not any(self.strict_down[k] >> j & 1 for k in _bits(below)):
                    out.append((j, i))
        return tuple(sorted(out))

    @cached_property
    def chain_lengths(self) -> tuple[tuple[int | None, ...], ...]:
        """``chain_lengths[j][i]`` = longest chain length from j up to i, or None."""
        n = self.n
        order = sorted(range(n), key=lambda x: bin(self.down[x]).count("1"))
        table: list[list[int | None]] = [[None] * n for _ in range(n)]
        for i in range(n):
            table[i][i] = 0
            # linear extension reversed: every k above j is finished before j
            for j in reversed(order):
                if j == i or not self.less(j, i):
                    continue
                best = 0
                for k in range(n):
                    if self.less(j, k) and self.leq[k][i]:
                        best = max(best, 1 + table[k][i])
                table[j][i] = best
        return tuple(tuple(row) for row in table)


def poset_from_relations(
    n: int, pairs: Iterable[tuple[int, int]], *, one_indexed: bool = False
) -> Poset:
    """Reflexive-transitive closure of the strict relations ``j ≺ i`` in ``pairs``.

    Pairs may be Hasse covers or any generating relations. Raises CycleError
    when the generators contain a directed cycle (including ``(i, i)``).
    """
    if n < 0:
        raise InputFormatError(f"n must be nonnegative, got {n}")
    shift = 1 if one_indexed else 0
    reach = [0] * n  # reach[i]: elements strictly below i
    for j, i in pairs:
        j, i = j - shift, i - shift
        if not (0 <= j < n and 0 <= i < n):
            raise InputFormatError(f"relation ({j + shift}, {i + shift}) out of range for n={n}")
        reach[i] |= 1 << j
    # Warshall on bitmask rows
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= reach[k]
    for i in range(n):
        if reach[i] >> i & 1:
            label = i + shift
            raise CycleError(f"relations force {label} ≺ {label}")
    leq = tuple(
        tuple(j == i or bool(reach[i] >> j & 1) for i in range(n)) for j in range(n)
    )
    return Poset(n, leq)


def chain(n: int) -> Poset:
    return poset_from_relations(n, [(k, k + 1) for k in range(n - 1)])


def antichain(n: int) -> Poset:
    return poset_from_relations(n, [])


@dataclass(frozen=True)
class SubsetFamily:
    n: int
    members: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        for m in self.members:
            if any(not 0 <= e < self.n for e in m):
                raise ValueError(f"member {sorted(m)} is not a subset of the ground set")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SubsetFamily":
        return cls(n, frozenset(from_mask(m) for m in masks))

    @classmethod
    def of(cls, n: int, members: Iterable[Iterable[int]]) -> "SubsetFamily":
        return cls(n, frozenset(frozenset(m) for m in members))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sorted(to_mask(m) for m in self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: Iterable[int]) -> bool:
        return frozenset(item) in self.members

    def __iter__(self) -> Iterator[frozenset[int]]:
        return (from_mask(m) for m in self.masks)

    def as_lists(self, *, one_indexed: bool = True) -> list[list[int]]:
        """Sorted list of sorted element lists (the serialization form)."""
        shift = 1 if one_indexed else 0
        return sorted(sorted(e + shift for e in m) for m in self.members)


def is_ideal(P: Poset, X: Iterable[int]) -> bool:
    mask = to_mask(X)
    return all(P.down[i] & ~mask == 0 for i in _bits(mask))


def ideal_masks(P: Poset, cap: int | None = None) -> list[int]:
    """Bitmasks of all ideals, ascending."""
    cap = caps().enumerate if cap is None else cap
    if P.n > cap:
        raise SizeError(f"n={P.n} exceeds the enumeration cap {cap}")
    size = 1 << P.n
    # closure[m] = union of the principal ideals of m's elements; m is an ideal iff closure[m] == m
    closure = [0] * size
    out = [0]
    for m in range(1, size):
        low = m & -m
        c = closure[m ^ low] | P.down[low.bit_length() - 1]
        closure[m] = c
        if c == m:
            out.append(m)
    return out


def enumerate_ideals(P: Poset, cap: int | None = None) -> SubsetFamily:
    return SubsetFamily.from_masks(P.n, ideal_masks(P, cap))


def max_chain_length(P: Poset, j: int, i: int) -> int | None:
    """Longest chain ``j = s_0 ≺ ... ≺ s_k = i`` as k; None when ``j ⋠ i``."""
    return P.chain_lengths[j][i]


def is_union_intersection_closed(F: SubsetFamily) -> bool:
    if not F.members:
        raise EmptyFamilyError("family is empty")
    present = set(F.masks)
    ms = F.masks
    for a in ms:
        for b in ms:
            if b < a:
                continue
            if a | b not in present or a & b not in present:
                return False
    return True


def join_irreducibles(F: SubsetFamily) -> tuple[Poset, dict[frozenset[int], int]]:
    """Birkhoff representation of a union/intersection-closed family.

    Returns the poset of join-irreducible members under inclusion and the map
    from each such member to its element index (members numbered in
    ascending bitmask order).

    In a union-closed family the members strictly inside A have their union
    in the family, and A has exactly one lower cover precisely when that
    union is a proper subset of A.
    """
    try:
        closed = is_union_intersection_closed(F)
    except EmptyFamilyError:
        raise NotLatticeError("empty family is not a lattice") from None
    if not closed:
        raise NotLatticeError("family is not closed under union and intersection")
    ms = F.masks
    irreducible = []
    for a in ms:
        below = [b for b in ms if b != a and b & ~a == 0]
        if not below:
            continue  # the bottom element
        union = 0
        for b in below:
            union |= b
        if union != a:
            irreducible.append(a)
    k = len(irreducible)
    leq = tuple(
        tuple(irreducible[x] & ~irreducible[y] == 0 for y in range(k)) for x in range(k)
    )
    index = {from_mask(a): x for x, a in enumerate(irreducible)}
    return Poset(k, leq), index


def verify_birkhoff_roundtrip(P: Poset, cap: int | None = None) -> bool:
    """Check that ``x ↦ ↓x`` is an order-isomorphism from P onto the
    join-irreducibles of its ideal lattice."""
    Q, index = join_irreducibles(enumerate_ideals(P, cap))
    if Q.n != P.n:
        return False
    image = []
    for x in range(P.n):
        key = from_mask(P.down[x])
        if key not in index:
            return False
        image.append(index[key])
    if len(set(image)) != P.n:
        return False
    return all(
        P.leq[x][y] == Q.leq[image[x]][image[y]] for x in range(P.n) for y in range(P.n)
    )
