"""Equivalence relations and congruences on finite groupoids.

Relations use canonical minimal-representative block ids, so relation
equality is plain structural equality. Kernels and traces follow the
completely inverse theory: a congruence there is determined by the set
of elements its idempotent classes cover plus its restriction to the
idempotents, and both directions of that correspondence live here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    AlgebraError,
    InvalidCongruencePair,
    KernelMismatch,
    NotACongruence,
    NotAgStarStar,
    NotARefinement,
    ParseError,
)
from .magma import (
    Groupoid,
    SWAP_LAW,
    check_identity,
    idempotents,
    is_left_invertive,
    require_completely_inverse,
    subgroupoid,
)

__all__ = [
    "EquivRelation",
    "Congruence",
    "CongruencePair",
    "Quotient",
    "parse_partition",
    "format_partition",
    "is_congruence",
    "congruence_generated_by",
    "kernel",
    "trace",
    "congruence_pair_of",
    "is_congruence_pair",
    "from_kernel_trace",
    "quotient",
    "induced_congruence",
    "syntactic_congruence",
    "congruence_meet",
    "congruence_join",
]


def _canonical_labels(block_of: Sequence[int]) -> tuple[int, ...]:
    # relabel block ids to least members; a block's id is the index of
    # its first occurrence because we scan in ascending element order
    first: dict[int, int] = {}
    out = []
    for x, b in enumerate(block_of):
        if b not in first:
            first[b] = x
        out.append(first[b])
    return tuple(out)


@dataclass(frozen=True)
class EquivRelation:
    """A partition of 0..order-1; block ids are the minimal members."""

    order: int
    block_of: tuple[int, ...]

    def __post_init__(self):
        if self.order <= 0 or len(self.block_of) != self.order:
            raise AlgebraError("partition does not match the carrier size")
        for x, b in enumerate(self.block_of):
            if not isinstance(b, int) or not 0 <= b <= x or self.block_of[b] != b:
                raise AlgebraError("block ids must be minimal block members")

    @classmethod
    def identity(cls, order: int) -> "EquivRelation":
        return cls(order, tuple(range(order)))

    @classmethod
    def universal(cls, order: int) -> "EquivRelation":
        return cls(order, (0,) * order)

    @classmethod
    def from_pairs(cls, order: int, pairs: Iterable[tuple[int, int]]) -> "EquivRelation":
        """Smallest equivalence relating every given pair."""
        parent = list(range(order))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        return cls(order, _canonical_labels([find(x) for x in range(order)]))

    @classmethod
    def from_blocks(cls, order: int, blocks: Iterable[Iterable[int]]) -> "EquivRelation":
        block_of = [-1] * order
        for block in blocks:
            members = list(block)
            if not members:
                raise AlgebraError("empty block")
            least = min(members)
            for x in members:
                if not 0 <= x < order or block_of[x] != -1:
                    raise AlgebraError(f"element {x} repeated or out of range")
                block_of[x] = least
        if -1 in block_of:
            raise AlgebraError("blocks do not cover the carrier")
        return cls(order, tuple(block_of))

    def related(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    @property
    def num_blocks(self) -> int:
        return len(set(self.block_of))

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks ordered by their least member; members ascending."""
        grouped: dict[int, list[int]] = {}
        for x, b in enumerate(self.block_of):
            grouped.setdefault(b, []).append(x)
        return tuple(tuple(grouped[b]) for b in sorted(grouped))

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Related pairs (a, b) with a < b."""
        for block in self.blocks():
            yield from itertools.combinations(block, 2)

    def leq(self, other: "EquivRelation") -> bool:
        """Refinement: every block of self lies inside a block of other."""
        return all(
            other.block_of[x] == other.block_of[self.block_of[x]]
            for x in range(self.order)
        )

    def meet(self, other: "EquivRelation") -> "EquivRelation":
        seen: dict[tuple[int, int], int] = {}
        block_of = []
        for x in range(self.order):
            key = (self.block_of[x], other.block_of[x])
            block_of.append(seen.setdefault(key, x))
        return EquivRelation(self.order, _canonical_labels(block_of))

    def join(self, other: "EquivRelation") -> "EquivRelation":
        return EquivRelation.from_pairs(
            self.order,
            [(x, self.block_of[x]) for x in range(self.order)]
            + [(x, other.block_of[x]) for x in range(self.order)],
        )

    def restrict(self, members: Sequence[int]) -> "EquivRelation":
        """The induced relation on a subset, re-indexed along sorted order."""
        members = sorted(members)
        position = {a: i for i, a in enumerate(members)}
        block_of = []
        for a in members:
            rep = min(x for x in members if self.related(x, a))
            block_of.append(position[rep])
        return EquivRelation(len(members), tuple(block_of))


def parse_partition(text: str, names: Sequence[str]) -> EquivRelation:
    """Read "a e | b | f" syntax; every element must appear exactly once."""
    position = {name: i for i, name in enumerate(names)}
    seen = set()
    blocks = []
    for chunk in text.split("|"):
        tokens = chunk.split()
        if not tokens:
            raise ParseError("empty block in partition")
        block = []
        for token in tokens:
            if token not in position:
                raise ParseError(f"unknown element {token!r} in partition")
            if token in seen:
                raise ParseError(f"element {token!r} repeated in partition")
            seen.add(token)
            block.append(position[token])
        blocks.append(block)
    if len(seen) != len(names):
        missing = sorted(set(names) - seen)
        raise ParseError(f"partition misses elements: {' '.join(missing)}")
    return EquivRelation.from_blocks(len(names), blocks)


def format_partition(rel: EquivRelation, names: Sequence[str]) -> str:
    """Inverse of parse_partition, canonical block and member order."""
    return " | ".join(
        " ".join(names[x] for x in block) for block in rel.blocks()
    )


@dataclass(frozen=True)
class Congruence:
    """An equivalence relation compatible with a groupoid's product."""

    groupoid: Groupoid
    rel: EquivRelation

    def __post_init__(self):
        g, rel = self.groupoid, self.rel
        if rel.order != g.order:
            raise AlgebraError("relation does not match the carrier size")
        witness = _compatibility_witness(g, rel)
        if witness is not None:
            a, b, c, side = witness
            raise NotACongruence(
                f"{g.names[a]} ~ {g.names[b]} but {side} translation by "
                f"{g.names[c]} separates them"
            )

    def related(self, a: int, b: int) -> bool:
        return self.rel.related(a, b)

    def partition_text(self) -> str:
        return format_partition(self.rel, self.groupoid.names)


def _compatibility_witness(g: Groupoid, rel: EquivRelation):
    table = g.table
    for a in range(g.order):
        for b in range(a + 1, g.order):
            if rel.block_of[a] != rel.block_of[b]:
                continue
            for c in range(g.order):
                if rel.block_of[table[c][a]] != rel.block_of[table[c][b]]:
                    return a, b, c, "left"
                if rel.block_of[table[a][c]] != rel.block_of[table[b][c]]:
                    return a, b, c, "right"
    return None


def is_congruence(g: Groupoid, rel: EquivRelation) -> bool:
    if rel.order != g.order:
        raise AlgebraError("relation does not match the carrier size")
    return _compatibility_witness(g, rel) is None


def congruence_generated_by(g: Groupoid, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence relating every given pair.

    Union-find merge of the seed pairs, then translation products are
    re-merged until nothing changes; at most n-1 merges can ever happen,
    so the fixpoint is reached quickly.
    """
    n = g.order
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[max(ra, rb)] = min(ra, rb)
        return True

    for a, b in pairs:
        union(a, b)
    table = g.table
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(a + 1, n):
                if find(a) != find(b):
                    continue
                for c in range(n):
                    if union(table[c][a], table[c][b]):
                        changed = True
                    if union(table[a][c], table[b][c]):
                        changed = True
    rel = EquivRelation(n, _canonical_labels([find(x) for x in range(n)]))
    return Congruence(g, rel)


def kernel(c: Congruence) -> frozenset[int]:
    """Union of classes containing idempotents; must agree with the
    square characterization {a : a related to a*a}."""
    g = c.groupoid
    ids = idempotents(g)
    by_classes = frozenset(
        a for a in g.elements if any(c.related(a, e) for e in ids)
    )
    by_squares = frozenset(
        a for a in g.elements if c.related(a, g.table[a][a])
    )
    if by_classes != by_squares:
        raise KernelMismatch(
            "the class and square readings of the kernel disagree; "
            "the carrier is not idempotent-surjective"
        )
    return by_classes


def trace(c: Congruence) -> EquivRelation:
    """Restriction to the idempotents, indexed along their sorted order."""
    ids = idempotents(c.groupoid)
    if not ids:
        raise AlgebraError("no idempotents to restrict to")
    return c.rel.restrict(ids)


@dataclass(frozen=True)
class CongruencePair:
    """Kernel candidate plus a trace relation indexed over sorted idempotents."""

    kernel: frozenset
    trace: EquivRelation


def congruence_pair_of(c: Congruence) -> CongruencePair:
    return CongruencePair(kernel(c), trace(c))


def _pair_violation(g: Groupoid, pair: CongruencePair) -> str | None:
    """First violated pair condition, or None. Assumes g completely inverse."""
    inverse = require_completely_inverse(g)
    ids = idempotents(g)
    K = pair.kernel
    if not K or not all(isinstance(a, int) and 0 <= a < g.order for a in K):
        return "kernel is not a nonempty subset of the carrier"
    for a in K:
        for b in K:
            if g.table[a][b] not in K:
                return (
                    f"kernel is not a subgroupoid: "
                    f"{g.names[a]} * {g.names[b]} escapes it"
                )
    if any(inverse[a] not in K for a in K):
        return "kernel is not inverse-closed"
    if not set(ids) <= K:
        return "kernel is not full: it misses an idempotent"
    for a in g.elements:
        for b in g.elements:
            if g.table[a][b] in K and g.table[b][a] not in K:
                return (
                    f"kernel is not symmetric: {g.names[a]} * {g.names[b]} "
                    f"is inside but the reversed product is not"
                )
    if pair.trace.order != len(ids):
        return "trace is not a relation on the idempotents"
    if not is_congruence(subgroupoid(g, ids), pair.trace):
        return "trace is not a congruence on the idempotent semilattice"
    index_of = {e: i for i, e in enumerate(ids)}
    for e in ids:
        for a in g.elements:
            if g.table[e][a] in K and pair.trace.related(
                index_of[e], index_of[g.table[a][inverse[a]]]
            ):
                if a not in K:
                    return (
                        f"pair condition fails: {g.names[e]} * {g.names[a]} "
                        f"lies in the kernel and the traces match, "
                        f"yet {g.names[a]} is outside"
                    )
    return None


def is_congruence_pair(g: Groupoid, K: Iterable[int], tau: EquivRelation) -> bool:
    return _pair_violation(g, CongruencePair(frozenset(K), tau)) is None


def from_kernel_trace(g: Groupoid, pair: CongruencePair) -> Congruence:
    """Rebuild the unique congruence with the given kernel and trace.

    Membership rule: a ~ b iff the traces of a*a^-1 and b*b^-1 match
    and a*b^-1 lies in the kernel. The pair conditions are validated
    first; they are exactly what makes the rule an equivalence.
    """
    violation = _pair_violation(g, pair)
    if violation is not None:
        raise InvalidCongruencePair(violation)
    inverse = require_completely_inverse(g)
    ids = idempotents(g)
    index_of = {e: i for i, e in enumerate(ids)}

    def related(a, b):
        ea = index_of[g.table[a][inverse[a]]]
        eb = index_of[g.table[b][inverse[b]]]
        return pair.trace.related(ea, eb) and g.table[a][inverse[b]] in pair.kernel

    raw = {
        (a, b) for a in g.elements for b in g.elements if related(a, b)
    }
    rel = EquivRelation.from_pairs(g.order, raw)
    # the rule must already be an equivalence: closure may add nothing
    assert all((a, b) in raw for a, b in rel.pairs())
    assert all((a, a) in raw for a in g.elements)
    result = Congruence(g, rel)
    assert kernel(result) == pair.kernel
    assert trace(result) == pair.trace
    return result


@dataclass(frozen=True)
class Quotient:
    """Quotient table plus the element-to-block projection."""

    groupoid: Groupoid
    projection: tuple[int, ...]


def _block_label(g: Groupoid, block: tuple[int, ...]) -> str:
    return "{" + ",".join(g.names[x] for x in block) + "}"


def quotient(c: Congruence) -> Quotient:
    """The groupoid on blocks; well defined by compatibility."""
    g = c.groupoid
    blocks = c.rel.blocks()
    names = tuple(_block_label(g, block) for block in blocks)
    index_of_block = {block[0]: i for i, block in enumerate(blocks)}
    projection = tuple(index_of_block[c.rel.block_of[x]] for x in g.elements)
    table = tuple(
        tuple(projection[g.table[block_a[0]][block_b[0]]] for block_b in blocks)
        for block_a in blocks
    )
    return Quotient(Groupoid(names, table), projection)


def induced_congruence(upsilon: Congruence, rho: Congruence) -> Congruence:
    """Push a coarser congruence down to the quotient by a finer one."""
    if upsilon.groupoid is not rho.groupoid and upsilon.groupoid != rho.groupoid:
        raise AlgebraError("congruences live on different groupoids")
    if not rho.rel.leq(upsilon.rel):
        raise NotARefinement("the quotient congruence does not refine the other")
    q = quotient(rho)
    blocks = rho.rel.blocks()
    pairs = [
        (i, j)
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
        if upsilon.related(blocks[i][0], blocks[j][0])
    ]
    return Congruence(q.groupoid, EquivRelation.from_pairs(len(blocks), pairs))


def syntactic_congruence(g: Groupoid, Q: Iterable[int]) -> Congruence:
    """Largest congruence for which the subset is a union of classes.

    Elements are grouped by their probe signature: membership of a,
    of all products x*a and a*y, and of all x*(a*y). The one-sided and
    bare probes stand in for contexts with an absent factor, so no
    identity element is ever adjoined to the table.
    """
    members = frozenset(Q)
    if not members:
        raise AlgebraError("the saturated subset must be nonempty")
    if not all(isinstance(a, int) and 0 <= a < g.order for a in members):
        raise AlgebraError("subset not within the carrier")
    if not is_left_invertive(g) or not check_identity(g, *SWAP_LAW):
        raise NotAgStarStar("the probe relation is a congruence only under both identities")
    table = g.table
    signature = {}
    for a in g.elements:
        signature[a] = (
            a in members,
            tuple(table[x][a] in members for x in g.elements),
            tuple(table[a][y] in members for y in g.elements),
            tuple(
                table[x][table[a][y]] in members
                for x in g.elements
                for y in g.elements
            ),
        )
    grouped: dict = {}
    for a in g.elements:
        grouped.setdefault(signature[a], []).append(a)
    rel = EquivRelation.from_blocks(g.order, grouped.values())
    result = Congruence(g, rel)
    # the subset must come out saturated
    assert all(
        set(block) <= members or not (set(block) & members)
        for block in rel.blocks()
    )
    return result


def congruence_meet(c1: Congruence, c2: Congruence) -> Congruence:
    return Congruence(c1.groupoid, c1.rel.meet(c2.rel))


def congruence_join(c1: Congruence, c2: Congruence) -> Congruence:
    """Join in the congruence lattice: transitive closure of the union."""
    return Congruence(c1.groupoid, c1.rel.join(c2.rel))
