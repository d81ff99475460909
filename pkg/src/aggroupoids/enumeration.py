"""Exhaustive generation of small tables in each groupoid class.

A backtracking search fills the Cayley table cell by cell, rejecting a
value as soon as it completes a violated law instance; the four cells of
an instance are tracked in every role so each check is incremental. The
completely inverse class has a second, independent generator that builds
strong semilattices of AG-groups and composes them; the two censuses
must agree wherever both run, and tests pin that agreement.

Tables enumerate up to isomorphism by default: each found table is
replaced by the least relabeling and deduplicated.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass
from functools import lru_cache

from .errors import AlgebraError, BoundExceeded
from .magma import Groupoid, classify
from .structure import StrongSemilattice, compose

__all__ = [
    "EnumerationSpec",
    "CLASSES",
    "canonical_table",
    "canonical_form",
    "are_isomorphic",
    "enumerate_groupoids",
    "census",
]

CLASSES = ("ag", "ag-star-star", "ag-band", "ag-group", "completely-inverse")


@dataclass(frozen=True)
class EnumerationSpec:
    order: int
    class_filter: str
    up_to_isomorphism: bool = True

    def __post_init__(self):
        if self.order < 1:
            raise AlgebraError("order must be positive")
        if self.class_filter not in CLASSES:
            raise AlgebraError(f"unknown class {self.class_filter!r}")


def canonical_table(table) -> tuple:
    """Least relabeling of a table; equal exactly on isomorphic inputs."""
    n = len(table)
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = [[0] * n for _ in range(n)]
        for i in range(n):
            row = table[i]
            target = relabeled[perm[i]]
            for j in range(n):
                target[perm[j]] = perm[row[j]]
        flat = tuple(tuple(row) for row in relabeled)
        if best is None or flat < best:
            best = flat
    return best


def canonical_form(g: Groupoid) -> tuple:
    return canonical_table(g.table)


def are_isomorphic(g: Groupoid, h: Groupoid) -> bool:
    if g.order != h.order:
        return False
    return canonical_form(g) == canonical_form(h)


# --- incremental law checks over a flat table, -1 meaning unknown ---
# Each function answers: do all law instances completed by the new cell
# (r, c) = v still hold? Roles cover the new cell appearing as either
# inner product or either outer product of the instance.


def _ok_left_invertive(T, n, r, c, v):
    # (xy)z = (zy)x
    for z in range(n):  # new cell is (x,y)
        w = T[z * n + c]
        if w < 0:
            continue
        lhs = T[v * n + z]
        rhs = T[w * n + r]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    for x in range(n):  # new cell is (z,y)
        u = T[x * n + c]
        if u < 0:
            continue
        lhs = T[u * n + r]
        rhs = T[v * n + x]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    for x in range(n):  # new cell is the left outer product: u = r, z = c
        base = x * n
        for y in range(n):
            if T[base + y] != r:
                continue
            w = T[c * n + y]
            if w < 0:
                continue
            rhs = T[w * n + x]
            if rhs >= 0 and rhs != v:
                return False
    for z in range(n):  # new cell is the right outer product: w = r, x = c
        base = z * n
        for y in range(n):
            if T[base + y] != r:
                continue
            u = T[c * n + y]
            if u < 0:
                continue
            lhs = T[u * n + z]
            if lhs >= 0 and lhs != v:
                return False
    return True


def _ok_swap(T, n, r, c, v):
    # x(yz) = y(xz)
    for x in range(n):  # new cell is (y,z)
        lhs = T[x * n + v]
        q = T[x * n + c]
        if lhs < 0 or q < 0:
            continue
        rhs = T[r * n + q]
        if rhs >= 0 and lhs != rhs:
            return False
    for y in range(n):  # new cell is (x,z)
        p = T[y * n + c]
        if p < 0:
            continue
        lhs = T[r * n + p]
        rhs = T[y * n + v]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    for y in range(n):  # new cell is the left outer product: x = r, p = c
        base = y * n
        for z in range(n):
            if T[base + z] != c:
                continue
            q = T[r * n + z]
            if q < 0:
                continue
            rhs = T[y * n + q]
            if rhs >= 0 and rhs != v:
                return False
    for x in range(n):  # new cell is the right outer product: y = r, q = c
        base = x * n
        for z in range(n):
            if T[base + z] != c:
                continue
            p = T[r * n + z]
            if p < 0:
                continue
            lhs = T[x * n + p]
            if lhs >= 0 and lhs != v:
                return False
    return True


def _ok_associative(T, n, r, c, v):
    # (xy)z = x(yz)
    for z in range(n):  # new cell is (x,y)
        lhs = T[v * n + z]
        p = T[c * n + z]
        if lhs < 0 or p < 0:
            continue
        rhs = T[r * n + p]
        if rhs >= 0 and lhs != rhs:
            return False
    for x in range(n):  # new cell is (y,z)
        u = T[x * n + r]
        if u < 0:
            continue
        lhs = T[u * n + c]
        rhs = T[x * n + v]
        if lhs >= 0 and rhs >= 0 and lhs != rhs:
            return False
    for x in range(n):  # new cell is the left product: u = r, z = c
        base = x * n
        for y in range(n):
            if T[base + y] != r:
                continue
            p = T[y * n + c]
            if p < 0:
                continue
            rhs = T[x * n + p]
            if rhs >= 0 and rhs != v:
                return False
    for y in range(n):  # new cell is the right product: x = r, p = c
        base = y * n
        for z in range(n):
            if T[base + z] != c:
                continue
            u = T[r * n + y]
            if u < 0:
                continue
            lhs = T[u * n + z]
            if lhs >= 0 and lhs != v:
                return False
    return True


def _ok_commutative(T, n, r, c, v):
    mirror = T[c * n + r]
    return r == c or mirror < 0 or mirror == v


_LAW_CHECKS = {
    "left-invertive": _ok_left_invertive,
    "swap": _ok_swap,
    "associative": _ok_associative,
    "commutative": _ok_commutative,
}


def _assign(T, n, pos, v, checks, column_distinct):
    r, c = divmod(pos, n)
    if column_distinct:
        for x in range(n):
            if T[x * n + c] == v:
                return False
    T[pos] = v
    for fn in checks:
        if not fn(T, n, r, c, v):
            T[pos] = -1
            return False
    return True


def _complete(T, n, free, start, checks, column_distinct, out):
    if start == len(free):
        out.append(tuple(T))
        return
    pos = free[start]
    for v in range(n):
        if _assign(T, n, pos, v, checks, column_distinct):
            _complete(T, n, free, start + 1, checks, column_distinct, out)
            T[pos] = -1


def _subtree_task(args):
    n, laws, snapshot, free, start, column_distinct = args
    checks = tuple(_LAW_CHECKS[name] for name in laws)
    out = []
    _complete(list(snapshot), n, free, start, checks, column_distinct, out)
    return out


def _search_tables(n, laws, prefill=None, column_distinct=False, workers=None):
    """All complete tables satisfying the given laws, in fill order."""
    checks = tuple(_LAW_CHECKS[name] for name in laws)
    T = [-1] * (n * n)
    for pos in sorted(prefill or ()):
        if not _assign(T, n, pos, prefill[pos], checks, column_distinct):
            return []
    free = [p for p in range(n * n) if T[p] < 0]
    if not workers or workers <= 1 or len(free) < 3:
        out = []
        _complete(T, n, free, 0, checks, column_distinct, out)
        return out
    # split the tree at a fixed depth; tasks stay deterministic in order
    depth = 2
    prefixes = []

    def expand(start):
        if start == depth:
            prefixes.append(tuple(T))
            return
        pos = free[start]
        for v in range(n):
            if _assign(T, n, pos, v, checks, column_distinct):
                expand(start + 1)
                T[pos] = -1

    expand(0)
    tasks = [(n, laws, snap, free, depth, column_distinct) for snap in prefixes]
    with multiprocessing.Pool(workers) as pool:
        chunks = pool.map(_subtree_task, tasks)
    return [table for chunk in chunks for table in chunk]


def _has_left_identity(table, n):
    return any(
        all(table[e * n + x] == x for x in range(n)) for e in range(n)
    )


def _groupoid_from_flat(flat, n) -> Groupoid:
    names = tuple(str(i) for i in range(n))
    table = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
    return Groupoid(names, table)


def _labeled_tables(n, class_filter, workers):
    if class_filter == "ag":
        found = _search_tables(n, ("left-invertive",), workers=workers)
    elif class_filter == "ag-star-star":
        found = _search_tables(n, ("left-invertive", "swap"), workers=workers)
    elif class_filter == "ag-band":
        prefill = {i * n + i: i for i in range(n)}
        found = _search_tables(n, ("left-invertive",), prefill, workers=workers)
    elif class_filter == "ag-group":
        found = [
            t
            for t in _search_tables(
                n, ("left-invertive", "swap"), column_distinct=True, workers=workers
            )
            if _has_left_identity(t, n)
        ]
        assert all(classify(_groupoid_from_flat(t, n)).is_ag_group for t in found)
    elif class_filter == "completely-inverse":
        found = [
            t
            for t in _search_tables(n, ("left-invertive", "swap"), workers=workers)
            if classify(_groupoid_from_flat(t, n)).is_completely_inverse
        ]
    else:
        raise AlgebraError(f"unknown class {class_filter!r}")
    return found


@lru_cache(maxsize=None)
def _ag_group_reps(n) -> tuple:
    """Canonical tables of the AG-groups of one order.

    Normalized search: the left identity sits at element 0, so row 0 is
    prefilled and only tables with distinct columns are explored.
    """
    prefill = {j: j for j in range(n)}
    found = _search_tables(n, ("left-invertive", "swap"), prefill, column_distinct=True)
    reps = set()
    for t in found:
        g = _groupoid_from_flat(t, n)
        assert classify(g).is_ag_group
        reps.add(canonical_table(g.table))
    return tuple(sorted(reps))


@lru_cache(maxsize=None)
def _semilattice_reps(n) -> tuple:
    """Canonical tables of the semilattices of one order."""
    prefill = {i * n + i: i for i in range(n)}
    found = _search_tables(n, ("commutative", "associative"), prefill)
    return tuple(sorted({canonical_table(
        tuple(tuple(t[i * n + j] for j in range(n)) for i in range(n))
    ) for t in found}))


@lru_cache(maxsize=None)
def _homomorphisms(src_table, dst_table) -> tuple:
    """Every operation-preserving map between two small tables."""
    n, m = len(src_table), len(dst_table)
    found = []
    for images in itertools.product(range(m), repeat=n):
        if all(
            images[src_table[a][b]] == dst_table[images[a]][images[b]]
            for a in range(n)
            for b in range(n)
        ):
            found.append(images)
    return tuple(found)


def _compositions(total, parts):
    """Ordered tuples of positive sizes with the given sum."""
    if parts == 1:
        yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _coherent_map_families(strict, chains, options):
    """Backtrack over the strict comparable pairs; composition along
    every chain must match the direct map."""
    order = sorted(strict)
    chosen = {}

    def consistent():
        for i, j, k in chains:
            if (i, j) in chosen and (j, k) in chosen and (i, k) in chosen:
                upper, lower, direct = chosen[(i, j)], chosen[(j, k)], chosen[(i, k)]
                if any(lower[upper[a]] != direct[a] for a in range(len(upper))):
                    return False
        return True

    def rec(idx):
        if idx == len(order):
            yield dict(chosen)
            return
        pair = order[idx]
        for images in options[pair]:
            chosen[pair] = images
            if consistent():
                yield from rec(idx + 1)
            del chosen[pair]

    yield from rec(0)


def _synthesized_tables(n) -> tuple:
    """Canonical tables of all completely inverse carriers of one order,
    built as strong semilattices of AG-groups."""
    result = set()
    for k in range(1, n + 1):
        for y_table in _semilattice_reps(k):
            y = Groupoid(
                tuple(f"y{i}" for i in range(k)),
                y_table,
            )
            strict = [
                (i, j)
                for i in range(k)
                for j in range(k)
                if i != j and y_table[i][j] == j
            ]
            chains = [
                (i, j, l)
                for i, j in strict
                for j2, l in strict
                if j2 == j and (i, l) in set(strict)
            ]
            for sizes in _compositions(n, k):
                group_pools = [_ag_group_reps(size) for size in sizes]
                for groups in itertools.product(*group_pools):
                    components = tuple(
                        Groupoid(
                            tuple(f"{i}_{t}" for t in range(sizes[i])),
                            groups[i],
                        )
                        for i in range(k)
                    )
                    options = {
                        pair: _homomorphisms(groups[pair[0]], groups[pair[1]])
                        for pair in strict
                    }
                    for family in _coherent_map_families(strict, chains, options):
                        maps = [
                            (i, i, tuple(range(sizes[i]))) for i in range(k)
                        ]
                        maps.extend(
                            (i, j, family[(i, j)]) for i, j in strict
                        )
                        s = StrongSemilattice(y, components, tuple(maps))
                        result.add(canonical_table(compose(s).table))
    return tuple(sorted(result))


def _bound_for(spec: EnumerationSpec, strategy: str) -> int:
    if spec.class_filter == "completely-inverse" and strategy == "synthesis":
        return 5
    if spec.class_filter == "ag-group" and spec.up_to_isomorphism:
        return 5
    return 4


def _resolve_strategy(spec: EnumerationSpec, strategy) -> str:
    if spec.class_filter == "completely-inverse":
        if strategy is None:
            strategy = "synthesis" if spec.up_to_isomorphism else "filter"
        if strategy not in ("filter", "synthesis"):
            raise AlgebraError(f"unknown strategy {strategy!r}")
        if strategy == "synthesis" and not spec.up_to_isomorphism:
            raise AlgebraError("labeled enumeration requires the filter strategy")
        return strategy
    if strategy not in (None, "filter"):
        raise AlgebraError("only the completely inverse class has a synthesis strategy")
    return "filter"


def enumerate_groupoids(spec: EnumerationSpec, strategy=None, workers=None) -> tuple[Groupoid, ...]:
    """All groupoids matching the spec, in a deterministic order
    independent of the worker count."""
    strategy = _resolve_strategy(spec, strategy)
    bound = _bound_for(spec, strategy)
    if spec.order > bound:
        raise BoundExceeded(
            f"order {spec.order} exceeds the bound {bound} for "
            f"class {spec.class_filter!r} ({strategy})"
        )
    n = spec.order
    if spec.class_filter == "completely-inverse" and strategy == "synthesis":
        tables = _synthesized_tables(n)
    elif spec.class_filter == "ag-group" and spec.up_to_isomorphism:
        tables = _ag_group_reps(n)
    else:
        found = _labeled_tables(n, spec.class_filter, workers)
        if spec.up_to_isomorphism:
            tables = sorted(
                {
                    canonical_table(
                        tuple(tuple(t[i * n + j] for j in range(n)) for i in range(n))
                    )
                    for t in found
                }
            )
        else:
            tables = [
                tuple(tuple(t[i * n + j] for j in range(n)) for i in range(n))
                for t in sorted(set(found))
            ]
    names = tuple(str(i) for i in range(n))
    return tuple(Groupoid(names, table) for table in tables)


def census(spec: EnumerationSpec, strategy=None, workers=None) -> int:
    return len(enumerate_groupoids(spec, strategy, workers))
