"""Finite magmas as Cayley tables, and the Abel-Grassmann class tests.

Elements are dense indices 0..n-1 internally; labels exist only at the
I/O boundary. All law checks are exhaustive table scans: the orders this
library targets (n <= 8 or so) make O(n^3) and O(n^4) loops instant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    AlgebraError,
    NotAgStarStar,
    NotAnAgGroup,
    NotCompletelyInverse,
    ParseError,
)

__all__ = [
    "Groupoid",
    "ClassificationReport",
    "check_identity",
    "is_left_invertive",
    "is_ag",
    "is_ag_star_star",
    "is_medial",
    "is_paramedial",
    "is_commutative",
    "is_associative",
    "is_idempotent_table",
    "idempotents",
    "left_identities",
    "inverses_of",
    "is_regular",
    "require_completely_inverse",
    "ag_group_left_identity",
    "classify",
    "subgroupoid",
    "idempotent_semilattice",
    "same_operation",
    "parse_mag",
    "format_mag",
]


@dataclass(frozen=True)
class Groupoid:
    """A finite magma: a tuple of element names and an index Cayley table."""

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise AlgebraError("a groupoid needs at least one element")
        if len(set(self.names)) != n:
            raise AlgebraError("duplicate element names")
        for name in self.names:
            # labels must survive the table file format: one token, no comments
            if not name or any(ch.isspace() for ch in name) or "#" in name:
                raise AlgebraError(f"bad element name {name!r}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise AlgebraError("table shape does not match the carrier size")
        for row in self.table:
            for value in row:
                if not isinstance(value, int) or not 0 <= value < n:
                    raise AlgebraError(f"table entry {value!r} out of range")

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise AlgebraError(f"unknown element {label!r}") from None

    @classmethod
    def from_rows(cls, names: Sequence[str], rows: Sequence[Sequence[str]]) -> "Groupoid":
        """Build from a label matrix rather than an index matrix."""
        names = tuple(names)
        position = {name: i for i, name in enumerate(names)}
        if len(position) != len(names):
            raise AlgebraError("duplicate element names")
        table = []
        for row in rows:
            try:
                table.append(tuple(position[entry] for entry in row))
            except KeyError as exc:
                raise AlgebraError(f"unknown element {exc.args[0]!r}") from None
        return cls(names, tuple(table))

    @classmethod
    def from_function(cls, names: Sequence[str], op: Callable[[int, int], int]) -> "Groupoid":
        n = len(names)
        table = tuple(tuple(op(i, j) for j in range(n)) for i in range(n))
        return cls(tuple(names), table)


# Identities are nested pair terms over named variables, e.g. the left
# invertive law (xy)z = (zy)x is (("x","y"),"z") == (("z","y"),"x").
Term = "str | tuple"

LEFT_INVERTIVE = ((("x", "y"), "z"), (("z", "y"), "x"))
SWAP_LAW = (("x", ("y", "z")), ("y", ("x", "z")))
MEDIAL = ((("a", "b"), ("c", "d")), (("a", "c"), ("b", "d")))
PARAMEDIAL = ((("a", "b"), ("c", "d")), (("d", "b"), ("c", "a")))
COMMUTATIVE = (("x", "y"), ("y", "x"))
ASSOCIATIVE = ((("x", "y"), "z"), ("x", ("y", "z")))


def _variables(term) -> set:
    if isinstance(term, str):
        return {term}
    return _variables(term[0]) | _variables(term[1])


def _evaluate(table, term, env: dict) -> int:
    if isinstance(term, str):
        return env[term]
    return table[_evaluate(table, term[0], env)][_evaluate(table, term[1], env)]


def check_identity(g: Groupoid, lhs, rhs) -> bool:
    """Exhaustively test lhs = rhs over all assignments of its variables.

    Cost is O(n^v) table walks for v variables; with n <= 8 and v <= 4
    that is at most a few thousand lookups, so no shortcut is attempted.
    """
    variables = sorted(_variables(lhs) | _variables(rhs))
    table = g.table
    for values in itertools.product(g.elements, repeat=len(variables)):
        env = dict(zip(variables, values))
        if _evaluate(table, lhs, env) != _evaluate(table, rhs, env):
            return False
    return True


def is_left_invertive(g: Groupoid) -> bool:
    """(xy)z = (zy)x for all x, y, z."""
    return check_identity(g, *LEFT_INVERTIVE)


def is_ag(g: Groupoid) -> bool:
    return is_left_invertive(g)


def is_ag_star_star(g: Groupoid) -> bool:
    """Left invertive plus x(yz) = y(xz) for all x, y, z."""
    return is_left_invertive(g) and check_identity(g, *SWAP_LAW)


def is_medial(g: Groupoid) -> bool:
    """(ab)(cd) = (ac)(bd) for all a, b, c, d."""
    return check_identity(g, *MEDIAL)


def is_paramedial(g: Groupoid) -> bool:
    """(ab)(cd) = (db)(ca) for all a, b, c, d."""
    return check_identity(g, *PARAMEDIAL)


def is_commutative(g: Groupoid) -> bool:
    return check_identity(g, *COMMUTATIVE)


def is_associative(g: Groupoid) -> bool:
    return check_identity(g, *ASSOCIATIVE)


def is_idempotent_table(g: Groupoid) -> bool:
    return all(g.table[x][x] == x for x in g.elements)


def idempotents(g: Groupoid) -> tuple[int, ...]:
    return tuple(x for x in g.elements if g.table[x][x] == x)


def left_identities(g: Groupoid) -> tuple[int, ...]:
    return tuple(
        e for e in g.elements if all(g.table[e][x] == x for x in g.elements)
    )


def inverses_of(g: Groupoid, a: int) -> tuple[int, ...]:
    """All x with a = (ax)a and x = (xa)x; possibly empty, never an error."""
    table = g.table
    return tuple(
        x
        for x in g.elements
        if table[table[a][x]][a] == a and table[table[x][a]][x] == x
    )


def is_regular(g: Groupoid) -> bool:
    """Every element has at least one inverse."""
    return all(inverses_of(g, a) for a in g.elements)


def require_completely_inverse(g: Groupoid) -> tuple[int, ...]:
    """Return the inverse map a -> a^-1, or explain why there is none.

    Checks, in order: both defining identities, existence of inverses,
    uniqueness, and that each element commutes with its inverse. The
    uniqueness check is redundant once the identities hold, but it is
    cheap and turns a theorem into a guard.
    """
    if not is_left_invertive(g):
        raise NotCompletelyInverse("the left invertive law (xy)z = (zy)x fails")
    if not check_identity(g, *SWAP_LAW):
        raise NotCompletelyInverse("the identity x(yz) = y(xz) fails")
    inverse = []
    for a in g.elements:
        candidates = inverses_of(g, a)
        if not candidates:
            raise NotCompletelyInverse(f"element {g.names[a]!r} has no inverse")
        if len(candidates) > 1:
            raise NotCompletelyInverse(
                f"element {g.names[a]!r} has {len(candidates)} inverses"
            )
        x = candidates[0]
        if g.table[a][x] != g.table[x][a]:
            raise NotCompletelyInverse(
                f"element {g.names[a]!r} does not commute with its inverse"
            )
        inverse.append(x)
    return tuple(inverse)


def _ag_group_by_solutions(g: Groupoid) -> bool:
    # left identity present and every xa = b uniquely solvable for x,
    # i.e. every column of the table is a permutation
    if not left_identities(g):
        return False
    n = g.order
    return all(
        len({g.table[x][a] for x in g.elements}) == n for a in g.elements
    )


def _ag_group_by_inverses(g: Groupoid) -> bool:
    # left identity e present and every a has some x with xa = e
    for e in left_identities(g):
        if all(any(g.table[x][a] == e for x in g.elements) for a in g.elements):
            return True
    return False


@dataclass(frozen=True)
class ClassificationReport:
    is_ag: bool
    is_ag_star_star: bool
    is_medial: bool
    is_paramedial: bool
    is_commutative: bool
    is_associative: bool
    is_ag_band: bool
    is_ag_semilattice: bool
    is_regular: bool
    is_inverse_ag_star_star: bool
    is_completely_inverse: bool
    is_ag_group: bool
    is_e_unitary: bool

    def items(self) -> Iterator[tuple[str, bool]]:
        """(kebab-case flag name, value) pairs in declaration order."""
        for field in self.__dataclass_fields__:
            yield field[3:].replace("_", "-"), getattr(self, field)


def classify(g: Groupoid) -> ClassificationReport:
    """Compute every class membership flag for a finite magma."""
    ag = is_left_invertive(g)
    ag_ss = ag and check_identity(g, *SWAP_LAW)
    idem = is_idempotent_table(g)
    commutative = is_commutative(g)

    regular = is_regular(g)
    inverse_ag_ss = ag_ss and regular
    completely_inverse = inverse_ag_ss
    if inverse_ag_ss:
        for a in g.elements:
            candidates = inverses_of(g, a)
            if len(candidates) != 1 or g.table[a][candidates[0]] != g.table[candidates[0]][a]:
                completely_inverse = False
                break

    if ag:
        by_solutions = _ag_group_by_solutions(g)
        by_inverses = _ag_group_by_inverses(g)
        # with a left identity the two characterizations are equivalent
        assert by_solutions == by_inverses
        ag_group = by_solutions
    else:
        ag_group = False

    return ClassificationReport(
        is_ag=ag,
        is_ag_star_star=ag_ss,
        is_medial=is_medial(g),
        is_paramedial=is_paramedial(g),
        is_commutative=commutative,
        is_associative=is_associative(g),
        is_ag_band=ag and idem,
        is_ag_semilattice=ag and idem and commutative,
        is_regular=regular,
        is_inverse_ag_star_star=inverse_ag_ss,
        is_completely_inverse=completely_inverse,
        is_ag_group=ag_group,
        is_e_unitary=_is_e_unitary(g),
    )


def _is_e_unitary(g: Groupoid) -> bool:
    # ea idempotent for some idempotent e forces a idempotent; with no
    # idempotents at all the condition is vacuous
    ids = set(idempotents(g))
    for a in g.elements:
        if a in ids:
            continue
        if any(g.table[e][a] in ids for e in ids):
            return False
    return True


def ag_group_left_identity(g: Groupoid) -> int:
    """The unique left identity of an AG-group (also its one idempotent)."""
    if not is_left_invertive(g) or not _ag_group_by_solutions(g):
        raise NotAnAgGroup("the carrier is not an AG-group")
    candidates = left_identities(g)
    assert len(candidates) == 1
    e = candidates[0]
    assert idempotents(g) == (e,)
    return e


def subgroupoid(g: Groupoid, subset: Iterable[int]) -> Groupoid:
    """Restrict to a subset closed under the product, keeping labels."""
    members = sorted(set(subset))
    if not members:
        raise AlgebraError("a subgroupoid needs at least one element")
    position = {a: k for k, a in enumerate(members)}
    table = []
    for a in members:
        row = []
        for b in members:
            c = g.table[a][b]
            if c not in position:
                raise AlgebraError(
                    f"subset not closed: {g.names[a]} * {g.names[b]} = {g.names[c]}"
                )
            row.append(position[c])
        table.append(tuple(row))
    return Groupoid(tuple(g.names[a] for a in members), tuple(table))


def idempotent_semilattice(g: Groupoid) -> Groupoid:
    """The subgroupoid on the idempotents; a semilattice whenever both
    defining identities hold and there is at least one idempotent."""
    if not is_ag_star_star(g):
        raise NotAgStarStar("idempotents form a subgroupoid only under both identities")
    ids = idempotents(g)
    if not ids:
        raise AlgebraError("no idempotents")
    sub = subgroupoid(g, ids)
    assert is_commutative(sub) and is_associative(sub) and is_idempotent_table(sub)
    return sub


def same_operation(g: Groupoid, h: Groupoid) -> bool:
    """Same label set and same products label-for-label; element order is
    allowed to differ."""
    if set(g.names) != set(h.names):
        return False
    to_h = {name: h.index(name) for name in g.names}
    for a in g.elements:
        for b in g.elements:
            lhs = h.names[h.table[to_h[g.names[a]]][to_h[g.names[b]]]]
            if lhs != g.names[g.table[a][b]]:
                return False
    return True


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((lineno, tokens))
    return lines


def _parse_mag_lines(lines: list[tuple[int, list[str]]]) -> Groupoid:
    """Parse a table block: count line, label line, n matrix rows."""
    if not lines:
        raise ParseError("empty input, expected an element count")
    lineno, tokens = lines[0]
    if len(tokens) != 1 or not tokens[0].isdigit():
        raise ParseError(f"expected a single element count, got {' '.join(tokens)!r}", lineno)
    n = int(tokens[0])
    if n == 0:
        raise ParseError("element count must be positive", lineno)
    if len(lines) < 2:
        raise ParseError("missing label line", lineno)
    lineno, labels = lines[1]
    if len(labels) != n:
        raise ParseError(f"expected {n} labels, got {len(labels)}", lineno)
    seen = set()
    for label in labels:
        if label in seen:
            raise ParseError(f"duplicate label {label!r}", lineno)
        seen.add(label)
    if len(lines) != 2 + n:
        raise ParseError(
            f"expected {n} table rows, got {len(lines) - 2}",
            lines[-1][0] if len(lines) > 2 + n else lineno,
        )
    position = {label: i for i, label in enumerate(labels)}
    table = []
    for lineno, tokens in lines[2:]:
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries in table row, got {len(tokens)}", lineno)
        row = []
        for token in tokens:
            if token not in position:
                raise ParseError(f"unknown element {token!r} in table row", lineno)
            row.append(position[token])
        table.append(tuple(row))
    return Groupoid(tuple(labels), tuple(table))


def parse_mag(text: str) -> Groupoid:
    """Read the table text format: element count, labels, label matrix.

    '#' starts a comment and blank lines are skipped anywhere.
    """
    return _parse_mag_lines(_content_lines(text))


def format_mag(g: Groupoid) -> str:
    """Inverse of parse_mag, single-space separated, trailing newline."""
    out = [str(g.order), " ".join(g.names)]
    for row in g.table:
        out.append(" ".join(g.names[v] for v in row))
    return "\n".join(out) + "\n"
