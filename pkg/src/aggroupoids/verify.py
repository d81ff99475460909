"""Executable checks for the theory behind the library.

Every structural claim the code relies on is registered here as a
small exhaustive test over the enumerated universe of tables plus a
handful of fixed carriers. A failing check reports the offending table
in the interchange format, so each counterexample replays directly.

Checks resolve the canonical operators through their modules at call
time; swapping one out (to validate the suite itself) makes the
matching check fail rather than crash.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import canonical as _canonical
from . import congruences as _congruences
from . import lattice as _lattice
from . import magma as _magma
from . import structure as _structure
from .congruences import EquivRelation
from .enumeration import EnumerationSpec, census, enumerate_groupoids
from .errors import AlgebraError, BoundExceeded, NotCompletelyInverse
from .magma import Groupoid, classify, format_mag, idempotents, inverses_of
from .samples import (
    chain_semilattice,
    collapsing_strong_semilattice,
    cyclic_group,
    inverse_monoid4,
    subtraction_mod,
    vee_semilattice,
)

__all__ = ["TheoremCheck", "CheckResult", "checks", "run_all"]


@dataclass(frozen=True)
class TheoremCheck:
    check_id: str
    statement: str
    universe: str


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    instances: int
    detail: str = ""


_REGISTRY: list = []


def _check(check_id, statement, universe):
    def wrap(fn):
        _REGISTRY.append((TheoremCheck(check_id, statement, universe), fn))
        return fn

    return wrap


def checks() -> tuple[TheoremCheck, ...]:
    return tuple(tc for tc, _ in _REGISTRY)


class _Context:
    """Lazily enumerated universes, shared by all checks of one run."""

    def __init__(self, bound, workers=None):
        self.bound = bound
        self.workers = workers
        self._families: dict = {}
        self._lattices: dict = {}

    def family(self, class_filter):
        if class_filter not in self._families:
            members = []
            for n in range(1, self.bound + 1):
                members.extend(
                    enumerate_groupoids(
                        EnumerationSpec(n, class_filter), workers=self.workers
                    )
                )
            self._families[class_filter] = tuple(members)
        return self._families[class_filter]

    def fixtures(self):
        return (
            inverse_monoid4(),
            subtraction_mod(3),
            cyclic_group(3),
            chain_semilattice(3),
            vee_semilattice(),
            _structure.compose(collapsing_strong_semilattice()),
        )

    def ci_carriers(self):
        return self.family("completely-inverse") + self.fixtures()

    def commutative_inverse(self):
        return tuple(
            g for g in self.ci_carriers() if _magma.is_commutative(g)
        )

    def lattice(self, g):
        key = (g.names, g.table)
        if key not in self._lattices:
            self._lattices[key] = _lattice.all_congruences(g)
        return self._lattices[key]


def _bad(g, message):
    return f"{message}\n{format_mag(g).rstrip()}"


def _each(items, fn):
    """Run fn over items; fn returns an error message or None."""
    count = 0
    for item in items:
        count += 1
        message = fn(item)
        if message is not None:
            return False, count, message
    return True, count, ""


def _each_congruence(ctx, fn):
    """fn(g, report, index) over every congruence of every carrier."""
    count = 0
    for g in ctx.ci_carriers():
        report = ctx.lattice(g)
        for i in range(len(report.congruences)):
            count += 1
            message = fn(g, report, i)
            if message is not None:
                return False, count, message
    return True, count, ""


def _each_congruence_pair(ctx, fn):
    count = 0
    for g in ctx.ci_carriers():
        report = ctx.lattice(g)
        size = len(report.congruences)
        for i in range(size):
            for j in range(size):
                count += 1
                message = fn(g, report, i, j)
                if message is not None:
                    return False, count, message
    return True, count, ""


def _marked(report, name):
    return tuple(
        i for i, m in enumerate(report.markers) if getattr(m, name)
    )


def _least_of(report, indices):
    for i in indices:
        if all(report.leq[i][j] for j in indices):
            return i
    return None


def _greatest_of(report, indices):
    for i in indices:
        if all(report.leq[j][i] for j in indices):
            return i
    return None


def _quotient_of(report, i):
    return _congruences.quotient(report.congruences[i]).groupoid


def _is_unitary_quotient(report, i):
    return _magma._is_e_unitary(_quotient_of(report, i))


def _saturates(rel, members):
    member_set = set(members)
    return all(
        (b in member_set) == (a in member_set)
        for a in member_set
        for b in range(rel.order)
        if rel.related(a, b)
    )


# --- the defining laws and their consequences ---


@_check(
    "thm-medial",
    "every left invertive table satisfies (ab)(cd) = (ac)(bd)",
    "ag",
)
def _(ctx):
    return _each(
        ctx.family("ag"),
        lambda g: None if _magma.is_medial(g) else _bad(g, "medial law fails"),
    )


@_check(
    "thm-paramedial",
    "every table with both defining laws satisfies (ab)(cd) = (db)(ca)",
    "ag-star-star",
)
def _(ctx):
    return _each(
        ctx.family("ag-star-star"),
        lambda g: None if _magma.is_paramedial(g) else _bad(g, "paramedial law fails"),
    )


@_check(
    "thm-left-identity-upgrades",
    "a left invertive table with a left identity satisfies the second defining law",
    "ag",
)
def _(ctx):
    def one(g):
        if _magma.left_identities(g) and not _magma.is_ag_star_star(g):
            return _bad(g, "left identity without the second law")
        return None

    return _each(ctx.family("ag"), one)


@_check(
    "thm-idempotents-form-semilattice",
    "the idempotents of any two-law table form a commutative band under the "
    "induced product",
    "ag-star-star",
)
def _(ctx):
    def one(g):
        if not idempotents(g):
            return None
        try:
            _magma.idempotent_semilattice(g)
        except AssertionError:
            return _bad(g, "idempotent part is not a semilattice")
        return None

    return _each(ctx.family("ag-star-star"), one)


@_check(
    "thm-ag-group-characterizations",
    "with a left identity, unique solvability of xa = b and existence of "
    "left inverses coincide; the group case has exactly one idempotent",
    "ag",
)
def _(ctx):
    def one(g):
        if not _magma.left_identities(g):
            return None
        by_solutions = _magma._ag_group_by_solutions(g)
        by_inverses = _magma._ag_group_by_inverses(g)
        if by_solutions != by_inverses:
            return _bad(g, "the two group characterizations disagree")
        if by_solutions and len(idempotents(g)) != 1:
            return _bad(g, "group table with more than one idempotent")
        return None

    return _each(ctx.family("ag"), one)


@_check(
    "thm-single-idempotent-ag-group",
    "a completely inverse carrier with exactly one idempotent is an AG-group",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        if len(idempotents(g)) == 1 and not classify(g).is_ag_group:
            return _bad(g, "single idempotent but not a group")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-idempotent-classes-contain-idempotents",
    "in every congruence class that squares into itself there is an "
    "idempotent, so the two kernel readings agree",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        by_class = frozenset(
            a
            for a in g.elements
            if any(c.related(a, e) for e in idempotents(g))
        )
        by_square = frozenset(
            a for a in g.elements if c.related(a, g.mul(a, a))
        )
        if by_class != by_square:
            return _bad(g, f"kernel readings disagree on {c.partition_text()}")
        if _congruences.kernel(c) != by_class:
            return _bad(g, "kernel helper disagrees with both readings")
        return None

    return _each_congruence(ctx, one)


# --- the canonical component congruence ---


@_check(
    "thm-mu-greatest-idempotent-separating",
    "grouping by a a^-1 gives the greatest congruence whose restriction to "
    "the idempotents is trivial",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        mu = _canonical.max_idempotent_separating(g)
        report = ctx.lattice(g)
        separating = _marked(report, "idempotent_separating")
        greatest = _greatest_of(report, separating)
        if greatest is None or report.congruences[greatest].rel != mu.rel:
            return _bad(g, "computed relation is not the greatest separating one")
        if report.index_of(mu.rel) not in separating:
            return _bad(g, "computed relation does not separate idempotents")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-mu-least-semilattice",
    "the same relation is the least congruence with a semilattice quotient",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        mu = _canonical.max_idempotent_separating(g)
        report = ctx.lattice(g)
        semilattice = _marked(report, "semilattice")
        least = _least_of(report, semilattice)
        if least is None or report.congruences[least].rel != mu.rel:
            found = report.congruences[least].partition_text() if least is not None else "none"
            return _bad(
                g,
                "computed relation disagrees with the scan: "
                f"got {mu.partition_text()}, least semilattice congruence is {found}",
            )
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-mu-classes-ag-groups",
    "every class of the component congruence is an AG-group",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        mu = _canonical.max_idempotent_separating(g)
        for block in mu.rel.blocks():
            part = _magma.subgroupoid(g, block)
            if not classify(part).is_ag_group:
                return _bad(g, f"class {block} is not a group")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-idempotents-mirror-components",
    "the idempotent semilattice is isomorphic to the quotient by the "
    "component congruence",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        mu = _canonical.max_idempotent_separating(g)
        ids = idempotents(g)
        if len(ids) != mu.rel.num_blocks:
            return _bad(g, "component count differs from idempotent count")
        q = _congruences.quotient(mu)
        e_of_block = {q.projection[e]: e for e in ids}
        if len(e_of_block) != len(ids):
            return _bad(g, "two idempotents share a component")
        for x in ids:
            for y in ids:
                image = q.groupoid.mul(q.projection[x], q.projection[y])
                if g.mul(x, y) != e_of_block[image]:
                    return _bad(g, "idempotent table differs from the component table")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-idempotent-separating-interval-modular",
    "the idempotent-separating congruences form a modular interval with "
    "commuting composition",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        separating = _marked(report, "idempotent_separating")
        modular, witness = _lattice.is_modular_sublattice(report, separating)
        if not modular:
            return _bad(g, f"pentagon {witness} inside the separating interval")
        if not _lattice.commuting_check(report, separating):
            return _bad(g, "separating congruences do not commute")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-ag-group-lattice-modular",
    "the congruence lattice of an AG-group is modular",
    "ag-group",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        whole = range(len(report.congruences))
        modular, witness = _lattice.is_modular_sublattice(report, whole)
        if not modular:
            return _bad(g, f"pentagon {witness} in a group congruence lattice")
        return None

    return _each(ctx.family("ag-group"), one)


# --- strong semilattice structure ---


@_check(
    "thm-structure-equivalence",
    "a two-law table decomposes into a strong semilattice of AG-groups "
    "exactly when it is completely inverse, and composition restores it",
    "ag-star-star",
)
def _(ctx):
    def one(g):
        complete = classify(g).is_completely_inverse
        try:
            s = _structure.decompose(g)
        except NotCompletelyInverse:
            if complete:
                return _bad(g, "decomposition rejected a completely inverse table")
            return None
        if not complete:
            return _bad(g, "decomposition accepted a non completely inverse table")
        if not _magma.same_operation(g, _structure.compose(s)):
            return _bad(g, "round trip changed the operation")
        return None

    return _each(ctx.family("ag-star-star") + ctx.fixtures(), one)


@_check(
    "thm-central-idempotents-give-commutative",
    "central idempotents force the whole carrier to be a commutative "
    "semigroup with abelian components",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        central = all(
            g.mul(e, a) == g.mul(a, e)
            for e in idempotents(g)
            for a in g.elements
        )
        if not central:
            return None
        if not (_magma.is_commutative(g) and _magma.is_associative(g)):
            return _bad(g, "central idempotents but not a commutative semigroup")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-central-idempotents-criterion",
    "idempotents are central exactly when a = a(a^-1 a) holds everywhere",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        inv = _magma.require_completely_inverse(g)
        central = all(
            g.mul(e, a) == g.mul(a, e)
            for e in idempotents(g)
            for a in g.elements
        )
        pointwise = all(
            g.mul(a, g.mul(inv[a], a)) == a for a in g.elements
        )
        if central != pointwise:
            return _bad(g, "centrality criterion fails")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-squares-form-clifford",
    "the squares form a commutative semigroup of the same idempotents, "
    "completely inverse with central idempotents",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        part = _structure.square_part(g)
        if set(idempotents(part)) != {
            part.index(g.names[e]) for e in idempotents(g)
        }:
            return _bad(g, "squares lost or gained idempotents")
        if not classify(part).is_completely_inverse:
            return _bad(g, "squares are not completely inverse")
        if not all(
            part.mul(e, a) == part.mul(a, e)
            for e in idempotents(part)
            for a in part.elements
        ):
            return _bad(g, "idempotents are not central among the squares")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-derived-operation",
    "twisting a commutative inverse semigroup by a b = a^-1 b yields a "
    "completely inverse carrier with the same idempotents and self-inverse "
    "elements",
    "commutative-inverse",
)
def _(ctx):
    def one(g):
        derived = _structure.derived_groupoid(g)
        if not classify(derived).is_completely_inverse:
            return _bad(g, "twisted table is not completely inverse")
        if idempotents(derived) != idempotents(g):
            return _bad(g, "twisting changed the idempotents")
        if any(inverses_of(derived, a) != (a,) for a in derived.elements):
            return _bad(g, "twisted elements are not self-inverse")
        return None

    return _each(ctx.commutative_inverse(), one)


# --- the natural partial order ---


@_check(
    "thm-natural-order-partial",
    "multiplication by idempotents induces a compatible partial order that "
    "inversion preserves",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        inv = _magma.require_completely_inverse(g)
        order = _structure.natural_order(g)
        for a, b in order.pairs:
            if (inv[a], inv[b]) not in order.pairs:
                return _bad(g, "inversion breaks the order")
            for c in g.elements:
                if not order.leq(g.mul(a, c), g.mul(b, c)):
                    return _bad(g, "right multiplication breaks the order")
                if not order.leq(g.mul(c, a), g.mul(c, b)):
                    return _bad(g, "left multiplication breaks the order")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-order-trivial-on-components",
    "two comparable elements of one component are equal",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        mu = _canonical.max_idempotent_separating(g)
        order = _structure.natural_order(g)
        for a, b in order.pairs:
            if a != b and mu.related(a, b):
                return _bad(g, f"order is not trivial on the component of {g.names[a]}")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-upward-closure-closed",
    "the upward closure of a completely inverse subgroupoid is a closed "
    "completely inverse subgroupoid",
    "completely-inverse x subgroupoids",
)
def _(ctx):
    def closed_subgroupoids(g):
        for size in range(1, g.order + 1):
            for subset in itertools.combinations(g.elements, size):
                members = set(subset)
                if all(g.mul(a, b) in members for a in subset for b in subset):
                    part = _magma.subgroupoid(g, subset)
                    if classify(part).is_completely_inverse:
                        yield subset

    count = 0
    for g in ctx.ci_carriers():
        for subset in closed_subgroupoids(g):
            count += 1
            up = _structure.upward_closure(g, subset)
            if not all(g.mul(a, b) in up for a in up for b in up):
                return False, count, _bad(g, "closure is not a subgroupoid")
            part = _magma.subgroupoid(g, sorted(up))
            if not classify(part).is_completely_inverse:
                return False, count, _bad(g, "closure is not completely inverse")
            if _structure.upward_closure(g, up) != up:
                return False, count, _bad(g, "closure is not closed")
    return True, count, ""


@_check(
    "thm-idempotent-products-commute",
    "a product that lands in the idempotents equals the reversed product",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        ids = set(idempotents(g))
        for a in g.elements:
            for b in g.elements:
                if g.mul(a, b) in ids and g.mul(a, b) != g.mul(b, a):
                    return _bad(g, f"{g.names[a]} {g.names[b]} commutation fails")
        return None

    return _each(ctx.ci_carriers(), one)


# --- kernel and trace ---


@_check(
    "thm-kernel-trace",
    "a congruence is reconstructed exactly from its kernel and trace",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        pair = _congruences.congruence_pair_of(c)
        rebuilt = _congruences.from_kernel_trace(g, pair)
        if rebuilt.rel != c.rel:
            return _bad(g, f"reconstruction changed {c.partition_text()}")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-containment-transfer",
    "containment of congruences is equivalent to containment of kernels "
    "together with containment of traces",
    "completely-inverse x congruence pairs",
)
def _(ctx):
    def one(g, report, i, j):
        rho, gamma = report.congruences[i], report.congruences[j]
        direct = report.leq[i][j]
        transferred = _congruences.kernel(rho) <= _congruences.kernel(gamma) and (
            _congruences.trace(rho).leq(_congruences.trace(gamma))
        )
        if direct != transferred:
            return _bad(
                g,
                f"transfer fails for {rho.partition_text()} vs {gamma.partition_text()}",
            )
        return None

    return _each_congruence_pair(ctx, one)


@_check(
    "thm-congruence-pair-bijection",
    "valid kernel-trace pairs and congruences are in bijection",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        ids = idempotents(g)
        valid = []
        for size in range(1, g.order + 1):
            for subset in itertools.combinations(g.elements, size):
                for tau in _lattice.iter_partitions(len(ids)):
                    if _congruences.is_congruence_pair(g, subset, tau):
                        valid.append((frozenset(subset), tau))
        if len(valid) != len(report.congruences):
            return _bad(
                g,
                f"{len(valid)} valid pairs against {len(report.congruences)} congruences",
            )
        for kernel_part, tau in valid:
            built = _congruences.from_kernel_trace(
                g, _congruences.CongruencePair(kernel_part, tau)
            )
            if _congruences.kernel(built) != kernel_part:
                return _bad(g, "reconstruction moved the kernel")
            if _congruences.trace(built) != tau:
                return _bad(g, "reconstruction moved the trace")
        return None

    return _each(ctx.ci_carriers(), one)


# --- the least AG-group congruence ---


@_check(
    "thm-unitary-left-right",
    "the idempotents absorb on the left exactly when they absorb on the right",
    "ag-star-star",
)
def _(ctx):
    def one(g):
        ids = set(idempotents(g))
        if not ids:
            return None
        left = all(
            a in ids
            for e in ids
            for a in g.elements
            if g.mul(e, a) in ids
        )
        right = all(
            a in ids
            for e in ids
            for a in g.elements
            if g.mul(a, e) in ids
        )
        if left != right:
            return _bad(g, "one-sided absorption")
        if left != _magma._is_e_unitary(g):
            return _bad(g, "absorption disagrees with the unitary test")
        return None

    return _each(ctx.family("ag-star-star"), one)


@_check(
    "thm-sigma-least-ag-group",
    "identifying elements merged by some idempotent gives the least "
    "congruence with a group quotient, and its kernel is the upward "
    "closure of the idempotents",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        sigma = _canonical.least_ag_group_congruence(g)
        report = ctx.lattice(g)
        groups = _marked(report, "ag_group")
        least = _least_of(report, groups)
        if least is None or report.congruences[least].rel != sigma.rel:
            return _bad(g, "scan finds a different least group congruence")
        closure = _structure.upward_closure(g, idempotents(g))
        if _congruences.kernel(sigma) != closure:
            return _bad(g, "kernel is not the closure of the idempotents")
        inv = _magma.require_completely_inverse(g)
        for a in g.elements:
            for b in g.elements:
                if sigma.related(a, b) != (g.mul(a, inv[b]) in closure):
                    return _bad(g, "quotient-by-inverse criterion fails")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-idempotent-pure-inside-sigma",
    "every congruence whose idempotent classes are purely idempotent is "
    "contained in the least group congruence",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        if not report.markers[i].idempotent_pure:
            return None
        sigma = _canonical.least_ag_group_congruence(g)
        if not report.congruences[i].rel.leq(sigma.rel):
            return _bad(g, "pure congruence escapes the group congruence")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-group-congruences-interval",
    "the group congruences form the modular interval above the least one, "
    "mirrored by the quotient's lattice",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        groups = set(_marked(report, "ag_group"))
        sigma = _canonical.least_ag_group_congruence(g)
        s = report.index_of(sigma.rel)
        if groups != {j for j in range(len(report.congruences)) if report.leq[s][j]}:
            return _bad(g, "group congruences are not the upper interval")
        modular, witness = _lattice.is_modular_sublattice(report, sorted(groups))
        if not modular:
            return _bad(g, f"pentagon {witness} among group congruences")
        mirror = ctx.lattice(_congruences.quotient(sigma).groupoid)
        if len(mirror.congruences) != len(groups):
            return _bad(g, "quotient lattice size disagrees")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-normal-subgroupoid-bijection",
    "normal subgroupoids correspond one to one with group congruences, "
    "matching kernels, and the correspondence preserves meets",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        normals = _lattice.normal_subgroupoids(g)
        groups = _marked(report, "ag_group")
        if len(normals) != len(groups):
            return _bad(g, "counts disagree")
        for n in normals:
            rho_n = _structure.congruence_of_normal(g, n)
            if _congruences.kernel(rho_n) != n:
                return _bad(g, "kernel moved")
            if report.index_of(rho_n.rel) not in groups:
                return _bad(g, "image is not a group congruence")
        for i in groups:
            k = _congruences.kernel(report.congruences[i])
            if k not in normals:
                return _bad(g, "a group congruence has a non-normal kernel")
            back = _structure.congruence_of_normal(g, k)
            if back.rel != report.congruences[i].rel:
                return _bad(g, "round trip changed the congruence")
        for n in normals:
            for m in normals:
                joint = _structure.congruence_of_normal(g, n & m)
                direct = _structure.congruence_of_normal(g, n).rel.meet(
                    _structure.congruence_of_normal(g, m).rel
                )
                if joint.rel != direct:
                    return _bad(g, "meets do not correspond")
        return None

    return _each(ctx.ci_carriers(), one)


# --- the unitary property of the carrier ---


@_check(
    "thm-e-unitary-battery",
    "unitarity of the carrier, the kernel of the group congruence being "
    "the idempotents, that congruence being the largest pure one, its "
    "trivial meet with the component congruence, and injectivity of the "
    "structure maps all coincide",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        sigma = _canonical.least_ag_group_congruence(g)
        mu = _canonical.max_idempotent_separating(g)
        tau = _canonical.max_idempotent_pure(g)
        ids = frozenset(idempotents(g))
        conditions = (
            _magma._is_e_unitary(g),
            _congruences.kernel(sigma) == ids,
            sigma.rel == tau.rel,
            sigma.rel.meet(mu.rel) == EquivRelation.identity(g.order),
            all(
                len(set(images)) == len(images)
                for _, _, images in _structure.decompose(g).maps
            ),
        )
        if len(set(conditions)) != 1:
            return _bad(g, f"battery splits: {conditions}")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-group-meet-semilattice-unitary",
    "the meet of a group congruence and a semilattice congruence has a "
    "unitary quotient",
    "completely-inverse x congruence pairs",
)
def _(ctx):
    def one(g, report, i, j):
        if not (report.markers[i].ag_group and report.markers[j].semilattice):
            return None
        met = report.meet[i][j]
        if not report.markers[met].e_unitary:
            return _bad(g, "meet fails to be unitary")
        return None

    return _each_congruence_pair(ctx, one)


@_check(
    "thm-pi-least-e-unitary",
    "the meet of the least group congruence with the component congruence "
    "is the least congruence with a unitary quotient",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        pi = _canonical.least_e_unitary(g)
        report = ctx.lattice(g)
        unitary = _marked(report, "e_unitary")
        least = _least_of(report, unitary)
        if least is None or report.congruences[least].rel != pi.rel:
            return _bad(g, "scan finds a different least unitary congruence")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-e-unitary-meet-closed",
    "congruences with unitary quotients are closed under meets and include "
    "the universal one",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        unitary = set(_marked(report, "e_unitary"))
        if report.top not in unitary:
            return _bad(g, "universal congruence is not unitary")
        for i in unitary:
            for j in unitary:
                if report.meet[i][j] not in unitary:
                    return _bad(g, "meet escapes the unitary family")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-unitary-iff-kernel-closed",
    "a congruence has a unitary quotient exactly when its kernel is closed "
    "under the natural order",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        k = _congruences.kernel(report.congruences[i])
        closed = _structure.upward_closure(g, k) == k
        if closed != report.markers[i].e_unitary:
            return _bad(g, "kernel closure disagrees with unitarity")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-unitary-kernel-normal",
    "the kernel of a congruence with a unitary quotient is a normal "
    "subgroupoid, and the kernel-trace expression over it is unique",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        if not report.markers[i].e_unitary:
            return None
        c = report.congruences[i]
        k = _congruences.kernel(c)
        if not _structure.is_normal(g, k):
            return _bad(g, "unitary kernel is not normal")
        rebuilt = _congruences.from_kernel_trace(
            g, _congruences.CongruencePair(k, _congruences.trace(c))
        )
        if rebuilt.rel != c.rel:
            return _bad(g, "kernel-trace expression is not unique")
        return None

    return _each_congruence(ctx, one)


# --- the trace map on the congruence lattice ---


@_check(
    "thm-trace-map-onto-homomorphism",
    "restriction to the idempotents maps the congruence lattice onto the "
    "idempotent lattice, preserving meets and joins",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        hom = _lattice.trace_homomorphism(g)
        if set(hom.image) != set(range(len(hom.target.congruences))):
            return _bad(g, "trace map is not onto")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-trace-meet-join",
    "the trace of a meet is the meet of traces, and the same for joins",
    "completely-inverse x congruence pairs",
)
def _(ctx):
    def one(g, report, i, j):
        tr = lambda k: _congruences.trace(report.congruences[k])
        if tr(report.meet[i][j]) != tr(i).meet(tr(j)):
            return _bad(g, "trace misses the meet")
        if tr(report.join[i][j]) != tr(i).join(tr(j)):
            return _bad(g, "trace misses the join")
        return None

    return _each_congruence_pair(ctx, one)


@_check(
    "thm-sigma-trace-min-universal",
    "the trace-least form of the universal congruence is the least group "
    "congruence",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        top = _congruences.Congruence(g, EquivRelation.universal(g.order))
        if _canonical.trace_min(top).rel != _canonical.least_ag_group_congruence(g).rel:
            return _bad(g, "trace-least universal congruence differs")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-trace-min-unitary-battery",
    "the carrier is unitary exactly when every trace-least congruence is "
    "the meet with the least group congruence, equivalently is pure",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        sigma = _canonical.least_ag_group_congruence(g)
        meets = all(
            _canonical.trace_min(c).rel == c.rel.meet(sigma.rel)
            for c in report.congruences
        )
        pure_indices = set(_marked(report, "idempotent_pure"))
        pure = all(
            report.index_of(_canonical.trace_min(c).rel) in pure_indices
            for c in report.congruences
        )
        unitary = _magma._is_e_unitary(g)
        if not (unitary == meets == pure):
            return _bad(g, f"battery splits: {(unitary, meets, pure)}")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-unitary-pure-projection",
    "on a unitary carrier, meeting with the least group congruence projects "
    "the lattice onto the pure congruences, preserving meets and joins",
    "completely-inverse (unitary only)",
)
def _(ctx):
    def one(g):
        if not _magma._is_e_unitary(g):
            return None
        report = ctx.lattice(g)
        sigma = _canonical.least_ag_group_congruence(g)
        s = report.index_of(sigma.rel)
        pure = set(_marked(report, "idempotent_pure"))
        image = {report.meet[i][s] for i in range(len(report.congruences))}
        if image != pure:
            return _bad(g, "projection misses the pure congruences")
        for i in range(len(report.congruences)):
            for j in range(len(report.congruences)):
                if report.meet[report.meet[i][j]][s] != report.meet[
                    report.meet[i][s]
                ][report.meet[j][s]]:
                    return _bad(g, "projection misses a meet")
                if report.meet[report.join[i][j]][s] != report.join[
                    report.meet[i][s]
                ][report.meet[j][s]]:
                    return _bad(g, "projection misses a join")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-quotient-mu-lifts",
    "the component congruence of a quotient is the image of the trace-"
    "greatest form of the congruence",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        expected = _canonical.max_idempotent_separating(_quotient_of(report, i))
        pushed = _congruences.induced_congruence(_canonical.trace_max(c), c)
        if pushed.rel != expected.rel:
            return _bad(g, f"component congruence of the quotient by {c.partition_text()} differs")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-trace-class-isomorphism",
    "congruences sharing a trace form an interval isomorphic to the "
    "idempotent-separating interval of the quotient by its least member",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        members = _lattice.trace_class(report, i)
        bottom = report.congruences[
            report.index_of(_canonical.trace_min(report.congruences[i]).rel)
        ]
        mirror = ctx.lattice(_congruences.quotient(bottom).groupoid)
        separating = set(_marked(mirror, "idempotent_separating"))
        images = [
            mirror.index_of(
                _congruences.induced_congruence(report.congruences[j], bottom).rel
            )
            for j in members
        ]
        if set(images) != separating or len(images) != len(separating):
            return _bad(g, "trace class does not mirror the separating interval")
        for a, j in zip(images, members):
            for b, k in zip(images, members):
                if report.leq[j][k] != mirror.leq[a][b]:
                    return _bad(g, "trace class mirror is not an order isomorphism")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-fundamental-fixed-point",
    "a quotient has a trivial component congruence exactly when the "
    "congruence equals its trace-greatest form",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        q = _quotient_of(report, i)
        fundamental = _canonical.max_idempotent_separating(q).rel == EquivRelation.identity(
            q.order
        )
        if fundamental != (_canonical.trace_max(c).rel == c.rel):
            return _bad(g, "fixed point test disagrees")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-fundamental-sublattice",
    "the trace-greatest fixed points are meet-closed from the component "
    "congruence up to the universal one, with joins taken by the operator",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        fundamental = set(_lattice.fundamental_congruences(report))
        mu = report.index_of(_canonical.max_idempotent_separating(g).rel)
        if _least_of(report, sorted(fundamental)) != mu:
            return _bad(g, "least fixed point is not the component congruence")
        if report.top not in fundamental:
            return _bad(g, "universal congruence is not a fixed point")
        for i in fundamental:
            for j in fundamental:
                if report.meet[i][j] not in fundamental:
                    return _bad(g, "fixed points are not meet-closed")
                lifted = report.index_of(
                    _canonical.trace_max(report.congruences[report.join[i][j]]).rel
                )
                if lifted not in fundamental:
                    return _bad(g, "operator join leaves the fixed points")
                above = [
                    k
                    for k in fundamental
                    if report.leq[report.join[i][j]][k]
                ]
                if _least_of(report, above) != lifted:
                    return _bad(g, "operator join is not the least fixed point above")
        return None

    return _each(ctx.ci_carriers(), one)


# --- syntactic congruences and the kernel map ---


@_check(
    "thm-syntactic-largest-saturating",
    "the syntactic congruence of a subset is the largest congruence "
    "keeping the subset a union of classes",
    "ag-star-star x subsets",
)
def _(ctx):
    count = 0
    for g in ctx.family("ag-star-star"):
        report = ctx.lattice(g)
        for size in range(1, g.order + 1):
            for subset in itertools.combinations(g.elements, size):
                count += 1
                syntactic = _congruences.syntactic_congruence(g, subset)
                if not _saturates(syntactic.rel, subset):
                    return False, count, _bad(g, "syntactic congruence splits the subset")
                for c in report.congruences:
                    if _saturates(c.rel, subset) and not c.rel.leq(syntactic.rel):
                        return False, count, _bad(
                            g, f"{c.partition_text()} saturates but is not below"
                        )
    return True, count, ""


@_check(
    "thm-tau-largest-idempotent-pure",
    "the syntactic congruence of the idempotents is the largest pure "
    "congruence",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        tau = _canonical.max_idempotent_pure(g)
        report = ctx.lattice(g)
        pure = _marked(report, "idempotent_pure")
        greatest = _greatest_of(report, pure)
        if greatest is None or report.congruences[greatest].rel != tau.rel:
            return _bad(g, "scan finds a different largest pure congruence")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-kernel-class-interval",
    "congruences sharing a kernel form the interval between the meet with "
    "the component congruence and the syntactic congruence of the kernel",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        members = set(_lattice.kernel_class(report, i))
        low = report.index_of(_canonical.kernel_min(c).rel)
        high = report.index_of(_canonical.kernel_max(c).rel)
        interval = {
            j
            for j in range(len(report.congruences))
            if report.leq[low][j] and report.leq[j][high]
        }
        if members != interval:
            return _bad(g, "kernel class is not the expected interval")
        k = _congruences.kernel(c)
        if _congruences.kernel(report.congruences[low]) != k:
            return _bad(g, "least member changed the kernel")
        if _congruences.kernel(report.congruences[high]) != k:
            return _bad(g, "greatest member changed the kernel")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-kernel-operator-not-monotone",
    "the kernel-greatest operator is not monotone: the four-element "
    "inverse monoid has nested congruences with incomparable images",
    "fixture",
)
def _(ctx):
    g = inverse_monoid4()
    report = ctx.lattice(g)
    for i in range(len(report.congruences)):
        for j in range(len(report.congruences)):
            if i != j and report.leq[i][j]:
                hi = _canonical.kernel_max(report.congruences[i])
                hj = _canonical.kernel_max(report.congruences[j])
                if not hi.rel.leq(hj.rel):
                    return True, 1, ""
    return False, 1, _bad(g, "operator turned out to be monotone here")


@_check(
    "thm-operator-decomposition",
    "every congruence is the join of its trace-least and kernel-least "
    "forms, and the meet of its trace-greatest and kernel-greatest forms",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        low = _canonical.trace_min(c).rel.join(_canonical.kernel_min(c).rel)
        high = _canonical.trace_max(c).rel.meet(_canonical.kernel_max(c).rel)
        if low != c.rel or high != c.rel:
            return _bad(g, f"decomposition misses {c.partition_text()}")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-quotient-tau-lifts",
    "the largest pure congruence of a quotient is the image of the kernel-"
    "greatest form of the congruence",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        expected = _canonical.max_idempotent_pure(_quotient_of(report, i))
        pushed = _congruences.induced_congruence(_canonical.kernel_max(c), c)
        if pushed.rel != expected.rel:
            return _bad(g, f"pure congruence of the quotient by {c.partition_text()} differs")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-kernel-class-isomorphism",
    "congruences sharing a kernel mirror the pure congruences of the "
    "quotient by their least member",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        members = _lattice.kernel_class(report, i)
        bottom = report.congruences[
            report.index_of(_canonical.kernel_min(report.congruences[i]).rel)
        ]
        mirror = ctx.lattice(_congruences.quotient(bottom).groupoid)
        pure = set(_marked(mirror, "idempotent_pure"))
        images = [
            mirror.index_of(
                _congruences.induced_congruence(report.congruences[j], bottom).rel
            )
            for j in members
        ]
        if set(images) != pure or len(images) != len(pure):
            return _bad(g, "kernel class does not mirror the pure congruences")
        for a, j in zip(images, members):
            for b, k in zip(images, members):
                if report.leq[j][k] != mirror.leq[a][b]:
                    return _bad(g, "kernel class mirror is not an order isomorphism")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-disjunctive-fixed-point",
    "a quotient has a trivial largest pure congruence exactly when the "
    "congruence equals its kernel-greatest form",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        q = _quotient_of(report, i)
        disjunctive = _canonical.max_idempotent_pure(q).rel == EquivRelation.identity(
            q.order
        )
        if disjunctive != (_canonical.kernel_max(c).rel == c.rel):
            return _bad(g, "fixed point test disagrees")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-disjunctive-not-sublattice",
    "kernel-greatest fixed points need not be meet-closed: on the four-"
    "element inverse monoid two maximal members meet in the identity",
    "fixture",
)
def _(ctx):
    g = inverse_monoid4()
    tau = _canonical.max_idempotent_pure(g)
    rho = _congruences.congruence_generated_by(
        g, [(g.index("a"), g.index("e"))]
    )
    tau_rho = _canonical.kernel_max(rho)
    if _canonical.kernel_max(tau).rel != tau.rel:
        return False, 1, _bad(g, "first member is not a fixed point")
    if tau_rho.rel != rho.rel:
        return False, 1, _bad(g, "second member is not a fixed point")
    met = tau.rel.meet(tau_rho.rel)
    if met != EquivRelation.identity(g.order):
        return False, 1, _bad(g, "the meet is not the identity")
    fixed = _canonical.kernel_max(
        _congruences.Congruence(g, met)
    ).rel == met
    if fixed:
        return False, 1, _bad(g, "the meet stayed a fixed point")
    return True, 1, ""


# --- closures and the final equivalences ---


@_check(
    "thm-group-join-sandwich",
    "the join with the least group congruence is its two-sided sandwich, "
    "described by one idempotent multiplier, with kernel the closure of "
    "the original kernel",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        sigma = _canonical.least_ag_group_congruence(g)
        join = c.rel.join(sigma.rel)
        closure = _canonical.ag_group_closure(c)
        if closure.rel != join:
            return _bad(g, "closure differs from the join")
        ids = idempotents(g)
        for a in g.elements:
            for b in g.elements:
                criterion = any(
                    c.related(g.mul(e, a), g.mul(e, b)) for e in ids
                )
                if criterion != join.related(a, b):
                    return _bad(g, "multiplier description fails")
        expected = _structure.upward_closure(g, _congruences.kernel(c))
        if _congruences.kernel(closure) != expected:
            return _bad(g, "kernel of the join is not the closure")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-group-closure-homomorphism",
    "joining with the least group congruence preserves meets and joins "
    "onto the group interval",
    "completely-inverse x congruence pairs",
)
def _(ctx):
    def one(g, report, i, j):
        sigma = _canonical.least_ag_group_congruence(g)
        s = report.index_of(sigma.rel)
        if report.join[report.meet[i][j]][s] != report.meet[
            report.join[i][s]
        ][report.join[j][s]]:
            return _bad(g, "meet is not preserved")
        if report.join[report.join[i][j]][s] != report.join[
            report.join[i][s]
        ][report.join[j][s]]:
            return _bad(g, "join is not preserved")
        return None

    return _each_congruence_pair(ctx, one)


@_check(
    "thm-e-unitary-closure-chain",
    "the unitary closure of a congruence lies between it and its join with "
    "the least group congruence, and all three share that join",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        sigma = _canonical.least_ag_group_congruence(g)
        closure = _canonical.e_unitary_closure(c)
        join = c.rel.join(sigma.rel)
        if not (c.rel.leq(closure.rel) and closure.rel.leq(join)):
            return _bad(g, "closure breaks the chain")
        if closure.rel.join(sigma.rel) != join:
            return _bad(g, "closure changed the group join")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-group-image-factorization",
    "the trace-least form sits inside the least group congruence and its "
    "trace-greatest form recovers everything above, splitting any quotient "
    "into a group-image-preserving step and a separating step",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        low = _canonical.trace_min(c)
        if not low.rel.leq(_canonical.least_ag_group_congruence(g).rel):
            return _bad(g, "first factor moves the group image")
        if not c.rel.leq(_canonical.trace_max(low).rel):
            return _bad(g, "second factor is not separating")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-pure-image-factorization",
    "the kernel-least form sits inside the component congruence and keeps "
    "the kernel, splitting any quotient into a component-preserving step "
    "and a pure step",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        low = _canonical.kernel_min(c)
        if not low.rel.leq(_canonical.max_idempotent_separating(g).rel):
            return _bad(g, "first factor is not separating-bounded")
        if _congruences.kernel(low) != _congruences.kernel(c):
            return _bad(g, "first factor moved the kernel")
        pushed = _congruences.induced_congruence(c, low)
        mirror_pure = _canonical.max_idempotent_pure(
            _congruences.quotient(low).groupoid
        )
        if not pushed.rel.leq(mirror_pure.rel):
            return _bad(g, "second factor is not pure")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-unitary-congruence-battery",
    "for one congruence: a unitary quotient, a closed kernel, kernel "
    "stability under the group join, the group join matching the kernel-"
    "greatest form, and that form having a group quotient all coincide",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        sigma = _canonical.least_ag_group_congruence(g)
        join = c.rel.join(sigma.rel)
        join_cong = report.congruences[report.index_of(join)]
        high = _canonical.kernel_max(c)
        k = _congruences.kernel(c)
        conditions = (
            report.markers[i].e_unitary,
            _structure.upward_closure(g, k) == k,
            k == _congruences.kernel(join_cong),
            join == high.rel,
            report.markers[report.index_of(high.rel)].ag_group,
        )
        if len(set(conditions)) != 1:
            return _bad(
                g, f"battery splits on {c.partition_text()}: {conditions}"
            )
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-unitary-family-decomposition",
    "the congruences with unitary quotients split into kernel classes "
    "indexed by the normal subgroupoids",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        members, families = _lattice.e_unitary_congruences(report)
        if {i for _, interval in families for i in interval} != set(members):
            return _bad(g, "families do not cover the unitary congruences")
        for n, interval in families:
            rho_n = _structure.congruence_of_normal(g, n)
            mu = _canonical.max_idempotent_separating(g)
            low = rho_n.rel.meet(mu.rel)
            high = report.index_of(rho_n.rel)
            expected = tuple(
                i
                for i in range(len(report.congruences))
                if report.leq[report.index_of(low)][i] and report.leq[i][high]
            )
            if interval != expected:
                return _bad(g, f"family of {sorted(n)} is not the full interval")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-semilattice-join-sandwich",
    "the join with the component congruence is its two-sided sandwich and "
    "relates elements exactly when their idempotent squares are related",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        mu = _canonical.max_idempotent_separating(g)
        join = c.rel.join(mu.rel)
        if _canonical.semilattice_closure(c).rel != join:
            return _bad(g, "closure differs from the join")
        inv = _magma.require_completely_inverse(g)
        for a in g.elements:
            for b in g.elements:
                squares = c.related(g.mul(a, inv[a]), g.mul(b, inv[b]))
                if squares != join.related(a, b):
                    return _bad(g, "square description fails")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-e-unitary-closure-sandwich",
    "the unitary closure is the meet of the two sandwiches around the "
    "least group and component congruences",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        c = report.congruences[i]
        sigma = _canonical.least_ag_group_congruence(g)
        mu = _canonical.max_idempotent_separating(g)
        sandwich = c.rel.join(sigma.rel).meet(c.rel.join(mu.rel))
        if _canonical.e_unitary_closure(c).rel != sandwich:
            return _bad(g, f"sandwich misses the closure of {c.partition_text()}")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-semilattice-closure-homomorphism",
    "joining with the component congruence preserves meets and joins onto "
    "the semilattice interval",
    "completely-inverse x congruence pairs",
)
def _(ctx):
    def one(g, report, i, j):
        mu = _canonical.max_idempotent_separating(g)
        m = report.index_of(mu.rel)
        if report.join[report.meet[i][j]][m] != report.meet[
            report.join[i][m]
        ][report.join[j][m]]:
            return _bad(g, "meet is not preserved")
        if report.join[report.join[i][j]][m] != report.join[
            report.join[i][m]
        ][report.join[j][m]]:
            return _bad(g, "join is not preserved")
        return None

    return _each_congruence_pair(ctx, one)


@_check(
    "thm-semilattice-closure-chain",
    "the join with the component congruence is the least congruence above "
    "with a semilattice quotient, the largest element sharing that join",
    "completely-inverse x congruences",
)
def _(ctx):
    def one(g, report, i):
        mu = _canonical.max_idempotent_separating(g)
        join = report.congruences[i].rel.join(mu.rel)
        j = report.index_of(join)
        above = [
            k
            for k in _marked(report, "semilattice")
            if report.leq[i][k]
        ]
        if _least_of(report, above) != j:
            return _bad(g, "join is not the least semilattice congruence above")
        sharing = [
            k
            for k in range(len(report.congruences))
            if report.join[k][report.index_of(mu.rel)] == j
        ]
        if _greatest_of(report, sharing) != j:
            return _bad(g, "join is not the largest element of its fiber")
        return None

    return _each_congruence(ctx, one)


@_check(
    "thm-final-equivalence-battery",
    "a unitary carrier, the group and pure canonical congruences agreeing, "
    "all pure congruences having unitary quotients, some pure congruence "
    "having one, and the largest pure one having one are all the same fact",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        report = ctx.lattice(g)
        sigma = _canonical.least_ag_group_congruence(g)
        tau = _canonical.max_idempotent_pure(g)
        pure = _marked(report, "idempotent_pure")
        unitary = set(_marked(report, "e_unitary"))
        conditions = (
            _magma._is_e_unitary(g),
            sigma.rel == tau.rel,
            all(i in unitary for i in pure),
            any(i in unitary for i in pure),
            report.index_of(tau.rel) in unitary,
        )
        if len(set(conditions)) != 1:
            return _bad(g, f"battery splits: {conditions}")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-ag-group-unitary-disjunctive",
    "a completely inverse carrier is an AG-group exactly when it is both "
    "unitary and has a trivial largest pure congruence",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        tau = _canonical.max_idempotent_pure(g)
        both = _magma._is_e_unitary(g) and tau.rel == EquivRelation.identity(g.order)
        if both != classify(g).is_ag_group:
            return _bad(g, "characterization fails")
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-subdirect-embedding",
    "the pair of largest-pure class and idempotent square separates points",
    "completely-inverse",
)
def _(ctx):
    def one(g):
        tau = _canonical.max_idempotent_pure(g)
        inv = _magma.require_completely_inverse(g)
        seen = {}
        for a in g.elements:
            key = (tau.rel.block_of[a], g.mul(a, inv[a]))
            if key in seen:
                return _bad(g, f"{g.names[seen[key]]} and {g.names[a]} collide")
            seen[key] = a
        return None

    return _each(ctx.ci_carriers(), one)


@_check(
    "thm-dual-census-agreement",
    "independent generation strategies agree on the census of completely "
    "inverse tables",
    "engine",
)
def _(ctx):
    count = 0
    for n in range(2, min(ctx.bound, 4) + 1):
        count += 1
        spec = EnumerationSpec(n, "completely-inverse")
        filtered = census(spec, strategy="filter", workers=ctx.workers)
        synthesized = census(spec, strategy="synthesis")
        if filtered != synthesized:
            return False, count, (
                f"order {n}: filter found {filtered}, synthesis found {synthesized}"
            )
    return True, count, ""


def run_all(bound: int = 3, only=None, workers=None) -> tuple[CheckResult, ...]:
    """Run the registered checks over all tables up to the bound.

    Universes are enumerated once per run and shared; the worker count
    only parallelizes the underlying table searches, so reports are
    identical for any worker count.
    """
    if bound < 1 or bound > 4:
        raise BoundExceeded("verification runs at orders 1 through 4")
    selected = [
        (tc, fn) for tc, fn in _REGISTRY if only is None or tc.check_id == only
    ]
    if only is not None and not selected:
        raise AlgebraError(f"unknown check id {only!r}")
    ctx = _Context(bound, workers)
    results = []
    for tc, fn in selected:
        passed, instances, detail = fn(ctx)
        results.append(CheckResult(tc.check_id, passed, instances, detail))
    return tuple(results)
