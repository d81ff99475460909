"""Carrier type, law checks, classification, and the .mag format."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from aggroupoids import (
    Groupoid,
    classify,
    format_mag,
    idempotents,
    inverses_of,
    parse_mag,
)
from aggroupoids.errors import (
    AlgebraError,
    NotAnAgGroup,
    NotCompletelyInverse,
    ParseError,
)
from aggroupoids.magma import (
    ag_group_left_identity,
    idempotent_semilattice,
    is_ag,
    is_ag_star_star,
    left_identities,
    require_completely_inverse,
    same_operation,
    subgroupoid,
)
from aggroupoids.samples import chain_semilattice, cyclic_group, vee_semilattice

F1_TEXT = """4
a b e f
e e a a
e f a b
a a e e
a b e f
"""


def tables(max_order=4):
    return st.integers(1, max_order).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            ),
        )
    )


def test_groupoid_rejects_ragged_table():
    with pytest.raises(AlgebraError):
        Groupoid(("x", "y"), ((0,), (0, 1)))


def test_groupoid_rejects_out_of_range_entry():
    with pytest.raises(AlgebraError):
        Groupoid(("x", "y"), ((0, 2), (0, 1)))


def test_groupoid_rejects_duplicate_names():
    with pytest.raises(AlgebraError):
        Groupoid(("x", "x"), ((0, 0), (0, 0)))


def test_from_rows_and_index(f1):
    g = Groupoid.from_rows(
        ["a", "b", "e", "f"],
        [list("eeaa"), list("efab"), list("aaee"), list("abef")],
    )
    assert same_operation(g, f1)
    assert g.index("e") == 2
    with pytest.raises(AlgebraError):
        g.index("z")


def test_parse_mag_round_trip(f1):
    g = parse_mag(F1_TEXT)
    assert g.names == ("a", "b", "e", "f")
    assert same_operation(g, f1)
    assert format_mag(g) == F1_TEXT


@given(tables())
def test_format_parse_is_identity(data):
    n, rows = data
    g = Groupoid(tuple(f"x{i}" for i in range(n)), tuple(map(tuple, rows)))
    again = parse_mag(format_mag(g))
    assert again.names == g.names
    assert again.table == g.table


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("zero\n", "got 'zero'"),
        ("2\na b\na a\n", "table rows"),
        ("2\na b\na a c\na a\n", "entries"),
        ("2\na a\na a\na a\n", "duplicate label 'a'"),
        ("2\na b\nb b\nc c\n", "unknown element 'c'"),
    ],
)
def test_parse_mag_errors_name_the_token(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_mag(text)
    assert fragment in str(err.value)
    assert "line" in str(err.value)


def test_parse_mag_rejects_empty_input():
    with pytest.raises(ParseError):
        parse_mag("")


def test_parse_mag_reports_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_mag("2\na b\nb b\nc c\n")
    assert err.value.line == 4


def test_f1_classification(f1):
    flags = dict(classify(f1).items())
    assert flags == {
        "ag": True,
        "ag-star-star": True,
        "medial": True,
        "paramedial": True,
        "commutative": True,
        "associative": True,
        "ag-band": False,
        "ag-semilattice": False,
        "regular": True,
        "inverse-ag-star-star": True,
        "completely-inverse": True,
        "ag-group": False,
        "e-unitary": True,
    }


def test_f2_is_a_nonassociative_ag_group(f2):
    report = classify(f2)
    assert report.is_ag_group
    assert not report.is_associative
    assert not report.is_commutative
    assert report.is_completely_inverse
    assert idempotents(f2) == (0,)


def test_collapse_is_not_e_unitary(collapse):
    report = classify(collapse)
    assert report.is_completely_inverse
    assert not report.is_e_unitary


def test_left_invertive_but_not_both_laws():
    # a smallest table separating the two defining laws
    g = Groupoid.from_rows(
        ["0", "1", "2"],
        [["0", "0", "0"], ["0", "0", "0"], ["1", "0", "0"]],
    )
    assert is_ag(g)
    assert not is_ag_star_star(g)


def test_idempotents_and_identities(f1, f2):
    assert idempotents(f1) == (2, 3)
    assert left_identities(f1) == (3,)
    assert left_identities(f2) == (0,)
    assert ag_group_left_identity(f2) == 0
    with pytest.raises(NotAnAgGroup):
        ag_group_left_identity(f1)


def test_inverses(f1):
    # every element of this table is its own unique inverse
    for a in f1.elements:
        assert inverses_of(f1, a) == (a,)
    inv = require_completely_inverse(f1)
    assert inv == (0, 1, 2, 3)


def test_require_completely_inverse_rejects_band():
    # left zero band: regular, inverses not unique, not even left invertive
    g = Groupoid.from_rows(
        ["l", "r"], [["l", "l"], ["r", "r"]]
    )
    assert inverses_of(g, 0) == (0, 1)
    with pytest.raises(NotCompletelyInverse):
        require_completely_inverse(g)


def test_subgroupoid_requires_closure(f1):
    sub = subgroupoid(f1, [0, 2])
    assert sub.names == ("a", "e")
    assert classify(sub).is_ag_group
    with pytest.raises(AlgebraError):
        subgroupoid(f1, [0, 1])


def test_idempotent_semilattice(f1):
    e = idempotent_semilattice(f1)
    assert e.names == ("e", "f")
    assert e.table == ((0, 0), (0, 1))


def test_sample_classifications():
    assert classify(cyclic_group(4)).is_ag_group
    assert classify(chain_semilattice(3)).is_ag_semilattice
    assert classify(vee_semilattice()).is_ag_semilattice
