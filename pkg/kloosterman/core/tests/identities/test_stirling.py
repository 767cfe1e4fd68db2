import pytest
from sympy.functions.combinatorial.numbers import stirling

from kloosterman.core.exceptions import DomainError
from kloosterman.core.identities import stirling2, stirling_table


def test_against_sympy():
    for h in range(13):
        for t in range(h + 1):
            assert stirling2(h, t) == int(stirling(h, t))


def test_small_values():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(3, 5) == 0
    assert stirling2(3, 0) == 0


def test_table_rows():
    table = stirling_table(5)
    assert table[5] == (0, 1, 15, 25, 10, 1)
    assert [len(row) for row in table] == [1, 2, 3, 4, 5, 6]


def test_domain():
    with pytest.raises(DomainError):
        stirling2(-1, 0)
    with pytest.raises(DomainError):
        stirling_table(-1)
