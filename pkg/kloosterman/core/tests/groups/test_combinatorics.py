import pytest

from kloosterman.core.exceptions import DomainError
from kloosterman.core.groups import group_order, qbinom


@pytest.mark.parametrize(
    ("n", "r", "q", "expected"),
    [(2, 1, 4, 5), (3, 1, 2, 7), (4, 2, 2, 35), (5, 0, 8, 1), (5, 5, 8, 1), (3, 5, 2, 0), (3, -1, 2, 0)],
)
def test_qbinom(n, r, q, expected):
    assert qbinom(n, r, q) == expected


def test_qbinom_symmetry():
    for n in range(7):
        for r in range(n + 1):
            assert qbinom(n, r, 4) == qbinom(n, n - r, 4)


def test_group_order():
    assert group_order(1, 2) == 6
    assert group_order(1, 4) == 60
    assert group_order(2, 2) == 720
    assert group_order(1, 8) == 8 * 63


def test_domain_errors():
    with pytest.raises(DomainError):
        qbinom(3, 1, 1)
    with pytest.raises(DomainError):
        group_order(0, 4)
