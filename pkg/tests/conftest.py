from fractions import Fraction

import pytest

from multiorder import multipartition

F = Fraction


@pytest.fixture
def worked_mp():
    """The 4-component multipartition of 8 used in the worked examples."""
    return multipartition((2, 1), 0, (1, 1, 1), (2,))


@pytest.fixture
def worked_chi():
    return (F(5), F(2), F(3, 2), F(-2))


@pytest.fixture
def minimal_pair():
    """The n=6, r=4 pair where dominance holds but move-closure fails."""
    chi = (F(0), F(1, 2), F(17, 8), F(9, 4))
    lam = multipartition(0, (3,), (1, 1), 1)
    mu = multipartition((3,), 0, 1, (1, 1))
    return lam, mu, chi
