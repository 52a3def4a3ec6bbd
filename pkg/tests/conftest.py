# coding=utf-8
import pytest

from triangulated_quotient.catalog import nakayama_stable, a2_costable
from triangulated_quotient.approx import SubcatSpec
from triangulated_quotient.quotient import build_quotient


@pytest.fixture(scope='session')
def nakayama4():
    """Stable category of k[x]/(x^4) over F_2 with its triangulation."""
    return nakayama_stable(4, 2)


@pytest.fixture(scope='session')
def nakayama3():
    """Stable category of k[x]/(x^3) over F_2 with its triangulation."""
    return nakayama_stable(3, 2)


@pytest.fixture(scope='session')
def a2():
    """Injectively stable category of the quiver 1 -> 2 over F_2."""
    return a2_costable(2)


@pytest.fixture(scope='session')
def quotient4(nakayama4):
    """Quotient of nakayama_stable(4, 2) by add(M2) with its base triangulation."""
    category, triangulation = nakayama4
    z_sub = SubcatSpec.all(category)
    d_sub = SubcatSpec(category, ['M2'])
    return build_quotient(category, z_sub, d_sub, triangulation, mode='pair'), \
        triangulation
