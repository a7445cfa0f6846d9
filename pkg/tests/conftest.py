import pytest

from sigma_binomial.polyzx import IntPoly, poly_from_str
from sigma_binomial.zx_lattice import LatVec


def V(*polys: str) -> LatVec:
    """Column vector from polynomial strings."""
    return LatVec(poly_from_str(s) for s in polys)


def rand_poly(rng, maxdeg=3, maxcoeff=10) -> IntPoly:
    return IntPoly([rng.randint(-maxcoeff, maxcoeff) for _ in range(rng.randint(0, maxdeg + 1))])


def rand_vec(rng, n, maxdeg=3, maxcoeff=10) -> LatVec:
    return LatVec(rand_poly(rng, maxdeg, maxcoeff) for _ in range(n))


@pytest.fixture
def vec():
    return V
