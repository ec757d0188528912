import pytest

from qbalance.cyclic_code import from_generator, poly_from_coeffs


@pytest.fixture(scope="session")
def simplex():
    """[7,3,4] simplex code generated by 1 + X^2 + X^3 + X^4."""
    return from_generator(7, poly_from_coeffs([1, 0, 1, 1, 1]))


@pytest.fixture(scope="session")
def hamming():
    """[7,4,3] Hamming code generated by 1 + X + X^3."""
    return from_generator(7, poly_from_coeffs([1, 1, 0, 1]))


@pytest.fixture(scope="session")
def hamming15():
    """[15,11,3] Hamming code generated by 1 + X + X^4."""
    return from_generator(15, poly_from_coeffs([1, 1, 0, 0, 1]))
