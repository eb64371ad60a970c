import pytest

from tjurina import groebner


@pytest.fixture(autouse=True)
def verified_bases():
    """Re-check every reduced basis the engine emits during tests.

    Hot loops (the truncation alphas and the family scan) opt out
    explicitly; their outputs are cross-checked against independent
    oracles instead.
    """
    old = groebner.VERIFY_BASES
    groebner.VERIFY_BASES = True
    yield
    groebner.VERIFY_BASES = old
