import pytest

from srd import (
    SrdParams,
    canonical_relabel,
    example_configuration,
    srg_spectrum,
    structure_constants,
    wl_closure,
)


@pytest.fixture(scope="session")
def gq_params() -> SrdParams:
    g = srg_spectrum(15, 6, 1, 3)
    return SrdParams(
        srg1=g, srg2=g, S1=3, S2=3, N1=2, P1=1, N2=2, P2=1, a1=1, b1=0, a2=1, b2=0
    )


@pytest.fixture(scope="session")
def gq_closure():
    return wl_closure(example_configuration("gq22"))


@pytest.fixture(scope="session")
def gq_canonical(gq_closure):
    config, _ = canonical_relabel(gq_closure)
    return config


@pytest.fixture(scope="session")
def gq_counted_tensor(gq_canonical):
    return structure_constants(gq_canonical)
