import pytest

from dalg import GF, run_examples, run_sweep, run_yangian_check


@pytest.fixture(scope="session")
def gf2_sweep():
    return run_sweep(GF(2), 2, mode="full")


@pytest.fixture(scope="session")
def gf3_sample_sweep():
    return run_sweep(GF(3), 2, mode="sample", samples=100_000, seed=0)


@pytest.fixture(scope="session")
def example_reports():
    return run_examples()


@pytest.fixture(scope="session")
def yangian_report():
    return run_yangian_check(2, 4)
