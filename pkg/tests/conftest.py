import pytest

from fluidnet.config import DEFAULT_ETAS, ExperimentConfig
from fluidnet.sinr import run_monte_carlo
from fluidnet.stats import empirical_cdf


@pytest.fixture(scope="session")
def full_config():
    return ExperimentConfig(eta_list=DEFAULT_ETAS)


@pytest.fixture(scope="session")
def poisson_cdfs(full_config):
    # one Monte Carlo pass per eta, shared across the acceptance criteria
    return {eta: empirical_cdf(run_monte_carlo(full_config, eta))
            for eta in full_config.eta_list}
