import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vigpso import PsoConfig, benchmarks


@pytest.fixture
def sphere10():
    return benchmarks.make_objective("sphere", 10)


@pytest.fixture
def rosenbrock8():
    return benchmarks.make_objective("rosenbrock", 8)


@pytest.fixture
def quick_pso_config():
    return PsoConfig(omega=0.6, c1=1.8, c2=1.6, swarm_size=20, max_iterations=50)
