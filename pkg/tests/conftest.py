import time

import numpy as np
import pytest

from fbox.experiments import desk_config, generate_motivating_example, run_table_study


@pytest.fixture(scope="session")
def desk_report():
    """Shared desk-profile study: report plus wall-clock seconds."""
    config = desk_config(threads=2)
    started = time.monotonic()
    report = run_table_study(config)
    elapsed = time.monotonic() - started
    return report, elapsed


@pytest.fixture(scope="session")
def motivating():
    sample, labels = generate_motivating_example()
    return sample, np.array(labels)
