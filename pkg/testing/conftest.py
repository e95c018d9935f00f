import hypothesis
import pytest

from main import app

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture
def runner():
    return app.test_cli_runner()


@pytest.fixture
def app_config():
    """app.config, restored after the test."""
    saved = dict(app.config)
    yield app.config
    app.config.clear()
    app.config.update(saved)
