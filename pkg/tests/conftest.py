import os

import pytest
from hypothesis import settings

settings.register_profile("repo", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("repo")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CAMBRIAN_POP_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; set CAMBRIAN_POP_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
