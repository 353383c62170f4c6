import pytest

from ybe import catalog, group_brace


@pytest.fixture(scope="session")
def entries():
    return {e.id: e for e in catalog()}


@pytest.fixture(scope="session")
def braces(entries):
    """Group braces of the catalog entries, built once per session."""
    cache = {}

    def get(entry_id):
        if entry_id not in cache:
            cache[entry_id] = group_brace(entries[entry_id].cycle_set)
        return cache[entry_id]

    return get
