import pytest

from csmverify.verify import build_engines, materialize_tables

_STACKS = {}


@pytest.fixture(scope="session")
def engines():
    """Shared calculator stacks, one per group, tables materialized."""

    def get(series, rank):
        key = (series, rank)
        if key not in _STACKS:
            stack = build_engines(series, rank)
            materialize_tables(stack)
            _STACKS[key] = stack
        return _STACKS[key]

    return get


@pytest.fixture(scope="session")
def group(engines):
    def get(series, rank):
        return engines(series, rank).group

    return get
