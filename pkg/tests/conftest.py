"""Shared fixtures: catalog groups and character tables, cached per session."""

import pytest

from blocklab.catalog import build_catalog_entry
from blocklab.chartab import character_table

_groups: dict = {}
_tables: dict = {}


def get_group(name: str):
    if name not in _groups:
        _groups[name] = build_catalog_entry(name)
    return _groups[name]


def get_table(name: str):
    if name not in _tables:
        _tables[name] = character_table(get_group(name))
    return _tables[name]


@pytest.fixture(scope="session")
def group():
    return get_group


@pytest.fixture(scope="session")
def table():
    return get_table
