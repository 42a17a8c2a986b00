"""Pytest configuration: exhaustive sweeps over trees and canonical algebras only run with --slow."""
import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="Run every test, including the exhaustive sweeps over larger sizes.",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweep, skipped unless --slow is given")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="exhaustive sweep, run with --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
