"""Shared fixtures: small groups, enumerated factorpowers and module builders."""

import pytest

from src.config.yaml_loader import Budgets, set_budgets
from src.factorpower.enumeration import enumerate_fp
from src.permgroup.group import cyclic_group, symmetric_group
from src.repcore.simple_modules import SimpleModuleBuilder


@pytest.fixture(autouse=True)
def default_budgets():
    """Run every test against the built-in defaults, ignoring local files and environment."""
    budgets = Budgets()
    set_budgets(budgets)
    yield budgets
    set_budgets(None)


@pytest.fixture(scope="session")
def s1():
    return symmetric_group(1, Budgets())


@pytest.fixture(scope="session")
def s2():
    return symmetric_group(2, Budgets())


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3, Budgets())


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4, Budgets())


@pytest.fixture(scope="session")
def c3():
    return cyclic_group(3, Budgets())


@pytest.fixture(scope="session")
def fp_s2(s2):
    return enumerate_fp(s2, Budgets())


@pytest.fixture(scope="session")
def fp_s3(s3):
    return enumerate_fp(s3, Budgets())


@pytest.fixture(scope="session")
def builder_s2(s2):
    return SimpleModuleBuilder(s2, Budgets())


@pytest.fixture(scope="session")
def builder_s3(s3):
    return SimpleModuleBuilder(s3, Budgets())


@pytest.fixture(scope="session")
def builder_s4(s4):
    return SimpleModuleBuilder(s4, Budgets())
