from __future__ import annotations

import pytest

from ologism import data


@pytest.fixture(scope="session")
def animals():
    return data.load("animals")


@pytest.fixture(scope="session")
def custodian():
    return data.load("custodian")


@pytest.fixture(scope="session")
def has_mother():
    return data.load("has_mother")


@pytest.fixture(scope="session")
def mother_ologism():
    return data.load("mother_ologism")


@pytest.fixture(scope="session")
def family_model():
    return data.load_model("has_mother")


@pytest.fixture(scope="session")
def custodian_model():
    return data.load_model("custodian")


@pytest.fixture(scope="session")
def animals_model():
    return data.load_model("animals")
