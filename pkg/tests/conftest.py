import pytest

from valgen.bundle import default_data_dir, load_bundle


@pytest.fixture(scope="session")
def data_dir():
    return default_data_dir()


@pytest.fixture(scope="session")
def engine():
    return load_bundle()


@pytest.fixture(scope="session")
def de_lexicon(engine):
    return engine.lexicons["de"]


@pytest.fixture(scope="session")
def de_ontology(engine):
    return engine.ontologies["de"]
