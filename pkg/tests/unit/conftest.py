from pathlib import Path

import pytest

from surfdraw import Drawing, MainProcessCompute, load_drawing

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def corpus_dir() -> Path:
    return FIXTURES / "k24_corpus"


@pytest.fixture
def k45_klein() -> Drawing:
    return load_drawing(FIXTURES / "k45_klein_counterexample.tgd")


@pytest.fixture
def k45_klein_rerouted() -> Drawing:
    return load_drawing(FIXTURES / "k45_klein_rerouted.tgd")


@pytest.fixture
def torus_k24() -> Drawing:
    return load_drawing(FIXTURES / "torus_k24_cellular.tgd")


@pytest.fixture
def planar_k24() -> Drawing:
    return load_drawing(FIXTURES / "planar_k24.tgd")


@pytest.fixture
def k22_annulus() -> Drawing:
    return load_drawing(FIXTURES / "k22_annulus.tgd")


@pytest.fixture
def bad_transit() -> Drawing:
    return load_drawing(FIXTURES / "bad_transit.tgd")


@pytest.fixture
def empty_torus() -> Drawing:
    return load_drawing(FIXTURES / "empty_torus.tgd")


@pytest.fixture
def compute():
    with MainProcessCompute() as c:
        yield c
