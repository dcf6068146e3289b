import pytest

from surfdraw import (
    ComputeBackend,
    Convention,
    LabelGroup,
    MainProcessCompute,
    MultiprocessCompute,
    enumerate_k24_torus,
    exceptions,
    star_crossing_matrix,
    validate
)
from surfdraw.enumeration import k24_rotation_systems


@pytest.fixture(scope="module")
def pool():
    with MultiprocessCompute(max_workers=2) as compute:
        yield compute


def test_base_backend_is_abstract():
    backend = ComputeBackend(parallel=False)
    with pytest.raises(exceptions.MethodNotImplementedError):
        backend.initialize()

    with pytest.raises(exceptions.MethodNotImplementedError):
        backend.analyze_rotation_systems([], Convention())


def test_main_process_backend_is_serial():
    assert not MainProcessCompute().parallel
    assert MultiprocessCompute(max_workers=3).max_workers == 3


def test_chunks_keep_order():
    compute = MultiprocessCompute(max_workers=2)
    items = list(range(19))
    chunks = compute._chunks(items)
    assert len(chunks) == 7
    assert [i for chunk in chunks for i in chunk] == items
    assert compute._chunks([]) == []


def test_pool_validates_like_main_process(pool, k45_klein, k45_klein_rerouted, bad_transit):
    for d in (k45_klein, k45_klein_rerouted, bad_transit):
        assert validate(d, compute=pool) == validate(d)

    assert star_crossing_matrix(k45_klein, compute=pool) == star_crossing_matrix(k45_klein)


def test_pool_enumerates_like_main_process(pool):
    for convention in (Convention(), Convention(labels=LabelGroup.FIXED)):
        assert enumerate_k24_torus(convention, compute=pool) == enumerate_k24_torus(convention)


def test_pool_keeps_input_order(pool):
    systems = k24_rotation_systems()
    serial = MainProcessCompute().analyze_rotation_systems(systems, Convention())
    assert pool.analyze_rotation_systems(systems, Convention()) == serial
