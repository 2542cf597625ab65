"""Triangulation JSON files: schema validation and round trips."""

import json

import pytest

from simplotope.core import SimplotopeSpec
from simplotope.standard import standard_triangulation
from simplotope.tfiles import (
    TriangulationFileError,
    candidate_from_dict,
    candidate_to_dict,
    load_candidate,
    save_candidate,
)
from simplotope.verifier import TriangulationCandidate


def partitions(n, largest=None):
    largest = largest or n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def candidates_up_to_dim(n):
    for m in range(1, n + 1):
        for factors in partitions(m):
            spec = SimplotopeSpec.of(*factors)
            yield TriangulationCandidate(spec, tuple(standard_triangulation(spec)))


@pytest.mark.parametrize("coords", ["standard", "reduced"])
def test_round_trip_all_small_specs(coords, tmp_path):
    for k, cand in enumerate(candidates_up_to_dim(4)):
        path = tmp_path / f"t{k}.json"
        save_candidate(cand, path, coords=coords)
        back = load_candidate(path)
        assert back.spec == cand.spec
        assert [x.vertex_set for x in back.simplices] == [x.vertex_set for x in cand.simplices]


def test_deterministic_output(tmp_path):
    cand = next(candidates_up_to_dim(3))
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    save_candidate(cand, a)
    save_candidate(cand, b)
    assert a.read_text() == b.read_text()


def test_metadata_preserved_and_ignored(tmp_path):
    spec = SimplotopeSpec.of(1, 1)
    cand = TriangulationCandidate(spec, tuple(standard_triangulation(spec)))
    doc = candidate_to_dict(cand, metadata={"note": "anything"})
    assert doc["metadata"] == {"note": "anything"}
    assert candidate_from_dict(doc).spec == spec


def test_rejects_malformed():
    with pytest.raises(TriangulationFileError):
        candidate_from_dict({"coords": "standard", "simplices": []})
    with pytest.raises(TriangulationFileError):
        candidate_from_dict({"factors": [1, 1], "coords": "polar", "simplices": []})
    with pytest.raises(TriangulationFileError):
        candidate_from_dict({"factors": [1, 1], "coords": "reduced", "simplices": []})
    # a bad vertex block
    with pytest.raises(TriangulationFileError):
        candidate_from_dict({
            "factors": [1, 1], "coords": "standard",
            "simplices": [[[1, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]]],
        })
    # wrong vertex count for the dimension
    with pytest.raises(TriangulationFileError):
        candidate_from_dict({
            "factors": [1, 1], "coords": "standard",
            "simplices": [[[1, 0, 1, 0], [0, 1, 1, 0]]],
        })


def test_reduced_requires_valid_blocks():
    with pytest.raises(TriangulationFileError):
        candidate_from_dict({
            "factors": [1, 1], "coords": "reduced", "reduction_vertex": [1, 0, 1, 0],
            "simplices": [[[2, 0], [0, 1], [1, 1]]],
        })
