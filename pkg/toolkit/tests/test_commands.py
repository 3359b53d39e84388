import numpy as np
import pytest

from napoleon.commands import cmd_align, cmd_fermat, cmd_iterate, cmd_plot, cmd_transform, cmd_verify
from napoleon.config import get_settings
from napoleon.database.jsonl_db import JSONLinesDatabase, read_triples, write_triples
from napoleon.exceptions import StorageError
from napoleon.geometry.transforms import centroid
from napoleon.main import main
from napoleon.models.records import AlignmentRecord, FermatRecord, TripleRecord


def test_transform_suffixes_and_values(triples_file, tmp_path, unit_equilateral):
    output = tmp_path / "out.jsonl"
    assert cmd_transform(triples_file, output, "inner", "torricelli") == 0
    records = read_triples(output)
    assert [r.id for r in records] == ["right.T+", "equilateral.T+", "collinear.T+", "obtuse.T+"]
    np.testing.assert_allclose(records[1].vertices, unit_equilateral.vertices, atol=1e-15)
    assert records[1].tags == ["regular"]


def test_transform_outer_napoleon_reflects_equilateral(triples_file, tmp_path, unit_equilateral):
    output = tmp_path / "out.jsonl"
    cmd_transform(triples_file, output, "outer", "napoleon")
    record = read_triples(output)[1]
    assert record.id == "equilateral.N-"
    expected = 2.0 * centroid(unit_equilateral) - unit_equilateral.vertices
    np.testing.assert_allclose(record.vertices, expected, atol=1e-15)


def test_transform_empty_input(tmp_path):
    source, output = tmp_path / "empty.jsonl", tmp_path / "out.jsonl"
    write_triples(source, [])
    assert cmd_transform(source, output) == 0
    assert output.read_text(encoding="utf-8") == ""


def test_iterate_inner_collapses(triples_file, tmp_path):
    output = tmp_path / "out.jsonl"
    assert cmd_iterate(triples_file, output, "inner", 2) == 0
    for source, record in zip(read_triples(triples_file), read_triples(output)):
        assert record.id == f"{source.id}.N+^2"
        c = np.mean(source.vertices, axis=0)
        np.testing.assert_allclose(record.vertices, np.tile(c, (3, 1)), atol=1e-12)


def test_iterate_outer_twice_equals_transform_twice(triples_file, tmp_path):
    once, twice, iterated = tmp_path / "once.jsonl", tmp_path / "twice.jsonl", tmp_path / "iter.jsonl"
    cmd_transform(triples_file, once, "outer", "napoleon")
    cmd_transform(once, twice, "outer", "napoleon")
    cmd_iterate(triples_file, iterated, "outer", 2)
    for a, b in zip(read_triples(twice), read_triples(iterated)):
        np.testing.assert_allclose(a.vertices, b.vertices, atol=1e-10)


def test_iterate_zero_is_identity(triples_file, tmp_path):
    output = tmp_path / "out.jsonl"
    cmd_iterate(triples_file, output, "outer", 0)
    assert [r.vertices for r in read_triples(output)] == [r.vertices for r in read_triples(triples_file)]


def test_iterate_rejects_negative_k(triples_file, tmp_path):
    with pytest.raises(ValueError):
        cmd_iterate(triples_file, tmp_path / "out.jsonl", "inner", -1)


def test_align_records(triples_file, tmp_path):
    output = tmp_path / "aligned.jsonl"
    assert cmd_align(triples_file, output, with_oracle=True) == 0
    records = {r.id: r for r in JSONLinesDatabase(output).read(AlignmentRecord)}
    assert records["equilateral"].objective <= 1e-28
    assert records["collinear"].unique is False
    assert records["collinear"].branch_objectives["+1"] == pytest.approx(records["collinear"].branch_objectives["-1"], abs=1e-9)
    assert records["collinear"].alternate_vertices is not None
    assert abs(records["right"].oracle_gap) <= 1e-6
    assert records["right"].unique is True


def test_fermat_records(triples_file, tmp_path):
    output = tmp_path / "fermat.jsonl"
    assert cmd_fermat(triples_file, output, with_oracle=True) == 0
    records = {r.id: r for r in JSONLinesDatabase(output).read(FermatRecord)}
    assert records["obtuse"].rule == "vertex"
    assert records["obtuse"].point == [0.0, 0.2]
    assert records["collinear"].rule == "collinear"
    assert records["right"].rule == "torricelli"
    assert records["right"].weiszfeld_gap <= 1e-8


def test_fermat_skips_trivial_records(tmp_path):
    source, output = tmp_path / "in.jsonl", tmp_path / "out.jsonl"
    write_triples(source, [
        TripleRecord(id="dot", vertices=[[1, 1], [1, 1], [1, 1]]),
        TripleRecord(id="right", vertices=[[0, 0], [1, 0], [0, 1]]),
    ])
    assert cmd_fermat(source, output) == 2
    assert [r.id for r in read_triples(output)] == ["right"]


def test_missing_input_raises_storage_error(tmp_path):
    with pytest.raises(StorageError):
        cmd_transform(tmp_path / "missing.jsonl", tmp_path / "out.jsonl")


def test_verify_is_deterministic(tmp_path, settings):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    report, code = cmd_verify(5, 2, 11, first, settings)
    cmd_verify(5, 2, 11, second, settings)
    assert code == 0
    assert report.instance_count == 9
    assert first.read_bytes() == second.read_bytes()


def test_plot_writes_svg(triples_file, tmp_path):
    output = tmp_path / "plot.svg"
    assert cmd_plot(triples_file, output, "napoleon±,fermat") == 0
    assert output.read_text(encoding="utf-8").startswith("<?xml")


# ============================================================================
# CÓDIGOS DE SALIDA
# ============================================================================

def test_main_success(triples_file, tmp_path):
    assert main(["transform", "-i", str(triples_file), "-o", str(tmp_path / "o.jsonl"), "--kind", "outer"]) == 0


def test_main_missing_file_exits_with_two(tmp_path):
    assert main(["align", "-i", str(tmp_path / "missing.jsonl"), "-o", str(tmp_path / "o.jsonl")]) == 2


def test_main_bad_record_keeps_processing(tmp_path):
    source = tmp_path / "in.jsonl"
    source.write_text(
        '{"id": "a", "vertices": [[0, 0], [1, 0], [0, 1]]}\n'
        '{"id": "b", "vertices": [[0, 0], [1, 0]]}\n'
        '{"id": "c", "vertices": [[0, 0], [2, 0], [0, 2]]}\n',
        encoding="utf-8",
    )
    output = tmp_path / "out.jsonl"
    assert main(["transform", "-i", str(source), "-o", str(output), "--op", "torricelli"]) == 2
    assert [r.id for r in read_triples(output)] == ["a.T+", "c.T+"]


def test_main_verify(tmp_path):
    report = tmp_path / "report.json"
    assert main(["verify", "--n", "3", "--dim", "3", "--seed", "1", "-o", str(report)]) == 0
    assert report.exists()


def test_main_rejects_unknown_show(triples_file, tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["plot", "-i", str(triples_file), "-o", str(tmp_path / "p.svg"), "--show", "circles"])
    assert info.value.code == 2


def test_main_plot_with_torricelli_loops(triples_file, tmp_path):
    output = tmp_path / "figures" / "plot.svg"
    assert main(["plot", "-i", str(triples_file), "-o", str(output), "--show", "torricelli±,double"]) == 0
    assert output.read_text(encoding="utf-8").count('<path class="torricelli') == 8


def test_main_defaults_to_sample_file(triples_file, tmp_path, monkeypatch):
    data_dir = tmp_path / "sample"
    data_dir.mkdir()
    (data_dir / "triples.jsonl").write_bytes(triples_file.read_bytes())
    monkeypatch.setenv("NAPOLEON_DATA_DIR", str(data_dir))
    get_settings.cache_clear()
    try:
        output = tmp_path / "out.jsonl"
        assert main(["transform", "-o", str(output), "--kind", "outer"]) == 0
    finally:
        get_settings.cache_clear()
    assert [r.id for r in read_triples(output)][0] == "right.N-"
