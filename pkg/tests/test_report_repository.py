import json

import pytest

from src.core.exceptions import GraphFormatError, StorageError
from src.domain.graph import Graph, MultiGraph
from src.models.reports import CorpusSummaryOut
from src.repositories.report_repository import render_report, render_table
from src.storage.edge_list import format_edge_list, parse_graph, parse_multigraph


# --- формат списка рёбер -------------------------------------------------------

def test_parse_graph_with_comments():
    g = parse_graph("# comment\n\n3 2\n0 1\n# inner\n1 2\n")
    assert (g.n, g.edges) == (3, ((0, 1), (1, 2)))


@pytest.mark.parametrize("text, fragment", [
    ("", "header"),
    ("3 2\n0 1\n", "declares 2 edges"),
    ("3 1\n0 x\n", "line 2"),
    ("3 1\n0 1 2\n", "line 2"),
    ("2 1\n0 0\n", "invalid graph"),
    ("3 1\n0 1\n", "invalid graph"),
])
def test_parse_graph_errors(text, fragment):
    """Ошибки формата указывают на строку или причину"""
    with pytest.raises(GraphFormatError) as exc_info:
        parse_graph(text)
    assert fragment in str(exc_info.value)


def test_parse_graph_allow_isolated():
    g = parse_graph("3 1\n0 1\n", allow_isolated=True)
    assert g.degree(2) == 0


def test_parse_multigraph_keeps_parallel_edges():
    m = parse_multigraph("2 3\n0 1\n0 1\n0 1\n")
    assert m.regular_degree() == 3
    with pytest.raises(GraphFormatError):
        parse_multigraph("1 1\n0 0\n")


def test_format_edge_list_parses_back(petersen):
    text = format_edge_list(petersen, comment="petersen\nsecond line")
    assert text.startswith("# petersen\n# second line\n10 15\n")
    assert parse_graph(text) == petersen


def test_render_helpers():
    summary = CorpusSummaryOut(max_n=2, counts={"1": 1, "2": 1}, twin_free_counts={"1": 1, "2": 0}, total=2)
    rendered = render_report(summary)
    assert rendered.endswith("\n")
    assert json.loads(rendered)["total"] == 2
    assert render_table(["a", "b"], [[1, 2.5]]) == "a,b\n1,2.5\n"


# --- репозиторий ---------------------------------------------------------------

@pytest.mark.asyncio
async def test_load_graph(report_repository, mock_storage_client):
    """Тест загрузки графа через хранилище"""
    # Act
    g = await report_repository.load_graph("p3.el")

    # Assert
    assert isinstance(g, Graph)
    assert g.n == 3 and g.m == 2
    mock_storage_client.read_text.assert_called_once_with("p3.el")


@pytest.mark.asyncio
async def test_load_graph_missing_key(report_repository, mock_storage_client):
    mock_storage_client.read_text.side_effect = StorageError("key not found: nope.el")

    with pytest.raises(StorageError):
        await report_repository.load_graph("nope.el")


@pytest.mark.asyncio
async def test_save_report_writes_json(report_repository, mock_storage_client):
    summary = CorpusSummaryOut(max_n=1, counts={"1": 1}, twin_free_counts={"1": 1}, total=1)

    await report_repository.save_report("out.json", summary)

    key, text = mock_storage_client.write_text.call_args.args
    assert key == "out.json"
    assert json.loads(text)["counts"] == {"1": 1}


@pytest.mark.asyncio
async def test_graph_round_trip_in_memory(report_repository_real_storage, in_memory_storage, petersen):
    """Сохранение и загрузка графа через in-memory хранилище"""
    await report_repository_real_storage.save_graph("g.el", petersen, comment="petersen")
    assert await in_memory_storage.exists("g.el")

    loaded = await report_repository_real_storage.load_graph("g.el")
    assert loaded == petersen


@pytest.mark.asyncio
async def test_load_multigraph_in_memory(report_repository_real_storage, in_memory_storage):
    await in_memory_storage.write_text("h.el", "2 3\n0 1\n0 1\n0 1\n")
    host = await report_repository_real_storage.load_multigraph("h.el")
    assert isinstance(host, MultiGraph)
    assert host.parallel_edge_count == 2


@pytest.mark.asyncio
async def test_save_table(report_repository_real_storage, in_memory_storage):
    await report_repository_real_storage.save_table("t.csv", ["n", "ratio"], [[10, 0.5], [20, 0.25]])
    assert await in_memory_storage.read_text("t.csv") == "n,ratio\n10,0.5\n20,0.25\n"
