import random

import pytest

from corpus import random_graph
from twinwidth.graphs import cycle_graph, path_graph, trigraph_from_graph, contract
from twinwidth.io import (
    FormatError,
    mesh_from_json,
    mesh_to_json,
    read_dimacs,
    read_pace_td,
    read_partition,
    sequence_from_json,
    sequence_to_json,
    trigraph_to_dot,
    verdict_to_json,
    write_dimacs,
    write_pace_td,
    write_partition,
)
from twinwidth.partitions import partition_from_blocks
from twinwidth.solver import greedy_sequence
from twinwidth.structure import gen_wall, wall_to_mesh
from twinwidth.treewidth import treewidth_exact


class TestDimacs:
    def test_round_trip_bit_exact(self):
        rng = random.Random(44)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 12))
            text = write_dimacs(g)
            assert read_dimacs(text) == g
            assert write_dimacs(read_dimacs(text)) == text

    def test_parses_one_indexed(self):
        g = read_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n")
        assert g == path_graph(3)

    @pytest.mark.parametrize(
        "text,line",
        [
            ("e 1 2\n", 1),
            ("p edge 2 1\ne 1 3\n", 2),
            ("p edge 2 1\ne 1 1\n", 2),
            ("p edge 2 2\ne 1 2\ne 2 1\n", 3),
            ("p edge x 1\n", 1),
            ("p edge 3 2\ne 1 2\n", 1),
            ("p edge 2 0\nq zzz\n", 2),
        ],
    )
    def test_line_precise_errors(self, text, line):
        with pytest.raises(FormatError) as exc:
            read_dimacs(text)
        assert exc.value.line == line


class TestDot:
    def test_red_edges_carry_color(self):
        t = contract(trigraph_from_graph(cycle_graph(5)), 0, 1)
        dot = trigraph_to_dot(t)
        assert "0 -- 2 [color=red];" in dot
        assert "2 -- 3;" in dot


class TestSequenceJson:
    def test_round_trip(self):
        g = cycle_graph(6)
        s, _ = greedy_sequence(g)
        text = sequence_to_json(s)
        assert sequence_from_json(text) == s
        assert sequence_to_json(sequence_from_json(text)) == text

    def test_stable_key_order(self):
        g = path_graph(3)
        s, _ = greedy_sequence(g)
        assert sequence_to_json(s).index('"n"') < sequence_to_json(s).index('"steps"')

    def test_verdict_json(self):
        assert verdict_to_json(2, [0, 1, 2]) == '{"trace": [0, 1, 2], "width": 2}\n'

    def test_rejects_malformed(self):
        with pytest.raises(FormatError):
            sequence_from_json("{")
        with pytest.raises(FormatError):
            sequence_from_json('{"n": 3}')
        with pytest.raises(FormatError):
            sequence_from_json('{"n": 3, "steps": [1, 2]}')


class TestPartitionText:
    def test_round_trip(self):
        p = partition_from_blocks(6, [{0, 1}, {2}, {3, 4, 5}], ids=[1, 2, 3])
        text = write_partition(p)
        back = read_partition(text, 6)
        assert sorted(back.by_id.values(), key=min) == sorted(p.by_id.values(), key=min)
        assert write_partition(back) == text

    def test_part_ids_are_line_numbers(self):
        p = read_partition("3 4\n1\n2 5\n", 5)
        assert p.members(1) == frozenset({2, 3})
        assert p.members(2) == frozenset({0})

    def test_errors(self):
        with pytest.raises(FormatError):
            read_partition("1 2\nx\n", 3)
        with pytest.raises(FormatError):
            read_partition("1 9\n", 3)
        with pytest.raises(FormatError):
            read_partition("1 2\n", 3)


class TestPace:
    def test_round_trip(self):
        rng = random.Random(46)
        for _ in range(10):
            g = random_graph(rng, rng.randint(1, 9))
            td = treewidth_exact(g).decomposition
            text = write_pace_td(td, g.n)
            back = read_pace_td(text)
            assert write_pace_td(back, g.n) == text

    def test_header_checked(self):
        with pytest.raises(FormatError):
            read_pace_td("s td 1 2 3\nb 1 1\n")  # header promises width 1, bag gives 0
        with pytest.raises(FormatError):
            read_pace_td("b 1 1\n")


class TestMeshJson:
    def test_round_trip(self):
        g, wl = gen_wall(8)
        me = wall_to_mesh(g, wl, 3)
        text = mesh_to_json(me)
        back = mesh_from_json(text)
        assert back == me
        assert mesh_to_json(back) == text

    def test_missing_field(self):
        with pytest.raises(FormatError):
            mesh_from_json('{"N": 1, "rows": []}')
