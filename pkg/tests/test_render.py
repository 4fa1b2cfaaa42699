"""Emitters: golden-file equality, determinism, and document well-formedness.

The golden files are not self-certifying: before comparing bytes, each test
pins the structural facts the figure is supposed to show (node counts, tile
coordinates, the sign sequence, the matching edges), so a regenerated golden
that drifted structurally would fail here first.
"""

import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from snakeword import render
from snakeword.posets import antichain_trie, poset_from_word
from snakeword.snake import filter_region, matching_for_subword, snake_from_word
from snakeword.words import lrs_subword_trie, parse_word

GOLDEN = Path(__file__).parent / "golden"


def golden_text(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


class TestHasse:
    def test_json(self):
        payload = render.hasse_json_dict(poset_from_word(parse_word("101110")))
        assert payload == {
            "d": 6,
            "slopes": ["down", "up", "up", "up", "down"],
            "extrema": [1, 2, 5, 6],
        }

    def test_dot_golden(self):
        text = render.hasse_dot(poset_from_word(parse_word("101110")))
        assert '"2" [pos="1,-1!"];' in text  # element 2 is the valley
        assert '"5" [pos="4,2!"];' in text  # element 5 is the peak
        assert text.count(" -- ") == 5
        assert text == golden_text("hasse_101110.dot")


class TestTrieDocuments:
    @pytest.mark.parametrize(
        "word, nodes",
        [("101110", 16), ("10010111", 32)],
    )
    def test_subword_trie_golden(self, word, nodes):
        root = lrs_subword_trie(parse_word(word))
        dot = render.trie_dot(root, "subword_trie")
        tree = render.to_json(render.trie_json_dict(root))
        assert dot.count("label=") == 2 * nodes - 1  # node labels + edge labels
        assert json.loads(tree)["label"] == ""
        assert f'"{word}"' in dot  # the whole word is the deepest spine node
        assert dot == golden_text(f"subword_trie_{word}.dot")
        assert tree == golden_text(f"subword_trie_{word}.json")

    @pytest.mark.parametrize(
        "word, nodes",
        [("101110", 16), ("10010111", 32)],
    )
    def test_antichain_trie_golden(self, word, nodes):
        root = antichain_trie(poset_from_word(parse_word(word)))
        dot = render.trie_dot(root, "antichain_trie")
        tree = render.to_json(render.trie_json_dict(root))
        assert dot.count("[label=") == nodes
        payload = json.loads(tree)
        assert payload["label"] == {"level": 0, "antichain": []}
        assert dot == golden_text(f"antichain_trie_{word}.dot")
        assert tree == golden_text(f"antichain_trie_{word}.json")

    def test_fig_payloads_in_dot(self):
        dot = golden_text("antichain_trie_101110.dot")
        for label in ("6 {3,6}", "6 {2,6}", "6 {1,3,6}", "6 {1,4,6}"):
            assert label in dot

    def test_ascii_smoke(self):
        text = render.trie_ascii(lrs_subword_trie(parse_word("101110")))
        assert text.splitlines()[0] == "ε"
        assert len(text.splitlines()) == 16


class TestSnakeDocuments:
    def test_json_golden(self):
        w = parse_word("1011101100")
        payload = render.snake_json_dict(snake_from_word(w))
        assert payload["tiles"] == [
            [0, 0],
            [1, 0],
            [2, 0],
            [2, 1],
            [3, 1],
            [4, 1],
            [5, 1],
            [5, 2],
            [5, 3],
            [6, 3],
        ]
        assert payload["sign_sequence"] == [1, 0, 1, 1, 1, 0, 1, 1, 0, 0]
        assert payload["moves"] == ["E", "E", "N", "E", "E", "E", "N", "N", "E"]
        assert len(payload["signs"]) == 31  # 3d + 1 edges
        assert render.to_json(payload) == golden_text("snake_1011101100.json")

    def test_dot_marks_matching(self):
        w = parse_word("1011101100")
        graph = snake_from_word(w)
        matching = matching_for_subword(w, parse_word("11010"))
        dot = render.snake_dot(graph, matching)
        assert dot.count("penwidth=3") == 11
        assert dot.count(" -- ") == 31

    def test_svg_well_formed(self):
        w = parse_word("1011101100")
        graph = snake_from_word(w)
        sub = parse_word("11010")
        svg = render.snake_svg(
            graph, matching_for_subword(w, sub), filter_region(w, sub)
        )
        doc = ET.fromstring(svg)
        assert doc.tag.endswith("svg")
        rects = [el for el in doc if el.tag.endswith("rect")]
        lines = [el for el in doc if el.tag.endswith("line")]
        assert len(rects) == 10
        assert len(lines) == 31
        assert sum(1 for r in rects if r.get("fill") == "#cccccc") == 7  # fil tiles
        assert sum(1 for l in lines if l.get("stroke-width") == "5") == 11

    def test_ascii_region_and_matching(self):
        w = parse_word("1011101100")
        graph = snake_from_word(w)
        sub = parse_word("11010")
        text = render.snake_ascii(
            graph, matching_for_subword(w, sub), filter_region(w, sub)
        )
        assert text.count("=") == 3  # one matched horizontal edge, 3 chars wide
        assert text.count("#") == 10  # ten matched vertical edges
        assert "10" in text  # tile indices are drawn


class TestDeterminism:
    def test_repeat_renders_are_identical(self):
        w = parse_word("10010111")
        poset = poset_from_word(w)
        graph = snake_from_word(w)
        for build in (
            lambda: render.hasse_dot(poset),
            lambda: render.trie_dot(lrs_subword_trie(w), "subword_trie"),
            lambda: render.trie_dot(antichain_trie(poset), "antichain_trie"),
            lambda: render.to_json(render.snake_json_dict(graph)),
            lambda: render.snake_svg(graph),
            lambda: render.snake_ascii(graph),
        ):
            assert build() == build()
