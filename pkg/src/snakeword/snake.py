"""Snake graphs from binary words: tile geometry, the two-valued edge sign
function, the minimal matching, perfect-matching enumeration, and the map
from subwords to perfect matchings via filter regions.

A snake graph with d tiles is laid out on the unit lattice: tile 1 sits at
(0, 0) and each later tile is glued north or east of the previous one. Every
vertex lies on the outer face, so the boundary edges form a single cycle
through all 2d+2 vertices; this is what makes the minimal matching unique
and forced.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CapExceededError,
    EmptyWordError,
    NoQualifyingRegionError,
    NotASubwordError,
)
from .words import DEFAULT_CAP, BinaryWord, is_subword, leftmost_embedding

NORTH = "N"
EAST = "E"

#: Tile side names in canonical order.
SIDES = ("south", "east", "north", "west")


@dataclass(frozen=True, order=True)
class Edge:
    """A unit lattice segment keyed by its smaller endpoint.

    ``orientation`` is "H" for the segment (x,y)-(x+1,y) and "V" for
    (x,y)-(x,y+1).
    """

    x: int
    y: int
    orientation: str

    @property
    def endpoints(self) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.orientation == "H":
            return (self.x, self.y), (self.x + 1, self.y)
        return (self.x, self.y), (self.x, self.y + 1)

    def __str__(self) -> str:
        return f"{self.orientation}({self.x},{self.y})"


@dataclass(frozen=True)
class SnakeGraph:
    """d unit tiles glued by north/east moves; tile 1 at the origin."""

    word: BinaryWord
    tiles: tuple[tuple[int, int], ...]
    moves: tuple[str, ...]

    @property
    def tile_count(self) -> int:
        return len(self.tiles)

    def tile_sides(self, i: int) -> dict[str, Edge]:
        """The four edges of tile i (1-indexed)."""
        x, y = self.tiles[i - 1]
        return {
            "south": Edge(x, y, "H"),
            "east": Edge(x + 1, y, "V"),
            "north": Edge(x, y + 1, "H"),
            "west": Edge(x, y, "V"),
        }

    def interior_edges(self) -> tuple[Edge, ...]:
        """Edge k is shared by tiles k and k+1."""
        shared = []
        for k, move in enumerate(self.moves, start=1):
            side = "north" if move == NORTH else "east"
            shared.append(self.tile_sides(k)[side])
        return tuple(shared)

    def edges(self) -> tuple[Edge, ...]:
        seen = set()
        for i in range(1, self.tile_count + 1):
            seen.update(self.tile_sides(i).values())
        return tuple(sorted(seen))

    def boundary_edges(self) -> frozenset[Edge]:
        return frozenset(self.edges()) - frozenset(self.interior_edges())

    def vertices(self) -> frozenset[tuple[int, int]]:
        points = set()
        for x, y in self.tiles:
            points.update({(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)})
        return frozenset(points)


def snake_from_word(word: BinaryWord) -> SnakeGraph:
    """Build the snake graph whose sign sequence is the word.

    Odd tiles carry north sign 1, even tiles north sign 0; the move after
    tile i is north exactly when letter i+1 equals tile i's north sign, so
    the shared edge picks up that letter as its sign.
    """
    if not len(word):
        raise EmptyWordError("the empty word has no snake graph")
    tiles = [(0, 0)]
    moves = []
    for i in range(1, len(word)):
        north_sign = i % 2
        move = NORTH if word.bit(i + 1) == north_sign else EAST
        x, y = tiles[-1]
        tiles.append((x, y + 1) if move == NORTH else (x + 1, y))
        moves.append(move)
    return SnakeGraph(word, tuple(tiles), tuple(moves))


def sign_assignment(graph: SnakeGraph) -> dict[Edge, int]:
    """The unique sign function with sign 0 on the south edge of tile 1.

    Per tile: north = west, south = east, north opposite south. Flipping
    every bit gives the only other sign function.
    """
    signs: dict[Edge, int] = {}
    for i in range(1, graph.tile_count + 1):
        north = i % 2
        sides = graph.tile_sides(i)
        for name, value in (
            ("north", north),
            ("west", north),
            ("south", 1 - north),
            ("east", 1 - north),
        ):
            edge = sides[name]
            previous = signs.setdefault(edge, value)
            assert previous == value, "inconsistent signs on a shared edge"
    return signs


def sign_sequence_edges(graph: SnakeGraph) -> tuple[Edge, ...]:
    """The edge carrying position i of the sign sequence, for i = 1..d.

    Position 1 is the west edge of tile 1; position i >= 2 is interior
    edge i-1.
    """
    return (graph.tile_sides(1)["west"], *graph.interior_edges())


def is_perfect_matching(graph: SnakeGraph, edges: Iterable[Edge]) -> bool:
    return _covers_exactly(graph.vertices(), edges)


def _covers_exactly(vertices: frozenset[tuple[int, int]], edges: Iterable[Edge]) -> bool:
    covered = []
    for edge in edges:
        covered.extend(edge.endpoints)
    return len(covered) == len(set(covered)) and set(covered) == vertices


@lru_cache(maxsize=None)
def minimal_matching(graph: SnakeGraph) -> frozenset[Edge]:
    """The unique boundary-only perfect matching containing the south edge
    of tile 1, built by forced propagation around the boundary cycle."""
    boundary = graph.boundary_edges()
    incident: dict[tuple[int, int], list[Edge]] = {}
    for edge in boundary:
        for point in edge.endpoints:
            incident.setdefault(point, []).append(edge)

    chosen = {graph.tile_sides(1)["south"]}
    covered = set()
    for edge in chosen:
        covered.update(edge.endpoints)
    uncovered = set(graph.vertices()) - covered
    while uncovered:
        progress = False
        for vertex in sorted(uncovered):
            free = [
                e
                for e in incident[vertex]
                if not covered.intersection(e.endpoints)
            ]
            if len(free) == 1:
                chosen.add(free[0])
                covered.update(free[0].endpoints)
                uncovered.difference_update(free[0].endpoints)
                progress = True
        assert progress, "minimal matching propagation stalled"
    assert is_perfect_matching(graph, chosen)
    return frozenset(chosen)


@lru_cache(maxsize=8)
def enumerate_perfect_matchings(
    graph: SnakeGraph, cap: int = DEFAULT_CAP
) -> tuple[frozenset[Edge], ...]:
    """All perfect matchings, by backtracking over vertices in lexicographic
    order; independent of any snake-specific structure."""
    if graph.tile_count > cap:
        raise CapExceededError(
            f"snake graph with {graph.tile_count} tiles exceeds the oracle cap {cap}"
        )
    incident: dict[tuple[int, int], list[Edge]] = {v: [] for v in graph.vertices()}
    for edge in graph.edges():
        for point in edge.endpoints:
            incident[point].append(edge)
    order = sorted(incident)

    found: list[frozenset[Edge]] = []
    chosen: list[Edge] = []
    covered: set[tuple[int, int]] = set()

    def extend() -> None:
        vertex = next((v for v in order if v not in covered), None)
        if vertex is None:
            found.append(frozenset(chosen))
            return
        for edge in incident[vertex]:
            if covered.intersection(edge.endpoints):
                continue
            chosen.append(edge)
            covered.update(edge.endpoints)
            extend()
            chosen.pop()
            covered.difference_update(edge.endpoints)

    extend()
    found.sort(key=sorted)
    return tuple(found)


def region_boundary(graph: SnakeGraph, region: Iterable[int]) -> frozenset[Edge]:
    """Edges adjacent to exactly one tile of the region (non-region tiles
    and the exterior both count as outside)."""
    counts: dict[Edge, int] = {}
    for t in set(region):
        for edge in graph.tile_sides(t).values():
            counts[edge] = counts.get(edge, 0) + 1
    return frozenset(edge for edge, n in counts.items() if n == 1)


@lru_cache(maxsize=65536)
def filter_region_block(graph: SnakeGraph, t: int) -> tuple[int, ...]:
    """The smallest run of consecutive tiles containing tile t whose
    region boundary, minus the minimal matching, perfectly matches the
    run's vertices. Ties broken by the smaller starting tile."""
    d = graph.tile_count
    base = minimal_matching(graph)
    for size in range(1, d + 1):
        for start in range(max(1, t - size + 1), min(t, d - size + 1) + 1):
            run = tuple(range(start, start + size))
            edges = region_boundary(graph, run) - base
            vertices = frozenset(
                point
                for i in run
                for edge in graph.tile_sides(i).values()
                for point in edge.endpoints
            )
            if _covers_exactly(vertices, edges):
                return run
    raise NoQualifyingRegionError(f"no qualifying run of tiles around tile {t}")


def anchor_tiles(word: BinaryWord, s: BinaryWord) -> tuple[int, ...]:
    """One tile per block of the leftmost embedding of s: the tile indexed
    by the block's last host position (the tile just past the block's last
    sign-sequence edge)."""
    return tuple(end for _, end in leftmost_embedding(s, word).blocks)


def filter_region(word: BinaryWord, s: BinaryWord) -> frozenset[int]:
    """Union of the filter-region blocks over the subword's anchors; empty
    for the empty subword."""
    if not is_subword(s, word):
        raise NotASubwordError(f"{s.bits!r} is not a subword of {word.bits!r}")
    if not len(s):
        return frozenset()
    graph = snake_from_word(word)
    tiles: set[int] = set()
    for t in anchor_tiles(word, s):
        tiles.update(filter_region_block(graph, t))
    return frozenset(tiles)


def matching_for_subword(word: BinaryWord, s: BinaryWord) -> frozenset[Edge]:
    """The perfect matching attached to a subword: the symmetric difference
    of the filter region's boundary with the minimal matching. The empty
    subword maps to the minimal matching itself."""
    if not is_subword(s, word):
        raise NotASubwordError(f"{s.bits!r} is not a subword of {word.bits!r}")
    graph = snake_from_word(word)
    base = minimal_matching(graph)
    if not len(s):
        return base
    region = filter_region(word, s)
    result = region_boundary(graph, region) ^ base
    assert is_perfect_matching(graph, result), "filter region gave a non-matching"
    return result
