"""Turnstile edge-stream primitives.

A stream is a sequence of signed edge events over vertices 1..n.  Inserting
an edge that is already live, or deleting one that is not, is a contract
violation and raises; multiplicities never leave {0, 1}.

Text format, one event per line::

    + 3 7
    - 3 7

Blank lines and lines starting with ``#`` are ignored.
"""

from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np


class StreamError(ValueError):
    """Base class for stream contract violations."""


class LoopEdgeError(StreamError):
    pass


class OutOfUniverseError(StreamError):
    pass


class DuplicateInsertError(StreamError):
    pass


class DeleteAbsentError(StreamError):
    pass


class OverCapacityError(StreamError):
    pass


class StreamFormatError(StreamError):
    pass


@dataclass(frozen=True, slots=True)
class EdgeEvent:
    """A signed edge update; endpoints are normalized so u < v."""

    u: int
    v: int
    sign: int


@dataclass(frozen=True, slots=True)
class StreamConfig:
    """Universe size and live-edge capacity for a stream."""

    n: int
    m_max: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"universe must hold at least 2 vertices, got n={self.n}")
        if self.m_max < 1:
            raise ValueError(f"m_max must be positive, got {self.m_max}")


def normalize_event(u_raw: int, v_raw: int, sign: int, n: int | None = None) -> EdgeEvent:
    """Validate and canonicalize a raw event (endpoints sorted ascending)."""
    if sign not in (1, -1):
        raise StreamFormatError(f"sign must be +1 or -1, got {sign}")
    if u_raw == v_raw:
        raise LoopEdgeError(f"self-loop at vertex {u_raw}")
    if u_raw < 1 or v_raw < 1 or (n is not None and (u_raw > n or v_raw > n)):
        raise OutOfUniverseError(f"endpoint outside [1, {n}]: ({u_raw}, {v_raw})")
    if u_raw < v_raw:
        return EdgeEvent(u_raw, v_raw, sign)
    return EdgeEvent(v_raw, u_raw, sign)


class AdjacencyGraph:
    """Exact adjacency state (dict of neighbor sets); desk-scale reference."""

    def __init__(self):
        self.adj: dict[int, set[int]] = {}
        self.m = 0

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj.get(u)
        return nbrs is not None and v in nbrs

    def degree(self, v: int) -> int:
        nbrs = self.adj.get(v)
        return 0 if nbrs is None else len(nbrs)

    def vertices(self):
        return self.adj.keys()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in self.adj.items():
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def insert(self, u: int, v: int) -> None:
        if self.has_edge(u, v):
            raise DuplicateInsertError(f"edge ({u}, {v}) already live")
        self.adj.setdefault(u, set()).add(v)
        self.adj.setdefault(v, set()).add(u)
        self.m += 1

    def delete(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise DeleteAbsentError(f"edge ({u}, {v}) not live")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        if not self.adj[u]:
            del self.adj[u]
        if not self.adj[v]:
            del self.adj[v]
        self.m -= 1


def apply_event(graph: AdjacencyGraph, e: EdgeEvent) -> AdjacencyGraph:
    """Apply one normalized event in place; returns the graph for chaining."""
    if e.sign == 1:
        graph.insert(e.u, e.v)
    else:
        graph.delete(e.u, e.v)
    return graph


def materialize(events: Iterable[EdgeEvent], cfg: StreamConfig) -> AdjacencyGraph:
    """Fold a whole stream into an adjacency graph, enforcing the contract.

    Errors carry the 0-based index of the offending event.
    """
    g = AdjacencyGraph()
    for i, e in enumerate(events):
        try:
            if e.u == e.v:
                raise LoopEdgeError(f"self-loop at vertex {e.u}")
            if e.u > e.v:
                raise StreamFormatError(f"event not normalized: ({e.u}, {e.v})")
            if e.u < 1 or e.v > cfg.n:
                raise OutOfUniverseError(f"endpoint outside [1, {cfg.n}]: ({e.u}, {e.v})")
            apply_event(g, e)
            if g.m > cfg.m_max:
                raise OverCapacityError(f"live edges exceed m_max={cfg.m_max}")
        except StreamError as err:
            raise type(err)(f"event {i}: {err}") from None
    return g


# ---------------------------------------------------------------------------
# text format


def _line_error(kind: type[StreamError], lineno: int, message: str) -> StreamError:
    err = kind(f"line {lineno}: {message}")
    err.line = lineno  # structured position for machine-readable error output
    return err


def iter_stream(f: IO[str], n: int | None = None) -> Iterator[tuple[int, EdgeEvent]]:
    """Yield (line_number, event) pairs from a text stream."""
    for lineno, line in enumerate(f, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 3 or parts[0] not in ("+", "-"):
            raise _line_error(StreamFormatError, lineno, f"expected '{{+|-}} u v', got {stripped!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise _line_error(StreamFormatError, lineno, "endpoints must be integers") from None
        sign = 1 if parts[0] == "+" else -1
        try:
            yield lineno, normalize_event(u, v, sign, n)
        except StreamError as err:
            raise _line_error(type(err), lineno, str(err)) from None


def read_stream(f: IO[str], n: int | None = None) -> list[EdgeEvent]:
    return [e for _, e in iter_stream(f, n)]


def format_event(e: EdgeEvent) -> str:
    return f"{'+' if e.sign == 1 else '-'} {e.u} {e.v}"


def write_stream(events: Iterable[EdgeEvent], f: IO[str]) -> None:
    for e in events:
        f.write(format_event(e) + "\n")


def events_to_arrays(events) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Canonical array form (u, v, sign) used by the batched ingest paths.

    Accepts a list of EdgeEvent or an already-built array triple.
    """
    if isinstance(events, tuple) and len(events) == 3:
        u, v, s = events
        return (
            np.ascontiguousarray(u, dtype=np.uint64),
            np.ascontiguousarray(v, dtype=np.uint64),
            np.ascontiguousarray(s, dtype=np.int64),
        )
    us = np.fromiter((e.u for e in events), dtype=np.uint64, count=len(events))
    vs = np.fromiter((e.v for e in events), dtype=np.uint64, count=len(events))
    ss = np.fromiter((e.sign for e in events), dtype=np.int64, count=len(events))
    return us, vs, ss
