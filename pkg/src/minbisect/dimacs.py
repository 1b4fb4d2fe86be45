"""DIMACS-style graph I/O.

Format: comment lines ``c ...``, one header ``p edge N M``, then M lines
``e U V`` (1-based) or ``e U V W`` for weighted edges.  Weights are parsed
as exact decimals so ties never depend on float rounding.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph, GraphError


class ParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_weight(token: str) -> Fraction | int:
    try:
        if "." in token or "e" in token.lower() or "/" in token:
            return Fraction(token)
        return int(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad weight {token!r}") from exc


def parse_graph(text: str) -> Graph:
    n = None
    declared_m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weights: dict[tuple[int, int], Fraction | int] = {}
    any_weight = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(line_no, "expected 'p edge N M'")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(line_no, "N and M must be integers")
            if n < 0 or declared_m < 0:
                raise ParseError(line_no, "N and M must be non-negative")
        elif fields[0] == "e":
            if n is None:
                raise ParseError(line_no, "edge before problem line")
            if len(fields) not in (3, 4):
                raise ParseError(line_no, "expected 'e U V' or 'e U V W'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(line_no, "endpoints must be integers")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"vertex id out of range 1..{n}")
            if u == v:
                raise ParseError(line_no, "self-loop")
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                raise ParseError(line_no, "duplicate edge")
            seen.add(key)
            edges.append(key)
            if len(fields) == 4:
                any_weight = True
                try:
                    weights[key] = parse_weight(fields[3])
                except ValueError as exc:
                    raise ParseError(line_no, str(exc))
        else:
            raise ParseError(line_no, f"unknown record {fields[0]!r}")
    if n is None:
        raise ParseError(0, "missing problem line")
    if declared_m != len(edges):
        raise ParseError(0, f"header declares {declared_m} edges, found {len(edges)}")
    if any_weight:
        full = {e: weights.get(e, 1) for e in edges}
        return Graph(n, edges, full)
    return Graph(n, edges)
