"""Built-in graphs: fixed classics shipped as data files, parametric
families generated on demand.

Names accepted anywhere a graph argument is: petersen, clebsch, grotzsch,
dodecahedron, k_N, c_N (undirected cycle), cvec_N (consistently oriented
circuit), q_N (hypercube), p_N (path).
"""

from __future__ import annotations

import re
from importlib import resources

from .graphs import (
    Digraph,
    GraphError,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    oriented_circuit,
    parse_graph,
    path_graph,
)

_FILES = ("petersen", "clebsch", "grotzsch", "dodecahedron")
_PARAM = re.compile(r"^(k|c|q|p|cvec)_(\d+)$")


def _load_file(name: str) -> Digraph:
    text = resources.files("ttgraph.data").joinpath(f"{name}.txt").read_text()
    return parse_graph(text, name)


def named_graph(name: str) -> Digraph:
    key = name.strip().lower()
    if key in _FILES:
        return _load_file(key)
    m = _PARAM.match(key)
    if not m:
        raise GraphError(f"unknown graph name {name!r}")
    family, num = m.group(1), int(m.group(2))
    if family == "k":
        return complete_graph(num)
    if family == "c":
        return cycle_graph(num)
    if family == "q":
        return hypercube_graph(num)
    if family == "p":
        return path_graph(num)
    return oriented_circuit(num)


def is_named(name: str) -> bool:
    key = name.strip().lower()
    return key in _FILES or bool(_PARAM.match(key))


def load_rigid_base():
    """The shipped triangle-free TT_2-rigid base with its four marks."""
    from .deltas import parse_rigid_base

    text = resources.files("ttgraph.data").joinpath("rigid_base.txt").read_text()
    return parse_rigid_base(text)
