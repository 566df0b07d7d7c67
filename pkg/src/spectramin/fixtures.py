"""Reference graphs shipped with the package (see data/figures.txt)."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graph import Graph
from .graph6 import from_graph6


@lru_cache(maxsize=None)
def _table() -> dict[str, tuple[str, str]]:
    text = resources.files(__package__).joinpath("data/figures.txt").read_text()
    out = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, code, *desc = line.split(None, 2)
        out[name] = (code, desc[0] if desc else "")
    return out


def names() -> list[str]:
    return list(_table())


def graph6(name: str) -> str:
    return _table()[name][0]


def load(name: str) -> Graph:
    return from_graph6(graph6(name))


def group(prefix: str) -> list[Graph]:
    return [load(n) for n in _table() if n.startswith(prefix)]
