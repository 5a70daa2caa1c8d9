"""A small noun taxonomy supporting hyponym queries for metaphor filtering."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

from .errors import ConfigError


class TaxonomyStore:
    """Child-to-parent noun edges with transitive reachability queries.

    Lookups on nouns the store has never seen return empty results rather
    than failing, so a sparse taxonomy degrades gracefully (unknown noun
    pairs simply pass the metaphor filters).
    """

    def __init__(self, parent_edges: dict[str, set[str]] | None = None):
        self.parent_edges: dict[str, set[str]] = {
            child.lower(): {p.lower() for p in parents}
            for child, parents in (parent_edges or {}).items()
        }
        self._check_acyclic()

    @classmethod
    def load(cls, path: Path | str) -> "TaxonomyStore":
        """Load child TAB parent lines; cycles are a fatal config error."""
        edges: dict[str, set[str]] = defaultdict(set)
        with open(path, encoding="utf-8") as fh:
            for line_number, raw in enumerate(fh, start=1):
                line = raw.rstrip("\r\n")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                    raise ConfigError(f"{path}:{line_number}: expected child TAB parent")
                edges[parts[0].strip().lower()].add(parts[1].strip().lower())
        return cls(dict(edges))

    def _check_acyclic(self) -> None:
        WHITE, GRAY, BLACK = 0, 1, 2
        color: dict[str, int] = defaultdict(int)
        for start in self.parent_edges:
            if color[start] != WHITE:
                continue
            stack = [(start, iter(sorted(self.parent_edges.get(start, ()))))]
            color[start] = GRAY
            while stack:
                node, neighbors = stack[-1]
                advanced = False
                for nxt in neighbors:
                    if color[nxt] == GRAY:
                        raise ConfigError(f"taxonomy cycle through {nxt!r}")
                    if color[nxt] == WHITE:
                        color[nxt] = GRAY
                        stack.append((nxt, iter(sorted(self.parent_edges.get(nxt, ())))))
                        advanced = True
                        break
                if not advanced:
                    color[node] = BLACK
                    stack.pop()

    def nouns(self) -> set[str]:
        """Every noun mentioned on either side of an edge."""
        out = set(self.parent_edges)
        for parents in self.parent_edges.values():
            out.update(parents)
        return out

    def hypernyms(self, noun: str) -> set[str]:
        """All ancestors of ``noun`` (transitive closure, excluding itself)."""
        seen: set[str] = set()
        frontier = list(self.parent_edges.get(noun.lower(), ()))
        while frontier:
            node = frontier.pop()
            if node in seen:
                continue
            seen.add(node)
            frontier.extend(self.parent_edges.get(node, ()))
        return seen


def is_hyponym(a: str, b: str, taxonomy: TaxonomyStore) -> bool:
    """True iff ``b`` is reachable from ``a`` via parent edges (and a != b)."""
    a, b = a.lower(), b.lower()
    if a == b:
        return False
    return b in taxonomy.hypernyms(a)


def shared_hyponyms(a: str, b: str, taxonomy: TaxonomyStore) -> set[str]:
    """Nouns in the store that are hyponyms of both ``a`` and ``b``."""
    return {
        noun
        for noun in taxonomy.nouns()
        if is_hyponym(noun, a, taxonomy) and is_hyponym(noun, b, taxonomy)
    }


def shared_hypernyms(a: str, b: str, taxonomy: TaxonomyStore) -> set[str]:
    """Common ancestors of ``a`` and ``b``; optional stricter metaphor check."""
    return taxonomy.hypernyms(a) & taxonomy.hypernyms(b)
