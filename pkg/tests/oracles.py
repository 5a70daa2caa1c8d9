"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written a different way from the shipped
code (plain loops, list.count, html.parser) so that agreement between the
two is meaningful.
"""

from html.parser import HTMLParser
from math import log
from pathlib import Path


# --- imputation ------------------------------------------------------------


def mode_with_tiebreak(values):
    """Modal value; ties broken by smallest UTF-8 byte sequence."""
    distinct = sorted(set(values), key=lambda v: v.encode("utf-8"))
    best = None
    best_count = -1
    for v in distinct:
        c = values.count(v)
        if c > best_count:
            best, best_count = v, c
    return best


def brute_force_impute(rows):
    """Group-by-and-mode imputation over (speaker, title, affiliation) rows.

    Returns the filled list of (speaker, title, affiliation) tuples,
    leaving a field alone when no group exists for it. The index comes
    from the rows as given (single round).
    """
    titles_for = {}
    affils_for = {}
    for speaker, title, affil in rows:
        if speaker and title and affil:
            titles_for.setdefault((speaker, affil), []).append(title)
            affils_for.setdefault((speaker, title), []).append(affil)
    out = []
    for speaker, title, affil in rows:
        new_title, new_affil = title, affil
        if not title and (speaker, affil) in titles_for:
            new_title = mode_with_tiebreak(titles_for[(speaker, affil)])
        if not affil and (speaker, title) in affils_for:
            new_affil = mode_with_tiebreak(affils_for[(speaker, title)])
        out.append((speaker, new_title, new_affil))
    return out


# --- PMI -------------------------------------------------------------------


def brute_force_pmi(pairs, y, x, variant="paper"):
    """Probability arithmetic straight off the raw pair list."""
    total = len(pairs)
    pair_count = pairs.count((y, x))
    rhs_count = sum(1 for _, r in pairs if r == x)
    lhs_count = sum(1 for l, _ in pairs if l == y)
    if pair_count == 0 or rhs_count == 0 or total == 0:
        return None
    if variant == "paper":
        return log((pair_count / rhs_count) / (rhs_count / total))
    if lhs_count == 0:
        return None
    return log(
        (pair_count / total) / ((rhs_count / total) * (lhs_count / total))
    )


# --- taxonomy closure ------------------------------------------------------


def brute_force_ancestors(edges, node):
    """Transitive parents via repeated expansion of an explicit set."""
    ancestors = set()
    frontier = {node}
    while True:
        grown = set(ancestors)
        for n in frontier | ancestors:
            grown |= set(edges.get(n, ()))
        if grown == ancestors:
            return ancestors
        ancestors = grown


def brute_force_is_hyponym(edges, a, b):
    return a != b and b in brute_force_ancestors(edges, a)


def brute_force_shared_hyponyms(edges, a, b):
    nodes = set(edges)
    for parents in edges.values():
        nodes |= set(parents)
    return {
        n
        for n in nodes
        if brute_force_is_hyponym(edges, n, a) and brute_force_is_hyponym(edges, n, b)
    }


# --- language identification ------------------------------------------------


def read_profile_file(path):
    """Rank table straight from the file, preserving significant spaces."""
    ranks = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            gram = line.rstrip("\n")
            if gram:
                ranks[gram] = len(ranks)
    return ranks


def oracle_text_ranks(text, cap=300):
    """Independent profile builder: explicit word padding and bubble-ish sort."""
    import re

    counts = {}
    for word in re.findall(r"[^\W\d_]+", text.lower(), re.UNICODE):
        padded = " " + word + " "
        for n in (1, 2, 3):
            for i in range(len(padded) - n + 1):
                g = padded[i : i + n]
                if g.strip() == "":
                    continue
                counts[g] = counts.get(g, 0) + 1
    items = list(counts.items())
    items.sort(key=lambda kv: kv[0])
    items.sort(key=lambda kv: kv[1], reverse=True)  # stable: count desc, gram asc
    return {g: i for i, (g, _) in enumerate(items[:cap])}


def oracle_detect(text, profile_dir, cap=300, min_letters=20):
    import re

    letters = sum(len(w) for w in re.findall(r"[^\W\d_]+", text, re.UNICODE))
    if letters < min_letters:
        return "und"
    text_ranks = oracle_text_ranks(text, cap)
    best_code, best_distance = None, None
    for path in sorted(Path(profile_dir).glob("*.profile")):
        ranks = read_profile_file(path)
        d = 0
        for g, r in text_ranks.items():
            d += abs(r - ranks[g]) if g in ranks else cap
        code = path.name[: -len(".profile")]
        if best_distance is None or d < best_distance or (d == best_distance and code < best_code):
            best_code, best_distance = code, d
    return best_code


# --- HTML ------------------------------------------------------------------


class _TextExtractor(HTMLParser):
    def __init__(self):
        super().__init__()
        self.parts = []

    def handle_data(self, data):
        self.parts.append(data)


def html_reference_text(markup):
    """Visible text according to the stdlib HTML tokenizer."""
    parser = _TextExtractor()
    parser.feed(markup)
    parser.close()
    return "".join(parser.parts)
