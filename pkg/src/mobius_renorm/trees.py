"""The rooted-forest bialgebra graded by node count, with toy characters.

Trees and forests are kept in a canonical string encoding: a tree is
``"[" + children + "]"`` with the child encodings sorted, and a forest is
the sorted concatenation of its tree encodings (the empty string is the
empty forest, the unit).  Two isomorphic trees therefore have identical
encodings, the encoding is hashable and totally ordered, and the node count
is simply the number of ``[`` characters.

The comultiplication of a tree sums over admissible cuts: subsets of edges
such that no root-to-node path crosses two cut edges.  Each cut contributes
(pruned forest) (x) (remaining trunk); the empty cut gives 1 (x) t and the
total cut, added as an explicit boundary term, gives t (x) 1.  The pruned
part sits in the left tensor factor, matching the counter-term recursion
which applies the counter-term to sub-objects.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .algebra import LAURENT
from .bialgebra import BialgebraSpec, Character
from .errors import MissingAssignment, ParseError
from .laurent import LaurentSeries, parse_laurent
from .lincomb import LinComb

EMPTY_FOREST = ""
SINGLE_NODE = "[]"


def parse_forest(text: str) -> str:
    """Parse nested brackets into the canonical forest encoding.

    ``""`` is the empty forest, ``"[]"`` the single node, ``"[[]]"`` the
    two-node ladder.  Children are sorted at every level, so the same tree
    written with children in any order parses to one encoding.
    """
    stack = [[]]
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == "[":
            stack.append([])
        elif ch == "]":
            if len(stack) == 1:
                raise ParseError("unbalanced ']'", i)
            kids = stack.pop()
            stack[-1].append("[" + "".join(sorted(kids)) + "]")
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    if len(stack) > 1:
        raise ParseError("unbalanced '['", len(text))
    return "".join(sorted(stack[0]))


def forest_trees(forest: str) -> list:
    """Split a forest encoding into its top-level tree encodings."""
    trees = []
    depth = 0
    start = 0
    for i, ch in enumerate(forest):
        if ch == "[":
            if depth == 0:
                start = i
            depth += 1
        else:
            depth -= 1
            if depth == 0:
                trees.append(forest[start : i + 1])
    return trees


def tree_children(tree: str) -> list:
    return forest_trees(tree[1:-1])


def forest_degree(forest: str) -> int:
    return forest.count("[")


def forest_product(f: str, g: str) -> str:
    """Disjoint union of forests (merge and re-sort the trees)."""
    return "".join(sorted(forest_trees(f) + forest_trees(g)))


def b_plus(forest: str) -> str:
    """Graft a new root over a forest: its trees become the root's children."""
    return "[" + forest + "]"


@lru_cache(maxsize=None)
def trees_of_degree(n: int) -> tuple:
    if n <= 0:
        return ()
    if n == 1:
        return (SINGLE_NODE,)
    return tuple(sorted(b_plus(f) for f in forests_of_degree(n - 1)))


@lru_cache(maxsize=None)
def forests_of_degree(n: int) -> tuple:
    if n == 0:
        return (EMPTY_FOREST,)
    out = set()
    for k in range(1, n + 1):
        for t in trees_of_degree(k):
            for rest in forests_of_degree(n - k):
                out.add(forest_product(t, rest))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def tree_cuts(tree: str) -> tuple:
    """All admissible edge-subset cuts of a tree, root kept.

    Returns (pruned forest, trunk tree) pairs; the empty cut appears as
    ("", tree).  Recursive: each child edge is either severed (pruning the
    whole child subtree) or kept, in which case a cut of the child applies.
    """
    options = []
    for child in tree_children(tree):
        child_opts = [(child, None)]
        child_opts.extend(tree_cuts(child))
        options.append(child_opts)
    out = []
    for combo in itertools.product(*options):
        pruned = [t for pf, _ in combo for t in forest_trees(pf)]
        kept = sorted(trunk for _, trunk in combo if trunk is not None)
        out.append(("".join(sorted(pruned)), "[" + "".join(kept) + "]"))
    return tuple(out)


@lru_cache(maxsize=None)
def tree_coproduct(tree: str) -> LinComb:
    """Sum over admissible cuts plus the total-cut boundary term t (x) 1."""
    lc = LinComb.single((tree, EMPTY_FOREST))
    for pruned, trunk in tree_cuts(tree):
        lc = lc + LinComb.single((pruned, trunk))
    return lc


@lru_cache(maxsize=None)
def forest_coproduct(forest: str) -> LinComb:
    """Multiplicative extension of the tree coproduct to forests."""
    lc = LinComb.single((EMPTY_FOREST, EMPTY_FOREST))
    for tree in forest_trees(forest):
        lc = _pair_product(lc, tree_coproduct(tree))
    return lc


def _pair_product(a: LinComb, b: LinComb) -> LinComb:
    out = LinComb()
    for (l1, r1), c1 in a.items():
        for (l2, r2), c2 in b.items():
            out = out + (c1 * c2) * LinComb.single(
                (forest_product(l1, l2), forest_product(r1, r2))
            )
    return out


@lru_cache(maxsize=None)
def forest_bialgebra(max_degree: int) -> BialgebraSpec:
    """Canonical forests of degree <= max_degree, product = disjoint union,
    coproduct by admissible cuts, graded by node count.

    The functions are total on all forest encodings; ``max_degree`` only
    bounds the basis enumeration used by tests and tables.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")

    def basis_up_to(d):
        keys = []
        for n in range(min(d, max_degree) + 1):
            keys.extend(forests_of_degree(n))
        return keys

    return BialgebraSpec(
        name=f"forests<={max_degree}",
        comult=forest_coproduct,
        counit=lambda f: Fraction(1 if f == EMPTY_FOREST else 0),
        degree=forest_degree,
        is_grouplike=lambda f: f == EMPTY_FOREST,
        basis_up_to=basis_up_to,
        mult=lambda f, g: LinComb.single(forest_product(f, g)),
        unit_key=EMPTY_FOREST,
        plus_complement=lambda f: forest_degree(f) > 0,
    )


def toy_character(assign: dict, max_degree: int) -> Character:
    """Multiplicative extension of a tree assignment to all forests.

    ``assign`` maps canonical tree encodings to LaurentSeries values; the
    empty forest goes to 1.  Trees without an assigned value raise
    MissingAssignment when first needed.
    """
    b = forest_bialgebra(max_degree)

    def rule(forest):
        value = LAURENT.one
        for tree in forest_trees(forest):
            try:
                value = value * assign[tree]
            except KeyError:
                raise MissingAssignment(tree) from None
        return value

    return Character(b, LAURENT, rule, name="phi")


def parse_character_file(text: str) -> dict:
    """Character assignment file: lines ``tree-text : laurent-text``.

    Blank lines and ``#`` comments are skipped.  Left sides must be single
    trees (connected), not general forests.
    """
    assign = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'tree : laurent-series'", lineno)
        left, right = line.split(":", 1)
        forest = parse_forest(left.strip())
        trees = forest_trees(forest)
        if len(trees) != 1:
            raise ParseError("left side must be a single tree", lineno)
        assign[trees[0]] = parse_laurent(right.strip())
    return assign


def load_character_file(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_character_file(fh.read())


def format_forest(forest: str) -> str:
    """Display form: the empty forest prints as the unit ``1``."""
    return forest if forest else "1"
