"""Decision trees over Boolean variables: a small s-expression format,
evaluation to truth tables, and the height-driven spectral sparsity bound.

Grammar (whitespace-insensitive)::

    tree := '0' | '1' | '(' 'x'<int> tree tree ')'

The first subtree is taken when the tested variable is 0, the second when
it is 1.  No variable may repeat on a root-to-leaf path.  A function given
by a tree of height h has Fhat(w) = 0 for every w of Hamming weight
above h, so at most sum_{k<=h} C(n,k) of the 2^n coefficients are nonzero.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import numpy as np

from .boolfn import BooleanFunction, make_function


@dataclass(frozen=True)
class Leaf:
    value: int


@dataclass(frozen=True)
class Branch:
    var: int  # 1-based variable index; input bit var-1
    low: "Leaf | Branch"
    high: "Leaf | Branch"


@dataclass(frozen=True)
class DecisionTree:
    n: int
    root: Leaf | Branch


_TOKEN = re.compile(r"\(|\)|x\d+|0|1|\S")


def parse_tree(text: str, n: int) -> DecisionTree:
    """Parse the s-expression grammar; errors carry character positions."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    tokens = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
    pos = 0

    def fail(message: str, at: int):
        raise ValueError(f"syntax error at position {at}: {message}")

    def next_token():
        nonlocal pos
        if pos >= len(tokens):
            fail("unexpected end of input", len(text))
        tok = tokens[pos]
        pos += 1
        return tok

    def node(path: frozenset) -> Leaf | Branch:
        tok, at = next_token()
        if tok == "0":
            return Leaf(0)
        if tok == "1":
            return Leaf(1)
        if tok != "(":
            fail(f"expected '(', '0' or '1', got {tok!r}", at)
        tok, at = next_token()
        if not tok.startswith("x"):
            fail(f"expected variable 'x<int>', got {tok!r}", at)
        var = int(tok[1:])
        if not 1 <= var <= n:
            raise ValueError(
                f"variable x{var} at position {at} outside declared range 1..{n}"
            )
        if var in path:
            raise ValueError(f"repeated variable x{var} on path (position {at})")
        sub = path | {var}
        low = node(sub)
        high = node(sub)
        tok, at = next_token()
        if tok != ")":
            fail(f"expected ')', got {tok!r}", at)
        return Branch(var, low, high)

    root = node(frozenset())
    if pos != len(tokens):
        fail(f"trailing input {tokens[pos][0]!r}", tokens[pos][1])
    return DecisionTree(n, root)


def format_tree(tree: DecisionTree) -> str:
    def render(node) -> str:
        if isinstance(node, Leaf):
            return str(node.value)
        return f"(x{node.var} {render(node.low)} {render(node.high)})"

    return render(tree.root)


def read_tree_file(path) -> DecisionTree:
    """Load a ``.tree`` file; an optional first line ``n=<k>`` declares the
    variable count, otherwise the largest variable index used is taken.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_tree_text(text)


def parse_tree_text(text: str) -> DecisionTree:
    lines = text.splitlines()
    n = None
    body = text
    for i, line in enumerate(lines):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("n="):
            n = int(stripped[2:])
            body = "\n".join(lines[i + 1 :])
        break
    if n is None:
        vars_used = [int(m[1:]) for m in re.findall(r"x\d+", body)]
        if not vars_used:
            n = 1  # constant tree; one dummy variable
        else:
            n = max(vars_used)
    return parse_tree(body, n)


def tree_height(tree: DecisionTree) -> int:
    def height(node) -> int:
        if isinstance(node, Leaf):
            return 0
        return 1 + max(height(node.low), height(node.high))

    return height(tree.root)


def tree_to_function(tree: DecisionTree) -> BooleanFunction:
    """Evaluate the tree on all 2^n inputs."""
    size = 1 << tree.n
    table = np.zeros(size, dtype=np.uint8)
    stack = [(tree.root, np.arange(size))]
    while stack:
        node, idx = stack.pop()
        if isinstance(node, Leaf):
            table[idx] = node.value
        else:
            bit = (idx >> (node.var - 1)) & 1
            stack.append((node.low, idx[bit == 0]))
            stack.append((node.high, idx[bit == 1]))
    return make_function(tree.n, table)


def dnf_terms(tree: DecisionTree) -> list[dict[int, int]]:
    """One term per root-to-leaf path ending in 1, as {variable: value}.

    The disjunction of these terms computes the tree's function, and on
    any input at most one term is satisfied (paths of a tree are
    mutually exclusive).
    """
    terms = []

    def walk(node, constraints: dict[int, int]):
        if isinstance(node, Leaf):
            if node.value == 1:
                terms.append(dict(constraints))
            return
        walk(node.low, {**constraints, node.var: 0})
        walk(node.high, {**constraints, node.var: 1})

    walk(tree.root, {})
    return terms


def dnf_fire_counts(tree: DecisionTree) -> np.ndarray:
    """Number of DNF terms satisfied by each input (0 or 1 everywhere)."""
    size = 1 << tree.n
    counts = np.zeros(size, dtype=np.int64)
    idx = np.arange(size)
    for term in dnf_terms(tree):
        hit = np.ones(size, dtype=bool)
        for var, val in term.items():
            hit &= ((idx >> (var - 1)) & 1) == val
        counts += hit
    return counts


def function_from_dnf(tree: DecisionTree) -> BooleanFunction:
    """Evaluate via the disjunctive normal form (independent route)."""
    return make_function(tree.n, (dnf_fire_counts(tree) > 0).astype(np.uint8))


def sparsity_bound(n: int, h: int) -> tuple[Fraction, float]:
    """Nonzero-coefficient budget of a height-h tree on n variables.

    Returns (exact_fraction, entropy_bound): the exact value
    sum_{k<=h} C(n,k) / 2^n and the binary-entropy relaxation
    (2^{-n})^{1 - H(h/n)}.  The relaxation upper-bounds the exact value
    for 0 < h <= n/2.
    """
    if not 0 <= h <= n:
        raise ValueError(f"need 0 <= h <= n, got h={h}, n={n}")
    exact = Fraction(sum(math.comb(n, k) for k in range(h + 1)), 1 << n)
    ratio = h / n
    if ratio in (0.0, 1.0):
        entropy = 0.0
    else:
        entropy = -ratio * math.log2(ratio) - (1 - ratio) * math.log2(1 - ratio)
    bound = (0.5**n) ** (1.0 - entropy)
    return exact, bound


def example_tree() -> DecisionTree:
    """The packaged 10-variable height-5 example (data/f10.tree)."""
    text = resources.files("boolshift").joinpath("data/f10.tree").read_text()
    return parse_tree_text(text)
