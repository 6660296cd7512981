"""Boolean functions on n-bit inputs, stored as dense truth tables.

Index convention, fixed across the whole package: an input is an integer
``x`` with ``0 <= x < 2^n`` whose bit ``j`` (least significant is bit 0)
holds the variable ``x_{j+1}``.  The dot product ``w . x`` is the parity
of ``popcount(w & x)``.  Truth tables are indexed by the integer input,
so ``table[x] == f(x)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

MAX_N = 24  # 2^24-entry tables (16 MiB) keep every transform sub-second


class BooleanFunction:
    """Immutable truth table of an n-variable Boolean function."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table: np.ndarray):
        self.n = n
        self.table = table

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        if self.n <= 4:
            bits = "".join(str(b) for b in self.table)
            return f"BooleanFunction(n={self.n}, table={bits!r})"
        return f"BooleanFunction(n={self.n}, weight={hamming_weight(self)})"


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _coerce_table(table, size: int) -> np.ndarray:
    if isinstance(table, str):
        if not set(table) <= {"0", "1"}:
            raise ValueError("truth table string may contain only '0' and '1'")
        values = np.frombuffer(table.encode(), dtype=np.uint8) - ord("0")
    else:
        values = np.asarray(list(table) if isinstance(table, Iterable) else table)
    values = np.asarray(values)
    if values.size != size:
        raise ValueError(
            f"truth table has {values.size} entries, expected {size}"
        )
    if not np.isin(values, (0, 1)).all():
        raise ValueError("truth table entries must be 0 or 1")
    return values.astype(np.uint8)


def make_function(n: int, table) -> BooleanFunction:
    """Build a function from its truth table (length exactly 2^n)."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    return BooleanFunction(n, _freeze(_coerce_table(table, 1 << n)))


def make_delta(n: int, x0: int) -> BooleanFunction:
    """The function that is 1 exactly at the point x0."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    if not 0 <= x0 < (1 << n):
        raise ValueError(f"x0 must be in 0..{(1 << n) - 1}, got {x0}")
    table = np.zeros(1 << n, dtype=np.uint8)
    table[x0] = 1
    return BooleanFunction(n, _freeze(table))


def make_inner_product(n: int) -> BooleanFunction:
    """Inner product of the low n/2 input bits with the high n/2 bits.

    f(x_1..x_{n/2}, y_1..y_{n/2}) = sum_i x_i y_i mod 2, where the first
    n/2 index bits hold x and the next n/2 hold y.  Requires n even.
    """
    if n % 2 != 0:
        raise ValueError(f"inner product needs an even number of variables, got {n}")
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in 2..{MAX_N}, got {n}")
    half = n // 2
    idx = np.arange(1 << n, dtype=np.uint32)
    lo = idx & ((1 << half) - 1)
    hi = idx >> half
    table = (np.bitwise_count(lo & hi) & 1).astype(np.uint8)
    return BooleanFunction(n, _freeze(table))


def shift(f: BooleanFunction, s: int) -> BooleanFunction:
    """The shifted function f_s with f_s(x) = f(x XOR s)."""
    if not 0 <= s < (1 << f.n):
        raise ValueError(f"shift must be in 0..{(1 << f.n) - 1}, got {s}")
    table = f.table[np.arange(1 << f.n) ^ s]
    return BooleanFunction(f.n, _freeze(np.ascontiguousarray(table)))


def hamming_weight(f: BooleanFunction) -> int:
    """Number of inputs on which f evaluates to 1."""
    return int(f.table.sum())


def signs(f: BooleanFunction) -> np.ndarray:
    """The phase table (-1)^{f(x)} as an int64 array."""
    return 1 - 2 * f.table.astype(np.int64)


def dot2(w: int, x: int) -> int:
    """Dot product over Z_2: parity of popcount(w & x)."""
    return (w & x).bit_count() & 1


# ---------------------------------------------------------------------------
# Seeded randomness.
#
# The package PRNG is Philox4x64 (counter-based, platform independent),
# keyed by the pair (seed, stream).  Distinct keys give statistically
# independent substreams, so Monte Carlo sample i can draw from stream i
# and the aggregate is invariant under any scheduling of the samples.
# Bits are taken with Generator.integers(0, 2).
# ---------------------------------------------------------------------------


def substream(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator over Philox4x64 keyed by (seed, stream)."""
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    if not 0 <= stream < 2**64:
        raise ValueError(f"stream must be a 64-bit unsigned integer, got {stream}")
    key = np.array([seed, stream], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def random_function(n: int, seed: int, stream: int = 0) -> BooleanFunction:
    """Uniformly random function: each table bit an independent fair coin.

    Identical (n, seed, stream) always produces the identical function.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    rng = substream(seed, stream)
    table = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
    return BooleanFunction(n, _freeze(table))


# ---------------------------------------------------------------------------
# Truth-table text format: a header line "n=<k>" followed by one line of
# 2^k characters '0'/'1' ordered by integer index.
# ---------------------------------------------------------------------------


def format_function(f: BooleanFunction) -> str:
    bits = "".join(str(b) for b in f.table)
    return f"n={f.n}\n{bits}\n"


def parse_function(text: str) -> BooleanFunction:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 2:
        raise ValueError("truth-table text must be a header line and a bits line")
    header = lines[0]
    if not header.startswith("n="):
        raise ValueError(f"expected header 'n=<k>', got {header!r}")
    try:
        n = int(header[2:])
    except ValueError:
        raise ValueError(f"expected header 'n=<k>', got {header!r}") from None
    return make_function(n, lines[1])


def _parse_positive_int(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None
    return value


def parse_function_spec(spec: str) -> BooleanFunction:
    """Resolve the CLI function mini-language to a BooleanFunction.

    Forms: ``@file.tt``, ``delta:<n>:<x0>``, ``ip:<n>``,
    ``random:<n>:<seed>``, ``tree:<file>``.
    """
    if spec.startswith("@"):
        with open(spec[1:], encoding="utf-8") as fh:
            return parse_function(fh.read())
    head, _, rest = spec.partition(":")
    if head == "delta":
        n_text, _, x0_text = rest.partition(":")
        n = _parse_positive_int(n_text, "delta n")
        x0 = _parse_positive_int(x0_text, "delta x0")
        return make_delta(n, x0)
    if head == "ip":
        return make_inner_product(_parse_positive_int(rest, "ip n"))
    if head == "random":
        n_text, _, seed_text = rest.partition(":")
        n = _parse_positive_int(n_text, "random n")
        seed = _parse_positive_int(seed_text, "random seed")
        return random_function(n, seed)
    if head == "tree":
        from . import dtree

        return dtree.tree_to_function(dtree.read_tree_file(rest))
    raise ValueError(
        f"unrecognized function spec {spec!r}; expected @file.tt, delta:<n>:<x0>, "
        "ip:<n>, random:<n>:<seed>, or tree:<file>"
    )
