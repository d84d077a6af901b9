"""Integer partitions and their Young-diagram statistics.

A partition is represented throughout as a tuple of weakly decreasing
positive integers, e.g. ``(7, 5, 4, 3, 2)``; the empty partition is ``()``.
The norm is the sum of the parts, and the diagram of a partition has the
parts as rows of unit cells.  In the t-residue diagram the cell in row i,
column j carries the colour (j - i) mod t.

All values are immutable and every function is pure, so the module is safe
to call from concurrent workers.  The text format used by the CLI and all
JSON output is a bracketed part list: ``[7,5,4,3,2]``, with ``[]`` for the
empty partition.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "check_partition",
    "norm",
    "conjugate",
    "durfee",
    "residue_counts",
    "bg_rank",
    "partitions_of",
    "parse_partition",
    "format_partition",
]


def check_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate ``parts`` and return it as a canonical tuple.

    Raises ValueError unless the parts are positive integers in weakly
    decreasing order.
    """
    p = tuple(parts)
    for a in p:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise ValueError(f"parts must be positive integers, got {a!r}")
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


def norm(parts: tuple[int, ...]) -> int:
    """Sum of the parts."""
    return sum(parts)


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Reflect the diagram about its main diagonal.

    The i-th part of the conjugate counts the rows of length >= i.
    """
    if not parts:
        return ()
    width = parts[0]
    count_by_size = [0] * (width + 1)
    for lam in parts:
        count_by_size[lam] += 1
    out = []
    running = 0
    for size in range(width, 0, -1):
        running += count_by_size[size]
        out.append(running)
    out.reverse()
    return tuple(out)


def durfee(parts: tuple[int, ...]) -> int:
    """Side of the largest square fitting inside the diagram."""
    d = 0
    for j, lam in enumerate(parts, start=1):
        if lam >= j:
            d = j
        else:
            break
    return d


def residue_counts(parts: tuple[int, ...], t: int) -> tuple[int, ...]:
    """Count diagram cells by colour in the t-residue diagram.

    Returns (r_0, ..., r_{t-1}) where r_i counts cells (row, col) with
    col - row = i (mod t).  The counts always sum to the norm.
    """
    if t < 2:
        raise ValueError(f"modulus t must be >= 2, got {t}")
    r = [0] * t
    full = 0
    for row, lam in enumerate(parts, start=1):
        full += lam // t
        start = (1 - row) % t
        for k in range(lam % t):
            r[(start + k) % t] += 1
    if full:
        r = [c + full for c in r]
    return tuple(r)


def bg_rank(parts: tuple[int, ...]) -> int:
    """Alternating count of odd parts: rows with odd length add +1 when
    they sit at an odd (1-based) index and -1 at an even index.

    Equals the difference of the two colour counts in the 2-residue
    diagram, and is congruent to the norm mod 2.
    """
    bg = 0
    for j, lam in enumerate(parts):
        if lam & 1:
            bg += 1 if (j & 1) == 0 else -1
    return bg


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every partition of n exactly once, lexicographically decreasing.

    The first partition is (n,) and the last is (1,)*n.  This order is the
    canonical one used in golden files.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        # Decrement the rightmost part exceeding 1, then refill greedily.
        i = len(a) - 1
        ones = 0
        while i >= 0 and a[i] == 1:
            ones += 1
            i -= 1
        if i < 0:
            return
        a[i] -= 1
        rem = ones + 1
        del a[i + 1 :]
        cap = a[i]
        while rem:
            part = min(cap, rem)
            a.append(part)
            rem -= part


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse the bracketed text form, e.g. ``[7,5,4,3,2]`` or ``[]``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition text must be bracketed, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition text {text!r}") from None
    return check_partition(parts)


def format_partition(parts: tuple[int, ...]) -> str:
    """Inverse of parse_partition."""
    return "[" + ",".join(str(a) for a in parts) + "]"
