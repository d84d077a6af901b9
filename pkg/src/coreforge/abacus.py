"""Abacus encoding of partitions: cores, quotients and their bijections.

A partition with parts lam_1 >= ... >= lam_nu is encoded by its beta-set of
offsets {lam_j - j : 1 <= j <= nu} together with the implicit tail
{-j : j > nu}.  Offsets (bead positions) split into t runners by residue
mod t; position p sits on runner p mod t in slot s = (p - i) // t, which is
region r = s + 1 of the extended t-residue diagram.  A removable rim hook
of length t is exactly a bead whose slot one step down the runner is free,
so core extraction and the core/quotient decomposition reduce to runner
arithmetic:

* the charge of runner i (beads at slot >= 0 minus gaps at slot < 0) is the
  coordinate n_i, equal to the residue-count difference r_i - r_{i+1} taken
  cyclically;
* the t-core pushes every runner down to the vacuum {s <= n_i - 1};
* the i-th quotient part lam_j is read from the j-th gap region g_j
  (ascending) as n_i + j - g_j.

The quotient convention is pinned by the round trip
(7,5,4,3,2) <-> core (4,2) with quotient ((2),(1,1),(1)) at t = 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Callable, Iterator

from .partitions import bg_rank, check_partition, conjugate, residue_counts

__all__ = [
    "BetaSet",
    "Decomposition",
    "ParityClass",
    "beta_set",
    "runner_charges",
    "residue_vector",
    "is_t_core",
    "t_core_of",
    "norm_form",
    "phi2",
    "phi2_inv",
    "phi1",
    "phi1_inv",
    "bg_of_nvector",
    "bg_even_t",
    "bg_decompose_check",
    "b_vector",
    "b_tilde_vector",
    "parity_class_of",
    "core_vectors",
    "core_norm_counts",
    "bg_class_counts",
    "parity_class_counts",
    "core_partitions",
    "parse_nvector",
    "format_nvector",
]


@dataclass(frozen=True)
class BetaSet:
    """Finite encoding of the bead positions of a partition.

    ``offsets`` holds {lam_j - j : 1 <= j <= nu}; every position p <= -nu-1
    is an implicit bead.  The two regions never overlap.
    """

    offsets: frozenset[int]
    nu: int

    def contains(self, p: int) -> bool:
        return p in self.offsets or p <= -self.nu - 1

    def exposed(self, residue: int, region: int, t: int) -> bool:
        """True iff a cell of the given residue is exposed in the region,
        i.e. the unique position congruent to residue in the region window
        [t(region-1), t*region) is a bead."""
        if not 0 <= residue < t:
            raise ValueError("residue out of range")
        return self.contains(residue + t * (region - 1))


def beta_set(parts: tuple[int, ...]) -> BetaSet:
    nu = len(parts)
    return BetaSet(frozenset(parts[j] - (j + 1) for j in range(nu)), nu)


def _decode(beads: list[int], lo: int) -> tuple[int, ...]:
    """Partition from explicit beads >= lo plus implicit beads below lo."""
    parts = []
    j = 0
    for b in sorted(beads, reverse=True):
        j += 1
        lam = b + j
        if lam < 0:
            raise ValueError("bead set does not have charge zero")
        if lam > 0:
            parts.append(lam)
    tail_top = lo + j
    if tail_top > 0:
        parts.extend(range(tail_top, 0, -1))
    return tuple(parts)


def _runner_slots(parts: tuple[int, ...], t: int):
    """Per-runner explicit bead slots and the implicit floor.

    Returns a list of (slots, floor): slots are the beta offsets congruent
    to i mod t converted to slot numbers, floor is the largest slot F with
    every slot <= F an implicit bead.
    """
    nu = len(parts)
    data = []
    for i in range(t):
        data.append(([], (-nu - 1 - i) // t))
    for j in range(nu):
        b = parts[j] - (j + 1)
        i = b % t
        data[i][0].append((b - i) // t)
    return data


def runner_charges(parts: tuple[int, ...], t: int) -> tuple[int, ...]:
    """Charge of each runner: beads at slot >= 0 minus gaps at slot < 0."""
    if t < 2:
        raise ValueError(f"modulus t must be >= 2, got {t}")
    charges = []
    for slots, floor in _runner_slots(parts, t):
        pos = sum(1 for s in slots if s >= 0)
        neg_beads = sum(1 for s in slots if floor < s < 0)
        gaps = (-1 - floor) - neg_beads
        charges.append(pos - gaps)
    return tuple(charges)


def residue_vector(parts: tuple[int, ...], t: int) -> tuple[int, ...]:
    """Cyclic differences of the residue counts, n_i = r_i - r_{i+1}.

    Defined for every partition; it depends only on the t-core and agrees
    with the runner charges.
    """
    r = residue_counts(parts, t)
    return tuple(r[i] - r[(i + 1) % t] for i in range(t))


def is_t_core(parts: tuple[int, ...], t: int) -> bool:
    """True iff the diagram has no removable rim hook of length t,
    i.e. no bead has a free slot one runner step below it."""
    if t < 2:
        raise ValueError(f"modulus t must be >= 2, got {t}")
    bs = beta_set(parts)
    return all(bs.contains(b - t) for b in bs.offsets)


def t_core_of(parts: tuple[int, ...], t: int) -> tuple[int, ...]:
    """The unique t-core left after stripping all rim hooks of length t.

    Computed by pushing every runner to its vacuum; this makes the
    independence from the removal order manifest.
    """
    return phi2_inv(runner_charges(parts, t))


def norm_form(nvec: tuple[int, ...]) -> int:
    """Quadratic norm (t/2) n.n + (0,1,...,t-1).n of a coordinate vector."""
    t = len(nvec)
    twice = t * sum(x * x for x in nvec) + 2 * sum(i * x for i, x in enumerate(nvec))
    if twice % 2:
        raise ValueError("coordinate vector with odd quadratic form")
    return twice // 2


def phi2(core: tuple[int, ...], t: int) -> tuple[int, ...]:
    """Coordinate vector of a t-core (residue-count differences).

    Raises ValueError if the input is not a t-core.
    """
    if not is_t_core(core, t):
        raise ValueError(f"{core} is not a {t}-core")
    n = residue_vector(core, t)
    assert sum(n) == 0
    return n


def phi2_inv(nvec: tuple[int, ...]) -> tuple[int, ...]:
    """The unique t-core whose runner charges are the given coordinates.

    The length of the vector is t; the coordinates must sum to zero.
    """
    t = len(nvec)
    if t < 2:
        raise ValueError("coordinate vector must have length >= 2")
    if sum(nvec) != 0:
        raise ValueError(f"coordinates must sum to 0, got {nvec}")
    floor = min(nvec) - 2
    lo = t * floor
    beads = []
    for i, n in enumerate(nvec):
        beads.extend(i + t * s for s in range(floor, n))
    core = _decode(beads, lo)
    assert sum(core) == norm_form(nvec)
    return core


@dataclass(frozen=True)
class Decomposition:
    """Core and t-quotient of a partition; the norm of the original
    partition is |core| + t * sum of quotient norms."""

    core: tuple[int, ...]
    quotient: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.quotient)


def phi1(parts: tuple[int, ...], t: int) -> Decomposition:
    """Split a partition into its t-core and t-quotient."""
    if t < 2:
        raise ValueError(f"modulus t must be >= 2, got {t}")
    data = _runner_slots(parts, t)
    charges = []
    quotient = []
    for slots, floor in data:
        pos = sum(1 for s in slots if s >= 0)
        neg_beads = sum(1 for s in slots if floor < s < 0)
        charge = pos - ((-1 - floor) - neg_beads)
        charges.append(charge)
        bead = set(slots)
        smax = max(bead) if bead else floor
        qparts = []
        j = 0
        s = floor + 1
        while True:
            if s > smax or s not in bead:
                j += 1
                lam = charge + j - (s + 1)
                assert lam >= 0
                if lam == 0:
                    break
                qparts.append(lam)
            s += 1
        quotient.append(tuple(qparts))
    core = phi2_inv(tuple(charges))
    dec = Decomposition(core, tuple(quotient))
    assert sum(parts) == sum(core) + t * sum(sum(q) for q in quotient)
    return dec


def phi1_inv(dec: Decomposition) -> tuple[int, ...]:
    """Partition with the given t-core and t-quotient."""
    t = dec.t
    if t < 2:
        raise ValueError("quotient must have length >= 2")
    nvec = phi2(dec.core, t)
    gap_sets = []
    tops = []
    floors = []
    for n, qparts in zip(nvec, dec.quotient):
        check_partition(qparts)
        m = len(qparts)
        gaps = {n + j - qparts[j - 1] for j in range(1, m + 1)}
        if len(gaps) != m:
            raise ValueError(f"malformed quotient component {qparts}")
        gap_sets.append(gaps)
        tops.append(n + m)
        floors.append(min(gaps) if gaps else n + 1)
    r_floor = min(floors) - 1
    lo = t * (r_floor - 1)
    beads = []
    for i in range(t):
        gaps = gap_sets[i]
        beads.extend(
            i + t * (r - 1) for r in range(r_floor, tops[i] + 1) if r not in gaps
        )
    return _decode(beads, lo)


def bg_of_nvector(nvec: tuple[int, ...]) -> int:
    """BG-rank of the t-core with these coordinates, for odd t:
    (1 - sum_j (-1)^(j + n_j)) / 4."""
    t = len(nvec)
    if t % 2 == 0:
        raise ValueError("defined for odd t only")
    if sum(nvec) != 0:
        raise ValueError("coordinates must sum to 0")
    s = sum(-1 if (j + n) & 1 else 1 for j, n in enumerate(nvec))
    assert (1 - s) % 4 == 0
    return (1 - s) // 4


def bg_even_t(parts: tuple[int, ...], t: int) -> int:
    """BG-rank read off the even-indexed coordinates for even t."""
    if t % 2:
        raise ValueError("defined for even t only")
    n = residue_vector(parts, t)
    return sum(n[2 * i] for i in range(t // 2))


def bg_decompose_check(parts: tuple[int, ...], t: int) -> bool:
    """Check the decomposition law for odd t: the BG-rank of a partition
    is the BG-rank of its core plus the signed BG-ranks of the quotient,
    the j-th sign being (-1)^(j + n_j)."""
    if t % 2 == 0 or t < 3:
        raise ValueError("defined for odd t >= 3 only")
    dec = phi1(parts, t)
    n = phi2(dec.core, t)
    rhs = bg_rank(dec.core)
    for j in range(t):
        sign = -1 if (j + n[j]) & 1 else 1
        rhs += sign * bg_rank(dec.quotient[j])
    return bg_rank(parts) == rhs


def b_vector(t: int) -> tuple[int, ...]:
    """Base parity vector for odd t: unit ones at even indices when
    t = 1 (mod 4), at odd indices when t = 3 (mod 4)."""
    if t % 2 == 0 or t < 3:
        raise ValueError("defined for odd t >= 3 only")
    start = 0 if t % 4 == 1 else 1
    return tuple(1 if i % 2 == start % 2 else 0 for i in range(t))


def b_tilde_vector(t: int) -> tuple[int, ...]:
    """Complementary parity vector: the base vector plus the all-ones
    vector mod 2."""
    return tuple(1 - v for v in b_vector(t))


@dataclass(frozen=True)
class ParityClass:
    """Mod-2 class of a coordinate vector: the base vector plus 2k+1 unit
    vectors.  ``tilde`` marks the extreme class where all t coordinates
    are flipped."""

    k: int
    bg: int
    tilde: bool


def parity_class_of(nvec: tuple[int, ...]) -> ParityClass:
    """Classify a zero-sum vector by its parities, for odd t.

    The number of coordinate parities differing from the base vector is
    odd, say 2k+1, and the class determines the BG-rank as
    (-1)^((t-1)/2) * (floor(t/4) - k).
    """
    t = len(nvec)
    if t % 2 == 0:
        raise ValueError("defined for odd t only")
    if sum(nvec) != 0:
        raise ValueError("coordinates must sum to 0")
    base = b_vector(t)
    flips = sum(1 for v, b in zip(nvec, base) if (v - b) & 1)
    assert flips % 2 == 1
    k = (flips - 1) // 2
    sign = -1 if ((t - 1) // 2) & 1 else 1
    return ParityClass(k=k, bg=sign * (t // 4 - k), tilde=(flips == t))


# ---------------------------------------------------------------------------
# Lattice enumeration of core coordinate vectors.
#
# Substituting M_i = t*n_i + i turns the norm into (sum M_i^2 - C) / (2t)
# with C = 0^2 + ... + (t-1)^2, subject to sum M_i = t*total + t(t-1)/2 and
# M_i = i (mod t).  Enumerating M coordinate by coordinate with the budget
# sum M_i^2 <= 2t*bound + C - 1 is complete: every admissible coordinate
# satisfies M_i^2 <= budget, and a partial choice is viable only if the
# remaining sum S over k slots satisfies S^2 <= k * (remaining budget)
# (Cauchy-Schwarz).  For odd t, the parity of M_i equals the parity of
# n_i + i, so fixing parities per coordinate (classes mod 2t) restricts the
# search to one mod-2 class of vectors; the BG-rank is constant on each
# such class, namely (1 - #even(M) + #odd(M)) / 4.
# ---------------------------------------------------------------------------


def _class_values(residue: int, modulus: int, budget: int) -> list[int]:
    """Values v = residue (mod modulus) with v*v <= budget, by |v|."""
    vmax = isqrt(budget)
    r = residue % modulus
    vals = list(range(r, vmax + 1, modulus))
    vals += list(range(r - modulus, -vmax - 1, -modulus))
    vals.sort(key=abs)
    return vals


def _search(
    classes: list[tuple[int, int]],
    target: int,
    budget: int,
    emit: Callable[[int, list[int]], None],
) -> None:
    """Emit (square_sum, values) for every lattice point of the product of
    congruence classes with the given coordinate sum and square budget."""
    t = len(classes)
    value_lists = [_class_values(r, m, budget) for r, m in classes]

    def rec(level: int, acc_sum: int, acc_sq: int, chosen: list[int]) -> None:
        k = t - level
        need = target - acc_sum
        room = budget - acc_sq
        if k == 1:
            r, m = classes[level]
            if (need - r) % m == 0 and need * need <= room:
                chosen.append(need)
                emit(acc_sq + need * need, chosen)
                chosen.pop()
            return
        if need * need > k * room:
            return
        for v in value_lists[level]:
            v2 = v * v
            if v2 > room:
                break
            rest = need - v
            if rest * rest > (k - 1) * (room - v2):
                continue
            chosen.append(v)
            rec(level + 1, acc_sum + v, acc_sq + v2, chosen)
            chosen.pop()

    rec(0, 0, 0, [])


def _sq_const(t: int) -> int:
    return (t - 1) * t * (2 * t - 1) // 6


def core_vectors(
    t: int, bound: int, *, total: int = 0
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """All vectors with coordinate sum ``total`` and quadratic norm < bound,
    as (norm, vector) pairs.  With total = 0 these are exactly the t-cores
    of norm < bound."""
    if t < 2:
        raise ValueError(f"modulus t must be >= 2, got {t}")
    c = _sq_const(t)
    target = t * total + t * (t - 1) // 2
    budget = 2 * t * bound + c - 1
    if budget < 0:
        return
    out: list[tuple[int, tuple[int, ...]]] = []

    def emit(sq: int, m: list[int]) -> None:
        out.append(((sq - c) // (2 * t), tuple((v - i) // t for i, v in enumerate(m))))

    _search([(i, t) for i in range(t)], target, budget, emit)
    yield from out


def core_norm_counts(t: int, bound: int) -> list[int]:
    """Number of t-cores of each norm below ``bound``."""
    c = _sq_const(t)
    counts = [0] * bound
    budget = 2 * t * bound + c - 1

    def emit(sq: int, _m: list[int]) -> None:
        counts[(sq - c) // (2 * t)] += 1

    if bound > 0:
        _search([(i, t) for i in range(t)], t * (t - 1) // 2, budget, emit)
    return counts


def _parity_classes(t: int, pattern: tuple[int, ...]) -> list[tuple[int, int]]:
    """Congruence classes mod 2t for coordinates n = pattern (mod 2)."""
    classes = []
    for i, p in enumerate(pattern):
        want = (p + i) & 1  # parity of M_i = t*n_i + i for odd t
        classes.append((i if i % 2 == want else i + t, 2 * t))
    return classes


def parity_class_counts(t: int, pattern: tuple[int, ...], bound: int) -> list[int]:
    """Number per norm < bound of zero-sum vectors congruent to ``pattern``
    mod 2, for odd t."""
    if t % 2 == 0:
        raise ValueError("defined for odd t only")
    if sum(pattern) % 2:
        raise ValueError("pattern incompatible with zero coordinate sum")
    c = _sq_const(t)
    counts = [0] * bound
    budget = 2 * t * bound + c - 1

    def emit(sq: int, _m: list[int]) -> None:
        counts[(sq - c) // (2 * t)] += 1

    if bound > 0:
        _search(_parity_classes(t, pattern), t * (t - 1) // 2, budget, emit)
    return counts


def bg_class_counts(t: int, j: int, bound: int) -> list[int]:
    """Number of t-cores of each norm < bound with BG-rank j, for odd t.

    The parities of the scaled coordinates M_i determine the BG-rank, so
    the class splits into mod-2 patterns enumerated separately; each point
    of a pattern automatically has the requested rank.
    """
    if t % 2 == 0:
        raise ValueError("defined for odd t only")
    counts = [0] * bound
    if bound <= 0:
        return counts
    for mask in range(1 << t):
        pattern = tuple((mask >> i) & 1 for i in range(t))
        if sum(pattern) % 2:
            continue
        odd = sum((p + i) & 1 for i, p in enumerate(pattern))
        if (1 - (t - 2 * odd)) % 4:
            continue
        if (1 - (t - 2 * odd)) // 4 != j:
            continue
        for n, extra in enumerate(parity_class_counts(t, pattern, bound)):
            counts[n] += extra
    return counts


def core_partitions(t: int, max_norm: int) -> list[tuple[int, tuple[int, ...]]]:
    """All t-cores of norm <= max_norm as (norm, partition), sorted."""
    cores = [(n, phi2_inv(v)) for n, v in core_vectors(t, max_norm + 1)]
    cores.sort()
    return cores


def parse_nvector(text: str) -> tuple[int, ...]:
    """Parse the text form ``t:[n0,...,n_{t-1}]``."""
    head, _, body = text.partition(":")
    try:
        t = int(head)
    except ValueError:
        raise ValueError(f"malformed coordinate vector {text!r}") from None
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"malformed coordinate vector {text!r}")
    coords = tuple(int(tok) for tok in body[1:-1].split(","))
    if len(coords) != t:
        raise ValueError(f"expected {t} coordinates in {text!r}")
    return coords


def format_nvector(nvec: tuple[int, ...]) -> str:
    return f"{len(nvec)}:[" + ",".join(str(x) for x in nvec) + "]"
