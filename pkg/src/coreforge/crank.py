"""The 5-core crank, the alpha coordinate system, the orbit operator and
the congruence machinery for partitions of 5n+4.

Partitions of norm 4 mod 5 are parametrized by an integer alpha vector
with coordinate sum 1 (a linear change of variables on the 5-core
coordinates) together with the 5-quotient.  Cyclically shifting alpha and
permuting the quotient defines an operator of order five that preserves
the norm and the BG-rank while stepping the crank residue by one, so the
partitions of 5n+4 with a fixed BG-rank fall into orbits of size five with
all crank residues represented once.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import abacus
from .partitions import bg_rank, partitions_of, residue_counts

__all__ = [
    "PhiImage",
    "crank5",
    "alpha_of",
    "alpha_inv",
    "q_form",
    "crank_from_alpha",
    "phi_map",
    "phi_map_inv",
    "bg_from_phi",
    "orbit_op",
    "orbit",
    "lift_5core",
    "count_pj",
    "verify_theorem",
    "TheoremReport",
]


@dataclass(frozen=True)
class PhiImage:
    """Alpha coordinates of the 5-core together with the 5-quotient."""

    alpha: tuple[int, int, int, int, int]
    quotient: tuple[tuple[int, ...], ...]


def crank5(parts: tuple[int, ...]) -> int:
    """The 5-core crank residue: 2(r0 - r4) + (r1 - r3) + 1 mod 5, with
    r_i the colour counts of the 5-residue diagram."""
    r = residue_counts(parts, 5) if parts else (0, 0, 0, 0, 0)
    return (2 * (r[0] - r[4]) + (r[1] - r[3]) + 1) % 5


def _check_mod5(nvec: tuple[int, ...]) -> None:
    if len(nvec) != 5 or sum(nvec) != 0:
        raise ValueError("expected a zero-sum vector of length 5")
    if (nvec[1] + 2 * nvec[2] + 3 * nvec[3] + 4 * nvec[4]) % 5 != 4:
        raise ValueError(f"core norm of {nvec} is not 4 mod 5")


def alpha_of(nvec: tuple[int, ...]) -> tuple[int, ...]:
    """Alpha coordinates of a 5-core coordinate vector whose norm is
    4 mod 5.  The five divisions by 5 are exact precisely then."""
    _check_mod5(nvec)
    n0, n1, n2, n3, _ = nvec
    nums = (
        n0 - 3 * n1 - 2 * n2 - n3 + 1,
        -3 * n0 - n1 - 4 * n2 - 2 * n3 + 2,
        -3 * n0 - n1 + n2 - 2 * n3 + 2,
        n0 + 2 * n1 + 3 * n2 + 4 * n3 + 1,
        4 * n0 + 3 * n1 + 2 * n2 + n3 - 1,
    )
    if any(x % 5 for x in nums):
        raise AssertionError(f"alpha coordinates of {nvec} are not integral")
    alpha = tuple(x // 5 for x in nums)
    assert sum(alpha) == 1
    return alpha


def alpha_inv(alpha: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinate vector from alpha coordinates (sum must be 1)."""
    if len(alpha) != 5 or sum(alpha) != 1:
        raise ValueError("alpha coordinates must have length 5 and sum 1")
    a0, a1, a2, a3, a4 = alpha
    n = (a0 + a4, -a0 + a1 + a4, -a1 + a2, -a2 + a3 - a4, -a3 - a4)
    assert sum(n) == 0
    return n


def q_form(alpha: tuple[int, ...]) -> int:
    """Cyclic quadratic form a.a - (a0 a1 + a1 a2 + a2 a3 + a3 a4 + a4 a0);
    five times its value, minus one, is the norm of the matching core."""
    cyc = sum(alpha[i] * alpha[(i + 1) % 5] for i in range(5))
    return sum(a * a for a in alpha) - cyc


def crank_from_alpha(alpha: tuple[int, ...]) -> int:
    """Crank residue of any partition with these core coordinates:
    sum(i * alpha_i) mod 5.  The crank only sees the core."""
    if sum(alpha) != 1:
        raise ValueError("alpha coordinates must sum to 1")
    return sum(i * a for i, a in enumerate(alpha)) % 5


def phi_map(parts: tuple[int, ...]) -> PhiImage:
    """Alpha coordinates and 5-quotient of a partition of norm 4 mod 5."""
    if sum(parts) % 5 != 4:
        raise ValueError(f"norm of {parts} is not 4 mod 5")
    dec = abacus.phi1(parts, 5)
    assert sum(dec.core) % 5 == 4
    return PhiImage(alpha_of(abacus.phi2(dec.core, 5)), dec.quotient)


def phi_map_inv(img: PhiImage) -> tuple[int, ...]:
    core = abacus.phi2_inv(alpha_inv(img.alpha))
    return abacus.phi1_inv(abacus.Decomposition(core, img.quotient))


def bg_from_phi(img: PhiImage) -> int:
    """BG-rank evaluated in alpha coordinates: a six-term base formula for
    the core plus signed quotient contributions."""
    a = img.alpha
    base = 1
    for i in range(5):
        base -= -1 if (a[i] + a[(i + 1) % 5]) & 1 else 1
    assert base % 4 == 0
    signs = (a[0] + a[4], a[2] + a[3], a[1] + a[2], a[0] + a[1], a[3] + a[4])
    out = base // 4
    for s, q in zip(signs, img.quotient):
        out += (-1 if s & 1 else 1) * bg_rank(q)
    return out


def orbit_op(parts: tuple[int, ...]) -> tuple[int, ...]:
    """One orbit step: cycle the alpha coordinates right and permute the
    quotient components.  Preserves the norm and the BG-rank and adds one
    to the crank residue; the fifth iterate is the identity."""
    img = phi_map(parts)
    a = img.alpha
    q = img.quotient
    return phi_map_inv(
        PhiImage((a[4], a[0], a[1], a[2], a[3]), (q[4], q[2], q[3], q[0], q[1]))
    )


def orbit(parts: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """The orbit (pi, O pi, ..., O^4 pi); raises if it fails to close."""
    out = [parts]
    for _ in range(4):
        out.append(orbit_op(out[-1]))
    if orbit_op(out[-1]) != parts:
        raise AssertionError(f"orbit of {parts} does not close after five steps")
    return tuple(out)


def lift_5core(nvec: tuple[int, ...]) -> tuple[int, ...]:
    """Coordinate map realizing the five-fold lift of 5-cores: the image
    core has norm 5n+4, the same BG-rank, and crank residue 4."""
    if len(nvec) != 5 or sum(nvec) != 0:
        raise ValueError("expected a zero-sum vector of length 5")
    _, n1, n2, n3, n4 = nvec
    out = (
        n1 + 2 * n2 + 2 * n4 + 1,
        -n1 - n2 + n3 + n4 + 1,
        2 * n1 + n2 + 2 * n3,
        -2 * n2 - 2 * n3 - n4 - 1,
        -2 * n1 - n3 - 2 * n4 - 1,
    )
    assert sum(out) == 0
    return out


def count_pj(n: int) -> dict[int, int]:
    """Number of partitions of n with each BG-rank, by full enumeration."""
    counts: dict[int, int] = {}
    for parts in partitions_of(n):
        bg = 0
        for j, lam in enumerate(parts):
            if lam & 1:
                bg += 1 if (j & 1) == 0 else -1
        counts[bg] = counts.get(bg, 0) + 1
    return counts


@dataclass
class TheoremReport:
    """Outcome of the orbit check on the partitions of 5n+4.

    ``orbits`` maps each BG-rank to its orbits, every orbit rotated to
    start at its least member so reports are deterministic; ``counts`` are
    the per-rank partition counts.
    """

    n: int
    counts: dict[int, int] = field(default_factory=dict)
    orbits: dict[int, list[tuple[tuple[int, ...], ...]]] = field(default_factory=dict)
    crank_counts: dict[int, dict[int, int]] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_theorem(n: int) -> TheoremReport:
    """Assemble the partitions of 5n+4 into orbits and check the five
    equal crank classes within every BG-rank."""
    m = 5 * n + 4
    report = TheoremReport(n=n)
    seen: set[tuple[int, ...]] = set()
    for parts in partitions_of(m):
        bg = bg_rank(parts)
        report.counts[bg] = report.counts.get(bg, 0) + 1
        cranks = report.crank_counts.setdefault(bg, {})
        c = crank5(parts)
        cranks[c] = cranks.get(c, 0) + 1
        if parts in seen:
            continue
        try:
            orb = orbit(parts)
        except AssertionError as exc:
            report.failures.append(str(exc))
            continue
        seen.update(orb)
        if len(set(orb)) != 5:
            report.failures.append(f"orbit of {parts} has a repeated member")
        if any(sum(p) != m for p in orb):
            report.failures.append(f"orbit of {parts} does not preserve the norm")
        if any(bg_rank(p) != bg for p in orb):
            report.failures.append(f"orbit of {parts} does not preserve the rank")
        orb_cranks = [crank5(p) for p in orb]
        if sorted(orb_cranks) != [0, 1, 2, 3, 4]:
            report.failures.append(
                f"orbit of {parts} has crank residues {orb_cranks}"
            )
        if (orb_cranks[1] - orb_cranks[0]) % 5 != 1:
            report.failures.append(f"orbit of {parts} does not step the crank by 1")
        least = min(range(5), key=lambda i: orb[i])
        report.orbits.setdefault(bg, []).append(orb[least:] + orb[:least])
    for bg, count in report.counts.items():
        if count % 5:
            report.failures.append(f"rank {bg} count {count} is not 0 mod 5")
        per_crank = report.crank_counts[bg]
        if any(per_crank.get(c, 0) != count // 5 for c in range(5)):
            report.failures.append(f"rank {bg} crank classes {per_crank} unequal")
    return report
