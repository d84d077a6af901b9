"""Truncated formal power series over the integers, and the named series
used throughout the identity suite.

A Series holds exact integer coefficients for q^0 .. q^(N-1); N is the
precision.  Ring operations are exact and truncate to the smaller operand
precision, so precision is never silently extended.  Coefficients are
arbitrary-width Python integers from the start.

Named constructors:

* ``euler(k, N)``        the product of (1 - q^(k*j)) over j >= 1;
* ``eta_quotient``       q^a times a product of integer powers of euler(k);
* ``theta_f(a, b, N)``   the bilateral sum of a^(n(n+1)/2) b^(n(n-1)/2)
                         for signed monomials a, b with positive total
                         degree, with an optional q-power shift;
* ``theta_product``      the same function as a triple product, usable as
                         an independent cross-check when every factor
                         exponent is nonnegative;
* ``psi(k, N)``          euler(2k)^2 / euler(k), checked at construction
                         against the triangular-number sum;
* ``phi(k, N)``          theta_f(q^k, q^k), checked against its
                         eta-quotient form;
* ``bracket(a, k, N)``   the two-sided Pochhammer (q^a; q^k) (q^(k-a); q^k),
                         with the reduction of out-of-range exponents
                         exposed separately;
* ``lambert_bilateral``  exact expansions of the bilateral Lambert sums
                         used by the registry;
* ``even_part`` and ``hecke_t``  coefficient operators.

Convolution uses Kronecker substitution: coefficients are packed into one
large integer per operand so Python's big-integer multiply does the work.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .coeffs import is_prime, legendre

__all__ = [
    "Series",
    "Monomial",
    "euler",
    "eta_quotient",
    "theta_f",
    "theta_product",
    "pochhammer",
    "psi",
    "phi",
    "bracket",
    "bracket_reduce",
    "bracket_product",
    "lambert_bilateral",
    "even_part",
    "hecke_t",
    "first_difference",
]

_SCHOOLBOOK_CUTOFF = 24


def _conv_schoolbook(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            top = n - i
            for j, bj in enumerate(b[:top]):
                if bj:
                    out[i + j] += ai * bj
    return out


def _pack(xs: list[int], width: int, length: int) -> int:
    buf = b"".join(x.to_bytes(width, "little") for x in xs)
    buf += bytes(width * (length - len(xs)))
    return int.from_bytes(buf, "little")


def _conv(a: list[int], b: list[int], n: int) -> list[int]:
    """First n coefficients of the product, exactly."""
    if n <= 0:
        return []
    a = list(a[:n])
    b = list(b[:n])
    if min(len(a), len(b)) <= _SCHOOLBOOK_CUTOFF or n <= _SCHOOLBOOK_CUTOFF:
        return _conv_schoolbook(a, b, n)
    ma = max(map(abs, a), default=0)
    mb = max(map(abs, b), default=0)
    if ma == 0 or mb == 0:
        return [0] * n
    # Slot width: products of slot sums stay below 2^bits, with room for
    # adding two packed products before unpacking.
    bits = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    ap = _pack([x if x > 0 else 0 for x in a], width, n)
    an = _pack([-x if x < 0 else 0 for x in a], width, n)
    bp = _pack([x if x > 0 else 0 for x in b], width, n)
    bn = _pack([-x if x < 0 else 0 for x in b], width, n)
    pos = ap * bp + an * bn
    neg = ap * bn + an * bp
    size = width * 2 * n
    pbuf = pos.to_bytes(size, "little")
    nbuf = neg.to_bytes(size, "little")
    out = []
    for i in range(n):
        lo = width * i
        hi = lo + width
        out.append(
            int.from_bytes(pbuf[lo:hi], "little")
            - int.from_bytes(nbuf[lo:hi], "little")
        )
    return out


@dataclass(frozen=True)
class Series:
    """Integer power series known exactly for exponents below ``precision``."""

    coeffs: tuple[int, ...]
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be positive")
        if len(self.coeffs) != self.precision:
            raise ValueError("coefficient count must equal the precision")

    @classmethod
    def from_coeffs(cls, coeffs, precision: int) -> "Series":
        cs = list(coeffs)[:precision]
        cs += [0] * (precision - len(cs))
        return cls(tuple(cs), precision)

    @classmethod
    def zero(cls, precision: int) -> "Series":
        return cls((0,) * precision, precision)

    @classmethod
    def one(cls, precision: int) -> "Series":
        return cls.monomial(0, precision)

    @classmethod
    def monomial(cls, k: int, precision: int, coeff: int = 1) -> "Series":
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        cs = [0] * precision
        if k < precision:
            cs[k] = coeff
        return cls(tuple(cs), precision)

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < self.precision:
            raise IndexError(f"coefficient {k} beyond precision {self.precision}")
        return self.coeffs[k]

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.precision > 8 else ""
        return f"Series([{head}{tail}], precision={self.precision})"

    def _coerced(self, other) -> "Series | None":
        if isinstance(other, Series):
            return other
        if isinstance(other, int):
            return Series.monomial(0, self.precision, other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return Series(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), n)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return Series(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)), n)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Series(tuple(-a for a in self.coeffs), self.precision)

    def __mul__(self, other):
        if isinstance(other, int):
            return Series(tuple(a * other for a in self.coeffs), self.precision)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.precision, other.precision)
        return Series(tuple(_conv(list(self.coeffs), list(other.coeffs), n)), n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("series powers take nonnegative integer exponents")
        result = Series.one(self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return NotImplemented

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be 1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(f"cannot invert constant term {c0} exactly")
        n = self.precision
        a = list(self.coeffs)
        b = [c0]
        m = 1
        while m < n:
            m2 = min(2 * m, n)
            ab = _conv(a[:m2], b, m2)
            corr = [-c for c in ab]
            corr[0] += 2
            b = _conv(b, corr, m2)
            m = m2
        return Series(tuple(b), n)

    def shift(self, k: int) -> "Series":
        """Multiply by q^k (k >= 0); the precision grows by k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return Series((0,) * k + self.coeffs, self.precision + k)

    def truncate(self, n: int) -> "Series":
        if n > self.precision:
            raise ValueError("cannot extend precision by truncation")
        return Series(self.coeffs[:n], n)

    def to_json(self) -> dict:
        return {"precision": self.precision, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Series":
        return cls(tuple(int(c) for c in obj["coeffs"]), int(obj["precision"]))


def first_difference(a: Series, b: Series) -> tuple[int, int, int] | None:
    """First (exponent, left, right) where the series disagree, compared up
    to the smaller precision; None if they agree."""
    n = min(a.precision, b.precision)
    for k in range(n):
        if a.coeffs[k] != b.coeffs[k]:
            return (k, a.coeffs[k], b.coeffs[k])
    return None


@dataclass(frozen=True)
class Monomial:
    """A signed power of q: sign * q^exponent.  Exponents may be any
    integer here; constructors that need positivity check it themselves."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exponent + other.exponent)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exponent - other.exponent)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        s = text.strip()
        sign = 1
        if s.startswith("+"):
            s = s[1:]
        elif s.startswith("-"):
            sign = -1
            s = s[1:]
        return cls(sign, int(s))


def q_power(k: int) -> Monomial:
    return Monomial(1, k)


@lru_cache(maxsize=None)
def euler(k: int, precision: int) -> Series:
    """Product of (1 - q^(k*j)) over j >= 1, truncated; only factors with
    k*j below the precision contribute."""
    if k < 1:
        raise ValueError("euler factor scale must be positive")
    c = [0] * precision
    c[0] = 1
    m = k
    while m < precision:
        for i in range(precision - 1, m - 1, -1):
            c[i] -= c[i - m]
        m += k
    return Series(tuple(c), precision)


def eta_quotient(
    factors: tuple[tuple[int, int], ...], prefactor: int, precision: int
) -> Series:
    """q^prefactor times the product of euler(k)^e over (k, e) in factors.

    Negative exponents invert exactly (euler factors have constant term 1).
    """
    if prefactor < 0:
        raise ValueError("prefactor power must be nonnegative")
    num = Series.one(precision)
    den = Series.one(precision)
    for k, e in factors:
        if e > 0:
            num = num * euler(k, precision) ** e
        elif e < 0:
            den = den * euler(k, precision) ** (-e)
    result = num * den.inverse()
    if prefactor:
        result = result.shift(prefactor).truncate(precision)
    return result


def _theta_range(total: int, diff: int, room: int) -> int:
    # smallest bound B with total/2*n^2 - |diff|/2*|n| >= room for |n| > B
    d = abs(diff)
    return 2 + (d + isqrt(d * d + 8 * total * max(room, 0))) // (2 * total)


def theta_f(a: Monomial, b: Monomial, precision: int, shift: int = 0) -> Series:
    """Bilateral theta sum of a^(n(n+1)/2) b^(n(n-1)/2), times q^shift.

    Requires a.exponent + b.exponent >= 1; individual exponents may be
    nonpositive as long as every contributing power of q is nonnegative
    after the shift.
    """
    ea, eb = a.exponent, b.exponent
    total = ea + eb
    if total < 1:
        raise ValueError("total exponent of a*b must be positive")
    coeffs = [0] * precision
    bound = _theta_range(total, ea - eb, precision - shift)
    for n in range(-bound, bound + 1):
        up = n * (n + 1) // 2
        dn = n * (n - 1) // 2
        e = shift + ea * up + eb * dn
        if e < 0:
            raise ValueError(
                f"negative exponent q^{e} in theta sum (shift {shift} too small)"
            )
        if e < precision:
            neg = (a.sign < 0 and up & 1) ^ (b.sign < 0 and dn & 1)
            coeffs[e] += -1 if neg else 1
    return Series(tuple(coeffs), precision)


def pochhammer(x: Monomial, base: Monomial, precision: int) -> Series:
    """Product of (1 - x * base^j) over j >= 0.

    Every factor exponent must be nonnegative; exponent zero is allowed
    and contributes the constant 1 - sign.
    """
    if base.exponent < 1:
        raise ValueError("pochhammer base must have positive exponent")
    out = Series.one(precision)
    j = 0
    while True:
        e = x.exponent + j * base.exponent
        if e >= precision:
            break
        if e < 0:
            raise ValueError("pochhammer factor with negative exponent")
        s = x.sign * (base.sign if j % 2 else 1)
        out = out * (Series.one(precision) - Series.monomial(e, precision, s))
        j += 1
    return out


def theta_product(a: Monomial, b: Monomial, precision: int) -> Series:
    """Triple-product form of theta_f: (ab; ab) (-a; ab) (-b; ab).

    Valid whenever both exponents are nonnegative with positive total.
    """
    ab = a * b
    if ab.exponent < 1:
        raise ValueError("total exponent of a*b must be positive")
    if a.exponent < 0 or b.exponent < 0:
        raise ValueError("product form needs nonnegative exponents")
    out = pochhammer(ab, ab, precision)
    out = out * pochhammer(Monomial(-a.sign, a.exponent), ab, precision)
    out = out * pochhammer(Monomial(-b.sign, b.exponent), ab, precision)
    return out


@lru_cache(maxsize=None)
def psi(k: int, precision: int) -> Series:
    """euler(2k)^2 / euler(k): the generating function of the triangular
    numbers in q^k.  Both forms are computed and compared at construction.
    """
    s = eta_quotient(((2 * k, 2), (k, -1)), 0, precision)
    check = [0] * precision
    m = 0
    while k * m * (m + 1) // 2 < precision:
        check[k * m * (m + 1) // 2] += 1
        m += 1
    if tuple(check) != s.coeffs:
        raise AssertionError("triangular-number form of psi disagrees")
    return s


@lru_cache(maxsize=None)
def phi(k: int, precision: int) -> Series:
    """theta_f(q^k, q^k): the generating function of squares in q^k.
    Checked at construction against euler(2k)^5 / (euler(4k)^2 euler(k)^2).
    """
    s = theta_f(Monomial(1, k), Monomial(1, k), precision)
    check = eta_quotient(((2 * k, 5), (4 * k, -2), (k, -2)), 0, precision)
    if s.coeffs != check.coeffs:
        raise AssertionError("eta-quotient form of phi disagrees")
    return s


def bracket_reduce(a: int, k: int) -> tuple[int, int, int]:
    """Normalize the two-sided Pochhammer index to 0 < a < k.

    Returns (sign, shift, a0) with [q^a; q^k] = sign * q^shift * [q^a0; q^k];
    raises if a is divisible by k (vanishing factor).
    """
    if k < 1:
        raise ValueError("bracket base must be positive")
    if a % k == 0:
        raise ValueError(f"bracket [q^{a}; q^{k}] vanishes")
    sign, shift = 1, 0
    while a <= 0:
        # [q^a] = -q^a [q^(a+k)]
        sign, shift, a = -sign, shift + a, a + k
    while a >= k:
        # [q^a] = -q^(k-a) [q^(a-k)]
        a -= k
        sign, shift = -sign, shift - a
    return sign, shift, a


@lru_cache(maxsize=None)
def _bracket_reduced(a: int, k: int, precision: int) -> Series:
    return pochhammer(Monomial(1, a), Monomial(1, k), precision) * pochhammer(
        Monomial(1, k - a), Monomial(1, k), precision
    )


def bracket(a: int, k: int, precision: int) -> Series:
    """Two-sided Pochhammer (q^a; q^k) (q^(k-a); q^k) for general a not
    divisible by k.  Out-of-range indices are reduced; a negative leading
    power of q cannot be represented and raises."""
    sign, shift, a0 = bracket_reduce(a, k)
    if shift < 0:
        raise ValueError(f"bracket [q^{a}; q^{k}] has leading power q^{shift}")
    s = _bracket_reduced(a0, k, precision)
    if sign < 0:
        s = -s
    if shift:
        s = s.shift(shift).truncate(precision)
    return s


def bracket_product(
    exponents: tuple[int, ...], k: int, precision: int
) -> tuple[int, int, Series]:
    """Product of brackets [q^a; q^k] over the exponent list, reduced to
    (sign, shift, series).  A vanishing component gives (0, 0, zero)."""
    sign, shift = 1, 0
    series = Series.one(precision)
    for a in exponents:
        if a % k == 0:
            return 0, 0, Series.zero(precision)
        s, sh, a0 = bracket_reduce(a, k)
        sign *= s
        shift += sh
        series = series * _bracket_reduced(a0, k, precision)
    return sign, shift, series


def _lambert_square(prefix: int, m: int, sign: int, coeffs: list[int]) -> None:
    # sign * q^prefix / (1 - q^m)^2 with m > 0: weights 1, 2, 3, ...
    n = len(coeffs)
    r = 1
    e = prefix
    while e < n:
        coeffs[e] += sign * r
        r += 1
        e += m


def _lambert_square_even(prefix: int, m: int, sign: int, coeffs: list[int]) -> None:
    # sign * q^prefix (1 + q^m) / (1 - q^m)^2 with m > 0: weights 1, 3, 5, ...
    n = len(coeffs)
    r = 1
    e = prefix
    while e < n:
        coeffs[e] += sign * r
        r += 2
        e += m


def lambert_bilateral(family: str, precision: int) -> Series:
    """Exact expansion of one of the registered bilateral Lambert sums.

    ``a5``     sum over i in {1,2}, n in Z of
               (-1)^(i+1) q^(5n+i-1) / (1 - q^(5n+i))^2;
    ``r``      sum over i in {0,1}, n in Z of
               (-1)^i q^(5n+i) (1 + q^(10n+2i+1)) / (1 - q^(10n+2i+1))^2;
    ``ep-a5``  sum over i in {0,1}, n in Z of
               (-1)^i q^(10n+i) (1 + q^(20n+4i+2)) / (1 - q^(20n+4i+2))^2;
    ``psi2``   sum over n in Z of q^n / (1 - q^(2+4n)).

    Negative-index terms are folded onto positive denominators with the
    symmetry q^m/(1-q^m)^2 = q^(-m)/(1-q^(-m))^2 and its variants, so no
    denominator exponent ever vanishes.
    """
    n = precision
    coeffs = [0] * n
    if family == "a5":
        # n >= 0 gives moduli m = 5n+i; n < 0 folds onto m' = -(5n+i).
        for m in range(1, n + 1):
            rem = m % 5
            if rem in (1, 4):
                _lambert_square(m - 1, m, 1, coeffs)
            elif rem in (2, 3):
                _lambert_square(m - 1, m, -1, coeffs)
    elif family in ("r", "ep-a5"):
        if family == "r":
            branches = ((1, 0, 5, 1, 10), (-1, 1, 5, 3, 10))
        else:
            # Even part of the 5-core series, from the even/odd split of
            # the "a5" family: prefixes 10k and 10k+6, moduli 20k+2 and
            # 20k+14, with alternating sign.
            branches = ((1, 0, 10, 2, 20), (-1, 6, 10, 14, 20))
        for sign, p0, pstep, m0, mstep in branches:
            k = 0
            while p0 + pstep * k < n:
                _lambert_square_even(p0 + pstep * k, m0 + mstep * k, sign, coeffs)
                k += 1
            k = -1
            while (p0 - m0) + (pstep - mstep) * k < n:
                # q^p (1+q^m)/(1-q^m)^2 with m < 0 becomes prefix p-m over
                # modulus -m.
                p, m = p0 + pstep * k, m0 + mstep * k
                _lambert_square_even(p - m, -m, sign, coeffs)
                k -= 1
    elif family == "psi2":
        k = 0
        while k < n:
            # q^k / (1 - q^(2+4k))
            e = k
            while e < n:
                coeffs[e] += 1
                e += 2 + 4 * k
            k += 1
        k = -1
        while -3 * k - 2 < n:
            # q^k/(1-q^m) with m = 2+4k < 0 becomes -q^(k-m)/(1-q^(-m)).
            e = -3 * k - 2
            while e < n:
                coeffs[e] -= 1
                e += -(2 + 4 * k)
            k -= 1
    else:
        raise ValueError(f"unknown bilateral family {family!r}")
    return Series(tuple(coeffs), n)


def even_part(f: Series) -> Series:
    """Zero out the odd-exponent coefficients."""
    return Series(
        tuple(c if k % 2 == 0 else 0 for k, c in enumerate(f.coeffs)), f.precision
    )


def hecke_t(p: int, f: Series) -> Series:
    """Coefficient operator sending sum(a_n q^n) to
    sum(a_(p n) q^n) + p (p|5) sum(a_n q^(p n)).

    The result is exact to precision floor((N-1)/p) + 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    chi = legendre(p, 5) if p != 5 else 0
    n = (f.precision - 1) // p + 1
    coeffs = [f.coeffs[p * k] for k in range(n)]
    if chi:
        for k in range(n):
            if p * k < n:
                coeffs[p * k] += p * chi * f.coeffs[k]
    return Series(tuple(coeffs), n)
