"""Exact multivariate polynomial arithmetic in the degree reverse
lexicographic order.

Monomials are dense exponent tuples of length ``nvars`` (variables
x0 > x1 > ... ordered by index).  Coefficients live in an exact field:
arbitrary-precision rationals by default, or an odd prime field as an
opt-in accelerator.  Every value is immutable and safe to share between
tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

Monomial = tuple  # exponent tuple of length nvars


# ---------------------------------------------------------------------------
# coefficient fields


@dataclass(frozen=True)
class RationalField:
    """Exact rationals; coefficients are Fraction instances."""

    characteristic = 0

    def coerce(self, v):
        if isinstance(v, Fraction):
            return v
        return Fraction(v)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return 1 / a

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """Z/p for an odd prime p; coefficients are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0 or not _is_prime(self.p):
            raise ValueError(f"need an odd prime, got {self.p}")

    @property
    def characteristic(self):
        return self.p

    def coerce(self, v):
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        return int(v) % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


QQ = RationalField()


# ---------------------------------------------------------------------------
# monomials


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def compare_revlex(m1: Monomial, m2: Monomial) -> int:
    """Degree-refined reverse lexicographic comparison.

    Returns 1 when m1 > m2, -1 when m1 < m2, 0 on equality.  m1 > m2 when
    the last non-zero coordinate of the vector
    (a_0-b_0, ..., a_n-b_n, sum(b)-sum(a)) is negative; the appended degree
    slot makes higher total degree larger.
    """
    if len(m1) != len(m2):
        raise ValueError("monomials from different rings")
    d = mono_degree(m2) - mono_degree(m1)
    if d:
        return 1 if d < 0 else -1
    for a, b in zip(reversed(m1), reversed(m2)):
        if a != b:
            return 1 if a < b else -1
    return 0


def revlex_key(m: Monomial):
    """Sort key: ascending key order equals ascending revlex order."""
    return (sum(m), tuple(-e for e in reversed(m)))


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable homogeneous-friendly polynomial with canonical term order.

    Terms are stored strictly descending in revlex with no zero
    coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        acc = {}
        fld = ring.field
        for m, c in terms:
            c = fld.coerce(c)
            if m in acc:
                s = fld.add(acc[m], c)
                if s == fld.zero:
                    del acc[m]
                else:
                    acc[m] = s
            elif c != fld.zero:
                acc[m] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(acc.items(), key=lambda t: revlex_key(t[0]), reverse=True)),
        )

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    @property
    def lead_monomial(self) -> Monomial:
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        return self.terms[0][1]

    def degree(self) -> int:
        """Total degree (of the lead term; -1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return mono_degree(self.terms[0][0])

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = mono_degree(self.terms[0][0])
        return all(mono_degree(m) == d for m, _ in self.terms)

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        self._check_ring(other)
        return Polynomial(self.ring, list(self.terms) + list(other.terms))

    def __sub__(self, other):
        self._check_ring(other)
        fld = self.ring.field
        return Polynomial(
            self.ring,
            list(self.terms) + [(m, fld.neg(c)) for m, c in other.terms],
        )

    def __neg__(self):
        fld = self.ring.field
        return Polynomial(self.ring, [(m, fld.neg(c)) for m, c in self.terms])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_ring(other)
        fld = self.ring.field
        acc = {}
        zero = fld.zero
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                s = fld.add(acc.get(m, zero), fld.mul(c1, c2))
                if s == zero:
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return Polynomial(self.ring, acc.items())

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        fld = self.ring.field
        c = fld.coerce(c)
        if c == fld.zero:
            return self.ring.zero
        return Polynomial(self.ring, [(m, fld.mul(cc, c)) for m, cc in self.terms])

    def mono_shift(self, m: Monomial, c=1):
        """Multiply by the monomial m scaled by c."""
        fld = self.ring.field
        c = fld.coerce(c)
        return Polynomial(
            self.ring, [(mono_mul(mm, m), fld.mul(cc, c)) for mm, cc in self.terms]
        )

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        fld = self.ring.field
        inv = fld.inv(self.lead_coeff)
        return Polynomial(self.ring, [(m, fld.mul(c, inv)) for m, c in self.terms])

    def coefficient(self, m: Monomial):
        for mm, c in self.terms:
            if mm == m:
                return c
        return self.ring.field.zero

    def substitute_linear(self, matrix) -> Polynomial:
        """Apply x_i -> sum_j matrix[i][j] x_j."""
        ring = self.ring
        images = [
            Polynomial(
                ring,
                [(ring.var_mono(j), matrix[i][j]) for j in range(ring.nvars)],
            )
            for i in range(ring.nvars)
        ]
        powers = [{0: ring.one} for _ in range(ring.nvars)]
        out = ring.zero
        for m, c in self.terms:
            term = ring.from_scalar(c)
            for i, e in enumerate(m):
                if not e:
                    continue
                cache = powers[i]
                if e not in cache:
                    p = cache[max(cache)]
                    for _ in range(max(cache), e):
                        p = p * images[i]
                    cache[e] = p
                term = term * cache[e]
            out = out + term
        return out

    def __repr__(self):
        return f"Polynomial({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def format_mono(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for m, c in p.terms:
        neg = c < 0
        ac = -c if neg else c
        mono = format_mono(m)
        if mono == "1":
            body = str(ac)
        elif ac == 1:
            body = mono
        else:
            body = f"{ac}*{mono}"
        out.append(("- " if neg else "+ ") + body)
    s = " ".join(out)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


@dataclass(frozen=True)
class PolyRing:
    """K[x0, ..., x_{nvars-1}] with the revlex order baked in."""

    nvars: int
    field: object = QQ

    @property
    def n(self) -> int:
        """Dimension of the ambient projective space."""
        return self.nvars - 1

    def var_mono(self, i: int) -> Monomial:
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range")
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def gen(self, i: int) -> Polynomial:
        return Polynomial(self, [(self.var_mono(i), 1)])

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, [])

    @property
    def one(self) -> Polynomial:
        return Polynomial(self, [(tuple([0] * self.nvars), 1)])

    def from_scalar(self, c) -> Polynomial:
        return Polynomial(self, [(tuple([0] * self.nvars), c)])

    def monomial(self, m: Monomial, c=1) -> Polynomial:
        if len(m) != self.nvars:
            raise ValueError("wrong exponent tuple length")
        return Polynomial(self, [(tuple(m), c)])

    def monomials_of_degree(self, j: int):
        """All degree-j monomials, descending in revlex."""
        if j < 0:
            return []
        nv = self.nvars
        out = []
        for bars in combinations(range(j + nv - 1), nv - 1):
            prev = -1
            m = []
            for b in bars:
                m.append(b - prev - 1)
                prev = b
            m.append(j + nv - 2 - prev)
            out.append(tuple(m))
        out.sort(key=revlex_key, reverse=True)
        return out

    def dim_degree(self, j: int) -> int:
        """dim of the degree-j graded piece of the ring."""
        if j < 0:
            return 0
        return _binom(j + self.nvars - 1, self.nvars - 1)


def _binom(m: int, k: int) -> int:
    if k < 0 or k > m:
        return 0
    out = 1
    for i in range(k):
        out = out * (m - i) // (i + 1)
    return out


binom = _binom
