"""Exact polynomial kernel: rational uni/bivariate polynomials, resultants,
square-free parts and certified real-root isolation.

Everything here is exact.  Heavy inner loops (root isolation, gcd chains,
Sylvester determinants) run on plain integer coefficient lists; the public
types carry ``fractions.Fraction`` coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DegenerateInput, NotIsolating, VerticalLineComponent, ZeroPolynomial

Rat = Fraction


def _as_rat(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError("expected an exact rational, got %r" % (v,))


# ---------------------------------------------------------------------------
# integer coefficient helpers (ascending order lists)
# ---------------------------------------------------------------------------

def _int_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _int_from_fractions(coeffs: Sequence[Fraction]) -> list[int]:
    """Clear denominators; the result has the same roots and signs up to
    a positive factor."""
    den = 1
    for v in coeffs:
        den = den * v.denominator // math.gcd(den, v.denominator)
    return _int_trim([int(v * den) for v in coeffs])


def _int_content(c: Sequence[int]) -> int:
    g = 0
    for v in c:
        g = math.gcd(g, abs(v))
        if g == 1:
            return 1
    return g if g else 1


def _int_primitive(c: Sequence[int]) -> list[int]:
    c = _int_trim(list(c))
    if not c:
        return []
    g = _int_content(c)
    if c[-1] < 0:
        g = -g
    return [v // g for v in c]


def _int_deriv(c: Sequence[int]) -> list[int]:
    return [i * c[i] for i in range(1, len(c))]


def _int_eval_sign(c: Sequence[int], num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, via p(n/d) * d^deg with Horner."""
    if not c:
        return 0
    total = c[-1]
    dp = 1
    for v in reversed(c[:-1]):
        dp *= den
        total = total * num + v * dp
    return (total > 0) - (total < 0)


def _int_eval_at_fraction(c: Sequence[int], q: Fraction) -> Fraction:
    acc = Fraction(0)
    for v in reversed(c):
        acc = acc * q + v
    return acc


def _int_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                if bv:
                    out[i + j] += av * bv
    return _int_trim(out)


def _int_divexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact division over Z (raises if not divisible)."""
    a = list(a)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [0] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    while len(_int_trim(a)) >= len(b):
        a = _int_trim(a)
        k = len(a) - len(b)
        lead, dlead = a[-1], b[-1]
        if lead % dlead != 0:
            raise ArithmeticError("inexact integer polynomial division")
        f = lead // dlead
        q[k] = f
        for i, bv in enumerate(b):
            a[i + k] -= f * bv
    if _int_trim(a):
        raise ArithmeticError("inexact integer polynomial division")
    return _int_trim(q)


def _int_prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z."""
    a = list(a)
    b = list(b)
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return _int_trim(a)
    lead = b[-1]
    a = [v * lead ** (da - db + 1) for v in a]
    while len(_int_trim(a)) - 1 >= db:
        a = _int_trim(a)
        k = len(a) - 1 - db
        f = a[-1] // lead
        assert a[-1] % lead == 0
        for i, bv in enumerate(b):
            a[i + k] -= f * bv
    return _int_trim(a)


def _int_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive-PRS gcd over Z, result primitive with positive lead."""
    a = _int_primitive(a)
    b = _int_primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r)
        if b and len(b) > len(a):
            a, b = b, a
    return _int_primitive(a)


def _int_squarefree(c: Sequence[int]) -> list[int]:
    c = _int_primitive(c)
    if len(c) <= 1:
        return c
    g = _int_gcd(c, _int_deriv(c))
    if len(g) == 1:
        return c
    return _int_primitive(_int_divexact(c, g))


def _int_yun(c: Sequence[int]) -> list[tuple[list[int], int]]:
    """Yun square-free decomposition: [(primitive factor, multiplicity)]."""
    c = _int_primitive(c)
    if len(c) <= 1:
        return []
    d = _int_deriv(c)
    a0 = _int_gcd(c, d)
    if len(a0) == 1:
        return [(c, 1)]
    b = _int_divexact(c, a0)
    cc = _int_divexact(d, a0)
    z = _int_trim([x - y for x, y in
                   zip(cc + [0] * len(b), _int_deriv(b) + [0] * len(cc))])
    out = []
    i = 1
    while len(b) > 1:
        ai = _int_gcd(b, z)
        if len(ai) > 1:
            out.append((ai, i))
        b = _int_divexact(b, ai)
        cc = _int_divexact(z, ai)
        z = _int_trim([x - y for x, y in
                       zip(cc + [0] * len(b), _int_deriv(b) + [0] * len(cc))])
        i += 1
    return out


# ---------------------------------------------------------------------------
# Descartes / bisection isolation on square-free integer polynomials
# ---------------------------------------------------------------------------

def _variations(c: Sequence[int]) -> int:
    n = 0
    last = 0
    for v in c:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            n += 1
        last = s
    return n


def _taylor_shift_1(c: Sequence[int]) -> list[int]:
    """Coefficients of p(x+1)."""
    c = list(c)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += c[j + 1]
    return c


def _descartes_01(c: Sequence[int]) -> int:
    """Sign-variation bound for roots in the open interval (0, 1)."""
    rev = list(reversed(c))
    return _variations(_taylor_shift_1(rev))


def _half_shrink(c: Sequence[int]) -> tuple[list[int], list[int]]:
    """Given p on (0,1) return integer polynomials for the two halves,
    each renormalized to (0,1)."""
    n = len(c) - 1
    left = [v << (n - i) for i, v in enumerate(c)]       # 2^n p(x/2)
    g = _int_content(left)
    if g > 1:
        left = [v // g for v in left]
    right = _taylor_shift_1(left)                        # 2^n p((x+1)/2)
    g = _int_content(right)
    if g > 1:
        right = [v // g for v in right]
    return left, right


def _isolate_01(c: list[int]) -> list[tuple[Fraction, Fraction]]:
    """Isolating (open) dyadic intervals and exact roots of a square-free
    integer polynomial inside (0,1); p(0) != 0 != p(1) required.

    Exact roots are returned as degenerate pairs (r, r).
    """
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(Fraction(0), Fraction(1), c)]
    while stack:
        lo, hi, p = stack.pop()
        v = _descartes_01(p)
        if v == 0:
            continue
        if v == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left, right = _half_shrink(p)
        if right[0] == 0:
            out.append((mid, mid))
            right = right[1:]                            # divide by x
            left = _int_divexact(left, [-1, 1])          # divide by (x - 1)
        stack.append((lo, mid, left))
        stack.append((mid, hi, right))
    out.sort()
    return out


def _root_bound_pow2(c: Sequence[int]) -> int:
    lc = abs(c[-1])
    m = max((abs(v) for v in c[:-1]), default=0)
    if m == 0:
        return 1
    return 1 << ((m // lc + 2).bit_length())


def _compose_affine_int(c: Sequence[int], a: Fraction, w: Fraction) -> list[int]:
    """Integer coefficients (same signs/roots) of p(a + w*x)."""
    acc: list[Fraction] = []
    for v in reversed(c):
        # acc = acc*(a + w x) + v
        new = [Fraction(0)] * (len(acc) + 1)
        for i, t in enumerate(acc):
            new[i] += t * a
            new[i + 1] += t * w
        new[0] += v
        acc = new
    while acc and acc[-1] == 0:
        acc.pop()
    return _int_from_fractions(acc)


def _isolate_sqfree(c: list[int]) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals / exact roots of a square-free integer polynomial
    over the whole real line."""
    c = _int_primitive(c)
    if len(c) <= 1:
        return []
    bound = Fraction(_root_bound_pow2(c))
    # map (-B, B) onto (0, 1)
    q = _compose_affine_int(c, -bound, 2 * bound)
    if q and q[0] == 0:
        # x = -B is not a root by the bound; only possible if c had root 0
        # mapped... guard anyway
        raise ArithmeticError("root bound violated")
    cells = _isolate_01(q)
    out = []
    for lo, hi in cells:
        a = -bound + 2 * bound * lo
        b = -bound + 2 * bound * hi
        out.append((a, b))
    return out


def _count_roots_open(c_sqfree: list[int], lo: Fraction, hi: Fraction) -> int:
    """Exact number of roots of a square-free integer polynomial in the
    open interval (lo, hi); endpoints must not be roots."""
    if lo >= hi:
        return 0
    q = _compose_affine_int(c_sqfree, lo, hi - lo)
    if not q or q[0] == 0 or sum(q) == 0:
        raise NotIsolating("endpoint is a root in root counting")
    v = _descartes_01(q)
    if v <= 1:
        return v
    mid = (lo + hi) / 2
    extra = 0
    if _int_eval_sign(c_sqfree, mid.numerator, mid.denominator) == 0:
        extra = 1
        c_sqfree = _fraction_divout(c_sqfree, mid)
    return extra + _count_roots_open(c_sqfree, lo, mid) \
        + _count_roots_open(c_sqfree, mid, hi)


def _fraction_divout(c: Sequence[int], r: Fraction) -> list[int]:
    """Divide an integer polynomial by (den*x - num) for the rational root r."""
    return _int_divexact(list(c), [-r.numerator, r.denominator])


def simplest_rational_in(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator strictly inside (lo, hi)."""
    if not lo < hi:
        raise ValueError("empty interval")
    fl = math.floor(lo)
    if fl + 1 < hi:
        return Fraction(fl + 1)
    if lo == fl:
        k = math.floor(1 / (hi - fl)) + 1
        return fl + Fraction(1, k)
    return fl + 1 / simplest_rational_in(1 / (hi - fl), 1 / (lo - fl))


# ---------------------------------------------------------------------------
# public univariate polynomial
# ---------------------------------------------------------------------------

class UnivariatePolynomial:
    """Dense polynomial over the rationals, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_as_rat(v) for v in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UnivariatePolynomial is immutable")

    # -- structure --------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, UnivariatePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "UnivariatePolynomial(%r)" % (list(self.coeffs),)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return UnivariatePolynomial(x + y for x, y in zip(a, b))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return UnivariatePolynomial(-v for v in self.coeffs)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return UnivariatePolynomial([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    @staticmethod
    def _coerce(v) -> "UnivariatePolynomial":
        if isinstance(v, UnivariatePolynomial):
            return v
        return UnivariatePolynomial([_as_rat(v)])

    def __call__(self, x) -> Fraction:
        x = _as_rat(x)
        acc = Fraction(0)
        for v in reversed(self.coeffs):
            acc = acc * x + v
        return acc

    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(i * v for i, v in enumerate(self.coeffs) if i)

    def divmod(self, other: "UnivariatePolynomial"):
        if other.is_zero:
            raise ZeroDivisionError
        a = list(self.coeffs)
        b = other.coeffs
        q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
        while len(a) >= len(b) and a:
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            k = len(a) - len(b)
            f = a[-1] / b[-1]
            q[k] = f
            for i, bv in enumerate(b):
                a[i + k] -= f * bv
        return UnivariatePolynomial(q), UnivariatePolynomial(a)

    def gcd(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        g = _int_gcd(self._ints(), other._ints())
        return UnivariatePolynomial(g)

    def squarefree(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(_int_squarefree(self._ints()))

    def _ints(self) -> list[int]:
        return _int_from_fractions(self.coeffs)

    def sign_at(self, q) -> int:
        q = _as_rat(q)
        v = self(q)
        return (v > 0) - (v < 0)


# ---------------------------------------------------------------------------
# root intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootInterval:
    """Isolating interval [lo, hi] of a single distinct real root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("inverted root interval")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, q) -> bool:
        q = _as_rat(q)
        return self.lo <= q <= self.hi

    def overlaps(self, other: "RootInterval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def __repr__(self):
        if self.exact:
            return "RootInterval(%s, mult=%d)" % (self.lo, self.multiplicity)
        return "RootInterval(%s, %s, mult=%d)" % (self.lo, self.hi, self.multiplicity)


def _exactify(c_sqfree: list[int], lo: Fraction, hi: Fraction):
    """If the simplest rational in (lo, hi) happens to be the root, return it."""
    if lo == hi:
        return lo
    r = simplest_rational_in(lo, hi)
    if _int_eval_sign(c_sqfree, r.numerator, r.denominator) == 0:
        return r
    return None


def isolate_real_roots(u: UnivariatePolynomial) -> list[RootInterval]:
    """Isolating intervals for the distinct real roots of u, sorted
    increasingly, with multiplicities from the square-free decomposition."""
    if u.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    roots: list[RootInterval] = []
    factors = _int_yun(u._ints())
    per_factor: list[tuple[list[int], list[list]]] = []
    for fac, mult in factors:
        cells = _isolate_sqfree(fac)
        items = []
        for lo, hi in cells:
            if lo < hi:
                r = _exactify(fac, lo, hi)
                if r is not None:
                    lo = hi = r
            items.append([lo, hi, mult])
        per_factor.append((fac, items))
    # merge and refine to pairwise disjoint
    flat = [(item, fac) for fac, items in per_factor for item in items]
    flat.sort(key=lambda t: (t[0][0], t[0][1]))
    changed = True
    while changed:
        changed = False
        flat.sort(key=lambda t: (t[0][0], t[0][1]))
        for i in range(len(flat) - 1):
            a, fa = flat[i]
            b, fb = flat[i + 1]
            if a[1] >= b[0] and not (a[0] == a[1] == b[0] == b[1]):
                _narrow_inplace(fa, a)
                _narrow_inplace(fb, b)
                changed = True
    for item, fac in flat:
        roots.append(RootInterval(item[0], item[1], item[2]))
    roots.sort(key=lambda r: (r.lo, r.hi))
    return roots


def _narrow_inplace(c_sqfree: list[int], item: list) -> None:
    """One bisection step on an isolating interval (in-place [lo, hi, mult])."""
    lo, hi = item[0], item[1]
    if lo == hi:
        return
    mid = (lo + hi) / 2
    s_mid = _int_eval_sign(c_sqfree, mid.numerator, mid.denominator)
    if s_mid == 0:
        item[0] = item[1] = mid
        return
    s_lo = _int_eval_sign(c_sqfree, lo.numerator, lo.denominator)
    if s_lo == 0 or s_lo != s_mid:
        item[1] = mid
    else:
        item[0] = mid


def refine_root(u: UnivariatePolynomial, r: RootInterval, width) -> RootInterval:
    """Shrink an isolating interval of u below the requested width."""
    width = _as_rat(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if u.is_zero:
        raise ZeroPolynomial("zero polynomial")
    s = _int_squarefree(u._ints())
    if r.exact:
        if _int_eval_sign(s, r.lo.numerator, r.lo.denominator) != 0:
            raise NotIsolating("interval endpoint is not a root")
        return r
    for q in (r.lo, r.hi):
        if _int_eval_sign(s, q.numerator, q.denominator) == 0:
            raise NotIsolating("endpoint of a non-exact interval is a root")
    if _count_roots_open(s, r.lo, r.hi) != 1:
        raise NotIsolating("interval does not isolate exactly one root")
    if r.width <= width:
        return r
    item = [r.lo, r.hi, r.multiplicity]
    while item[0] != item[1] and item[1] - item[0] > width:
        _narrow_inplace(s, item)
    return RootInterval(item[0], item[1], r.multiplicity)


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------

class BivariatePolynomial:
    """Sparse exact polynomial in x and y: {(i, j): coefficient of x^i y^j}."""

    __slots__ = ("coeffs", "degree_x", "degree_y")

    def __init__(self, coeffs: Mapping[tuple[int, int], object]):
        clean = {}
        for (i, j), v in coeffs.items():
            v = _as_rat(v)
            if v != 0:
                clean[(int(i), int(j))] = v
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "degree_x",
                           max((i for i, _ in clean), default=-1 if not clean else 0)
                           if clean else -1)
        object.__setattr__(self, "degree_x",
                           max((i for i, _ in clean), default=0) if clean else -1)
        object.__setattr__(self, "degree_y",
                           max((j for _, j in clean), default=0) if clean else -1)

    def __setattr__(self, *a):
        raise AttributeError("BivariatePolynomial is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, v) -> "BivariatePolynomial":
        return cls({(0, 0): _as_rat(v)})

    @classmethod
    def var_x(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def var_y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    # -- structure --------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return "BivariatePolynomial(%s)" % (self.to_string() or "0")

    def to_string(self) -> str:
        """Canonical expression string; the CLI parser round-trips it."""
        if self.is_zero:
            return "0"
        keys = sorted(self.coeffs, key=lambda k: (-(k[0] + k[1]), -k[0], -k[1]))
        parts = []
        for k in keys:
            i, j = k
            c = self.coeffs[k]
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append("x" if i == 1 else "x^%d" % i)
            if j:
                factors.append("y" if j == 1 else "y^%d" % j)
            term = "*".join(factors)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append((" + " if c > 0 else " - ") + term)
        return "".join(parts)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BivariatePolynomial(out)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return BivariatePolynomial({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + a * b
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = BivariatePolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @staticmethod
    def _coerce(v) -> "BivariatePolynomial":
        if isinstance(v, BivariatePolynomial):
            return v
        return BivariatePolynomial.constant(v)

    # -- evaluation / specialization --------------------------------------
    def __call__(self, x, y) -> Fraction:
        x, y = _as_rat(x), _as_rat(y)
        total = Fraction(0)
        for (i, j), v in self.coeffs.items():
            total += v * x ** i * y ** j
        return total

    def specialize_x(self, x0) -> UnivariatePolynomial:
        """p(x0, y) as a polynomial in y."""
        x0 = _as_rat(x0)
        out = [Fraction(0)] * (self.degree_y + 1 if not self.is_zero else 0)
        for (i, j), v in self.coeffs.items():
            out[j] += v * x0 ** i
        return UnivariatePolynomial(out)

    def specialize_y(self, y0) -> UnivariatePolynomial:
        y0 = _as_rat(y0)
        out = [Fraction(0)] * (self.degree_x + 1 if not self.is_zero else 0)
        for (i, j), v in self.coeffs.items():
            out[i] += v * y0 ** j
        return UnivariatePolynomial(out)

    def y_coefficients(self) -> list[UnivariatePolynomial]:
        """Coefficients of y^0..y^deg as univariate polynomials in x."""
        if self.is_zero:
            return []
        rows: list[list[Fraction]] = [[Fraction(0)] * (self.degree_x + 1)
                                      for _ in range(self.degree_y + 1)]
        for (i, j), v in self.coeffs.items():
            rows[j][i] = v
        return [UnivariatePolynomial(r) for r in rows]

    def leading_y_coefficient(self) -> UnivariatePolynomial:
        return self.y_coefficients()[-1] if not self.is_zero else UnivariatePolynomial([])

    def content_y(self) -> UnivariatePolynomial:
        """gcd over Q[x] of the y-coefficients."""
        g = UnivariatePolynomial([])
        for c in self.y_coefficients():
            g = g.gcd(c) if not g.is_zero else UnivariatePolynomial(_int_primitive(c._ints()))
            if g.degree == 0:
                break
        return g

    def derivative(self, var: str) -> "BivariatePolynomial":
        if var not in ("x", "y"):
            raise ValueError("var must be 'x' or 'y'")
        out = {}
        for (i, j), v in self.coeffs.items():
            if var == "x" and i:
                out[(i - 1, j)] = out.get((i - 1, j), Fraction(0)) + i * v
            elif var == "y" and j:
                out[(i, j - 1)] = out.get((i, j - 1), Fraction(0)) + j * v
        return BivariatePolynomial(out)

    def compose_linear(self, x_of, y_of) -> "BivariatePolynomial":
        """Substitute x := x_of, y := y_of where each is (a, b, c) meaning
        a*x + b*y + c with rational entries."""
        ax, bx, cx = (_as_rat(v) for v in x_of)
        ay, by, cy = (_as_rat(v) for v in y_of)
        fx = BivariatePolynomial({(1, 0): ax, (0, 1): bx, (0, 0): cx})
        fy = BivariatePolynomial({(1, 0): ay, (0, 1): by, (0, 0): cy})
        px = _powers(fx, self.degree_x)
        py = _powers(fy, self.degree_y)
        out = BivariatePolynomial({})
        for (i, j), v in self.coeffs.items():
            out = out + v * (px[i] * py[j])
        return out

    def reversed_y(self) -> "BivariatePolynomial":
        """z^deg_y * p(x, 1/z): the y-coefficients in reverse order."""
        n = self.degree_y
        return BivariatePolynomial({(i, n - j): v for (i, j), v in self.coeffs.items()})


def _powers(p: BivariatePolynomial, n: int) -> list[BivariatePolynomial]:
    out = [BivariatePolynomial.constant(1)]
    for _ in range(n):
        out.append(out[-1] * p)
    return out


# ---------------------------------------------------------------------------
# spec operations on bivariate polynomials
# ---------------------------------------------------------------------------

def derivative(p: BivariatePolynomial, var: str) -> BivariatePolynomial:
    """Formal partial derivative of p with respect to 'x' or 'y'."""
    return p.derivative(var)


def _biv_scaled_ints(p: BivariatePolynomial) -> tuple[dict[tuple[int, int], int], int]:
    den = 1
    for v in p.coeffs.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    return {k: int(v * den) for k, v in p.coeffs.items()}, den


def _specialize_int(coeffs: dict[tuple[int, int], int], deg_y: int, x0: int) -> list[int]:
    out = [0] * (deg_y + 1)
    powers = {0: 1}
    for (i, j), v in coeffs.items():
        if i not in powers:
            powers[i] = x0 ** i
        out[j] += v * powers[i]
    return out


def _int_det_bareiss(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def _sylvester_det_int(p: list[int], q: list[int]) -> int:
    """Resultant of two integer univariate polynomials of the stated degrees
    (leading coefficients nonzero), via fraction-free elimination."""
    n = len(p) - 1
    m = len(q) - 1
    if n == 0 or m == 0:
        if n == 0:
            return p[0] ** m
        return q[0] ** n
    size = n + m
    pd = list(reversed(p))
    qd = list(reversed(q))
    rows = []
    for i in range(m):
        rows.append([0] * i + pd + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + qd + [0] * (n - 1 - i))
    assert all(len(r) == size for r in rows)
    return _int_det_bareiss(rows)


def resultant_y(p: BivariatePolynomial, q: BivariatePolynomial) -> UnivariatePolynomial:
    """Resultant of p and q with respect to y (Sylvester determinant),
    a univariate polynomial in x.

    Computed by specializing x at integer sample points, running fraction-free
    elimination on each Sylvester matrix, and interpolating; this avoids the
    coefficient blow-up of symbolic expansion while staying exact.
    """
    n, m = p.degree_y, q.degree_y
    if n <= 0 or m <= 0:
        raise DegenerateInput("resultant_y needs positive y-degree on both sides")
    pi, pden = _biv_scaled_ints(p)
    qi, qden = _biv_scaled_ints(q)
    bound = p.degree_x * m + q.degree_x * n
    lcp = p.leading_y_coefficient()
    lcq = q.leading_y_coefficient()
    xs: list[int] = []
    vals: list[Fraction] = []
    x0 = 0
    while len(xs) < bound + 1:
        for cand in (x0, -x0) if x0 else (0,):
            if len(xs) >= bound + 1:
                break
            if lcp(cand) == 0 or lcq(cand) == 0:
                continue
            ps = _specialize_int(pi, n, cand)
            qs = _specialize_int(qi, m, cand)
            det = _sylvester_det_int(ps, qs)
            # undo the scaling: res(pden*p, qden*q) = pden^m qden^n res(p, q)
            vals.append(Fraction(det, pden ** m * qden ** n))
            xs.append(cand)
        x0 += 1
    return _newton_interpolate(xs, vals)


def _newton_interpolate(xs: list[int], vals: list[Fraction]) -> UnivariatePolynomial:
    k = len(xs)
    coef = list(vals)
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form
    poly = [Fraction(0)] * k
    acc = [Fraction(1)]
    for j in range(k):
        for i, v in enumerate(acc):
            poly[i] += coef[j] * v
        # acc *= (x - xs[j])
        nxt = [Fraction(0)] * (len(acc) + 1)
        for i, v in enumerate(acc):
            nxt[i] -= v * xs[j]
            nxt[i + 1] += v
        acc = nxt
    return UnivariatePolynomial(poly)


# ---------------------------------------------------------------------------
# bivariate gcd / square-free part
# ---------------------------------------------------------------------------

def _biv_from_ycoeffs(cols: list[UnivariatePolynomial]) -> BivariatePolynomial:
    out = {}
    for j, c in enumerate(cols):
        for i, v in enumerate(c.coeffs):
            if v:
                out[(i, j)] = v
    return BivariatePolynomial(out)


def _ydeg(cols: list[UnivariatePolynomial]) -> int:
    return len(cols) - 1


def _ycoeff_trim(cols: list[UnivariatePolynomial]) -> list[UnivariatePolynomial]:
    cols = list(cols)
    while cols and cols[-1].is_zero:
        cols.pop()
    return cols


def _ycontent(cols: list[UnivariatePolynomial]) -> UnivariatePolynomial:
    g = UnivariatePolynomial([])
    for c in cols:
        if c.is_zero:
            continue
        g = c if g.is_zero else g.gcd(c)
        if g.degree == 0:
            return UnivariatePolynomial([1])
    return g if not g.is_zero else UnivariatePolynomial([1])


def _ydiv_univ(cols: list[UnivariatePolynomial], d: UnivariatePolynomial):
    out = []
    for c in cols:
        q, r = c.divmod(d)
        if not r.is_zero:
            raise ArithmeticError("inexact content division")
        out.append(q)
    return out


def _yprem(a: list[UnivariatePolynomial], b: list[UnivariatePolynomial]):
    """Pseudo-remainder in y of two polynomials in Q[x][y]."""
    a = _ycoeff_trim(list(a))
    b = _ycoeff_trim(list(b))
    da, db = _ydeg(a), _ydeg(b)
    if da < db:
        return a
    lead = b[-1]
    for _ in range(da - db + 1):
        a = [c * lead for c in a]
        a = _ycoeff_trim(a)
        if _ydeg(a) < db:
            break
        k = _ydeg(a) - db
        f, r = a[-1].divmod(lead)
        assert r.is_zero
        for i, bv in enumerate(b):
            a[i + k] = a[i + k] - f * bv
        a = _ycoeff_trim(a)
    return a


def _biv_gcd(p: BivariatePolynomial, q: BivariatePolynomial) -> BivariatePolynomial:
    if p.is_zero:
        return _biv_normalize(q)
    if q.is_zero:
        return _biv_normalize(p)
    if p.degree_y == 0 and q.degree_y == 0:
        g = p.y_coefficients()[0].gcd(q.y_coefficients()[0])
        return _biv_from_ycoeffs([g])
    a = p.y_coefficients()
    b = q.y_coefficients()
    ca, cb = _ycontent(a), _ycontent(b)
    a = _ydiv_univ(a, ca)
    b = _ydiv_univ(b, cb)
    cg = ca.gcd(cb)
    if _ydeg(a) < _ydeg(b):
        a, b = b, a
    while _ycoeff_trim(b):
        r = _yprem(a, b)
        r = _ycoeff_trim(r)
        if r:
            rc = _ycontent(r)
            r = _ydiv_univ(r, rc)
        a, b = b, r
    if _ydeg(a) == 0:
        return _biv_normalize(_biv_from_ycoeffs([cg]))
    g = _biv_from_ycoeffs([c * cg for c in a])
    return _biv_normalize(g)


def _biv_normalize(p: BivariatePolynomial) -> BivariatePolynomial:
    """Scale by a positive rational: integer-primitive, positive leading
    coefficient in (y, x)-lexicographic order."""
    if p.is_zero:
        return p
    den = 1
    for v in p.coeffs.values():
        den = den * v.denominator // math.gcd(den, v.denominator)
    num = 0
    for v in p.coeffs.values():
        num = math.gcd(num, abs(int(v * den)))
    lead = max(p.coeffs, key=lambda k: (k[1], k[0]))
    scale = Fraction(den, num)
    if p.coeffs[lead] < 0:
        scale = -scale
    return BivariatePolynomial({k: v * scale for k, v in p.coeffs.items()})


def _biv_divexact(p: BivariatePolynomial, d: BivariatePolynomial) -> BivariatePolynomial:
    if d.is_zero:
        raise ZeroDivisionError
    a = _ycoeff_trim(p.y_coefficients())
    b = _ycoeff_trim(d.y_coefficients())
    if not a:
        return BivariatePolynomial({})
    q: list[UnivariatePolynomial] = [UnivariatePolynomial([])] * (len(a) - len(b) + 1)
    while a and _ydeg(a) >= _ydeg(b):
        k = _ydeg(a) - _ydeg(b)
        f, r = a[-1].divmod(b[-1])
        if not r.is_zero:
            raise ArithmeticError("inexact bivariate division")
        q[k] = f
        for i, bv in enumerate(b):
            a[i + k] = a[i + k] - f * bv
        a = _ycoeff_trim(a)
    if a:
        raise ArithmeticError("inexact bivariate division")
    return _biv_from_ycoeffs(q)


def squarefree_part(p: BivariatePolynomial) -> BivariatePolynomial:
    """Product of the distinct irreducible factors of p, up to a positive
    rational constant; same real zero set."""
    if p.is_zero:
        raise ZeroPolynomial("squarefree_part of the zero polynomial")
    if p.total_degree == 0:
        return BivariatePolynomial.constant(1)
    g = _biv_gcd(_biv_gcd(p, p.derivative("x")), p.derivative("y"))
    if g.total_degree == 0:
        return _biv_normalize(p)
    return _biv_normalize(_biv_divexact(p, g))


def is_squarefree(p: BivariatePolynomial) -> bool:
    return not p.is_zero and squarefree_part(p) == _biv_normalize(p)


def fiber_roots(p: BivariatePolynomial, x0) -> list[RootInterval]:
    """Isolated real roots of p(x0, y), sorted increasingly."""
    u = p.specialize_x(_as_rat(x0))
    if u.is_zero:
        raise VerticalLineComponent("p(x0, .) is identically zero at x0=%s" % (x0,))
    if u.degree == 0:
        return []
    return isolate_real_roots(u)


def count_roots_in(u: UnivariatePolynomial, lo, hi, closed: bool = True) -> int:
    """Number of distinct real roots of u in the interval, exactly."""
    lo, hi = _as_rat(lo), _as_rat(hi)
    if u.is_zero:
        raise ZeroPolynomial("zero polynomial")
    if lo > hi:
        return 0
    s = _int_squarefree(u._ints())
    if len(s) <= 1:
        return 0
    n = 0
    slo = _int_eval_sign(s, lo.numerator, lo.denominator)
    shi = _int_eval_sign(s, hi.numerator, hi.denominator)
    if lo == hi:
        return 1 if (closed and slo == 0) else 0
    work = [s]
    if slo == 0:
        if closed:
            n += 1
        work = [_fraction_divout(work[0], lo)]
    if shi == 0:
        if closed:
            n += 1
        work = [_fraction_divout(work[0], hi)]
    s = work[0]
    if len(s) <= 1:
        return n
    return n + _count_roots_open(s, lo, hi)
