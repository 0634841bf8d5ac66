"""Exact scalar fields: the rationals, prime fields and simple extensions.

Elements are handled in two layers.  Inside hot loops (matrices, solvers)
a field works on *raw* values: ``Fraction`` for Q, ``int`` in ``[0, p)`` for
F_p and a tuple of base raws (little-endian, length ``deg m``) for
``F[t]/(m)``.  The :class:`Scalar` wrapper gives operator syntax and field
checking on top of that for user-facing code.
"""
from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class DivisionByZero(ZeroDivisionError):
    pass


class ZeroDivisor(ArithmeticError):
    """Raised when an extension turns out to have a reducible modulus.

    ``factor`` is a nontrivial monic factor of the modulus (little-endian raw
    coefficients over the base field).
    """

    def __init__(self, message: str, factor: list):
        super().__init__(message)
        self.factor = factor


class FieldMismatch(TypeError):
    pass


class NoSuchRoot(ValueError):
    pass


class RootFindingUnsupported(NotImplementedError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _parse_fraction(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise TypeError(f"cannot read a scalar from {text!r}")


class Field:
    """Common interface.  Subclasses fill in the raw operations."""

    kind: str
    zero: object
    one: object
    characteristic: int
    order: int | None  # None when infinite

    # raw arithmetic ---------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def canon(self, a):
        return self.coerce(a)

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def fmt(self, a) -> str:
        raise NotImplementedError

    def random(self, rng: random.Random, bound: int = 5):
        raise NotImplementedError

    def elements(self) -> Iterator:
        raise TypeError(f"{self} is infinite")

    def to_json(self) -> dict:
        raise NotImplementedError

    # user-facing ------------------------------------------------------
    def __call__(self, x) -> "Scalar":
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x
        return Scalar(self, self.coerce(x))

    def sum(self, values: Iterable):
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total


class Rationals(Field):
    kind = "Q"
    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0
    order = None

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in Q")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x.value
        return _parse_fraction(x)

    def fmt(self, a):
        return str(a)

    def random(self, rng, bound=5):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def to_json(self):
        return {"kind": "Q"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    kind = "Fp"

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"{p!r} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1
        self.characteristic = p
        self.order = p

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def coerce(self, x):
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} vs {self}")
            return x.value
        q = _parse_fraction(x)
        if q.denominator % self.p == 0:
            raise DivisionByZero(f"{x!r} has denominator divisible by {self.p}")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def fmt(self, a):
        return str(a)

    def random(self, rng, bound=None):
        return rng.randrange(self.p)

    def elements(self):
        return iter(range(self.p))

    def to_json(self):
        return {"kind": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


# ---------------------------------------------------------------------------
# polynomials over a field: little-endian lists of raw coefficients


def poly_trim(F: Field, a: Sequence) -> list:
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def poly_add(F, a, b):
    n = max(len(a), len(b))
    out = [F.add(a[i] if i < len(a) else F.zero, b[i] if i < len(b) else F.zero) for i in range(n)]
    return poly_trim(F, out)


def poly_sub(F, a, b):
    n = max(len(a), len(b))
    out = [F.sub(a[i] if i < len(a) else F.zero, b[i] if i < len(b) else F.zero) for i in range(n)]
    return poly_trim(F, out)


def poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(F, out)


def poly_divmod(F, a, b):
    b = poly_trim(F, b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = poly_trim(F, a)
    q = [F.zero] * max(len(r) - len(b) + 1, 0)
    lead_inv = F.inv(b[-1])
    while len(r) >= len(b):
        c = F.mul(r[-1], lead_inv)
        shift = len(r) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, y))
        r = poly_trim(F, r)
    return poly_trim(F, q), r


def poly_monic(F, a):
    a = poly_trim(F, a)
    if not a:
        return a
    c = F.inv(a[-1])
    return [F.mul(c, x) for x in a]


def poly_gcd(F, a, b):
    a, b = poly_trim(F, a), poly_trim(F, b)
    while b:
        a, b = b, poly_divmod(F, a, b)[1]
    return poly_monic(F, a)


def poly_xgcd(F, a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = poly_trim(F, a), poly_trim(F, b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(F, s0, poly_mul(F, q, s1))
        t0, t1 = t1, poly_sub(F, t0, poly_mul(F, q, t1))
    if not r0:
        return [], s0, t0
    c = F.inv(r0[-1])
    return ([F.mul(c, x) for x in r0], [F.mul(c, x) for x in s0], [F.mul(c, x) for x in t0])


def poly_eval(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_powmod(F, base, e: int, mod):
    result = [F.one]
    base = poly_divmod(F, base, mod)[1]
    while e:
        if e & 1:
            result = poly_divmod(F, poly_mul(F, result, base), mod)[1]
        base = poly_divmod(F, poly_mul(F, base, base), mod)[1]
        e >>= 1
    return result


class Extension(Field):
    """``base[t]/(m(t))`` with ``m`` monic, user-asserted irreducible."""

    kind = "ext"

    def __init__(self, base: Field, minpoly: Sequence, gen: str = "t"):
        if not isinstance(base, (Rationals, PrimeField)):
            raise ValueError("extension base must be Q or a prime field")
        m = poly_trim(base, [base.coerce(c) for c in minpoly])
        if len(m) < 3:
            raise ValueError("minimal polynomial must have degree >= 2")
        if m[-1] != base.one:
            raise ValueError("minimal polynomial must be monic")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", gen):
            raise ValueError(f"bad generator name {gen!r}")
        self.base = base
        self.minpoly = tuple(m)
        self.gen = gen
        self.degree = d = len(m) - 1
        self.zero = tuple([base.zero] * d)
        self.one = tuple([base.one] + [base.zero] * (d - 1))
        self.characteristic = base.characteristic
        self.order = None if base.order is None else base.order ** d
        # t^k reduced mod m, for d <= k <= 2d-2
        red = {}
        cur = [base.neg(c) for c in m[:-1]]
        for k in range(d, 2 * d - 1):
            red[k] = tuple(cur)
            top = cur[-1]
            cur = [base.zero] + cur[:-1]
            cur = [base.add(cur[i], base.mul(top, base.neg(m[i]))) for i in range(d)]
        self._reduce_table = red

    def generator(self):
        return tuple(self.base.one if i == 1 else self.base.zero for i in range(self.degree))

    def add(self, a, b):
        F = self.base
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        F = self.base
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        F = self.base
        return tuple(F.neg(x) for x in a)

    def mul(self, a, b):
        F, d = self.base, self.degree
        prod = [F.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                if not F.is_zero(y):
                    prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if F.is_zero(c):
                continue
            row = self._reduce_table[k]
            for i in range(d):
                out[i] = F.add(out[i], F.mul(c, row[i]))
        return tuple(out)

    def inv(self, a):
        F = self.base
        if all(F.is_zero(x) for x in a):
            raise DivisionByZero(f"inverse of 0 in {self}")
        g, s, _ = poly_xgcd(F, list(a), list(self.minpoly))
        if len(g) > 1:
            raise ZeroDivisor(f"{self.fmt(a)} is a zero divisor; modulus has factor {g}", g)
        out = list(s) + [F.zero] * (self.degree - len(s))
        return tuple(out)

    def from_int(self, n):
        return tuple(self.base.from_int(n) if i == 0 else self.base.zero for i in range(self.degree))

    def embed(self, c):
        return tuple(c if i == 0 else self.base.zero for i in range(self.degree))

    def coerce(self, x):
        if isinstance(x, Scalar):
            if x.field == self:
                return x.value
            if x.field == self.base:
                return self.embed(x.value)
            raise FieldMismatch(f"{x.field} vs {self}")
        if isinstance(x, tuple) and len(x) == self.degree:
            return tuple(self.base.coerce(c) for c in x)
        if isinstance(x, list):
            coeffs = [self.base.coerce(c) for c in x]
            return self._reduce_poly(coeffs)
        if isinstance(x, str):
            return self._parse(x)
        return self.embed(self.base.coerce(x))

    def _reduce_poly(self, coeffs):
        _, r = poly_divmod(self.base, coeffs, list(self.minpoly))
        return tuple(r + [self.base.zero] * (self.degree - len(r)))

    _TERM = re.compile(r"\s*([+-]?)\s*([^+\-\s][^+\-]*)")

    def _parse(self, text: str):
        F = self.base
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        coeffs = [F.zero] * self.degree
        acc: dict[int, object] = {}
        pos = 0
        for m in re.finditer(r"([+-]?)([^+-]+)", s):
            if m.start() != pos:
                raise ValueError(f"cannot parse {text!r}")
            pos = m.end()
            sign, body = m.group(1), m.group(2)
            power = 0
            coef = F.one
            parts = body.split("*")
            for part in parts:
                if part == self.gen:
                    power += 1
                elif part.startswith(self.gen + "^"):
                    power += int(part[len(self.gen) + 1:])
                else:
                    coef = F.mul(coef, F.coerce(part))
            if sign == "-":
                coef = F.neg(coef)
            acc[power] = F.add(acc.get(power, F.zero), coef)
        if pos != len(s):
            raise ValueError(f"cannot parse {text!r}")
        poly = [F.zero] * (max(acc) + 1)
        for k, v in acc.items():
            poly[k] = v
        coeffs = self._reduce_poly(poly)
        return coeffs

    def fmt(self, a):
        F = self.base
        terms = []
        for k, c in enumerate(a):
            if F.is_zero(c):
                continue
            mono = "" if k == 0 else (self.gen if k == 1 else f"{self.gen}^{k}")
            cs = F.fmt(c)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def random(self, rng, bound=5):
        return tuple(self.base.random(rng, bound) for _ in range(self.degree))

    def elements(self):
        if self.order is None:
            raise TypeError(f"{self} is infinite")
        import itertools

        for combo in itertools.product(range(self.base.p), repeat=self.degree):
            yield tuple(combo)

    def to_json(self):
        return {
            "kind": "ext",
            "base": self.base.to_json(),
            "minpoly": [self.base.fmt(c) for c in self.minpoly],
            "gen": self.gen,
        }

    def __eq__(self, other):
        return isinstance(other, Extension) and other.base == self.base and other.minpoly == self.minpoly

    def __hash__(self):
        return hash(("ext", self.base, self.minpoly))

    def __repr__(self):
        return f"{self.base!r}[{self.gen}]/({self.base.fmt(self.minpoly[0])}..)"


Q = Rationals()


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"bad field description {obj!r}")
    kind = obj["kind"]
    if kind == "Q":
        return Q
    if kind == "Fp":
        return PrimeField(int(obj["p"]))
    if kind == "ext":
        return Extension(field_from_json(obj["base"]), obj["minpoly"], obj.get("gen", "t"))
    raise ValueError(f"unknown field kind {kind!r}")


def parse_field(text: str) -> Field:
    """Short textual names used on the command line: ``Q``, ``F13``, ``Fp:13``."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return Q
    m = re.fullmatch(r"F(?:p:)?_?(\d+)", t)
    if m:
        return PrimeField(int(m.group(1)))
    raise ValueError(f"unknown field {text!r}")


class Scalar:
    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, o):
        if isinstance(o, Scalar):
            if o.field != self.field:
                raise FieldMismatch(f"{o.field} vs {self.field}")
            return o.value
        return self.field.coerce(o)

    def __add__(self, o):
        return Scalar(self.field, self.field.add(self.value, self._other(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return Scalar(self.field, self.field.sub(self.value, self._other(o)))

    def __rsub__(self, o):
        return Scalar(self.field, self.field.sub(self._other(o), self.value))

    def __mul__(self, o):
        return Scalar(self.field, self.field.mul(self.value, self._other(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return Scalar(self.field, self.field.div(self.value, self._other(o)))

    def __rtruediv__(self, o):
        return Scalar(self.field, self.field.div(self._other(o), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return Scalar(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __eq__(self, o):
        try:
            return self.value == self._other(o)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"Scalar({self.field!r}, {self.field.fmt(self.value)})"

    def __str__(self):
        return self.field.fmt(self.value)


def field_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op](b)


# ---------------------------------------------------------------------------
# roots of unity and root finding


def cyclotomic_int(n: int) -> list[int]:
    """Integer coefficients of the n-th cyclotomic polynomial, little-endian."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            den = cyclotomic_int(d)
            # exact integer division, den monic
            q = [0] * (len(num) - len(den) + 1)
            r = num[:]
            for k in range(len(q) - 1, -1, -1):
                c = r[k + len(den) - 1]
                q[k] = c
                for i, y in enumerate(den):
                    r[k + i] -= c * y
            num = q
    return num


def root_of_unity(F: Field, n: int) -> Scalar:
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(F, PrimeField):
        p = F.p
        if (p - 1) % n:
            raise NoSuchRoot(f"{n} does not divide {p - 1}")
        primes = [q for q in range(2, n + 1) if n % q == 0 and is_prime(q)]
        for r in range(1, p):
            if pow(r, n, p) == 1 and all(pow(r, n // q, p) != 1 for q in primes):
                return F(r)
        raise NoSuchRoot("unreachable")
    if isinstance(F, Extension):
        target = [F.base.from_int(c) for c in cyclotomic_int(n)]
        if tuple(target) != F.minpoly:
            raise NoSuchRoot(f"modulus is not the {n}-th cyclotomic polynomial")
        return Scalar(F, F.generator())
    if n == 1:
        return F(1)
    if n == 2:
        return F(-1)
    raise NoSuchRoot(f"Q has no primitive {n}-th root of unity")


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    F = Q
    poly = poly_trim(F, coeffs)
    roots: list[Fraction] = []
    while poly and F.is_zero(poly[0]):
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        poly = poly[1:]
    if len(poly) <= 1:
        return roots
    den = 1
    for c in poly:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in poly]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]

    def deflate(ps, r):
        q, rem = poly_divmod(F, [Fraction(c) for c in ps], [-r, Fraction(1)])
        assert not rem
        return q

    candidates: list[Fraction] = []
    try:
        import numpy as np

        approx = np.roots([float(c) for c in reversed(ints)])
        for z in approx:
            if abs(z.imag) <= 1e-6 * max(1.0, abs(z.real)):
                candidates.append(Fraction(float(z.real)).limit_denominator(abs(ints[-1]) or 1))
                candidates.append(Fraction(round(z.real * ints[-1]), ints[-1]))
    except (ImportError, OverflowError, ValueError):
        pass
    cur = [Fraction(c) for c in ints]
    for r in candidates:
        if len(cur) <= 1:
            break
        if r not in roots and poly_eval(F, cur, r) == 0:
            roots.append(r)
            cur = deflate(cur, r)
    if len(cur) > 2 and abs(int(cur[0] * cur[-1].denominator)) < 10**7 and abs(ints[-1]) < 10**7:
        # exhaustive rational-root theorem on whatever numerics missed
        a0 = int(cur[0] * math.lcm(*[c.denominator for c in cur]))
        an = int(cur[-1] * math.lcm(*[c.denominator for c in cur]))
        if a0 != 0:
            for p_ in _divisors(abs(a0)):
                for q_ in _divisors(abs(an)):
                    for r in (Fraction(p_, q_), Fraction(-p_, q_)):
                        if len(cur) > 1 and r not in roots and poly_eval(F, cur, r) == 0:
                            roots.append(r)
                            cur = deflate(cur, r)
    if len(cur) == 2:
        r = -cur[0] / cur[1]
        if r not in roots:
            roots.append(r)
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def poly_roots(F: Field, coeffs: Sequence, rng: random.Random | None = None) -> list:
    """Distinct roots of a polynomial that lie in ``F`` (raw values).

    Exhaustive for Q and finite fields.  Number fields are not supported.
    """
    poly = poly_trim(F, list(coeffs))
    if not poly:
        raise ValueError("zero polynomial")
    if isinstance(F, Rationals):
        return sorted(_rational_roots(poly))
    if F.order is None:
        raise RootFindingUnsupported(f"root finding over {F!r} is not supported")
    if F.order <= 50000:
        return [x for x in F.elements() if F.is_zero(poly_eval(F, poly, x))]
    q = F.order
    if q % 2 == 0:
        raise RootFindingUnsupported("root finding in large fields of characteristic 2")
    rng = rng or random.Random(0)
    x = [F.zero, F.one]
    lin = poly_gcd(F, poly, poly_sub(F, poly_powmod(F, x, q, poly), x))
    roots: list = []

    def split(f):
        if len(f) <= 1:
            return
        if len(f) == 2:
            roots.append(F.neg(f[0]))
            return
        while True:
            a = F.random(rng)
            h = poly_powmod(F, [a, F.one], (q - 1) // 2, f)
            g = poly_gcd(F, f, poly_sub(F, h, [F.one]))
            if 1 < len(g) < len(f):
                split(g)
                split(poly_divmod(F, f, g)[0])
                return

    split(lin)
    return roots
