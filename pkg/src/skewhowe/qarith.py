"""
Exact arithmetic in Z[q, q^-1] and its fraction field Q(q).

LaurentPoly is stored densely as (low exponent, tuple of int coefficients).
RatFuncQ keeps num/den with den a polynomial in q with nonzero constant
term and positive leading coefficient, and num, den coprime over Q.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _trim(low, coeffs):
    i, j = 0, len(coeffs)
    while i < j and coeffs[i] == 0:
        i += 1
    while j > i and coeffs[j - 1] == 0:
        j -= 1
    if i == j:
        return 0, ()
    return low + i, tuple(coeffs[i:j])


class LaurentPoly:
    """Integer Laurent polynomial in q.

    >>> q = LaurentPoly.q()
    >>> str(q + q**-1)
    'q^-1 + q'
    """

    __slots__ = ("low", "cs", "_hash")

    def __init__(self, low=0, coeffs=()):
        self.low, self.cs = _trim(low, tuple(coeffs))
        self._hash = None

    @classmethod
    def _raw(cls, low, cs):
        p = cls.__new__(cls)
        p.low, p.cs = _trim(low, cs)
        p._hash = None
        return p

    @classmethod
    def from_dict(cls, d):
        d = {e: c for e, c in d.items() if c}
        if not d:
            return ZERO
        lo, hi = min(d), max(d)
        return cls._raw(lo, tuple(d.get(e, 0) for e in range(lo, hi + 1)))

    @classmethod
    def monomial(cls, e, c=1):
        return cls._raw(e, (c,))

    @classmethod
    def q(cls):
        return cls._raw(1, (1,))

    @property
    def coeffs(self):
        """Exponent -> coefficient map (nonzero entries only)."""
        return {self.low + i: c for i, c in enumerate(self.cs) if c}

    @property
    def high(self):
        return self.low + len(self.cs) - 1

    def is_zero(self):
        return not self.cs

    def is_monomial(self):
        return len(self.cs) == 1

    def __bool__(self):
        return bool(self.cs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.cs == other.cs
        if isinstance(other, RatFuncQ):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.cs)) if self.cs else 0
        return self._hash

    @staticmethod
    def const(c):
        return LaurentPoly._raw(0, (c,)) if c else ZERO

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.cs:
            return self
        if not self.cs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.cs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.cs):
            out[other.low - lo + i] += c
        return LaurentPoly._raw(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.low, tuple(-c for c in self.cs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw(self.low, tuple(c * other for c in self.cs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.cs or not other.cs:
            return ZERO
        a, b = self.cs, other.cs
        if len(a) == 1:
            return LaurentPoly._raw(self.low + other.low, tuple(a[0] * c for c in b))
        if len(b) == 1:
            return LaurentPoly._raw(self.low + other.low, tuple(b[0] * c for c in a))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly._raw(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_monomial() or abs(self.cs[0]) != 1:
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly._raw(self.low * n, (self.cs[0] ** (-n),))
        r = ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def shift(self, e):
        """Multiply by q^e."""
        return LaurentPoly._raw(self.low + e, self.cs) if self.cs else self

    def bar(self):
        """The substitution q -> q^-1."""
        return LaurentPoly._raw(-self.high, self.cs[::-1]) if self.cs else self

    def divmod_exact(self, other):
        """Return self / other if the division is exact in Z[q^±1], else None."""
        if not other.cs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.cs:
            return ZERO
        if len(other.cs) == 1:
            d = other.cs[0]
            if any(c % d for c in self.cs):
                return None
            return LaurentPoly._raw(self.low - other.low, tuple(c // d for c in self.cs))
        rem = list(self.cs)
        n, m = len(rem), len(other.cs)
        if n < m:
            return None
        lead = other.cs[-1]
        quo = [0] * (n - m + 1)
        for k in range(n - m, -1, -1):
            c = rem[k + m - 1]
            if c == 0:
                continue
            if c % lead:
                return None
            t = c // lead
            quo[k] = t
            for j, y in enumerate(other.cs):
                rem[k + j] -= t * y
        if any(rem):
            return None
        return LaurentPoly._raw(self.low - other.low, quo)

    def exact_div(self, other):
        r = self.divmod_exact(other)
        if r is None:
            raise ArithmeticError("inexact division of %s by %s" % (self, other))
        return r

    def evaluate(self, x):
        """Value at q = x (x any number type supporting ** and *)."""
        if not self.cs:
            return 0
        acc = 0
        for c in reversed(self.cs):
            acc = acc * x + c
        if self.low >= 0:
            return acc * x ** self.low
        if isinstance(x, int):
            x = Fraction(x)
        return acc / x ** (-self.low)

    def content(self):
        g = 0
        for c in self.cs:
            g = gcd(g, c)
        return g

    def __repr__(self):
        return "LaurentPoly(%s)" % self

    def __str__(self):
        return render_laurent(self)

    def __lt__(self, other):
        return (self.low, self.cs) < (other.low, other.cs)


ZERO = LaurentPoly._raw(0, ())
ONE = LaurentPoly._raw(0, (1,))
Q = LaurentPoly._raw(1, (1,))


def render_laurent(p):
    """Canonical text: ascending exponents, e.g. 'q^-2 + 2 + q^2'."""
    if isinstance(p, int):
        p = LaurentPoly.const(p)
    if not p.cs:
        return "0"
    parts = []
    for i, c in enumerate(p.cs):
        if c == 0:
            continue
        e = p.low + i
        if e == 0:
            mono = ""
        elif e == 1:
            mono = "q"
        else:
            mono = "q^%d" % e
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = "%d*%s" % (a, mono)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# --- polynomial gcd on plain coefficient lists (low -> high) ---

def _prim(cs):
    g = 0
    for c in cs:
        g = gcd(g, c)
    if g == 0:
        return cs, 0
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs], g


def _strip(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _prem(a, b):
    """Pseudo-remainder of a by b (both nonzero lists)."""
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j, y in enumerate(b):
            a[shift + j] -= la * y
        a.pop()
        _strip(a)
    return a


def poly_gcd(a, b):
    """Primitive gcd of two integer polynomials given as coefficient lists."""
    a = _strip(list(a))
    b = _strip(list(b))
    if not a:
        return _prim(b)[0] if b else []
    if not b:
        return _prim(a)[0]
    a, _ = _prim(a)
    b, _ = _prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_prim(r)[0] if r else [])
        if len(a) == 1:
            return [1]
    return _prim(a)[0]


def laurent_gcd(f, g):
    """Gcd of the polynomial parts (q-power factors removed), as a LaurentPoly with low = 0."""
    return LaurentPoly._raw(0, poly_gcd(f.cs, g.cs))


class RatFuncQ:
    """Element of Q(q) as a normalized fraction of integer Laurent polynomials."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatFuncQ) and den == 1:
            self.num, self.den, self._hash = num.num, num.den, None
            return
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if isinstance(den, int):
            den = LaurentPoly.const(den)
        if isinstance(num, RatFuncQ) or isinstance(den, RatFuncQ):
            r = RatFuncQ(num) / RatFuncQ(den)
            self.num, self.den, self._hash = r.num, r.den, None
            return
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def from_laurent(cls, p):
        return cls._raw(p, ONE)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFuncQ):
            return x
        if isinstance(x, LaurentPoly):
            return cls._raw(x, ONE)
        if isinstance(x, int):
            return cls._raw(LaurentPoly.const(x), ONE)
        if isinstance(x, Fraction):
            return cls(x.numerator, x.denominator)
        raise TypeError("cannot coerce %r to RatFuncQ" % (x,))

    @property
    def numerator(self):
        return self.num

    @property
    def denominator(self):
        return self.den

    def is_zero(self):
        return not self.num.cs

    def __bool__(self):
        return bool(self.num.cs)

    def is_laurent(self):
        return self.den.cs == (1,)

    def as_laurent(self):
        if self.den.cs != (1,):
            raise ValueError("%s is not a Laurent polynomial" % self)
        return self.num

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly, Fraction)):
            other = RatFuncQ.coerce(other)
        if not isinstance(other, RatFuncQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den.cs == (1,) else hash((self.num, self.den))
        return self._hash

    def __add__(self, other):
        try:
            other = RatFuncQ.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num.cs:
            return self
        if not self.num.cs:
            return other
        if self.den.cs == (1,) and other.den.cs == (1,):
            return RatFuncQ._raw(self.num + other.num, ONE)
        if self.den == other.den:
            return RatFuncQ(self.num + other.num, self.den)
        return RatFuncQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = RatFuncQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RatFuncQ.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num.cs or not other.num.cs:
            return RZERO
        if self.den.cs == (1,) and other.den.cs == (1,):
            return RatFuncQ._raw(self.num * other.num, ONE)
        return RatFuncQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.cs:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return RatFuncQ(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RatFuncQ.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num.cs:
            raise ZeroDivisionError("division by zero in Q(q)")
        if not self.num.cs:
            return RZERO
        if other.num.is_monomial() and other.den.cs == (1,) and self.den.cs == (1,):
            d = self.num.divmod_exact(other.num)
            if d is not None:
                return RatFuncQ._raw(d, ONE)
        return RatFuncQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFuncQ.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r = RONE
        for _ in range(n):
            r = r * self
        return r

    def bar(self):
        return RatFuncQ(self.num.bar(), self.den.bar())

    def __repr__(self):
        return "RatFuncQ(%s)" % self

    def __str__(self):
        return render(self)


def _normalize(num, den):
    if not den.cs:
        raise ZeroDivisionError("zero denominator")
    if not num.cs:
        return ZERO, ONE
    # move q-powers of den into num
    shift = den.low
    num = num.shift(-shift)
    den = LaurentPoly._raw(0, den.cs)
    if len(den.cs) > 1:
        g = poly_gcd(num.cs, den.cs)
        if len(g) > 1:
            gp = LaurentPoly._raw(0, g)
            num = num.exact_div(gp)
            den = den.exact_div(gp)
    c = gcd(num.content(), den.content())
    if den.cs[-1] < 0:
        c = -c
    if c != 1:
        num = LaurentPoly._raw(num.low, tuple(x // c for x in num.cs))
        den = LaurentPoly._raw(0, tuple(x // c for x in den.cs))
    return num, den


RZERO = RatFuncQ._raw(ZERO, ONE)
RONE = RatFuncQ._raw(ONE, ONE)


def render(x):
    """Canonical rendering of an element of Z[q^±1] or Q(q)."""
    if isinstance(x, (int, LaurentPoly)):
        return render_laurent(x)
    if x.den.cs == (1,):
        return render_laurent(x.num)
    n = render_laurent(x.num)
    d = render_laurent(x.den)
    if len(x.num.cs) > 1:
        n = "(%s)" % n
    if len(x.den.cs) > 1:
        d = "(%s)" % d
    return "%s/%s" % (n, d)


def parse_q(text):
    """Inverse of :func:`render` (accepts the canonical format only)."""
    text = text.strip()
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return RatFuncQ(_parse_laurent(text[:i]), _parse_laurent(text[i + 1:]))
    return RatFuncQ.from_laurent(_parse_laurent(text))


def _parse_laurent(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    toks = text.replace("- ", "-").replace("+ ", "+").split()
    out = {}
    for t in toks:
        sign = 1
        if t[0] in "+-":
            sign = -1 if t[0] == "-" else 1
            t = t[1:]
        if "q" not in t:
            c, e = int(t), 0
        else:
            c, _, mono = t.rpartition("*") if "*" in t else ("1", "", t)
            c = int(c)
            e = int(mono[2:]) if mono.startswith("q^") else 1
        out[e] = out.get(e, 0) + sign * c
    return LaurentPoly.from_dict(out)


# --- quantum numbers ---

@lru_cache(maxsize=None)
def quantum_integer(n):
    """[n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n]."""
    if n == 0:
        return ZERO
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPoly._raw(1 - n, tuple(1 if i % 2 == 0 else 0 for i in range(2 * n - 1)))


@lru_cache(maxsize=None)
def quantum_factorial(n):
    if n < 0:
        raise ValueError("quantum_factorial needs n >= 0, got %d" % n)
    r = ONE
    for j in range(2, n + 1):
        r = r * quantum_integer(j)
    return r


@lru_cache(maxsize=None)
def quantum_binomial(n, k):
    """Generalized quantum binomial prod_{j=1..k} [n-j+1]/[j]; n may be negative."""
    if k < 0:
        raise ValueError("quantum_binomial needs k >= 0")
    num = ONE
    for j in range(1, k + 1):
        num = num * quantum_integer(n - j + 1)
    return num.exact_div(quantum_factorial(k))


chuse = quantum_binomial


def qpow(e):
    return LaurentPoly._raw(e, (1,))


def specialize_q1(f):
    """Exact rational value at q = 1 (after the normalizing cancellation)."""
    f = RatFuncQ.coerce(f)
    d = sum(f.den.cs)
    if d == 0:
        raise ZeroDivisionError("pole at q = 1: %s" % f)
    return Fraction(sum(f.num.cs), d)
