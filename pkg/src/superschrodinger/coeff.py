"""Exact scalar arithmetic over the lowest-weight parameters.

Every coefficient in the engine is a rational function in the four weight
parameters (d, m, j, r), kept in a canonical reduced form so that equality
is a syntactic check: a polynomial is a sparse integer-coefficient map from
exponent 4-tuples ordered lexicographically, and a rational function is a
pair num/den with gcd(num, den) = 1, den != 0 and the leading coefficient
of den positive.  Zero is 0/1.

For the N=1 superalgebra in (1+1) dimensions the ring carries one extra odd
generator chi with chi**2 = m/2, so a :class:`Scalar` splits into an even
part and an odd part (the coefficient of chi).  Odd scalars pick up a minus
sign whenever they cross an odd generator or an odd monomial; that sign is
applied by :meth:`Scalar.twist` at each crossing, never inside ring
products (chi*chi contracts directly to m/2).

Scalars are immutable and carry their parameter bindings in a
:class:`ParamContext`; mixing scalars from incompatible contexts raises
:class:`~superschrodinger.errors.BindingError`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    BindingError,
    OddInversionError,
    ZeroDenominatorError,
    ZeroDivisorError,
)

PARAMS = ("d", "m", "j", "r")
_NVARS = len(PARAMS)
_ZEXP = (0,) * _NVARS


class ExactDivisionError(ArithmeticError):
    """Internal: polynomial division left a remainder."""


# ---------------------------------------------------------------------------
# integer-coefficient sparse polynomials


class Poly:
    """Sparse polynomial in (d, m, j, r) with integer coefficients.

    ``terms`` maps exponent 4-tuples to nonzero ints; monomials compare
    lexicographically in the fixed variable order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = terms

    @staticmethod
    def const(c):
        c = int(c)
        return Poly({_ZEXP: c} if c else {})

    @staticmethod
    def variable(name):
        i = PARAMS.index(name)
        exp = tuple(1 if k == i else 0 for k in range(_NVARS))
        return Poly({exp: 1})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and _ZEXP in self.terms)

    def is_one(self):
        return self.terms == {_ZEXP: 1}

    def const_value(self):
        return self.terms.get(_ZEXP, 0)

    def leading(self):
        return max(self.terms)

    def leading_coeff(self):
        return self.terms[max(self.terms)]

    def variables(self):
        """Indices of variables actually present."""
        out = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    out.add(i)
        return out

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            n = out.get(e, 0) + c
            if n:
                out[e] = n
            else:
                out.pop(e, None)
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return Poly({})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                n = out.get(e, 0) + c1 * c2
                if n:
                    out[e] = n
                else:
                    out.pop(e, None)
        return Poly(out)

    def scale(self, c):
        c = int(c)
        if not c:
            return Poly({})
        return Poly({e: k * c for e, k in self.terms.items()})

    def __pow__(self, n):
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def int_content(self):
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
        return g

    def exact_div(self, other):
        """Quotient self/other when the division is exact over Z[d,m,j,r]."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly({})
        rem = dict(self.terms)
        lo = other.leading()
        lco = other.terms[lo]
        q = {}
        while rem:
            lr = max(rem)
            lcr = rem[lr]
            exp = tuple(a - b for a, b in zip(lr, lo))
            if any(e < 0 for e in exp) or lcr % lco:
                raise ExactDivisionError(f"{self} not divisible by {other}")
            qc = lcr // lco
            q[exp] = qc
            for eo, co in other.terms.items():
                e = tuple(a + b for a, b in zip(exp, eo))
                n = rem.get(e, 0) - qc * co
                if n:
                    rem[e] = n
                else:
                    rem.pop(e, None)
        return Poly(q)

    def subs(self, values):
        """Substitute Fractions for variables; returns (poly, positive int den)."""
        if self.is_zero() or not values:
            return self, 1
        acc = {}
        for exp, c in self.terms.items():
            f = Fraction(c)
            nexp = list(exp)
            for i, val in values.items():
                e = exp[i]
                if e:
                    f *= val ** e
                nexp[i] = 0
            key = tuple(nexp)
            f0 = acc.get(key)
            acc[key] = f if f0 is None else f0 + f
        den = 1
        for f in acc.values():
            den = den * f.denominator // math.gcd(den, f.denominator)
        terms = {}
        for key, f in acc.items():
            c = int(f * den)
            if c:
                terms[key] = c
        return Poly(terms), den

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            factors = []
            for name, e in zip(PARAMS, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}**{e}")
            if not factors:
                body = str(abs(c))
            else:
                body = "*".join(factors)
                if abs(c) != 1:
                    body = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def _poly_sign_normalized(p):
    if not p.is_zero() and p.leading_coeff() < 0:
        return -p, -1
    return p, 1


def _int_content_primitive(p):
    c = p.int_content()
    if c in (0, 1):
        return c, p
    return c, Poly({e: k // c for e, k in p.terms.items()})


def _to_uni(p, v):
    """View p as univariate in variable v: dict degree -> coefficient Poly."""
    out = {}
    for exp, c in p.terms.items():
        d = exp[v]
        rest = tuple(0 if i == v else e for i, e in enumerate(exp))
        coeff = out.setdefault(d, {})
        coeff[rest] = coeff.get(rest, 0) + c
    return {d: Poly({e: c for e, c in t.items() if c}) for d, t in out.items()}


def _from_uni(u, v):
    out = {}
    for d, p in u.items():
        for exp, c in p.terms.items():
            e = tuple(d if i == v else ei for i, ei in enumerate(exp))
            out[e] = c
    return Poly({e: c for e, c in out.items() if c})


def _poly_seq_gcd(polys):
    g = Poly({})
    for p in polys:
        g = poly_gcd(g, p)
        if g.is_one():
            return g
    return g


def _uni_pseudo_rem(f, g, v):
    """Pseudo-remainder of univariate (in v) polynomials with Poly coefficients."""
    dg = max(g)
    lcg = g[dg]
    r = dict(f)
    while r:
        dr = max(r)
        if dr < dg:
            break
        lcr = r[dr]
        new = {}
        for e, p in r.items():
            q = p * lcg
            if not q.is_zero():
                new[e] = q
        for e, p in g.items():
            k = e + dr - dg
            q = new.get(k, Poly({})) - p * lcr
            if q.is_zero():
                new.pop(k, None)
            else:
                new[k] = q
        new.pop(dr, None)
        r = new
    return r


def _uni_primitive(u):
    if not u:
        return u
    cont = _poly_seq_gcd(list(u.values()))
    if cont.is_one():
        return u
    return {d: p.exact_div(cont) for d, p in u.items()}


def poly_gcd(a, b):
    """Gcd over Z[d,m,j,r], positive leading coefficient; gcd(0, p) = +-p."""
    if a.is_zero():
        return _poly_sign_normalized(b)[0]
    if b.is_zero():
        return _poly_sign_normalized(a)[0]
    ca, pa = _int_content_primitive(a)
    cb, pb = _int_content_primitive(b)
    c = math.gcd(ca, cb)
    if pa.is_const() or pb.is_const():
        return Poly.const(c)
    vs = pa.variables() | pb.variables()
    v = min(vs)
    ua, ub = _to_uni(pa, v), _to_uni(pb, v)
    conta = _poly_seq_gcd(list(ua.values()))
    contb = _poly_seq_gcd(list(ub.values()))
    cont = poly_gcd(conta, contb)
    f = _uni_primitive(ua)
    g = _uni_primitive(ub)
    if max(f) < max(g):
        f, g = g, f
    while g:
        r = _uni_pseudo_rem(f, g, v)
        f, g = g, _uni_primitive(r)
    prim = _from_uni(f, v)
    prim, _ = _poly_sign_normalized(prim)
    out = prim * cont if not cont.is_one() else prim
    if c != 1:
        out = out.scale(c)
    return _poly_sign_normalized(out)[0]


# ---------------------------------------------------------------------------
# reduced rational functions


class RatF:
    """Rational function num/den in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    @staticmethod
    def make(num, den):
        if den.is_zero():
            raise ZeroDenominatorError("zero denominator")
        if num.is_zero():
            return RatF(Poly({}), Poly.const(1))
        if num.is_const() and den.is_const():
            return RatF.from_fraction(Fraction(num.const_value(), den.const_value()))
        g = poly_gcd(num, den)
        if not g.is_one():
            num = num.exact_div(g)
            den = den.exact_div(g)
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return RatF(num, den)

    @staticmethod
    def from_fraction(f):
        f = Fraction(f)
        return RatF(Poly.const(f.numerator), Poly.const(f.denominator))

    @staticmethod
    def from_poly(p):
        return RatF(p, Poly.const(1))

    def is_zero(self):
        return self.num.is_zero()

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def as_fraction(self):
        if not self.is_const():
            raise BindingError(f"not a constant: {self}")
        return Fraction(self.num.const_value(), self.den.const_value())

    def __neg__(self):
        return RatF(-self.num, self.den)

    def __add__(self, other):
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatF.make(self.num + other.num, self.den)
        return RatF.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return RatF(Poly({}), Poly.const(1))
        return RatF.make(self.num * other.num, self.den * other.den)

    def inv(self):
        if self.num.is_zero():
            raise ZeroDenominatorError("inverse of zero")
        return RatF.make(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inv()

    def subs(self, values):
        num, dn = self.num.subs(values)
        den, dd = self.den.subs(values)
        if den.is_zero():
            raise ZeroDenominatorError(
                "substitution annihilates the denominator " f"of {self}"
            )
        return RatF.make(num.scale(dd), den.scale(dn))

    def __eq__(self, other):
        return (
            isinstance(other, RatF) and self.num == other.num and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    __repr__ = __str__


_RF_ZERO = RatF(Poly({}), Poly.const(1))
_RF_ONE = RatF(Poly.const(1), Poly.const(1))


# ---------------------------------------------------------------------------
# parameter bindings and the chi-extended scalar ring


def parse_binding_value(text):
    """Parse an exact rational given as 'p', 'p/q' or '-p/q'."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise BindingError(f"not an exact rational: {text!r}") from exc


class ParamContext:
    """Immutable set of parameter bindings plus the odd-extension flag.

    A parameter is either bound to an exact rational or left symbolic.
    Binding m to zero is rejected: the whole construction lives in the
    massive case.  ``allow_odd`` switches on the chi generator; only the
    (1+1)-dimensional N=1 algebra uses it.
    """

    __slots__ = ("bindings", "allow_odd", "_subs", "_key")

    def __init__(self, bindings=None, allow_odd=False):
        clean = {}
        for name, value in (bindings or {}).items():
            if name not in PARAMS:
                raise BindingError(f"unknown parameter {name!r}")
            if value is None:
                continue
            value = Fraction(value)
            if name == "m" and value == 0:
                raise BindingError("m = 0 is out of range (massive case only)")
            clean[name] = value
        self.bindings = clean
        self.allow_odd = bool(allow_odd)
        self._subs = {PARAMS.index(k): v for k, v in clean.items()}
        self._key = (tuple(sorted(clean.items())), self.allow_odd)

    def __eq__(self, other):
        return isinstance(other, ParamContext) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.bindings.items()))
        return f"ParamContext({inner})" + (" + chi" if self.allow_odd else "")

    def is_bound(self, name):
        return name in self.bindings

    def merged(self, new_bindings):
        merged = dict(self.bindings)
        for name, value in new_bindings.items():
            if value is None:
                continue
            value = Fraction(value)
            if name in merged:
                if merged[name] != value:
                    raise BindingError(f"parameter {name} already bound")
                continue
            merged[name] = value
        return ParamContext(merged, self.allow_odd)

    # -- scalar constructors ------------------------------------------------

    def scalar(self, value):
        """Constant scalar from an int or Fraction."""
        return Scalar(self, RatF.from_fraction(Fraction(value)), _RF_ZERO)

    def zero(self):
        return Scalar(self, _RF_ZERO, _RF_ZERO)

    def one(self):
        return Scalar(self, _RF_ONE, _RF_ZERO)

    def param(self, name):
        """The parameter as a scalar: a constant when bound, symbolic otherwise."""
        if name not in PARAMS:
            raise BindingError(f"unknown parameter {name!r}")
        if name in self.bindings:
            return self.scalar(self.bindings[name])
        return Scalar(self, RatF.from_poly(Poly.variable(name)), _RF_ZERO)

    def chi(self):
        if not self.allow_odd:
            raise BindingError("this context has no odd generator")
        return Scalar(self, _RF_ZERO, _RF_ONE)

    def chi_squared(self):
        """The even value of chi**2, i.e. m/2 under the current bindings."""
        return self.param("m").even * RatF.from_fraction(Fraction(1, 2))


class Scalar:
    """Element even + odd*chi of the coefficient ring.

    The odd part is identically zero unless the context allows chi.  Ring
    products contract chi*chi to m/2; the anticommutation sign of chi
    against odd generators is applied externally via :meth:`twist`.
    """

    __slots__ = ("ctx", "even", "odd")

    def __init__(self, ctx, even, odd):
        self.ctx = ctx
        self.even = even
        self.odd = odd

    def _join(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        if self.ctx != other.ctx:
            raise BindingError("scalars from different parameter bindings")
        return other

    def is_zero(self):
        return self.even.is_zero() and self.odd.is_zero()

    def has_odd(self):
        return not self.odd.is_zero()

    def __neg__(self):
        return Scalar(self.ctx, -self.even, -self.odd)

    def __add__(self, other):
        other = self._join(other)
        return Scalar(self.ctx, self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._join(other))

    def __rsub__(self, other):
        return self._join(other) - self

    def __mul__(self, other):
        other = self._join(other)
        even = self.even * other.even
        if not (self.odd.is_zero() or other.odd.is_zero()):
            even = even + self.odd * other.odd * self.ctx.chi_squared()
        odd = self.even * other.odd + self.odd * other.even
        return Scalar(self.ctx, even, odd)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse; defined only for even scalars."""
        if not self.odd.is_zero():
            raise OddInversionError("odd part nonzero; chi is not invertible here")
        return Scalar(self.ctx, self.even.inv(), _RF_ZERO)

    def field_inv(self):
        """Inverse in the chi-extension via the conjugate and the norm.

        Used by the elimination kernels; when m/2 is a rational square the
        extension has zero divisors and the norm may vanish.
        """
        if self.odd.is_zero():
            return self.inv()
        norm = self.even * self.even - self.odd * self.odd * self.ctx.chi_squared()
        if norm.is_zero():
            raise ZeroDivisorError(
                "zero divisor in the chi extension; bind m so that m/2 "
                "is not a rational square"
            )
        ninv = norm.inv()
        return Scalar(self.ctx, self.even * ninv, -(self.odd * ninv))

    def twist(self):
        """Sign flip of the odd part: chi crossing an odd object."""
        if self.odd.is_zero():
            return self
        return Scalar(self.ctx, self.even, -self.odd)

    def even_part(self):
        return Scalar(self.ctx, self.even, _RF_ZERO)

    def odd_coefficient(self):
        """The coefficient of chi, as an even scalar."""
        return Scalar(self.ctx, self.odd, _RF_ZERO)

    def bind(self, bindings):
        """Substitute additional parameter bindings and recanonicalize."""
        ctx = self.ctx.merged(bindings)
        subs = {
            PARAMS.index(k): v
            for k, v in ctx.bindings.items()
            if k not in self.ctx.bindings
        }
        return Scalar(ctx, self.even.subs(subs), self.odd.subs(subs))

    def is_rational(self):
        return self.odd.is_zero() and self.even.is_const()

    def as_fraction(self):
        if not self.odd.is_zero():
            raise BindingError(f"odd part nonzero: {self}")
        return self.even.as_fraction()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.scalar(other)
        return (
            isinstance(other, Scalar)
            and self.ctx == other.ctx
            and self.even == other.even
            and self.odd == other.odd
        )

    def __hash__(self):
        return hash((self.even, self.odd))

    def __str__(self):
        if self.odd.is_zero():
            return str(self.even)
        odd = str(self.odd)
        if not (self.odd.den.is_one() and len(self.odd.num.terms) == 1):
            odd = f"({odd})"
        odd = "chi" if odd == "1" else ("-chi" if odd == "-1" else f"{odd}*chi")
        if self.even.is_zero():
            return odd
        return f"{self.even} + {odd}" if not odd.startswith("-") else f"{self.even} - {odd[1:]}"

    __repr__ = __str__

    # -- serialization -------------------------------------------------------

    def to_json(self):
        out = {"even": _ratf_to_json(self.even)}
        if not self.odd.is_zero():
            out["odd"] = _ratf_to_json(self.odd)
        return out

    @staticmethod
    def from_json(ctx, data):
        even = _ratf_from_json(data["even"])
        odd = _ratf_from_json(data["odd"]) if "odd" in data else _RF_ZERO
        if not odd.is_zero() and not ctx.allow_odd:
            raise BindingError("odd scalar in a context without chi")
        return Scalar(ctx, even, odd)


def _poly_to_json(p):
    return [[c, list(e)] for e, c in sorted(p.terms.items(), reverse=True)]


def _poly_from_json(data):
    terms = {}
    for c, e in data:
        if len(e) != _NVARS or any(x < 0 for x in e):
            raise BindingError("malformed polynomial exponents")
        c = int(c)
        if c:
            terms[tuple(int(x) for x in e)] = c
    return Poly(terms)


def _ratf_to_json(r):
    return {"num": _poly_to_json(r.num), "den": _poly_to_json(r.den)}


def _ratf_from_json(data):
    return RatF.make(_poly_from_json(data["num"]), _poly_from_json(data["den"]))
