"""Universal enveloping superalgebra: PBW monomials and normal ordering.

A PBW monomial is an exponent tuple over the algebra's ordered generator
list (raising part, Cartan-like part, lowering part); odd generators carry
exponent 0 or 1.  Words rewrite to normal form by swapping misordered
adjacent factors,

    x y = (-1)^{p(x)p(y)} y x + [x, y],

with the square of an odd generator contracting through its
anticommutator, x x = {x, x}/2.  Every swap strictly decreases the number
of inversions of the word and every bracket term is shorter, so rewriting
terminates; structure constants are rational, so the engine works over
plain fractions and parameter-dependent scalars only enter through module
actions and explicit coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import ParamContext, Scalar
from .errors import EngineError

_ONE = Fraction(1)


def mono_unit(alg):
    return (0,) * alg.n_gens


def mono_of_gen(alg, i):
    return tuple(1 if k == i else 0 for k in range(alg.n_gens))


def word_of(mono):
    """Expand an exponent tuple into the ascending generator word."""
    out = []
    for i, e in enumerate(mono):
        out.extend([i] * e)
    return tuple(out)


def mono_parity(alg, mono):
    p = 0
    for i, e in enumerate(mono):
        if alg.odd[i]:
            p ^= e & 1
    return p


def mono_degree(alg, mono):
    deg = [0] * alg.grading_rank
    for i, e in enumerate(mono):
        if e:
            for c, component in enumerate(alg.degrees[i]):
                deg[c] += e * component
    return tuple(deg)


def mono_str(alg, mono):
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(alg.gen_name(i))
        elif e > 1:
            parts.append(f"{alg.gen_name(i)}^{e}")
    return "*".join(parts) if parts else "1"


def _mono_from_word(word, n):
    exps = [0] * n
    for i in word:
        exps[i] += 1
    return tuple(exps)


def nf_word(alg, word):
    """Normal form of a generator-index word: dict monomial -> Fraction."""
    cache = alg._nf_cache
    hit = cache.get(word)
    if hit is not None:
        return hit
    odd = alg.odd
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if a < b or (a == b and not odd[a]):
            continue
        left, right = word[:i], word[i + 2:]
        out = {}
        if a == b:
            # odd square: x*x = {x, x}/2
            for c, k in alg.bracket_terms(a, a):
                _acc(out, nf_word(alg, left + (k,) + right), c / 2)
        else:
            sign = -1 if (odd[a] and odd[b]) else 1
            _acc(out, nf_word(alg, left + (b, a) + right), Fraction(sign))
            for c, k in alg.bracket_terms(a, b):
                _acc(out, nf_word(alg, left + (k,) + right), c)
        cache[word] = out
        return out
    out = {_mono_from_word(word, alg.n_gens): _ONE}
    cache[word] = out
    return out


def _acc(target, source, factor):
    if not factor:
        return
    for k, v in source.items():
        n = target.get(k)
        n = v * factor if n is None else n + v * factor
        if n:
            target[k] = n
        else:
            del target[k]


class EnvelopeElement:
    """Finite scalar combination of PBW monomials of one algebra.

    Terms map exponent tuples to nonzero :class:`~superschrodinger.coeff.Scalar`
    coefficients; coefficients stand to the left of their monomial.
    """

    __slots__ = ("alg", "ctx", "terms")

    def __init__(self, alg, ctx, terms):
        self.alg = alg
        self.ctx = ctx
        self.terms = terms

    @staticmethod
    def zero(alg, ctx=None):
        return EnvelopeElement(alg, ctx or ParamContext(), {})

    @staticmethod
    def unit(alg, ctx=None):
        ctx = ctx or ParamContext()
        return EnvelopeElement(alg, ctx, {mono_unit(alg): ctx.one()})

    @staticmethod
    def generator(alg, name, ctx=None):
        ctx = ctx or ParamContext()
        return EnvelopeElement(alg, ctx, {mono_of_gen(alg, alg.index[name]): ctx.one()})

    @staticmethod
    def from_terms(alg, ctx, terms):
        clean = {m: c for m, c in terms.items() if not c.is_zero()}
        return EnvelopeElement(alg, ctx, clean)

    def _join(self, other):
        if self.alg is not other.alg:
            raise EngineError("envelope elements over different algebras")
        if self.ctx != other.ctx:
            raise EngineError("envelope elements over different bindings")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._join(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            n = out.get(m)
            n = c if n is None else n + c
            if n.is_zero():
                out.pop(m, None)
            else:
                out[m] = n
        return EnvelopeElement(self.alg, self.ctx, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return EnvelopeElement(self.alg, self.ctx, {m: -c for m, c in self.terms.items()})

    def scaled(self, scalar):
        """Left multiplication by a scalar (no crossing, plain ring product)."""
        if isinstance(scalar, (int, Fraction)):
            scalar = self.ctx.scalar(scalar)
        if scalar.is_zero():
            return EnvelopeElement(self.alg, self.ctx, {})
        out = {}
        for m, c in self.terms.items():
            n = scalar * c
            if not n.is_zero():
                out[m] = n
        return EnvelopeElement(self.alg, self.ctx, out)

    def __mul__(self, other):
        return env_multiply(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, EnvelopeElement)
            and self.alg is other.alg
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset((m, c) for m, c in self.terms.items()))

    def monomials(self):
        """Monomials in the canonical (descending) order, leading first."""
        return sorted(self.terms, reverse=True)

    def leading(self):
        if not self.terms:
            raise EngineError("zero element has no leading monomial")
        return max(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in self.monomials():
            c = self.terms[m]
            cs = str(c)
            if cs == "1" and any(m):
                bits.append(mono_str(self.alg, m))
            elif any(m):
                if "+" in cs[1:] or "-" in cs[1:] or "/" in cs or " " in cs:
                    cs = f"({cs})"
                bits.append(f"{cs}*{mono_str(self.alg, m)}")
            else:
                bits.append(f"({cs})" if " " in cs else cs)
        return " + ".join(bits)

    __repr__ = __str__


def normal_order(alg, word, ctx=None):
    """Normal-order a word of generator names into an EnvelopeElement."""
    ctx = ctx or ParamContext()
    idx = tuple(alg.index[g] for g in word)
    terms = {}
    for m, q in nf_word(alg, idx).items():
        terms[m] = ctx.scalar(q)
    return EnvelopeElement(alg, ctx, terms)


def env_multiply(a, b):
    """Associative product with the result in PBW normal form."""
    a._join(b)
    alg, ctx = a.alg, a.ctx
    out = {}
    for ma, ca in a.terms.items():
        pa = mono_parity(alg, ma)
        wa = word_of(ma)
        for mb, cb in b.terms.items():
            # coefficient of b crosses the monomial of a
            c = ca * (cb.twist() if pa else cb)
            if c.is_zero():
                continue
            for m, q in nf_word(alg, wa + word_of(mb)).items():
                n = out.get(m)
                n = c * q if n is None else n + c * q
                if n.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = n
    return EnvelopeElement(alg, ctx, out)


def env_power(a, n):
    out = EnvelopeElement.unit(a.alg, a.ctx)
    for _ in range(n):
        out = env_multiply(out, a)
    return out


def omega_extend(a):
    """Anti-multiplicative extension of omega, re-normal-ordered.

    omega(x1 x2 ... xk) = omega(xk) ... omega(x1); coefficients keep their
    ring value but cross the (parity-preserving) image monomial.
    """
    alg, ctx = a.alg, a.ctx
    out = {}
    for m, c in a.terms.items():
        w = tuple(alg.omega_index(i) for i in reversed(word_of(m)))
        if mono_parity(alg, m):
            c = c.twist()
        for m2, q in nf_word(alg, w).items():
            n = out.get(m2)
            n = c * q if n is None else n + c * q
            if n.is_zero():
                out.pop(m2, None)
            else:
                out[m2] = n
    return EnvelopeElement(alg, ctx, out)
