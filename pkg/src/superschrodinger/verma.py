"""Lowest-weight Verma modules over the catalog algebras.

The module is spanned by raising-part PBW monomials applied to the lowest
weight vector v0; v0 is annihilated by every lowering generator and is a
simultaneous eigenvector of the Cartan-like part, with eigenvalues set by
the parameter bindings (D -> -d, M -> m, J -> -j, R -> r or 2r, and the
odd rule X -> chi for the N=1 algebra in one space dimension).

The action of a generator on a basis monomial is computed by commuting the
generator through the leftmost factor and recursing on the tail,

    g (x w) v0 = (-1)^{p(g)p(x)} x (g w) v0 + [g, x] w v0,

which keeps every intermediate value inside the module.  Odd scalars pick
up a sign each time they cross an odd generator; that is the only place
parity enters coefficients.  Results are memoized per module, so repeated
scans over the same weight spaces stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import envelope
from .algebra import MINUS, PLUS, ZERO, SuperAlgebra, get_algebra
from .coeff import ParamContext, Scalar
from .errors import BindingError, EngineError
from .envelope import (
    EnvelopeElement,
    mono_degree,
    mono_of_gen,
    mono_parity,
    mono_str,
    mono_unit,
    nf_word,
    word_of,
)


@dataclass(frozen=True)
class WeightLabel:
    """Multidegree of a weight space plus the induced D-eigenvalue."""

    degree: tuple
    d_eigenvalue: Scalar

    @property
    def level(self):
        return self.degree[0]

    def __str__(self):
        return f"degree {self.degree}, D-eigenvalue {self.d_eigenvalue}"


class VermaModule:
    """Lowest-weight module V = U(g+) v0 at fixed parameter bindings."""

    def __init__(self, alg: SuperAlgebra, bindings=None):
        self.alg = alg
        allow_odd = "chi" in {p for _, p in alg.weight_rules.values()}
        ctx = ParamContext(bindings or {}, allow_odd=allow_odd)
        for name in ctx.bindings:
            if name not in self.parameters():
                raise BindingError(
                    f"parameter {name!r} does not apply to {alg.name}"
                )
        self.ctx = ctx
        self.unit = mono_unit(alg)
        # eigenvalue of each Cartan-like generator on v0
        self._eigen = {}
        for gname, (factor, param) in alg.weight_rules.items():
            gi = alg.index[gname]
            if param == "chi":
                value = ctx.chi()
            else:
                value = ctx.param(param) * ctx.scalar(factor)
            self._eigen[gi] = value
        for gi in alg.zero_indices:
            if gi not in self._eigen:
                raise EngineError(
                    f"no eigenvalue rule for {alg.gen_name(gi)} in {alg.name}"
                )
        self._act_cache = {}
        self._basis_by_weight = {}
        self._basis_level_done = -1
        self._pair_cache = {}

    # -- construction ---------------------------------------------------------

    def parameters(self):
        """Names of the weight parameters applicable to this algebra."""
        return tuple(
            sorted({p for _, p in self.alg.weight_rules.values() if p != "chi"})
        )

    @property
    def annihilators(self):
        return tuple(self.alg.gen_name(i) for i in self.alg.minus_indices)

    def is_numeric(self):
        return all(self.ctx.is_bound(p) for p in self.parameters())

    def binding(self, name):
        return self.ctx.bindings.get(name)

    def eigenvalue(self, gname):
        return self._eigen[self.alg.index[gname]]

    def vacuum(self):
        return ModuleVector(self, {self.unit: self.ctx.one()})

    def vector(self, terms):
        """Module vector from {monomial-name-dict-or-exponents: Scalar-ish}."""
        out = {}
        for mono, c in terms.items():
            mono = self._as_mono(mono)
            if isinstance(c, (int, Fraction)):
                c = self.ctx.scalar(c)
            if not c.is_zero():
                out[mono] = out.get(mono, self.ctx.zero()) + c
        return ModuleVector(self, {m: c for m, c in out.items() if not c.is_zero()})

    def from_envelope(self, element):
        """Apply a raising-part envelope element to v0."""
        for mono in element.terms:
            self._check_plus(mono)
        return ModuleVector(self, dict(element.terms))

    def _as_mono(self, mono):
        if isinstance(mono, dict):
            exps = [0] * self.alg.n_gens
            for name, e in mono.items():
                exps[self.alg.index[name]] = int(e)
            mono = tuple(exps)
        self._check_plus(mono)
        return mono

    def _check_plus(self, mono):
        for i, e in enumerate(mono):
            if not e:
                continue
            if self.alg.parts[i] != PLUS:
                raise EngineError(
                    f"monomial {mono_str(self.alg, mono)} leaves the raising part"
                )
            if self.alg.odd[i] and e > 1:
                raise EngineError(f"odd generator squared in {mono_str(self.alg, mono)}")

    # -- weight-space bases -----------------------------------------------------

    def _extend_basis(self, level):
        if level <= self._basis_level_done:
            return
        alg = self.alg
        plus = alg.plus_indices
        monos = []

        def rec(pos, remaining, exps):
            if pos == len(plus):
                monos.append(tuple(exps))
                return
            gi = plus[pos]
            step = alg.degrees[gi][0]
            top = 1 if alg.odd[gi] else (remaining // step if step else 0)
            for e in range(top + 1):
                if step * e > remaining:
                    break
                exps[gi] = e
                rec(pos + 1, remaining - step * e, exps)
            exps[gi] = 0

        rec(0, level, [0] * alg.n_gens)
        for mono in monos:
            deg = mono_degree(alg, mono)
            if deg[0] > self._basis_level_done:
                self._basis_by_weight.setdefault(deg, []).append(mono)
        for deg, bucket in self._basis_by_weight.items():
            bucket.sort(reverse=True)
        self._basis_level_done = level

    def basis_at_level(self, n):
        """All raising-part monomials of level n, canonical order."""
        if n < 0:
            return []
        self._extend_basis(n)
        out = []
        for deg in sorted(k for k in self._basis_by_weight if k[0] == n):
            out.extend(self._basis_by_weight[deg])
        out.sort(reverse=True)
        return out

    def basis_at_weight(self, degree):
        degree = tuple(degree)
        if degree[0] < 0:
            return []
        self._extend_basis(degree[0])
        return list(self._basis_by_weight.get(degree, ()))

    def weights_up_to(self, max_level):
        """All occupied weight-space degrees with level <= max_level, sorted."""
        self._extend_basis(max_level)
        return sorted(k for k in self._basis_by_weight if k[0] <= max_level)

    def weight_of(self, mono):
        mono = self._as_mono(mono)
        return self.weight_of_degree(mono_degree(self.alg, mono))

    def weight_of_degree(self, degree):
        d_eig = self.eigenvalue("D") + self.ctx.scalar(degree[0])
        return WeightLabel(tuple(degree), d_eig)

    # -- the module action --------------------------------------------------------

    def act(self, gname, vec):
        """Action of a single generator on a module vector."""
        gi = self.alg.index[gname]
        g_odd = self.alg.odd[gi]
        out = {}
        for mono, c in vec.terms.items():
            c2 = c.twist() if g_odd else c
            for m2, s in self._act_mono(gi, mono).items():
                n = out.get(m2)
                n = c2 * s if n is None else n + c2 * s
                if n.is_zero():
                    out.pop(m2, None)
                else:
                    out[m2] = n
        return ModuleVector(self, out)

    def act_combo(self, combo, vec):
        """Action of a scalar-weighted combination of generators."""
        out = ModuleVector(self, {})
        for gname, c in combo.items():
            if isinstance(c, (int, Fraction)):
                c = self.ctx.scalar(c)
            out = out + self.act(gname, vec).scaled_left(c)
        return out

    def act_word(self, word, vec):
        """Apply a product of generators, rightmost factor first."""
        for gname in reversed(list(word)):
            vec = self.act(gname, vec)
        return vec

    def _act_mono(self, gi, mono):
        key = (gi, mono)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        if mono == self.unit:
            part = alg.parts[gi]
            if part == MINUS:
                res = {}
            elif part == ZERO:
                res = {self.unit: self._eigen[gi]}
            else:
                res = {mono_of_gen(alg, gi): self.ctx.one()}
        else:
            x = next(i for i, e in enumerate(mono) if e)
            rest = tuple(e - 1 if i == x else e for i, e in enumerate(mono))
            g_odd, x_odd = alg.odd[gi], alg.odd[x]
            if alg.parts[gi] == PLUS and (gi < x or (gi == x and not g_odd)):
                grown = tuple(e + 1 if i == gi else e for i, e in enumerate(mono))
                res = {grown: self.ctx.one()}
            elif gi == x and g_odd:
                # odd square: g (g rest) = ({g,g}/2) rest
                res = {}
                for c, y in alg.bracket_terms(gi, gi):
                    self._acc_scaled(res, self._act_mono(y, rest), c / 2)
            else:
                res = {}
                sign = -1 if (g_odd and x_odd) else 1
                for m2, c in self._act_mono(gi, rest).items():
                    c2 = c.twist() if x_odd else c
                    if sign < 0:
                        c2 = -c2
                    # left-multiply x back in; (x,) + word stays in the raising part
                    for m3, q in nf_word(alg, (x,) + word_of(m2)).items():
                        n = res.get(m3)
                        add = c2 * q
                        n = add if n is None else n + add
                        if n.is_zero():
                            res.pop(m3, None)
                        else:
                            res[m3] = n
                for c, y in alg.bracket_terms(gi, x):
                    self._acc_scaled(res, self._act_mono(y, rest), c)
        res = {m: c for m, c in res.items() if not c.is_zero()}
        self._act_cache[key] = res
        return res

    def _acc_scaled(self, target, source, q):
        for m, c in source.items():
            n = target.get(m)
            add = c * q
            n = add if n is None else n + add
            if n.is_zero():
                target.pop(m, None)
            else:
                target[m] = n

    def __repr__(self):
        bound = ", ".join(f"{k}={v}" for k, v in sorted(self.ctx.bindings.items()))
        return f"VermaModule({self.alg.name}; {bound or 'symbolic'})"


def make_module(alg, bindings=None):
    """Build the lowest-weight module; m = 0 is rejected (massive case)."""
    if isinstance(alg, str):
        alg = get_algebra(alg)
    return VermaModule(alg, bindings)


class ModuleVector:
    """Scalar combination of raising-part monomials, implicitly applied to v0."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms):
        self.module = module
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    def _join(self, other):
        if self.module is not other.module:
            raise EngineError("vectors from different modules")

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
        return ModuleVector(self.module, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ModuleVector(self.module, {m: -c for m, c in self.terms.items()})

    def scaled_left(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            scalar = self.module.ctx.scalar(scalar)
        out = {}
        for m, c in self.terms.items():
            n = scalar * c
            if not n.is_zero():
                out[m] = n
        return ModuleVector(self.module, out)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleVector)
            and self.module is other.module
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def monomials(self):
        return sorted(self.terms, reverse=True)

    def leading(self):
        if not self.terms:
            raise EngineError("zero vector has no leading monomial")
        return max(self.terms)

    def normalized(self):
        """Scale so the leading monomial has coefficient one."""
        if not self.terms:
            return self
        lead = self.terms[self.leading()]
        return self.scaled_left(lead.field_inv())

    def is_homogeneous(self):
        degs = {mono_degree(self.module.alg, m) for m in self.terms}
        return len(degs) <= 1

    def weight(self):
        degs = {mono_degree(self.module.alg, m) for m in self.terms}
        if len(degs) != 1:
            raise EngineError("vector is not weight-homogeneous")
        return self.module.weight_of_degree(next(iter(degs)))

    def parity(self):
        ps = {mono_parity(self.module.alg, m) for m in self.terms}
        if len(ps) != 1:
            raise EngineError("vector has mixed parity")
        return next(iter(ps))

    def __str__(self):
        if not self.terms:
            return "0"
        alg = self.module.alg
        bits = []
        for m in self.monomials():
            cs = str(self.terms[m])
            ms = mono_str(alg, m)
            if cs == "1":
                bits.append(ms if any(m) else "1")
            else:
                if any(ch in cs[1:] for ch in "+-") or "/" in cs or " " in cs:
                    cs = f"({cs})"
                bits.append(f"{cs}*{ms}" if any(m) else cs)
        return " + ".join(bits) + " . v0"

    __repr__ = __str__

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        alg = self.module.alg
        out = []
        for m in self.monomials():
            out.append(
                {
                    "monomial": {
                        alg.gen_name(i): e for i, e in enumerate(m) if e
                    },
                    "coeff": self.terms[m].to_json(),
                }
            )
        return out

    @staticmethod
    def from_json(module, data):
        terms = {}
        for entry in data:
            mono = module._as_mono(dict(entry["monomial"]))
            c = Scalar.from_json(module.ctx, entry["coeff"])
            if not c.is_zero():
                terms[mono] = c
        return ModuleVector(module, terms)
