"""Contravariant bilinear form on the lowest-weight modules.

The form is fixed by (v0, v0) = 1 and contravariance: moving a generator
from one slot to the other applies the involution omega.  On basis
monomials this evaluates by acting the omega-image of the left word on the
right vector and reading off the v0 coefficient; monomials of different
multidegree pair to zero, so the per-weight Gram matrices capture the
whole form.

Scalar coefficients carrying the odd generator chi are not treated as
scalars by the involution: chi on the lowest weight vector is the odd
Cartan generator X applied to it, so each term (e + o*chi) M v0 is first
rewritten as the enveloping-algebra words e*(M) and +-o*(M X), and omega
transposes the appended X factor like any other generator.  The resulting
form is well defined on the module, symmetric, and contravariant; for
chi-free coefficients it is plainly bilinear.

Degeneracy is decided by the twisted Gram matrix whose row i is
conjugated by the parity of the i-th basis monomial; for chi-free weight
spaces it equals the Gram matrix itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _linalg
from .envelope import mono_degree, mono_parity, mono_str, word_of
from .errors import BindingError, EngineError
from .verma import ModuleVector

PAIRING_CONVENTION = "odd coefficients pair as appended odd Cartan factors"


def _odd_cartan_index(alg):
    for i in alg.zero_indices:
        if alg.odd[i]:
            return i
    return None


def _extended_terms(vec):
    """Rewrite a vector as chi-free coefficients on enveloping words.

    chi M v0 = (-1)^{p(M)} (M X) v0, so every term splits into an even part
    on the plain word and an even coefficient on the word with X appended.
    Returns a list of (word, even Scalar, multidegree).
    """
    module = vec.module
    alg = module.alg
    xi = _odd_cartan_index(alg)
    out = []
    for m, c in vec.terms.items():
        w = word_of(m)
        degree = mono_degree(alg, m)
        e = c.even_part()
        if not e.is_zero():
            out.append((w, e, degree))
        o = c.odd_coefficient()
        if not o.is_zero():
            if mono_parity(alg, m):
                o = -o
            out.append((w + (xi,), o, degree))
    return out


def _word_pair(module, word_u, word_v):
    """v0 coefficient of omega(word_u) word_v v0, cached per module."""
    key = (word_u, word_v)
    hit = module._pair_cache.get(key)
    if hit is not None:
        return hit
    alg = module.alg
    vec = module.vacuum()
    for gi in reversed(word_v):
        vec = module.act(alg.gen_name(gi), vec)
        if vec.is_zero():
            break
    # omega is anti-multiplicative, so the image of the ascending word
    # acts factor by factor in the original order
    for gi in word_u:
        if vec.is_zero():
            break
        vec = module.act(alg.gen_name(alg.omega_index(gi)), vec)
    value = vec.terms.get(module.unit, module.ctx.zero())
    module._pair_cache[key] = value
    return value


def _base_pair(module, mono_u, mono_v):
    """Pairing of two pure basis monomials."""
    if mono_degree(module.alg, mono_u) != mono_degree(module.alg, mono_v):
        return module.ctx.zero()
    return _word_pair(module, word_of(mono_u), word_of(mono_v))


def pair(module, u, v):
    """The contravariant form of two module vectors."""
    if u.module is not module or v.module is not module:
        raise EngineError("vectors from a different module")
    total = module.ctx.zero()
    for wu, cu, du in _extended_terms(u):
        for wv, cv, dv in _extended_terms(v):
            if du != dv:
                continue
            base = _word_pair(module, wu, wv)
            if base.is_zero():
                continue
            total = total + cu * cv * base
    return total


@dataclass
class GramReport:
    """Per-weight-space Gram data of the contravariant form."""

    algebra: str
    bindings: dict
    weight: tuple
    basis: list  # monomials, canonical order
    matrix: list  # pair values, Scalars
    rank: int
    determinant: object  # Scalar
    radical: list  # ModuleVectors spanning the kernel of the form
    positive_definite: object  # bool for numeric chi-free spaces, else None

    @property
    def dimension(self):
        return len(self.basis)

    def degenerate(self):
        return self.rank < self.dimension

    def to_json_dict(self, module):
        alg = module.alg
        return {
            "schema": "superschrodinger.gram/1",
            "algebra": self.algebra,
            "bindings": {k: str(v) for k, v in sorted(self.bindings.items())},
            "weight": list(self.weight),
            "basis": [mono_str(alg, m) for m in self.basis],
            "matrix": [[x.to_json() for x in row] for row in self.matrix],
            "rank": self.rank,
            "determinant": self.determinant.to_json(),
            "radical": [v.to_json() for v in self.radical],
            "positive_definite": self.positive_definite,
            "pairing_convention": PAIRING_CONVENTION,
        }


def gram(module, weight):
    """Gram matrix, rank, determinant and radical of one weight space."""
    weight = tuple(weight)
    basis = module.basis_at_weight(weight)
    matrix = [[_base_pair(module, mu, mv) for mv in basis] for mu in basis]
    alg = module.alg
    # twisted rows decide degeneracy (see module docstring)
    twisted = []
    for i, mu in enumerate(basis):
        row = matrix[i]
        if mono_parity(alg, mu):
            row = [x.twist() for x in row]
        twisted.append(row)
    ops = _linalg.scalar_field(module.ctx)
    pivots, reduced, _ = _linalg.echelon(twisted, len(basis), ops)
    kernel = _linalg.kernel_from_echelon(pivots, reduced, len(basis), ops)
    radical = [
        ModuleVector(module, dict(zip(basis, vec))).normalized() for vec in kernel
    ]
    determinant = _linalg.det(twisted, ops) if basis else module.ctx.one()
    positive = _positivity(matrix, twisted)
    return GramReport(
        algebra=alg.name,
        bindings=dict(module.ctx.bindings),
        weight=weight,
        basis=basis,
        matrix=matrix,
        rank=len(pivots),
        determinant=determinant,
        radical=radical,
        positive_definite=positive,
    )


def _positivity(matrix, twisted):
    """Positive-definiteness flag via leading principal minors.

    Only defined for numeric chi-free spaces; elsewhere None.
    """
    n = len(matrix)
    if n == 0:
        return True
    try:
        rows = [[x.as_fraction() for x in row] for row in twisted]
    except BindingError:
        return None
    for k in range(1, n + 1):
        minor = [row[:k] for row in rows[:k]]
        if _linalg.det(minor, _linalg.FRACTION_OPS) <= 0:
            return False
    return True


@dataclass
class RadicalReport:
    certificate_weight: tuple
    pairings: dict  # basis monomial string -> Scalar
    passed: bool


def radical_check(module, certificate):
    """A singular vector must pair to zero with its whole weight space."""
    vec = certificate.vector
    weight = tuple(certificate.weight)
    pairings = {}
    ok = True
    for b in module.basis_at_weight(weight):
        value = pair(module, vec, ModuleVector(module, {b: module.ctx.one()}))
        pairings[mono_str(module.alg, b)] = value
        if not value.is_zero():
            ok = False
    return RadicalReport(weight, pairings, ok)
