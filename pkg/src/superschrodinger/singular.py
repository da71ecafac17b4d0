"""Singular vectors: kernel scans, closed forms, certificates, quotients.

A singular vector is a weight-homogeneous module vector, not proportional
to the lowest weight vector, annihilated by every lowering generator.  The
scan computes, weight space by weight space, the joint kernel of all
lowering actions; the closed-form constructors build the known one-vector
families directly and the two must agree.  Both roads end in a
:class:`SingularCertificate` that re-verifies from its JSON serialization
with no access to the producer.

Quotient scans search V/I for the invariant submodule I generated by a
verified singular vector, by solving the same kernel problem modulo the
per-weight span of I.

In parametric mode (some parameters left symbolic) the scan eliminates
over the rational-function field and reports, per weight space, the
polynomial conditions on (d, j, r) at which the kernel can jump.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg
from .algebra import get_algebra
from .coeff import Poly, poly_gcd
from .envelope import (
    EnvelopeElement,
    env_multiply,
    env_power,
    mono_degree,
    mono_parity,
    mono_str,
    nf_word,
    word_of,
)
from .errors import (
    AmbiguousClosedFormError,
    BindingError,
    EngineError,
    InadmissibleParametersError,
)
from .verma import ModuleVector, VermaModule, make_module

PARAM_BUDGET_ENV = "SUPERSCHRODINGER_PARAM_BUDGET"
DEFAULT_PARAM_BUDGET = 40

CERTIFICATE_SCHEMA = "superschrodinger.certificate/1"


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerifyReport:
    """Residuals of all lowering generators on a candidate vector."""

    residuals: dict  # generator name -> ModuleVector
    is_singular: bool
    reason: str

    def nonzero_residuals(self):
        return {g: r for g, r in self.residuals.items() if not r.is_zero()}


def verify(module, vec):
    """Check the singular-vector conditions for a homogeneous vector."""
    if vec.is_zero():
        return VerifyReport({}, False, "zero vector")
    if not vec.is_homogeneous():
        return VerifyReport({}, False, "not weight-homogeneous")
    residuals = {g: module.act(g, vec) for g in module.annihilators}
    bad = [g for g, r in residuals.items() if not r.is_zero()]
    if bad:
        return VerifyReport(
            residuals, False, "nonzero residuals: " + ", ".join(sorted(bad))
        )
    if set(vec.terms) == {module.unit}:
        return VerifyReport(residuals, False, "proportional to the lowest weight vector")
    return VerifyReport(residuals, True, "singular")


# ---------------------------------------------------------------------------
# certificates


@dataclass
class SingularCertificate:
    algebra: str
    bindings: dict  # parameter name -> Fraction
    weight: tuple
    vector: ModuleVector
    residuals: dict  # generator name -> ModuleVector, all zero
    provenance: str  # "scan" | "closed_form"

    @property
    def level(self):
        return self.weight[0]

    @property
    def module(self):
        return self.vector.module

    def to_json_dict(self):
        return {
            "schema": CERTIFICATE_SCHEMA,
            "algebra": self.algebra,
            "bindings": {k: str(v) for k, v in sorted(self.bindings.items())},
            "weight": list(self.weight),
            "vector": self.vector.to_json(),
            "residuals": {
                g: self.residuals[g].to_json() for g in sorted(self.residuals)
            },
            "provenance": self.provenance,
            "normalization": "leading-coefficient-one",
        }

    @staticmethod
    def from_json_dict(data, module=None):
        if data.get("schema") != CERTIFICATE_SCHEMA:
            raise EngineError(f"unknown certificate schema {data.get('schema')!r}")
        bindings = {k: Fraction(v) for k, v in data["bindings"].items()}
        if module is None:
            module = make_module(data["algebra"], bindings)
        elif module.alg.name != data["algebra"] or module.ctx.bindings != bindings:
            raise EngineError("certificate does not match the given module")
        vec = ModuleVector.from_json(module, data["vector"])
        residuals = {
            g: ModuleVector.from_json(module, r)
            for g, r in data.get("residuals", {}).items()
        }
        return SingularCertificate(
            algebra=data["algebra"],
            bindings=dict(module.ctx.bindings),
            weight=tuple(data["weight"]),
            vector=vec,
            residuals=residuals,
            provenance=data.get("provenance", "scan"),
        )

    def __str__(self):
        return (
            f"singular vector of {self.algebra} at weight {self.weight} "
            f"({self.provenance}): {self.vector}"
        )


def certificate_from_vector(module, vec, provenance):
    """Normalize, verify and package a singular vector; raises if not singular."""
    vec = vec.normalized()
    report = verify(module, vec)
    if not report.is_singular:
        raise EngineError(f"vector is not singular: {report.reason}")
    degree = mono_degree(module.alg, vec.leading())
    return SingularCertificate(
        algebra=module.alg.name,
        bindings=dict(module.ctx.bindings),
        weight=degree,
        vector=vec,
        residuals=report.residuals,
        provenance=provenance,
    )


def recheck_certificate(data, module=None):
    """Re-verify a serialized certificate with no producer state.

    Returns (ok, messages); every failed check appends one message.
    """
    messages = []
    try:
        cert = SingularCertificate.from_json_dict(data, module=module)
    except (EngineError, KeyError, ValueError) as exc:
        return False, [f"unreadable certificate: {exc}"]
    module = cert.module
    vec = cert.vector
    if vec.is_zero():
        return False, ["vector is zero"]
    if not vec.is_homogeneous():
        messages.append("vector is not weight-homogeneous")
    else:
        degree = mono_degree(module.alg, vec.leading())
        if degree != cert.weight:
            messages.append(
                f"declared weight {cert.weight} differs from actual {degree}"
            )
    lead = vec.terms[vec.leading()]
    if not (lead == module.ctx.one()):
        messages.append("vector is not normalized to leading coefficient one")
    report = verify(module, vec)
    if not report.is_singular:
        messages.append(report.reason)
    for g, declared in cert.residuals.items():
        if not declared.is_zero():
            messages.append(f"declared residual for {g} is nonzero")
    missing = set(module.annihilators) - set(cert.residuals)
    if missing:
        messages.append("residuals missing for: " + ", ".join(sorted(missing)))
    return not messages, messages


# ---------------------------------------------------------------------------
# kernel scans


def _act_columns(module, basis, gi):
    """Action vectors of generator gi on basis monomials, over the target basis."""
    alg = module.alg
    weight = mono_degree(alg, basis[0])
    target_weight = tuple(w + c for w, c in zip(weight, alg.degrees[gi]))
    target_basis = module.basis_at_weight(target_weight)
    index = {m: i for i, m in enumerate(target_basis)}
    zero = module.ctx.zero()
    cols = []
    for mono in basis:
        col = [zero] * len(target_basis)
        for m2, c in module._act_mono(gi, mono).items():
            col[index[m2]] = c
        cols.append(col)
    return target_weight, target_basis, cols


def _weight_kernel(module, weight, quotient=None):
    """Joint kernel of all lowering actions on one weight space.

    With a quotient context the kernel is taken modulo the invariant
    submodule: action columns are reduced against the per-weight echelon
    of the submodule before the equations are assembled.  Equations coming
    from an odd generator are conjugated (odd part negated) so the system
    is linear over the scalar ring.  Returns (basis, kernel_vectors).
    """
    alg = module.alg
    basis = module.basis_at_weight(weight)
    if not basis:
        return [], []
    ops = _linalg.scalar_field(module.ctx)
    rows = []
    for gi in alg.minus_indices:
        target_weight, target_basis, cols = _act_columns(module, basis, gi)
        if not target_basis:
            continue
        if quotient is not None:
            pivot_cols, reduced = quotient.submodule_echelon(target_weight)
            if pivot_cols:
                cols = [
                    _linalg.reduce_vector(col, pivot_cols, reduced, ops)
                    for col in cols
                ]
        g_odd = alg.odd[gi]
        for ti in range(len(target_basis)):
            row = [col[ti] for col in cols]
            if g_odd:
                row = [x.twist() for x in row]
            if any(not x.is_zero() for x in row):
                rows.append(row)
    rational = _try_fraction_rows(rows)
    if rational is not None:
        pivots, reduced, _ = _linalg.echelon(rational, len(basis), _linalg.FRACTION_OPS)
        raw = _linalg.kernel_from_echelon(
            pivots, reduced, len(basis), _linalg.FRACTION_OPS
        )
        ctx = module.ctx
        kernel = [[ctx.scalar(x) for x in vec] for vec in raw]
    else:
        pivots, reduced, _ = _linalg.echelon(rows, len(basis), ops)
        kernel = _linalg.kernel_from_echelon(pivots, reduced, len(basis), ops)
    return basis, kernel


def _try_fraction_rows(rows):
    try:
        return [[x.as_fraction() for x in row] for row in rows]
    except BindingError:
        return None


def scan(module, max_level, weight=None):
    """All singular vectors up to the level cutoff, as certificates.

    Numeric mode: every weight parameter of the algebra must be bound.
    The optional weight restricts the scan to a single multidegree.
    """
    if not module.is_numeric():
        raise BindingError(
            "scan needs fully bound parameters; use scan_parametric for "
            "symbolic ones"
        )
    zero_weight = (0,) * module.alg.grading_rank
    certs = []
    weights = [tuple(weight)] if weight is not None else module.weights_up_to(max_level)
    for w in weights:
        if w == zero_weight:
            continue  # that space is spanned by v0 alone
        basis, kernel = _weight_kernel(module, w)
        for vec in kernel:
            mv = ModuleVector(module, dict(zip(basis, vec)))
            certs.append(certificate_from_vector(module, mv, "scan"))
    certs.sort(key=lambda c: c.weight)
    return certs


# ---------------------------------------------------------------------------
# parametric scan


@dataclass
class ParametricWeightEntry:
    weight: tuple
    dimension: int
    generic_rank: int
    conditions: list  # condition polynomials as canonical strings
    kernel: list = field(default_factory=list)  # identically singular vectors


@dataclass
class ParametricScanReport:
    algebra: str
    bindings: dict
    max_level: int
    entries: list

    @property
    def conditions(self):
        seen, out = set(), []
        for e in self.entries:
            for c in e.conditions:
                if c not in seen:
                    seen.add(c)
                    out.append(c)
        return out

    def to_json_dict(self):
        return {
            "schema": "superschrodinger.parametric-scan/1",
            "algebra": self.algebra,
            "bindings": {k: str(v) for k, v in sorted(self.bindings.items())},
            "max_level": self.max_level,
            "entries": [
                {
                    "weight": list(e.weight),
                    "dimension": e.dimension,
                    "generic_rank": e.generic_rank,
                    "conditions": list(e.conditions),
                    "kernel": [v.to_json() for v in e.kernel],
                }
                for e in self.entries
            ],
            "conditions": self.conditions,
        }


def _parameter_condition(scalar):
    """Polynomial whose vanishing kills a pivot, reduced to (d, j, r) content."""
    if scalar.has_odd():
        ctx = scalar.ctx
        value = scalar.even * scalar.even - scalar.odd * scalar.odd * ctx.chi_squared()
    else:
        value = scalar.even
    poly = value.num
    if not any(exp[0] or exp[2] or exp[3] for exp in poly.terms):
        return None  # no dependence on d, j, r
    # strip the content free of the weight parameters (pure m-factors)
    groups = {}
    for exp, c in poly.terms.items():
        key = (exp[0], exp[2], exp[3])
        groups.setdefault(key, {})[(0, exp[1], 0, 0)] = c
    content = Poly({})
    for terms in groups.values():
        content = poly_gcd(content, Poly(terms))
    if not content.is_one():
        poly = poly.exact_div(content)
    c = poly.int_content()
    if c > 1:
        poly = Poly({e: k // c for e, k in poly.terms.items()})
    if poly.leading_coeff() < 0:
        poly = -poly
    return poly


def parametric_budget(explicit=None):
    if explicit is not None:
        return int(explicit)
    raw = os.environ.get(PARAM_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_PARAM_BUDGET


def scan_parametric(module, max_level, weight=None, budget=None):
    """Symbolic scan: per weight space, the vanishing conditions in (d, j, r).

    Eliminates over the rational-function field, collects the pivot values
    and reports the polynomial factors whose vanishing can raise the kernel
    dimension, together with any vectors singular at generic parameters.
    """
    from .errors import ParametricBudgetError

    budget = parametric_budget(budget)
    alg = module.alg
    ops = _linalg.scalar_field(module.ctx)
    zero_weight = (0,) * alg.grading_rank
    entries = []
    weights = [tuple(weight)] if weight is not None else module.weights_up_to(max_level)
    for w in weights:
        if w == zero_weight:
            continue
        basis = module.basis_at_weight(w)
        if not basis:
            continue
        if len(basis) > budget:
            raise ParametricBudgetError(
                f"weight space {w} has dimension {len(basis)} > budget {budget} "
                f"(set {PARAM_BUDGET_ENV} to raise it)"
            )
        rows = []
        for gi in alg.minus_indices:
            target_weight, target_basis, cols = _act_columns(module, basis, gi)
            g_odd = alg.odd[gi]
            for ti in range(len(target_basis)):
                row = [col[ti] for col in cols]
                if g_odd:
                    row = [x.twist() for x in row]
                if any(not x.is_zero() for x in row):
                    rows.append(row)
        pivots, reduced, pivot_vals = _linalg.echelon(rows, len(basis), ops)
        conditions = []
        for value in pivot_vals:
            poly = _parameter_condition(value)
            if poly is not None:
                text = str(poly)
                if text not in conditions:
                    conditions.append(text)
        kernel = _linalg.kernel_from_echelon(pivots, reduced, len(basis), ops)
        vectors = [
            ModuleVector(module, dict(zip(basis, vec))).normalized() for vec in kernel
        ]
        entries.append(
            ParametricWeightEntry(
                weight=w,
                dimension=len(basis),
                generic_rank=len(pivots),
                conditions=conditions,
                kernel=vectors,
            )
        )
    return ParametricScanReport(
        algebra=alg.name,
        bindings=dict(module.ctx.bindings),
        max_level=max_level,
        entries=entries,
    )


# ---------------------------------------------------------------------------
# closed-form families


def closed_form_discrepancy(algebra_name):
    """Defect note for the one family whose printed form is inconsistent."""
    if algebra_name != "s22":
        return None
    return {
        "algebra": "s22",
        "issue": (
            "the closed-form family for this algebra multiplies the base "
            "vector by a factor naming generators the algebra does not have"
        ),
        "undefined_generators": ["X+", "S"],
        "factor": "G-*X+ - 2*m*S",
        "resolution": (
            "the kernel scan is authoritative for every admissible d; the "
            "closed form is exposed only at d = 0, where the singular vector "
            "is the unambiguous base vector itself"
        ),
    }


def _require_bound(module, names):
    values = {}
    for n in names:
        v = module.binding(n)
        if v is None:
            raise BindingError(f"closed form over {module.alg.name} needs {n} bound")
        values[n] = v
    return values


def _nonneg_int(value):
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        return None
    return int(value)


def closed_form(module):
    """The known singular vector of the module's algebra, expanded to PBW form.

    Raises InadmissibleParametersError outside the family's parameter set
    and AmbiguousClosedFormError where the printed family is defective.
    """
    alg = module.alg
    ctx = module.ctx
    name = alg.name

    def gen(g):
        return EnvelopeElement.generator(alg, g, ctx)

    def m_times(element, k=1):
        return element.scaled(ctx.param("m") * ctx.scalar(k))

    if name == "s11":
        d = _require_bound(module, ["d"])["d"]
        a = _nonneg_int(d + Fraction(1, 2))
        if a is None:
            raise InadmissibleParametersError(
                f"no closed-form singular vector for s11 at d = {d}; "
                "need d + 1/2 a nonnegative integer"
            )
        base = env_multiply(gen("G"), gen("G")) - m_times(gen("K"), 2)
        tail = gen("G") - gen("S").scaled(ctx.chi() * ctx.scalar(2))
        expr = env_multiply(env_power(base, a), tail)
    elif name == "s12":
        d = _require_bound(module, ["d"])["d"]
        if 2 * d + 1 == 0:
            raise InadmissibleParametersError(
                "the closed-form coefficient for s12 has denominator 2d + 1 = 0"
            )
        a = _nonneg_int(d - Fraction(1, 2))
        if a is None:
            raise InadmissibleParametersError(
                f"no closed-form singular vector for s12 at d = {d}; "
                "need d - 1/2 a nonnegative integer"
            )
        base = env_multiply(gen("G"), gen("G")) - m_times(gen("K"), 2)
        dd, rr = ctx.param("d"), ctx.param("r")
        coeff = (dd + rr + 1) * (dd * 2 + 1).inv()
        u0 = (
            env_multiply(env_multiply(gen("G"), gen("S-")), gen("X+"))
            + m_times(env_multiply(gen("S+"), gen("S-")))
            + m_times(gen("K"), 2)
            + base.scaled(coeff)
        )
        expr = env_multiply(env_power(base, a), u0)
    elif name == "s21":
        d = _require_bound(module, ["d"])["d"]
        a = _nonneg_int(d + 1)
        if a is None:
            raise InadmissibleParametersError(
                f"no closed-form singular vector for s21 at d = {d}; "
                "need d + 1 a nonnegative integer"
            )
        base = env_multiply(gen("G+"), gen("G-")) - m_times(gen("K"), 2)
        tail = env_multiply(gen("G-"), gen("X+")) - m_times(gen("S"), 2)
        expr = env_multiply(env_power(base, a), tail)
    elif name == "s22":
        d = _require_bound(module, ["d"])["d"]
        if _nonneg_int(d) is None:
            raise InadmissibleParametersError(
                f"no closed-form singular vector for s22 at d = {d}; "
                "need d a nonnegative integer"
            )
        if d != 0:
            raise AmbiguousClosedFormError(
                "the closed-form family for s22 is defective away from d = 0; "
                "use the kernel scan",
                report=closed_form_discrepancy("s22"),
            )
        u0 = (
            env_multiply(
                env_multiply(env_multiply(gen("G-"), gen("G-")), gen("X++")),
                gen("X+-"),
            )
            - m_times(
                env_multiply(env_multiply(gen("G-"), gen("S+")), gen("X+-")), 2
            )
            + m_times(
                env_multiply(env_multiply(gen("G-"), gen("S-")), gen("X++")), 2
            )
            + env_multiply(gen("S+"), gen("S-")).scaled(
                ctx.param("m") * ctx.param("m") * ctx.scalar(4)
            )
            + gen("K").scaled(ctx.param("m") * ctx.param("m") * ctx.scalar(4))
        )
        expr = u0
    elif name == "s22hat":
        values = _require_bound(module, ["d", "j", "r"])
        d, jv, rv = values["d"], values["j"], values["r"]
        a = _nonneg_int(d)
        if a is None or rv != -(d - jv + 2) / 2:
            raise InadmissibleParametersError(
                f"no closed-form singular vector for s22hat at d = {d}, "
                f"j = {jv}, r = {rv}; need d a nonnegative integer and "
                "r = -(d - j + 2)/2"
            )
        base = env_multiply(gen("G+"), gen("G-")) - m_times(gen("K"), 2)
        u0 = (
            env_multiply(env_multiply(gen("G-"), gen("S-")), gen("X+"))
            + m_times(env_multiply(gen("S+"), gen("S-")))
            + m_times(gen("K"), 2)
        )
        expr = env_multiply(env_power(base, a), u0)
    else:
        raise InadmissibleParametersError(
            f"no closed-form singular vector family for {name}"
        )
    return module.from_envelope(expr).normalized()


# ---------------------------------------------------------------------------
# quotients


class QuotientContext:
    """The quotient V/I by the submodule generated by a singular vector.

    Built from a verified certificate; with no certificate the submodule is
    zero and the quotient scan coincides with the plain scan.  Per-weight
    echelon bases of I are computed lazily and cached.
    """

    def __init__(self, module, certificate=None):
        self.module = module
        self.certificate = certificate
        if certificate is not None:
            if certificate.vector.module is not module:
                raise EngineError("certificate belongs to a different module")
            ok, messages = recheck_certificate(certificate.to_json_dict(), module)
            if not ok:
                raise EngineError(
                    "quotient needs a verified certificate: " + "; ".join(messages)
                )
            self.generator_vector = certificate.vector
            self.generator_weight = certificate.weight
        else:
            self.generator_vector = None
            self.generator_weight = None
        self._echelons = {}

    def submodule_echelon(self, weight):
        """(pivot_cols, reduced_rows) of I inside the weight-space basis."""
        weight = tuple(weight)
        hit = self._echelons.get(weight)
        if hit is not None:
            return hit
        module = self.module
        ops = _linalg.scalar_field(module.ctx)
        if self.generator_vector is None:
            result = ([], [])
            self._echelons[weight] = result
            return result
        basis = module.basis_at_weight(weight)
        delta = tuple(w - g for w, g in zip(weight, self.generator_weight))
        rows = []
        if basis and delta[0] >= 0:
            index = {m: i for i, m in enumerate(basis)}
            zero = module.ctx.zero()
            for mono in module.basis_at_weight(delta):
                w = _left_mul_mono(module, mono, self.generator_vector)
                row = [zero] * len(basis)
                for m, c in w.terms.items():
                    row[index[m]] = c
                rows.append(row)
        pivots, reduced, _ = _linalg.echelon(rows, len(basis), ops)
        result = (pivots, reduced)
        self._echelons[weight] = result
        return result

    def submodule_basis(self, weight):
        """Echelonized vectors spanning I at the given weight."""
        basis = self.module.basis_at_weight(weight)
        pivots, reduced = self.submodule_echelon(weight)
        return [
            ModuleVector(self.module, dict(zip(basis, row))) for row in reduced
        ]

    def contains(self, vec):
        """Membership of a module vector in I (per-weight reduction)."""
        if vec.is_zero():
            return True
        module = self.module
        ops = _linalg.scalar_field(module.ctx)
        by_weight = {}
        for m, c in vec.terms.items():
            by_weight.setdefault(mono_degree(module.alg, m), {})[m] = c
        for weight, terms in by_weight.items():
            basis = module.basis_at_weight(weight)
            index = {m: i for i, m in enumerate(basis)}
            col = [module.ctx.zero()] * len(basis)
            for m, c in terms.items():
                col[index[m]] = c
            pivots, reduced = self.submodule_echelon(weight)
            col = _linalg.reduce_vector(col, pivots, reduced, ops)
            if any(not x.is_zero() for x in col):
                return False
        return True


def _left_mul_mono(module, mono, vec):
    """Left-multiply a raising monomial onto a module vector."""
    alg = module.alg
    parity = mono_parity(alg, mono)
    word = word_of(mono)
    out = {}
    for m, c in vec.terms.items():
        c2 = c.twist() if parity else c
        for m2, q in nf_word(alg, word + word_of(m)).items():
            n = out.get(m2)
            add = c2 * q
            n = add if n is None else n + add
            if n.is_zero():
                out.pop(m2, None)
            else:
                out[m2] = n
    return ModuleVector(module, out)


def quotient_scan(context, max_level, weight=None):
    """Singular vectors of the quotient module V/I up to the level cutoff.

    Solves the joint-kernel problem with all action columns reduced modulo
    I, then discards solutions lying in I itself; the surviving vectors are
    packaged with provenance "scan" over the quotient.
    """
    module = context.module
    if not module.is_numeric():
        raise BindingError("quotient scan needs fully bound parameters")
    alg = module.alg
    ops = _linalg.scalar_field(module.ctx)
    zero_weight = (0,) * alg.grading_rank
    found = []
    weights = [tuple(weight)] if weight is not None else module.weights_up_to(max_level)
    for w in weights:
        if w == zero_weight:
            continue
        basis, kernel = _weight_kernel(module, w, quotient=context)
        if not kernel:
            continue
        # quotient by I at the candidate weight: keep kernel vectors with a
        # nonzero reduction, re-echelonized for deterministic representatives
        pivots, reduced = context.submodule_echelon(w)
        residual_rows = []
        for vec in kernel:
            red = _linalg.reduce_vector(vec, pivots, reduced, ops)
            if any(not x.is_zero() for x in red):
                residual_rows.append(red)
        if not residual_rows:
            continue
        _, rep_rows, _ = _linalg.echelon(residual_rows, len(basis), ops)
        for row in rep_rows:
            mv = ModuleVector(module, dict(zip(basis, row))).normalized()
            report = verify_in_quotient(context, mv)
            if not report[0]:
                raise EngineError(
                    f"quotient kernel vector failed re-verification: {report[1]}"
                )
            found.append((w, mv))
    certs = []
    for w, mv in sorted(found, key=lambda t: t[0]):
        certs.append(
            SingularCertificate(
                algebra=alg.name,
                bindings=dict(module.ctx.bindings),
                weight=w,
                vector=mv,
                residuals={g: module.act(g, mv) for g in module.annihilators},
                provenance="scan",
            )
        )
    return certs


def verify_in_quotient(context, vec):
    """Residual check modulo the submodule: (ok, reason)."""
    module = context.module
    if vec.is_zero() or context.contains(vec):
        return False, "vector lies in the submodule"
    for g in module.annihilators:
        if not context.contains(module.act(g, vec)):
            return False, f"residual of {g} is nonzero modulo the submodule"
    return True, "singular in the quotient"


# ---------------------------------------------------------------------------
# convenience file IO


def write_json(path, data):
    text = json.dumps(data, indent=2, sort_keys=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


def read_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
