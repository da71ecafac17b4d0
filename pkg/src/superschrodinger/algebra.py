"""Finite-dimensional Lie superalgebras given by structure constants.

A :class:`SuperAlgebra` is a list of graded generators together with a
half-table of super-brackets: the table stores one entry per unordered
generator pair, and the other orientation is recovered from graded
skew-symmetry ([x,y] = -(-1)^{p(x)p(y)} [y,x]; odd-odd entries are
anticommutators and symmetric).  Unlisted pairs bracket to zero.

Generators are totally ordered raising part first, then the Cartan-like
part, then the lowering part; within each part the catalog fixes the
order used by the module bases.  The triangular part of a generator is
derived from its degree: the sign of the first nonzero component of the
degree tuple (all-zero degree means the middle part).

:func:`SuperAlgebra.validate` re-checks everything mechanically: degree
additivity of every bracket term, centrality of M, the super Jacobi
identity over all generator triples, and the defining properties of the
involution omega.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EngineError, UnknownAlgebraError

PLUS, ZERO, MINUS = "plus", "zero", "minus"


def part_of_degree(degree):
    for component in degree:
        if component > 0:
            return PLUS
        if component < 0:
            return MINUS
    return ZERO


@dataclass(frozen=True)
class GeneratorInfo:
    name: str
    parity: str  # "even" | "odd"
    degree: tuple
    part: str

    @property
    def is_odd(self):
        return self.parity == "odd"


@dataclass
class ValidationReport:
    """Outcome of the mechanical consistency checks on one algebra."""

    algebra: str
    checks: list = field(default_factory=list)  # (name, count) pairs
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, name, count):
        self.checks.append((name, count))

    def fail(self, message):
        self.failures.append(message)

    def to_json_dict(self):
        return {
            "algebra": self.algebra,
            "ok": self.ok,
            "checks": [{"name": n, "count": c} for n, c in self.checks],
            "failures": list(self.failures),
            "notes": list(self.notes),
        }


class SuperAlgebra:
    """A graded Lie superalgebra with a fixed generator order."""

    def __init__(self, name, grading_rank, generators, brackets, weight_rules, omega_map):
        self.name = name
        self.grading_rank = grading_rank
        self.gens = tuple(generators)
        self.index = {g.name: i for i, g in enumerate(self.gens)}
        if len(self.index) != len(self.gens):
            raise EngineError(f"duplicate generator names in {name}")
        self.odd = tuple(g.is_odd for g in self.gens)
        self.degrees = tuple(g.degree for g in self.gens)
        self.parts = tuple(g.part for g in self.gens)
        self.plus_indices = tuple(i for i, g in enumerate(self.gens) if g.part == PLUS)
        self.zero_indices = tuple(i for i, g in enumerate(self.gens) if g.part == ZERO)
        self.minus_indices = tuple(i for i, g in enumerate(self.gens) if g.part == MINUS)
        self._half = {}
        for x, y, terms in brackets:
            i, j = self.index[x], self.index[y]
            terms = tuple((Fraction(c), self.index[k]) for c, k in terms)
            if i > j:
                sign = 1 if (self.odd[i] and self.odd[j]) else -1
                i, j = j, i
                terms = tuple((sign * c, k) for c, k in terms)
            if (i, j) in self._half:
                raise EngineError(f"{name}: duplicate bracket entry ({x}, {y})")
            if i == j and not self.odd[i]:
                raise EngineError(f"{name}: [x, x] must vanish for even {x}")
            self._half[(i, j)] = terms
        # weight_rules: zero-part generator name -> (Fraction factor, parameter)
        self.weight_rules = {
            k: (Fraction(c), p) for k, (c, p) in weight_rules.items()
        }
        self.omega_map = tuple(self.index[omega_map[g.name]] for g in self.gens)
        # caches shared by the enveloping-algebra engine
        self._nf_cache = {}

    # -- basic structure ----------------------------------------------------

    @property
    def n_gens(self):
        return len(self.gens)

    def gen_name(self, i):
        return self.gens[i].name

    def parity_sign(self, i, j):
        return -1 if (self.odd[i] and self.odd[j]) else 1

    def bracket_terms(self, i, j):
        """Terms of [x_i, x_j] (anticommutator when both odd) in any order."""
        if i <= j:
            return self._half.get((i, j), ())
        terms = self._half.get((j, i), ())
        if not terms:
            return ()
        sign = 1 if (self.odd[i] and self.odd[j]) else -1
        return tuple((sign * c, k) for c, k in terms)

    def bracket(self, x, y):
        """Bilinear super-bracket of generator combinations.

        Arguments are generator names or mappings name -> rational
        coefficient; the result is a mapping name -> Fraction.
        """
        xs = self._as_combo(x)
        ys = self._as_combo(y)
        out = {}
        for i, a in xs.items():
            for jj, b in ys.items():
                for c, k in self.bracket_terms(i, jj):
                    v = out.get(k, 0) + a * b * c
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return {self.gen_name(k): v for k, v in sorted(out.items())}

    def _as_combo(self, x):
        if isinstance(x, str):
            if x not in self.index:
                raise EngineError(f"unknown generator {x!r} in {self.name}")
            return {self.index[x]: Fraction(1)}
        return {self.index[name]: Fraction(c) for name, c in dict(x).items()}

    def omega(self, name):
        """Involutive anti-automorphism exchanging raising and lowering parts."""
        return self.gen_name(self.omega_map[self.index[name]])

    def omega_index(self, i):
        return self.omega_map[i]

    # -- consistency checks ---------------------------------------------------

    def _ad(self, i, combo):
        """[x_i, combo] for combo a dict index -> Fraction."""
        out = {}
        for jj, b in combo.items():
            for c, k in self.bracket_terms(i, jj):
                v = out.get(k, 0) + b * c
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def validate(self):
        report = ValidationReport(self.name)
        n = self.n_gens

        count = 0
        for (i, j), terms in self._half.items():
            want = tuple(a + b for a, b in zip(self.degrees[i], self.degrees[j]))
            for _, k in terms:
                count += 1
                if self.degrees[k] != want:
                    report.fail(
                        f"degree additivity fails on [{self.gen_name(i)}, "
                        f"{self.gen_name(j)}] -> {self.gen_name(k)}"
                    )
                if self.odd[k] != (self.odd[i] ^ self.odd[j]):
                    report.fail(
                        f"parity additivity fails on [{self.gen_name(i)}, "
                        f"{self.gen_name(j)}] -> {self.gen_name(k)}"
                    )
        report.record("degree additivity (bracket terms)", count)

        for i, g in enumerate(self.gens):
            if part_of_degree(g.degree) != g.part:
                report.fail(f"part of {g.name} inconsistent with its degree")
        report.record("triangular part from degree sign", n)

        mi = self.index.get("M")
        if mi is not None:
            for jj in range(n):
                if self.bracket_terms(mi, jj):
                    report.fail(f"M is not central: [M, {self.gen_name(jj)}] != 0")
            report.record("centrality of M", n)
        ri = self.index.get("R")
        if ri is not None:
            bad = [
                self.gen_name(jj)
                for jj in range(n)
                if not self.odd[jj] and self.bracket_terms(ri, jj)
            ]
            for name in bad:
                report.fail(f"R does not commute with even generator {name}")
            report.record("R commutes with even generators", n)

        # super Jacobi in derivation form:
        # [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]
        triples = 0
        for i in range(n):
            for jj in range(n):
                sgn = -1 if (self.odd[i] and self.odd[jj]) else 1
                bij = self.bracket_terms(i, jj)
                for k in range(n):
                    triples += 1
                    lhs = self._ad(i, dict((kk, c) for c, kk in self.bracket_terms(jj, k)))
                    rhs = {}
                    for c, t in bij:
                        for c2, t2 in self.bracket_terms(t, k):
                            v = rhs.get(t2, 0) + c * c2
                            if v:
                                rhs[t2] = v
                            else:
                                rhs.pop(t2, None)
                    for t, c in self._ad(jj, dict((kk, c) for c, kk in self.bracket_terms(i, k))).items():
                        v = rhs.get(t, 0) + sgn * c
                        if v:
                            rhs[t] = v
                        else:
                            rhs.pop(t, None)
                    if lhs != rhs:
                        report.fail(
                            "super Jacobi fails on triple "
                            f"({self.gen_name(i)}, {self.gen_name(jj)}, {self.gen_name(k)})"
                        )
        report.record("super Jacobi identity (triples)", triples)

        # omega: involution, part swap, degree negation, anti-identity
        for i in range(n):
            w = self.omega_map[i]
            if self.omega_map[w] != i:
                report.fail(f"omega not involutive on {self.gen_name(i)}")
            if self.odd[w] != self.odd[i]:
                report.fail(f"omega changes parity of {self.gen_name(i)}")
            if self.degrees[w] != tuple(-c for c in self.degrees[i]):
                report.fail(f"omega does not negate the degree of {self.gen_name(i)}")
            swap = {PLUS: MINUS, ZERO: ZERO, MINUS: PLUS}
            if self.parts[w] != swap[self.parts[i]]:
                report.fail(f"omega maps {self.gen_name(i)} to the wrong part")
        report.record("omega involution / grading swap", n)

        # anti-identity omega([x, y]) = [omega(y), omega(x)], no graded sign
        pairs = 0
        for i in range(n):
            for jj in range(n):
                pairs += 1
                lhs = {}
                for c, k in self.bracket_terms(i, jj):
                    w = self.omega_map[k]
                    lhs[w] = lhs.get(w, 0) + c
                lhs = {k: c for k, c in lhs.items() if c}
                rhs = {}
                for c, k in self.bracket_terms(self.omega_map[jj], self.omega_map[i]):
                    rhs[k] = rhs.get(k, 0) + c
                rhs = {k: c for k, c in rhs.items() if c}
                if lhs != rhs:
                    report.fail(
                        f"omega anti-identity fails on ({self.gen_name(i)}, {self.gen_name(jj)})"
                    )
        report.record("omega anti-identity on pairs", pairs)
        report.notes.append(
            "omega extends to products without a graded sign: omega(xy) = omega(y) omega(x)"
        )
        return report

    # -- serialization --------------------------------------------------------

    def to_json_dict(self):
        brackets = []
        for (i, j) in sorted(self._half):
            brackets.append(
                {
                    "x": self.gen_name(i),
                    "y": self.gen_name(j),
                    "terms": [
                        {"coeff": str(c), "gen": self.gen_name(k)}
                        for c, k in self._half[(i, j)]
                    ],
                }
            )
        return {
            "name": self.name,
            "grading_rank": self.grading_rank,
            "generators": [
                {
                    "name": g.name,
                    "parity": g.parity,
                    "degree": list(g.degree),
                    "part": g.part,
                }
                for g in self.gens
            ],
            "brackets": brackets,
        }

    @staticmethod
    def from_json_dict(data, weight_rules=None, omega_map=None):
        """Rebuild an algebra from the JSON schema.

        Weight rules and the omega table are catalog metadata; when absent
        they are taken from the catalog entry of the same name.
        """
        from . import catalog

        name = data["name"]
        if weight_rules is None or omega_map is None:
            spec = catalog.catalog_entry(name)
            weight_rules = weight_rules or spec["weights"]
            omega_map = omega_map or spec["omega"]
        gens = []
        for g in data["generators"]:
            degree = tuple(int(c) for c in g["degree"])
            info = GeneratorInfo(g["name"], g["parity"], degree, g["part"])
            if part_of_degree(degree) != g["part"]:
                raise EngineError(f"part of {g['name']} inconsistent with degree")
            gens.append(info)
        brackets = [
            (b["x"], b["y"], [(Fraction(t["coeff"]), t["gen"]) for t in b["terms"]])
            for b in data["brackets"]
        ]
        return SuperAlgebra(
            name, int(data["grading_rank"]), gens, brackets, weight_rules, omega_map
        )

    def __repr__(self):
        return f"SuperAlgebra({self.name}, {self.n_gens} generators)"


def load_algebra(name):
    """Load and return a catalog algebra by name."""
    from . import catalog

    spec = catalog.catalog_entry(name)
    gens = [
        GeneratorInfo(n, "odd" if odd else "even", deg, part_of_degree(deg))
        for n, odd, deg in spec["generators"]
    ]
    return SuperAlgebra(
        name,
        spec["grading_rank"],
        gens,
        spec["brackets"],
        spec["weights"],
        spec["omega"],
    )


def algebra_names():
    from . import catalog

    return catalog.names()


def get_algebra(name):
    """Cached catalog lookup used across the package."""
    alg = _CACHE.get(name)
    if alg is None:
        alg = load_algebra(name)
        _CACHE[name] = alg
    return alg


_CACHE = {}


def unknown_algebra(name):
    raise UnknownAlgebraError(
        f"unknown algebra {name!r}; available: {', '.join(algebra_names())}"
    )
