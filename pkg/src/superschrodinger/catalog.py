"""Structure-constant tables of the seven catalog algebras.

Two bosonic Schrodinger algebras (one and two space dimensions, both with
the central mass element M) and their five supersymmetric extensions:

======  =====================================  =======  ====
name    content                                grading  odd
======  =====================================  =======  ====
sch1    H, P, D, K, G, M                       Z        0
sch2    + rotation J, split P/G into P+-/G+-   Z^2      0
s11     sch1 + Q, S, X (N = 1)                 Z        3
s12     sch1 + R + Q+-, S+-, X+- (N = 2)       Z^2      6
s21     sch2 + Q, S, X+- (N = 1)               Z^2      4
s22     sch2 + R + Q+-, S+-, X(++,+-,-+,--)    Z^3      8
s22hat  sch2 + R + Q+-, S+-, X+- (exotic N=2)  Z^3      6
======  =====================================  =======  ====

Generators are listed raising part first, then the Cartan-like part, then
the lowering part, in the order the module bases are written.  Only
nonvanishing brackets appear; odd-odd entries are anticommutators.  The
``weights`` table gives the eigenvalue rule of each Cartan-like generator
on the lowest weight vector as (factor, parameter), with M v0 = m v0,
D v0 = -d v0, J v0 = -j v0 and R v0 = r v0 (2r for the exotic algebra);
"chi" marks the odd eigenvalue with chi**2 = m/2.
"""

from .errors import UnknownAlgebraError

_SCH1_BOSONIC = [
    ("H", "D", [(2, "H")]),
    ("H", "K", [(1, "D")]),
    ("D", "K", [(2, "K")]),
    ("P", "G", [(1, "M")]),
    ("H", "G", [(1, "P")]),
    ("D", "G", [(1, "G")]),
    ("P", "D", [(1, "P")]),
    ("P", "K", [(1, "G")]),
]

_SCH2_BOSONIC = [
    ("H", "D", [(2, "H")]),
    ("H", "K", [(1, "D")]),
    ("D", "K", [(2, "K")]),
    ("P+", "G-", [(2, "M")]),
    ("P-", "G+", [(2, "M")]),
    ("H", "G+", [(1, "P+")]),
    ("H", "G-", [(1, "P-")]),
    ("D", "G+", [(1, "G+")]),
    ("D", "G-", [(1, "G-")]),
    ("P+", "D", [(1, "P+")]),
    ("P-", "D", [(1, "P-")]),
    ("P+", "K", [(1, "G+")]),
    ("P-", "K", [(1, "G-")]),
    ("J", "G+", [(1, "G+")]),
    ("J", "G-", [(-1, "G-")]),
    ("J", "P+", [(1, "P+")]),
    ("J", "P-", [(-1, "P-")]),
]

_CATALOG = {
    "sch1": {
        "grading_rank": 1,
        "generators": [
            ("G", False, (1,)),
            ("K", False, (2,)),
            ("D", False, (0,)),
            ("M", False, (0,)),
            ("H", False, (-2,)),
            ("P", False, (-1,)),
        ],
        "brackets": _SCH1_BOSONIC,
        "weights": {"D": (-1, "d"), "M": (1, "m")},
        "omega": {"G": "P", "P": "G", "K": "H", "H": "K", "D": "D", "M": "M"},
    },
    "s11": {
        "grading_rank": 1,
        "generators": [
            ("G", False, (1,)),
            ("K", False, (2,)),
            ("S", True, (1,)),
            ("D", False, (0,)),
            ("M", False, (0,)),
            ("X", True, (0,)),
            ("H", False, (-2,)),
            ("P", False, (-1,)),
            ("Q", True, (-1,)),
        ],
        "brackets": _SCH1_BOSONIC
        + [
            ("Q", "Q", [(-2, "H")]),
            ("S", "S", [(-2, "K")]),
            ("X", "X", [(-1, "M")]),
            ("Q", "X", [(-1, "P")]),
            ("S", "X", [(-1, "G")]),
            ("Q", "S", [(-1, "D")]),
            ("Q", "D", [(1, "Q")]),
            ("Q", "K", [(1, "S")]),
            ("D", "S", [(1, "S")]),
            ("H", "S", [(1, "Q")]),
            ("Q", "G", [(1, "X")]),
            ("P", "S", [(1, "X")]),
        ],
        "weights": {"D": (-1, "d"), "M": (1, "m"), "X": (1, "chi")},
        "omega": {
            "G": "P", "P": "G", "K": "H", "H": "K", "D": "D", "M": "M",
            "Q": "S", "S": "Q", "X": "X",
        },
    },
    "s12": {
        "grading_rank": 2,
        "generators": [
            ("G", False, (1, 0)),
            ("K", False, (2, 0)),
            ("S+", True, (1, 1)),
            ("S-", True, (1, -1)),
            ("X+", True, (0, 1)),
            ("D", False, (0, 0)),
            ("R", False, (0, 0)),
            ("M", False, (0, 0)),
            ("H", False, (-2, 0)),
            ("P", False, (-1, 0)),
            ("Q+", True, (-1, 1)),
            ("Q-", True, (-1, -1)),
            ("X-", True, (0, -1)),
        ],
        "brackets": _SCH1_BOSONIC
        + [
            ("Q+", "Q-", [(-2, "H")]),
            ("S+", "S-", [(-2, "K")]),
            ("X+", "X-", [(-1, "M")]),
            ("Q+", "X-", [(-1, "P")]),
            ("Q-", "X+", [(-1, "P")]),
            ("S+", "X-", [(-1, "G")]),
            ("S-", "X+", [(-1, "G")]),
            ("Q+", "S-", [(-1, "D"), (-1, "R")]),
            ("Q-", "S+", [(-1, "D"), (1, "R")]),
            ("Q+", "D", [(1, "Q+")]),
            ("Q-", "D", [(1, "Q-")]),
            ("Q+", "K", [(1, "S+")]),
            ("Q-", "K", [(1, "S-")]),
            ("D", "S+", [(1, "S+")]),
            ("D", "S-", [(1, "S-")]),
            ("H", "S+", [(1, "Q+")]),
            ("H", "S-", [(1, "Q-")]),
            ("Q+", "G", [(1, "X+")]),
            ("Q-", "G", [(1, "X-")]),
            ("P", "S+", [(1, "X+")]),
            ("P", "S-", [(1, "X-")]),
            ("R", "Q+", [(1, "Q+")]),
            ("R", "Q-", [(-1, "Q-")]),
            ("R", "S+", [(1, "S+")]),
            ("R", "S-", [(-1, "S-")]),
            ("R", "X+", [(1, "X+")]),
            ("R", "X-", [(-1, "X-")]),
        ],
        "weights": {"D": (-1, "d"), "R": (1, "r"), "M": (1, "m")},
        "omega": {
            "G": "P", "P": "G", "K": "H", "H": "K", "D": "D", "M": "M", "R": "R",
            "Q+": "S-", "S-": "Q+", "Q-": "S+", "S+": "Q-", "X+": "X-", "X-": "X+",
        },
    },
    "sch2": {
        "grading_rank": 2,
        "generators": [
            ("G+", False, (1, 1)),
            ("G-", False, (1, -1)),
            ("K", False, (2, 0)),
            ("D", False, (0, 0)),
            ("J", False, (0, 0)),
            ("M", False, (0, 0)),
            ("H", False, (-2, 0)),
            ("P+", False, (-1, 1)),
            ("P-", False, (-1, -1)),
        ],
        "brackets": _SCH2_BOSONIC,
        "weights": {"D": (-1, "d"), "J": (-1, "j"), "M": (1, "m")},
        "omega": {
            "G+": "P-", "P-": "G+", "G-": "P+", "P+": "G-",
            "K": "H", "H": "K", "D": "D", "J": "J", "M": "M",
        },
    },
    "s21": {
        "grading_rank": 2,
        "generators": [
            ("G+", False, (1, 1)),
            ("G-", False, (1, -1)),
            ("K", False, (2, 0)),
            ("S", True, (1, 0)),
            ("X+", True, (0, 1)),
            ("D", False, (0, 0)),
            ("J", False, (0, 0)),
            ("M", False, (0, 0)),
            ("H", False, (-2, 0)),
            ("P+", False, (-1, 1)),
            ("P-", False, (-1, -1)),
            ("Q", True, (-1, 0)),
            ("X-", True, (0, -1)),
        ],
        "brackets": _SCH2_BOSONIC
        + [
            ("Q", "Q", [(-2, "H")]),
            ("S", "S", [(-2, "K")]),
            ("X+", "X-", [(-2, "M")]),
            ("Q", "X+", [(-1, "P+")]),
            ("Q", "X-", [(-1, "P-")]),
            ("S", "X+", [(-1, "G+")]),
            ("S", "X-", [(-1, "G-")]),
            ("Q", "S", [(-1, "D")]),
            ("Q", "D", [(1, "Q")]),
            ("Q", "K", [(1, "S")]),
            ("D", "S", [(1, "S")]),
            ("H", "S", [(1, "Q")]),
            ("Q", "G+", [(1, "X+")]),
            ("Q", "G-", [(1, "X-")]),
            ("P+", "S", [(1, "X+")]),
            ("P-", "S", [(1, "X-")]),
            ("J", "X+", [(1, "X+")]),
            ("J", "X-", [(-1, "X-")]),
        ],
        "weights": {"D": (-1, "d"), "J": (-1, "j"), "M": (1, "m")},
        "omega": {
            "G+": "P-", "P-": "G+", "G-": "P+", "P+": "G-",
            "K": "H", "H": "K", "D": "D", "J": "J", "M": "M",
            "Q": "S", "S": "Q", "X+": "X-", "X-": "X+",
        },
    },
    "s22": {
        "grading_rank": 3,
        "generators": [
            ("G+", False, (1, 1, 0)),
            ("G-", False, (1, -1, 0)),
            ("K", False, (2, 0, 0)),
            ("S+", True, (1, 0, 1)),
            ("S-", True, (1, 0, -1)),
            ("X++", True, (0, 1, 1)),
            ("X+-", True, (0, 1, -1)),
            ("D", False, (0, 0, 0)),
            ("J", False, (0, 0, 0)),
            ("M", False, (0, 0, 0)),
            ("R", False, (0, 0, 0)),
            ("H", False, (-2, 0, 0)),
            ("P+", False, (-1, 1, 0)),
            ("P-", False, (-1, -1, 0)),
            ("Q+", True, (-1, 0, 1)),
            ("Q-", True, (-1, 0, -1)),
            ("X-+", True, (0, -1, 1)),
            ("X--", True, (0, -1, -1)),
        ],
        "brackets": [
            (x, y, [(c, g) for c, g in terms])
            for x, y, terms in _SCH2_BOSONIC
        ]
        + [
            ("Q+", "Q-", [(-2, "H")]),
            ("S+", "S-", [(-2, "K")]),
            ("X++", "X--", [(-2, "M")]),
            ("X+-", "X-+", [(-2, "M")]),
            ("Q+", "X+-", [(-1, "P+")]),
            ("Q+", "X--", [(-1, "P-")]),
            ("Q-", "X++", [(-1, "P+")]),
            ("Q-", "X-+", [(-1, "P-")]),
            ("S+", "X+-", [(-1, "G+")]),
            ("S+", "X--", [(-1, "G-")]),
            ("S-", "X++", [(-1, "G+")]),
            ("S-", "X-+", [(-1, "G-")]),
            ("Q+", "S-", [(-1, "D"), (-1, "R")]),
            ("Q-", "S+", [(-1, "D"), (1, "R")]),
            ("Q+", "D", [(1, "Q+")]),
            ("Q-", "D", [(1, "Q-")]),
            ("Q+", "K", [(1, "S+")]),
            ("Q-", "K", [(1, "S-")]),
            ("D", "S+", [(1, "S+")]),
            ("D", "S-", [(1, "S-")]),
            ("H", "S+", [(1, "Q+")]),
            ("H", "S-", [(1, "Q-")]),
            ("G+", "Q+", [(-1, "X++")]),
            ("G-", "Q-", [(-1, "X--")]),
            ("G+", "Q-", [(-1, "X+-")]),
            ("G-", "Q+", [(-1, "X-+")]),
            ("P+", "S+", [(1, "X++")]),
            ("P-", "S-", [(1, "X--")]),
            ("P+", "S-", [(1, "X+-")]),
            ("P-", "S+", [(1, "X-+")]),
            ("R", "Q+", [(1, "Q+")]),
            ("R", "Q-", [(-1, "Q-")]),
            ("R", "S+", [(1, "S+")]),
            ("R", "S-", [(-1, "S-")]),
            ("R", "X++", [(1, "X++")]),
            ("R", "X+-", [(-1, "X+-")]),
            ("R", "X-+", [(1, "X-+")]),
            ("R", "X--", [(-1, "X--")]),
            ("J", "X++", [(1, "X++")]),
            ("J", "X+-", [(1, "X+-")]),
            ("J", "X-+", [(-1, "X-+")]),
            ("J", "X--", [(-1, "X--")]),
        ],
        "weights": {"D": (-1, "d"), "J": (-1, "j"), "M": (1, "m"), "R": (1, "r")},
        "omega": {
            "G+": "P-", "P-": "G+", "G-": "P+", "P+": "G-",
            "K": "H", "H": "K", "D": "D", "J": "J", "M": "M", "R": "R",
            "Q+": "S-", "S-": "Q+", "Q-": "S+", "S+": "Q-",
            "X++": "X--", "X--": "X++", "X+-": "X-+", "X-+": "X+-",
        },
    },
    "s22hat": {
        "grading_rank": 3,
        "generators": [
            ("G+", False, (1, 1, 0)),
            ("G-", False, (1, -1, 0)),
            ("K", False, (2, 0, 0)),
            ("S+", True, (1, -1, 2)),
            ("S-", True, (1, 1, -2)),
            ("X+", True, (0, 0, 2)),
            ("D", False, (0, 0, 0)),
            ("J", False, (0, 0, 0)),
            ("M", False, (0, 0, 0)),
            ("R", False, (0, 0, 0)),
            ("H", False, (-2, 0, 0)),
            ("P+", False, (-1, 1, 0)),
            ("P-", False, (-1, -1, 0)),
            ("Q+", True, (-1, -1, 2)),
            ("Q-", True, (-1, 1, -2)),
            ("X-", True, (0, 0, -2)),
        ],
        "brackets": [
            (x, y, [(c, g) for c, g in terms])
            for x, y, terms in _SCH2_BOSONIC
        ]
        + [
            ("Q+", "Q-", [(-2, "H")]),
            ("S+", "S-", [(-2, "K")]),
            ("X+", "X-", [(-1, "M")]),
            ("Q+", "X-", [(-1, "P-")]),
            ("Q-", "X+", [(-1, "P+")]),
            ("S+", "X-", [(-1, "G-")]),
            ("S-", "X+", [(-1, "G+")]),
            ("Q+", "S-", [(-1, "D"), (-1, "J"), (-1, "R")]),
            ("Q-", "S+", [(-1, "D"), (1, "J"), (1, "R")]),
            ("Q+", "D", [(1, "Q+")]),
            ("Q-", "D", [(1, "Q-")]),
            ("Q+", "K", [(1, "S+")]),
            ("Q-", "K", [(1, "S-")]),
            ("D", "S+", [(1, "S+")]),
            ("D", "S-", [(1, "S-")]),
            ("H", "S+", [(1, "Q+")]),
            ("H", "S-", [(1, "Q-")]),
            ("Q+", "G+", [(2, "X+")]),
            ("Q-", "G-", [(2, "X-")]),
            ("P+", "S+", [(2, "X+")]),
            ("P-", "S-", [(2, "X-")]),
            ("J", "Q+", [(-1, "Q+")]),
            ("J", "Q-", [(1, "Q-")]),
            ("J", "S+", [(-1, "S+")]),
            ("J", "S-", [(1, "S-")]),
            ("R", "Q+", [(2, "Q+")]),
            ("R", "Q-", [(-2, "Q-")]),
            ("R", "S+", [(2, "S+")]),
            ("R", "S-", [(-2, "S-")]),
            ("R", "X+", [(2, "X+")]),
            ("R", "X-", [(-2, "X-")]),
        ],
        "weights": {"D": (-1, "d"), "J": (-1, "j"), "M": (1, "m"), "R": (2, "r")},
        "omega": {
            "G+": "P-", "P-": "G+", "G-": "P+", "P+": "G-",
            "K": "H", "H": "K", "D": "D", "J": "J", "M": "M", "R": "R",
            "Q+": "S-", "S-": "Q+", "Q-": "S+", "S+": "Q-", "X+": "X-", "X-": "X+",
        },
    },
}


def names():
    return ("sch1", "sch2", "s11", "s12", "s21", "s22", "s22hat")


def catalog_entry(name):
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownAlgebraError(
            f"unknown algebra {name!r}; available: {', '.join(names())}"
        ) from None
