"""
The catalog of operated Lie polynomial identities.

Each identity is a linear combination of bracketings in the placeholders
``x`` and ``y``, written in the tree syntax of :mod:`olie.algebra.words`.
Identities whose coefficients involve the parameter ``a`` come with a
second variant for the excluded value ``a = -1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from ..algebra.lie import LiePoly, bracket, make_monic, op_apply
from ..algebra.order import MonomialOrder, OrderKind
from ..algebra.scalar import Scalar
from ..algebra.words import Alphabet, Leaf, OpNode, Pair, Tree, Word, parse_tree
from ..errors import OlieError

PLACEHOLDERS = Alphabet(("x", "y"))

DEFAULT_VARIANT = "default"


class UnknownIdentityError(OlieError):

    def __init__(self, name: str, known: Tuple[str, ...] = ()):
        self.name = name
        self.known = known

    def __str__(self):
        return f"unknown identity {self.name!r}; known: {', '.join(self.known)}"

    def __reduce__(self):
        return type(self), (self.name, self.known)


@dataclass(frozen=True)
class Template:
    terms: Tuple[Tuple[Scalar, Tree], ...]

    @staticmethod
    def parse(*terms: Tuple[str, str]) -> "Template":
        return Template(tuple((Scalar.parse(c), parse_tree(t, PLACEHOLDERS)) for c, t in terms))

    @property
    def operated_degree(self) -> int:
        degrees = {t.word.odeg for _, t in self.terms}
        assert len(degrees) == 1, f"template mixes operated degrees {sorted(degrees)}"
        return degrees.pop()

    @property
    def parametric(self) -> bool:
        return any(not c.is_constant for c, _ in self.terms)

    def __str__(self):
        return " + ".join(f"{c} * {t}" for c, t in self.terms)


@dataclass(frozen=True)
class OLPI:
    name: str
    description: str
    variants: Tuple[Tuple[str, Template], ...]
    # order under which the rule set is a Gröbner-Shirshov basis
    gs_order: OrderKind
    non_gs_orders: Tuple[OrderKind, ...] = ()

    def template(self, variant: Optional[str] = None) -> Template:
        if variant is None:
            return self.variants[0][1]
        for name, t in self.variants:
            if name == variant:
                return t
        raise UnknownIdentityError(f"{self.name}:{variant}", tuple(n for n, _ in self.variants))

    @property
    def variant_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.variants)

    @property
    def operated_degree(self) -> int:
        return self.variants[0][1].operated_degree

    @property
    def parametric(self) -> bool:
        return any(t.parametric for _, t in self.variants)


def _single(name: str, description: str, order: OrderKind, *terms: Tuple[str, str],
            non_gs: Tuple[OrderKind, ...] = ()) -> OLPI:
    return OLPI(name, description, ((DEFAULT_VARIANT, Template.parse(*terms)), ), order, non_gs)


def _parametric(name: str, description: str, case1: Tuple[Tuple[str, str], ...],
                case2: Tuple[Tuple[str, str], ...]) -> OLPI:
    return OLPI(name, description, (("case1", Template.parse(*case1)), ("case2", Template.parse(*case2))),
                OrderKind.DL, (OrderKind.DT, ))


def _operated_degree_family(prefix: str, op: str, label: str) -> List[OLPI]:
    """The six identities relating the operator ``op`` (as a tree prefix) and the bracket."""
    P = lambda s: f"{op}{s}{')' * op.count('(')}"
    DT = OrderKind.DT
    return [
        _single(f"{prefix}bracket", f"{label}[xy] = 0", DT, ("1", P("(x y)"))),
        _single(f"{prefix}bracket-right", f"{label}[xy] = [x {label}y]", DT, ("1", P("(x y)")),
                ("-1", f"(x {P('y')})")),
        _single(f"{prefix}bracket-left", f"{label}[xy] = [{label}x y]", DT, ("1", P("(x y)")),
                ("-1", f"({P('x')} y)")),
        _single(f"{prefix}derivation", f"{label}[xy] = [{label}x y] + [x {label}y]", DT, ("1", P("(x y)")),
                ("-1", f"({P('x')} y)"), ("-1", f"(x {P('y')})")),
        _single(f"{prefix}left-annihilator", f"[{label}x y] = 0", DT, ("1", f"({P('x')} y)")),
        _single(f"{prefix}right-annihilator", f"[x {label}y] = 0", DT, ("1", f"(x {P('y')})")),
    ]


def _build_catalog() -> List[OLPI]:
    DL, DT = OrderKind.DL, OrderKind.DT
    out = _operated_degree_family("", "P(", "P") + _operated_degree_family("double-", "P(P(", "PP")
    out += [
        _single("rota-baxter", "[Px Py] = P[Px y] + P[x Py]", DL, ("1", "(P(x) P(y))"), ("-1", "P((P(x) y))"),
                ("-1", "P((x P(y)))")),
        _single("nijenhuis", "[Px Py] = P[Px y] + P[x Py] - PP[xy]", DL, ("1", "(P(x) P(y))"),
                ("-1", "P((P(x) y))"), ("-1", "P((x P(y)))"), ("1", "P(P((x y)))")),
        _single("average", "[Px Py] = P[x Py]", DL, ("1", "(P(x) P(y))"), ("-1", "P((x P(y)))")),
        _single("inverse-average", "[Px Py] = P[Px y]", DL, ("1", "(P(x) P(y))"), ("-1", "P((P(x) y))")),
        _single("new-a-right", "[x PPy] + PP[xy] + P[x Py] = 0", DL, ("1", "(x P(P(y)))"), ("1", "P(P((x y)))"),
                ("1", "P((x P(y)))"), non_gs=(DT, )),
        _single("new-a-left", "[PPx y] + PP[xy] + P[Px y] = 0", DL, ("1", "(P(P(x)) y)"), ("1", "P(P((x y)))"),
                ("1", "P((P(x) y))"), non_gs=(DT, )),
        _parametric(
            "new-b-right", "PP[xy] + a P[x Py] - (a+1)[x PPy] = 0, a != 0",
            (("1", "P(P((x y)))"), ("a", "P((x P(y)))"), ("-(a + 1)", "(x P(P(y)))")),
            (("1", "P((x P(y)))"), ("-1", "P(P((x y)))")),
        ),
        _parametric(
            "new-b-left", "PP[xy] + a P[Px y] - (a+1)[PPx y] = 0, a != 0",
            (("1", "P(P((x y)))"), ("a", "P((P(x) y))"), ("-(a + 1)", "(P(P(x)) y)")),
            (("1", "P((P(x) y))"), ("-1", "P(P((x y)))")),
        ),
        _single("new-c", "[PPx y] + PP[xy] + [x PPy] + 2[Px Py] - 2P[Px y] - 2P[x Py] = 0", DL,
                ("1", "(P(P(x)) y)"), ("1", "P(P((x y)))"), ("1", "(x P(P(y)))"), ("2", "(P(x) P(y))"),
                ("-2", "P((P(x) y))"), ("-2", "P((x P(y)))"), non_gs=(DT, )),
        _single("p1", "[PPx y] = P[Px y]", DL, ("1", "(P(P(x)) y)"), ("-1", "P((P(x) y))")),
        _single("p2", "P[Px y] = 0", DL, ("1", "P((P(x) y))")),
        _single("p3", "[x PPy] = P[x Py]", DL, ("1", "(x P(P(y)))"), ("-1", "P((x P(y)))")),
        _single("p4", "P[x Py] = 0", DL, ("1", "P((x P(y)))")),
        _single("p5", "[Px Py] = 0", DL, ("1", "(P(x) P(y))")),
    ]
    return out


CATALOG: Tuple[OLPI, ...] = tuple(_build_catalog())
_BY_NAME: Dict[str, OLPI] = {phi.name: phi for phi in CATALOG}

# short names accepted on the command line
ALIASES: Dict[str, str] = {
    "psi": "bracket-right",
    "rb": "rota-baxter",
    "avg": "average",
    "inverse-avg": "inverse-average",
    "newA-right": "new-a-right",
    "newA-left": "new-a-left",
    "newB-right": "new-b-right",
    "newB-left": "new-b-left",
    "newC": "new-c",
}


def catalog() -> Tuple[OLPI, ...]:
    return CATALOG


def get(name: str) -> OLPI:
    try:
        return _BY_NAME[ALIASES.get(name, name)]
    except KeyError:
        raise UnknownIdentityError(name, tuple(_BY_NAME))


Argument = Union[Word, Tree, LiePoly]


def _as_poly(arg: Argument, order: MonomialOrder) -> LiePoly:
    if isinstance(arg, LiePoly):
        return arg
    if isinstance(arg, Word):
        return LiePoly.of_word(arg, order)
    return LiePoly.basis(arg, order)


def _substitute(t: Tree, args: Dict[str, LiePoly]) -> LiePoly:
    if isinstance(t, Leaf):
        return args[t.symbol]
    if isinstance(t, OpNode):
        return op_apply(_substitute(t.child, args))
    assert isinstance(t, Pair)
    return bracket(_substitute(t.left, args), _substitute(t.right, args))


def instantiate(phi: OLPI, u: Argument, v: Argument, order: MonomialOrder, variant: Optional[str] = None,
                sample=None) -> LiePoly:
    """
    ``phi(u, v)`` in normal form, made monic; the zero polynomial when the
    instance vanishes. With ``sample`` the parameter is specialized first.
    """
    args = {"x": _as_poly(u, order), "y": _as_poly(v, order)}
    total = LiePoly.zero(order)
    for c, t in phi.template(variant).terms:
        if sample is not None:
            c = c.eval_at(sample)
        total = total + _substitute(t, args) * c
    if not total:
        return total
    return make_monic(total)

