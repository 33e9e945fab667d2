"""
Elements of the free operated Lie algebra, stored in the NLSBW basis.

Every operation goes through the associative envelope: a Lie polynomial is
expanded to a linear combination of words, combined there, and brought back
to the basis by repeatedly peeling off the greatest word (which is always
ALSBW for a Lie element) together with the expansion of its basis tree.
"""
from __future__ import annotations

import functools
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .errors import NotALieElementError, WordSyntaxError, ZeroPolynomialError
from .lyndon import is_alsbw, is_nlsbw, nlsbw_of
from .order import MonomialOrder
from .scalar import ONE, Number, Scalar, as_scalar
from .words import Leaf, Op, OpNode, Tree, Word, forget, parse_tree


class AssocPoly:
    """A finite linear combination of words."""
    __slots__ = ("terms", )

    def __init__(self, terms: Optional[Dict[Word, Scalar]] = None):
        self.terms: Dict[Word, Scalar] = {w: c for w, c in (terms or {}).items() if c}

    @staticmethod
    def monomial(w: Word, c: Number = ONE) -> "AssocPoly":
        return AssocPoly({w: as_scalar(c)})

    def _accumulate(self, other: "AssocPoly", sign: int) -> "AssocPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            c = c if sign > 0 else -c
            v = out.get(w)
            v = c if v is None else v + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return AssocPoly(out)

    def __add__(self, other: "AssocPoly") -> "AssocPoly":
        return self._accumulate(other, 1)

    def __sub__(self, other: "AssocPoly") -> "AssocPoly":
        return self._accumulate(other, -1)

    def __neg__(self) -> "AssocPoly":
        return AssocPoly({w: -c for w, c in self.terms.items()})

    def scale(self, c: Number) -> "AssocPoly":
        c = as_scalar(c)
        if not c:
            return AssocPoly()
        return AssocPoly({w: c * d for w, d in self.terms.items()})

    def __mul__(self, other: "AssocPoly") -> "AssocPoly":
        out: Dict[Word, Scalar] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                c = a * b
                prev = out.get(w)
                out[w] = c if prev is None else prev + c
        return AssocPoly(out)

    def op(self) -> "AssocPoly":
        return AssocPoly({Word((Op(w), )): c for w, c in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def leading(self, order: MonomialOrder) -> Tuple[Word, Scalar]:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading word")
        w = order.max(self.terms)
        return w, self.terms[w]

    def __eq__(self, other):
        return isinstance(other, AssocPoly) and other.terms == self.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c} * {w}" for w, c in sorted(self.terms.items(), key=lambda t: str(t[0])))


@functools.lru_cache(maxsize=1 << 16)
def expand(t: Tree) -> AssocPoly:
    """The image of a bracketing in the associative envelope."""
    if isinstance(t, Leaf):
        return AssocPoly.monomial(forget(t))
    if isinstance(t, OpNode):
        return expand(t.child).op()
    l, r = expand(t.left), expand(t.right)
    return l * r - r * l


class LiePoly:
    """A linear combination of NLSBW trees over Q(a), bound to a monomial order."""
    __slots__ = ("order", "terms", "_leading")

    def __init__(self, order: MonomialOrder, terms: Optional[Dict[Tree, Scalar]] = None):
        self.order = order
        self.terms: Dict[Tree, Scalar] = {t: c for t, c in (terms or {}).items() if c}
        self._leading = None

    # -- constructors --

    @staticmethod
    def zero(order: MonomialOrder) -> "LiePoly":
        return LiePoly(order)

    @staticmethod
    def basis(t: Tree, order: MonomialOrder, c: Number = ONE) -> "LiePoly":
        if not is_nlsbw(t, order):
            raise NotALieElementError(f"{t} is not a Lyndon-Shirshov basis tree under {order.name}")
        return LiePoly(order, {t: as_scalar(c)})

    @staticmethod
    def of_word(w: Word, order: MonomialOrder) -> "LiePoly":
        return LiePoly(order, {nlsbw_of(w, order): ONE})

    @staticmethod
    def from_tree(t: Tree, order: MonomialOrder) -> "LiePoly":
        """Normal form of an arbitrary bracketing."""
        if is_nlsbw(t, order):
            return LiePoly(order, {t: ONE})
        return from_assoc(expand(t), order)

    @staticmethod
    def parse(src: str, order: MonomialOrder) -> "LiePoly":
        """
        Parse ``c1 * t1 + c2 * t2 + ...`` where each ``t`` is a tree and each
        coefficient is optional. Trees need not be in normal form.
        """
        text = src.strip()
        if text == "0":
            return LiePoly.zero(order)
        result = LiePoly.zero(order)
        for term in _split_top(text, " + "):
            parts = _split_top(term, " * ")
            if len(parts) == 1:
                coeff, tree_src = ONE, parts[0]
            elif len(parts) == 2:
                coeff, tree_src = Scalar.parse(parts[0]), parts[1]
            else:
                raise WordSyntaxError(src, src.find(term), f"malformed term {term!r}")
            try:
                t = parse_tree(tree_src, order.alphabet)
            except WordSyntaxError as e:
                raise WordSyntaxError(src, src.find(tree_src) + e.col, e.error_message)
            result = result + LiePoly.from_tree(t, order) * coeff
        return result

    # -- queries --

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self) -> Iterator[Tuple[Tree, Scalar]]:
        return iter(self.sorted_terms())

    def coefficient(self, t: Tree) -> Scalar:
        return self.terms.get(t, Scalar(0))

    def sorted_terms(self) -> List[Tuple[Tree, Scalar]]:
        return sorted(self.terms.items(), key=lambda tc: self.order.key(forget(tc[0])), reverse=True)

    def leading(self) -> Tuple[Word, Scalar]:
        if self._leading is None:
            if not self.terms:
                raise ZeroPolynomialError("the zero polynomial has no leading word")
            t = max(self.terms, key=lambda t: self.order.key(forget(t)))
            self._leading = (forget(t), self.terms[t])
        return self._leading

    @property
    def leading_word(self) -> Word:
        return self.leading()[0]

    @property
    def deg(self) -> int:
        return max((forget(t).deg for t in self.terms), default=0)

    @property
    def is_constant(self) -> bool:
        return all(c.is_constant for c in self.terms.values())

    def expand(self) -> AssocPoly:
        out = AssocPoly()
        for t, c in self.terms.items():
            out = out + expand(t).scale(c)
        return out

    # -- linear structure --

    def _check(self, other: "LiePoly"):
        if other.order != self.order:
            raise ValueError(f"cannot combine polynomials under {self.order.name} and {other.order.name}")

    def __add__(self, other: "LiePoly") -> "LiePoly":
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            v = out.get(t)
            out[t] = c if v is None else v + c
        return LiePoly(self.order, out)

    def __sub__(self, other: "LiePoly") -> "LiePoly":
        return self + (-other)

    def __neg__(self) -> "LiePoly":
        return LiePoly(self.order, {t: -c for t, c in self.terms.items()})

    def __mul__(self, c: Number) -> "LiePoly":
        if isinstance(c, LiePoly):
            return NotImplemented
        c = as_scalar(c)
        if not c:
            return LiePoly.zero(self.order)
        return LiePoly(self.order, {t: c * d for t, d in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c: Number) -> "LiePoly":
        return self * as_scalar(c).inverse()

    def axpy(self, a: Number, x: "LiePoly") -> "LiePoly":
        """``self + a * x``"""
        return self + x * a

    def specialize(self, value) -> "LiePoly":
        """Evaluate every coefficient at a value of the parameter."""
        return LiePoly(self.order, {t: c.eval_at(value) for t, c in self.terms.items()})

    def bracket(self, other: "LiePoly") -> "LiePoly":
        return bracket(self, other)

    def op_apply(self) -> "LiePoly":
        return op_apply(self)

    def make_monic(self) -> "LiePoly":
        return make_monic(self)

    def __eq__(self, other):
        return isinstance(other, LiePoly) and other.order == self.order and other.terms == self.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c} * {t}" for t, c in self.sorted_terms())

    def __repr__(self):
        return f"LiePoly({str(self)!r})"


def _split_top(text: str, sep: str) -> List[str]:
    parts, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i].strip())
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(text[start:].strip())
    return parts


def from_assoc(p: AssocPoly, order: MonomialOrder) -> LiePoly:
    """Rewrite an associative polynomial that lies in the Lie subalgebra in the NLSBW basis."""
    rest = dict(p.terms)
    out: Dict[Tree, Scalar] = {}
    while rest:
        w = order.max(rest)
        c = rest[w]
        if not is_alsbw(w, order):
            raise NotALieElementError(f"leading word {w} is not ALSBW under {order.name}: not a Lie element")
        t = nlsbw_of(w, order)
        out[t] = c
        for u, d in expand(t).terms.items():
            v = rest.get(u, None)
            v = -(c * d) if v is None else v - c * d
            if v:
                rest[u] = v
            else:
                rest.pop(u, None)
    return LiePoly(order, out)


def bracket(f: LiePoly, g: LiePoly) -> LiePoly:
    f._check(g)
    if not f or not g:
        return LiePoly.zero(f.order)
    ef, eg = f.expand(), g.expand()
    return from_assoc(ef * eg - eg * ef, f.order)


def op_apply(f: LiePoly) -> LiePoly:
    return LiePoly(f.order, {OpNode(t): c for t, c in f.terms.items()})


def leading(f: LiePoly) -> Tuple[Word, Scalar]:
    return f.leading()


def make_monic(f: LiePoly) -> LiePoly:
    if not f:
        raise ZeroPolynomialError("cannot make the zero polynomial monic")
    _, c = f.leading()
    if c == 1:
        return f
    return f / c


def lie_sum(polys: Iterable[LiePoly], order: MonomialOrder) -> LiePoly:
    out = LiePoly.zero(order)
    for f in polys:
        out = out + f
    return out


__all__ = [
    "AssocPoly", "LiePoly", "expand", "from_assoc", "bracket", "op_apply", "leading", "make_monic", "lie_sum"
]
