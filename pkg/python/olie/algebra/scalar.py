"""
Coefficients of the rewriting engine: exact rationals, promoted to the
rational function field Q(a) as soon as the free parameter of a B-type
identity is involved. Constant results are demoted back to
:class:`fractions.Fraction`, so the common case stays on the fast path.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Tuple, Union

from sympy import QQ, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.fields import FracElement, field
from sympy.polys.polyerrors import CoercionFailed

from .errors import ScalarZeroDivisionError, SingularParameterError, WordSyntaxError

PARAMETER = "a"
FIELD, _A = field(PARAMETER, QQ)
_SYMBOL = Symbol(PARAMETER)

Number = Union[int, Fraction, "Scalar"]


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _to_domain(q: Fraction):
    return QQ(q.numerator, q.denominator)


def _promote(v):
    if isinstance(v, Fraction):
        return FIELD.field_new(_to_domain(v))
    return v


def _demote(v):
    if isinstance(v, FracElement) and v.numer.is_ground and v.denom.is_ground:
        return _to_fraction(v.numer.LC) / _to_fraction(v.denom.LC)
    return v


def _poly_terms(p) -> Tuple[Tuple[int, Fraction], ...]:
    return tuple((n, _to_fraction(c)) for (n, ), c in sorted(p.terms(), reverse=True))


class Scalar:
    """An element of Q(a), immutable and hashable."""
    __slots__ = ("_value", "_hash")

    def __init__(self, value: Union[int, Fraction, FracElement, "Scalar"] = 0):
        if isinstance(value, Scalar):
            value = value._value
        elif isinstance(value, (int, Fraction)):
            value = Fraction(value)
        elif isinstance(value, FracElement):
            if value.field != FIELD:
                raise TypeError(f"rational function over the wrong field: {value.field}")
            value = _demote(value)
        else:
            raise TypeError(f"cannot build a scalar from {type(value).__name__}")
        self._value = value
        self._hash = None

    # -- constructors --

    @staticmethod
    def parameter() -> "Scalar":
        return Scalar(_A)

    @staticmethod
    def parse(text: str) -> "Scalar":
        """
        Parse ``p/q``, the parameter ``a``, or a rational function such as
        ``(a + 1)/(a - 2)``.
        """
        src = text.strip()
        if not src:
            raise WordSyntaxError(text, 0, "empty coefficient")
        try:
            return Scalar(Fraction(src))
        except (ValueError, ZeroDivisionError):
            pass
        try:
            expr = parse_expr(src, local_dict={PARAMETER: _SYMBOL})
            value = FIELD.from_expr(expr)
        except ZeroDivisionError:
            raise ScalarZeroDivisionError(f"division by zero in coefficient {src!r}")
        except (SympifyError, SyntaxError, TypeError, ValueError, CoercionFailed) as e:
            raise WordSyntaxError(text, 0, f"not a coefficient in Q({PARAMETER}): {e}")
        return Scalar(value)

    # -- queries --

    @property
    def is_zero(self) -> bool:
        return not self._value

    @property
    def is_constant(self) -> bool:
        return isinstance(self._value, Fraction)

    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise TypeError(f"{self} depends on the parameter {PARAMETER}")
        return self._value

    def canonical(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], Tuple[Tuple[int, Fraction], ...]]:
        """Numerator and monic denominator as (exponent, coefficient) tuples, highest power first."""
        v = self._value
        if isinstance(v, Fraction):
            num = ((0, v), ) if v else ()
            return num, ((0, Fraction(1)), )
        lc = v.denom.LC
        inv = QQ.one / lc
        return _poly_terms(v.numer * inv), _poly_terms(v.denom * inv)

    def eval_at(self, value: Union[int, Fraction]) -> "Scalar":
        """Specialize the parameter to a rational value."""
        v = self._value
        if isinstance(v, Fraction):
            return self
        r = _to_domain(Fraction(value))
        den = v.denom(r)
        if not den:
            raise SingularParameterError(Fraction(value), str(self))
        return Scalar(_to_fraction(v.numer(r)) / _to_fraction(den))

    # -- arithmetic --

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other._value
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return None

    def _combine(self, other, op, reflected=False):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        a, b = (o, self._value) if reflected else (self._value, o)
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return Scalar(op(a, b))
        return Scalar(op(_promote(a), _promote(b)))

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __radd__(self, other):
        return self._combine(other, lambda a, b: a + b, reflected=True)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._combine(other, lambda a, b: a - b, reflected=True)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    def __rmul__(self, other):
        return self._combine(other, lambda a, b: a * b, reflected=True)

    def _div(self, a, b):
        if not b:
            raise ScalarZeroDivisionError("division by zero")
        return a / b

    def __truediv__(self, other):
        return self._combine(other, self._div)

    def __rtruediv__(self, other):
        return self._combine(other, self._div, reflected=True)

    def __neg__(self):
        return Scalar(-self._value)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        return Scalar(1) / self

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(self._value, Fraction) or isinstance(o, Fraction):
            return self._value == o
        return not (self._value - o)

    def __hash__(self):
        if self._hash is None:
            v = self._value
            self._hash = hash(v) if isinstance(v, Fraction) else hash(self.canonical())
        return self._hash

    # -- text --

    def __str__(self):
        v = self._value
        if isinstance(v, Fraction):
            return str(v)
        lc = v.denom.LC
        inv = QQ.one / lc
        num = str((v.numer * inv).as_expr())
        den = v.denom * inv
        if den.is_ground:
            return f"({num})"
        return f"({num})/({den.as_expr()})"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(value: Number) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar(value)


def domain_of(scalars) -> Tuple[object, bool]:
    """The smallest sympy domain holding all ``scalars``: QQ, or the fraction field Q(a)."""
    if all(s.is_constant for s in scalars):
        return QQ, False
    return FIELD.to_domain(), True


def to_domain_element(s: Scalar, symbolic: bool):
    v = s._value
    if not symbolic:
        return _to_domain(v)
    return _promote(v)
