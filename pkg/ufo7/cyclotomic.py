from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Union

Rational = Union[int, Fraction]

# x^4 - x^2 + 1 is the minimal polynomial of a primitive 12th root of unity
DEGREE = 4
ORDER = 12
# units of Z/12, i.e. the Galois group of Q(zeta)
GALOIS = (1, 5, 7, 11)


class CycParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class CycNum:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z), z = exp(2*pi*i/12).

    Stored as four integer numerators over one positive common denominator in lowest terms, so that
    equality and hashing are coordinatewise.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable[Rational] = (0, 0, 0, 0)):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != DEGREE:
            raise ValueError(f"Expected {DEGREE} coordinates, got {len(coeffs)}.")

        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)

        self._set(tuple(int(c * den) for c in coeffs), den)

    def _set(self, num, den):
        g = den
        for n in num:
            g = gcd(g, n)
        if g > 1:
            num = tuple(n // g for n in num)
            den //= g
        self._num = num
        self._den = den

    @classmethod
    def _make(cls, num, den) -> CycNum:
        new = cls.__new__(cls)
        if den < 0:
            num, den = tuple(-n for n in num), -den
        new._set(tuple(num), den)
        return new

    @classmethod
    def from_rational(cls, x: Rational) -> CycNum:
        x = Fraction(x)
        return cls._make((x.numerator, 0, 0, 0), x.denominator)

    @classmethod
    def parse(cls, text: str) -> CycNum:
        return parse(text)

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(n, self._den) for n in self._num)

    @property
    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def _coerce(self, other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self._num[0], self._den))
        return hash((self._num, self._den))

    def __bool__(self) -> bool:
        return any(self._num)

    def __add__(self, other) -> CycNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._den, other._den
        return CycNum._make(tuple(x * b + y * a for x, y in zip(self._num, other._num)), a * b)

    def __radd__(self, other) -> CycNum:
        return self + other

    def __neg__(self) -> CycNum:
        return CycNum._make(tuple(-x for x in self._num), self._den)

    def __sub__(self, other) -> CycNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycNum:
        return (-self) + other

    def __mul__(self, other) -> CycNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._num, other._num
        p = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    p[i + j] += x * y
        # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        num = (p[0] - p[4] - p[6], p[1] - p[5], p[2] + p[4], p[3] + p[5])
        return CycNum._make(num, self._den * other._den)

    def __rmul__(self, other) -> CycNum:
        return self * other

    def conjugate(self, k: int) -> CycNum:
        """Image under the field automorphism z -> z^k, gcd(k, 12) = 1."""
        if gcd(k, ORDER) != 1:
            raise ValueError(f"z -> z^{k} is not an automorphism.")
        out = ZERO
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + zeta(i * k) * c
        return out

    def norm(self) -> Fraction:
        out = self
        for k in GALOIS[1:]:
            out = out * self.conjugate(k)
        assert out.is_rational
        return out.coeffs[0]

    def inv(self) -> CycNum:
        if not self:
            raise ZeroDivisionError("CycNum division by zero")
        if self.is_rational:
            return CycNum.from_rational(1 / Fraction(self._num[0], self._den))
        others = ONE
        for k in GALOIS[1:]:
            others = others * self.conjugate(k)
        return others * (1 / (self * others).coeffs[0])

    def __truediv__(self, other) -> CycNum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> CycNum:
        return self.inv() * other

    def __pow__(self, n: int) -> CycNum:
        if n < 0:
            return self.inv() ** -n
        out = ONE
        base = self
        while n > 0:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def zeta_log(self) -> Optional[int]:
        """k in 0..11 with self = z^k, or None."""
        return _ZETA_INDEX.get(self)

    def root_of_unity_order(self) -> Optional[int]:
        k = self.zeta_log()
        if k is None:
            return None
        return ORDER // gcd(k, ORDER)

    def __str__(self) -> str:
        return format_cyc(self)

    def __repr__(self) -> str:
        return f"CycNum('{format_cyc(self)}')"


ZERO = CycNum()
ONE = CycNum((1, 0, 0, 0))
ZETA = CycNum((0, 1, 0, 0))


@lru_cache(maxsize=None)
def zeta(k: int) -> CycNum:
    k %= ORDER
    out = ONE
    for _ in range(k):
        out = out * ZETA
    return out


ZETA_POWERS = tuple(zeta(k) for k in range(ORDER))
_ZETA_INDEX = {z: k for k, z in enumerate(ZETA_POWERS)}


def cyc(x: Union[str, Rational, CycNum]) -> CycNum:
    if isinstance(x, CycNum):
        return x
    if isinstance(x, str):
        return parse(x)
    return CycNum.from_rational(x)


def root_of_unity_order(a: CycNum) -> Optional[int]:
    return a.root_of_unity_order()


def qint(n: int, q: CycNum) -> CycNum:
    """(n)_q = 1 + q + ... + q^(n-1)."""
    out = ZERO
    power = ONE
    for _ in range(n):
        out = out + power
        power = power * q
    return out


def qfactorial(n: int, q: CycNum) -> CycNum:
    out = ONE
    for i in range(1, n + 1):
        out = out * qint(i, q)
    return out


# literal grammar:
#   expr := term (("+"|"-") term)*
#   term := ["-"] (rat ("*"? zpart)? | zpart)
#   zpart := "z" ("^" uint)?
#   rat := uint ("/" uint)?
_TOKEN = re.compile(r"\d+|[-+*/^]|z")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        match = _TOKEN.match(text, i)
        if match is None:
            raise CycParseError(f"Unexpected character {text[i]!r}", i)
        tokens.append((match.group(), i))
        i = match.end()
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def token(self):
        return self.tokens[self.i][0]

    @property
    def position(self):
        return self.tokens[self.i][1]

    def advance(self):
        token = self.token
        self.i += 1
        return token

    def uint(self) -> int:
        if not self.token.isdigit():
            raise CycParseError(f"Expected an integer, got {self.token or 'end of input'!r}", self.position)
        return int(self.advance())

    def zpart(self) -> CycNum:
        self.advance()
        if self.token == "^":
            self.advance()
            return zeta(self.uint())
        return ZETA

    def term(self) -> CycNum:
        if self.token == "-":
            self.advance()
            return -self.unsigned()
        return self.unsigned()

    def unsigned(self) -> CycNum:
        if self.token == "z":
            return self.zpart()
        if not self.token.isdigit():
            raise CycParseError(f"Expected a term, got {self.token or 'end of input'!r}", self.position)

        value = Fraction(self.uint())
        if self.token == "/":
            self.advance()
            position = self.position
            den = self.uint()
            if den == 0:
                raise CycParseError("Zero denominator", position)
            value /= den

        if self.token == "*":
            self.advance()
            if self.token != "z":
                raise CycParseError(f"Expected 'z', got {self.token or 'end of input'!r}", self.position)
            return self.zpart() * value
        if self.token == "z":
            return self.zpart() * value
        return CycNum.from_rational(value)

    def expr(self) -> CycNum:
        value = self.term()

        while self.token in ("+", "-"):
            sign = 1 if self.advance() == "+" else -1
            value = value + self.term() * sign

        if self.token != "":
            raise CycParseError(f"Unexpected {self.token!r}", self.position)
        return value


def parse(text: str) -> CycNum:
    return _Parser(text).expr()


def _format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_cyc(a: CycNum) -> str:
    parts = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        monomial = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if not monomial:
            body = _format_rational(abs(c))
        elif abs(c) == 1:
            body = monomial
        else:
            body = f"{_format_rational(abs(c))}*{monomial}"

        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)

    return "".join(parts) if parts else "0"
