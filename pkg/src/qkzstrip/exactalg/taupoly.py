"""Dense univariate polynomials in tau with integer coefficients."""

from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest
from typing import Iterable


class ExactDivisionError(ArithmeticError):
    """A division that had to be exact left a remainder."""

    def __init__(self, num, den, remainder):
        super().__init__(f"{den!r} does not divide {num!r} (remainder {remainder!r})")
        self.num = num
        self.den = den
        self.remainder = remainder


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class TauPoly:
    """Polynomial in tau; ``coeffs[i]`` is the coefficient of tau**i.

    Instances are immutable and hashable.  The zero polynomial has an empty
    coefficient tuple.
    """

    __slots__ = ("coeffs",)
    var = "tau"

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(x) for x in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TauPoly is immutable")

    def __reduce__(self):
        return (TauPoly, (self.coeffs,))

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "TauPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _trim(coeffs))
        return p

    @classmethod
    def const(cls, c: int) -> "TauPoly":
        return cls._raw((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "TauPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls._raw((0,) * k + (c,))

    @classmethod
    def zero(cls) -> "TauPoly":
        return cls._raw(())

    @classmethod
    def one(cls) -> "TauPoly":
        return cls._raw((1,))

    # -- structure ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        """Lowest exponent carrying a nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def lowest(self) -> int:
        v = self.valuation
        return 0 if v is None else self.coeffs[v]

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, TauPoly):
            return other
        if isinstance(other, int):
            return TauPoly._raw((other,))
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("TauPoly", self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return TauPoly._raw(tuple(a + b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __neg__(self):
        return TauPoly._raw(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return TauPoly._raw(tuple(a - b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TauPoly._raw(tuple(a * other for a in self.coeffs))
        if not isinstance(other, TauPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return TauPoly._raw(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return TauPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = TauPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "TauPoly":
        """Multiply by tau**k (k may be negative if the division is exact)."""
        if k >= 0:
            return TauPoly._raw((0,) * k + self.coeffs)
        v = self.valuation
        if v is not None and v < -k:
            raise ExactDivisionError(self, TauPoly.monomial(-k), self)
        return TauPoly._raw(self.coeffs[-k:])

    def divmod(self, other: "TauPoly") -> tuple["TauPoly", "TauPoly"]:
        """Long division over the integers.

        Only succeeds when each step's leading-coefficient division is exact;
        an inexact step raises :class:`ExactDivisionError`.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dc = other.coeffs
        dl, dd = dc[-1], len(dc) - 1
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            qk, r = divmod(c, dl)
            if r:
                raise ExactDivisionError(self, other, TauPoly(rem))
            quot[k - dd] = qk
            for j, d in enumerate(dc):
                rem[k - dd + j] -= qk * d
        return TauPoly._raw(tuple(quot)), TauPoly(rem)

    def exact_div(self, other) -> "TauPoly":
        q, r = self.divmod(other)
        if r:
            raise ExactDivisionError(self, other, r)
        return q

    # -- evaluation -----------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation at any ring element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"TauPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs, self.var)


def format_poly(coeffs, var: str) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{abs(c)}*{mono}"
        else:
            body = str(abs(c))
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


TAU = TauPoly((0, 1))


@lru_cache(maxsize=None)
def cheb_u(k: int) -> TauPoly:
    """U_k with U_{k+1} = -tau U_k - U_{k-1}, U_0 = 1, U_{-1} = 0."""
    if k < -1:
        raise ValueError(f"cheb_u is defined for k >= -1, got {k}")
    if k == -1:
        return TauPoly.zero()
    if k == 0:
        return TauPoly.one()
    return -(TAU * cheb_u(k - 1)) - cheb_u(k - 2)


def cheb_u_ext(k: int) -> TauPoly:
    """U_k continued to all integers through U_{-k-2} = -U_k.

    This is the same continuation the q-expression (q^{k+1}-q^{-k-1})/(q-q^{-1})
    gives, and it keeps the three-term recurrence valid everywhere.
    """
    if k >= -1:
        return cheb_u(k)
    return -cheb_u(-k - 2)
