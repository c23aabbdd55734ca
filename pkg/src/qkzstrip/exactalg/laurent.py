"""Laurent polynomials in q with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .taupoly import ExactDivisionError, TauPoly


class LaurentScalar:
    """sum_k coeffs[k] q**(offset + k), stored trimmed at both ends."""

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), offset: int = 0):
        c = [int(x) for x in coeffs]
        lo = 0
        while lo < len(c) and not c[lo]:
            lo += 1
        hi = len(c)
        while hi > lo and not c[hi - 1]:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "offset", offset + lo)
            object.__setattr__(self, "coeffs", tuple(c[lo:hi]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentScalar is immutable")

    def __reduce__(self):
        return (LaurentScalar, (self.coeffs, self.offset))

    @classmethod
    def q(cls, k: int = 1, c: int = 1) -> "LaurentScalar":
        """c * q**k."""
        return cls((c,), k)

    @classmethod
    def const(cls, c: int) -> "LaurentScalar":
        return cls((c,), 0)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "LaurentScalar":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    def terms(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def low(self) -> int | None:
        return self.offset if self.coeffs else None

    @property
    def high(self) -> int | None:
        return self.offset + len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self):
        return bool(self.coeffs)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, int):
            return LaurentScalar((other,), 0)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.offset == o.offset and self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("Laurent", self.offset, self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        lo = min(self.offset, o.offset)
        hi = max(self.offset + len(self.coeffs), o.offset + len(o.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.offset - lo + i] += c
        for i, c in enumerate(o.coeffs):
            out[o.offset - lo + i] += c
        return LaurentScalar(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar([-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentScalar([c * other for c in self.coeffs], self.offset)
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentScalar()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentScalar(out, self.offset + other.offset)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(self.coeffs[0]) != 1:
                raise ExactDivisionError(1, self, "not a unit")
            c = self.coeffs[0] ** (-k)
            return LaurentScalar((c,), self.offset * k)
        result, base = LaurentScalar.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other) -> "LaurentScalar":
        """Exact quotient in Z[q, 1/q]; raises on a nonzero remainder."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Laurent scalar")
        if not self.coeffs:
            return LaurentScalar()
        num, den = list(self.coeffs), other.coeffs
        dl, dd = den[-1], len(den) - 1
        quot = [0] * max(len(num) - dd, 0)
        for k in range(len(num) - 1, dd - 1, -1):
            c = num[k]
            if not c:
                continue
            qk, r = divmod(c, dl)
            if r:
                raise ExactDivisionError(self, other, LaurentScalar(num, self.offset))
            quot[k - dd] = qk
            for j, d in enumerate(den):
                num[k - dd + j] -= qk * d
        if any(num):
            raise ExactDivisionError(self, other, LaurentScalar(num, self.offset))
        return LaurentScalar(quot, self.offset - other.offset)

    def __call__(self, q):
        """Evaluate at an exact nonzero number (int or Fraction)."""
        q = Fraction(q)
        return sum((Fraction(c) * q ** (self.offset + i) for i, c in enumerate(self.coeffs)), Fraction(0))

    def subs_q_power(self, k: int) -> "LaurentScalar":
        """Substitute q -> q**k."""
        return LaurentScalar.from_terms({e * k: c for e, c in self.terms().items()})

    def __repr__(self):
        return f"LaurentScalar({list(self.coeffs)}, offset={self.offset})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


Q = LaurentScalar.q(1)
QINV = LaurentScalar.q(-1)
TAU_Q = -(Q + QINV)


def tau_to_q(p: TauPoly) -> LaurentScalar:
    """Substitute tau = -q - 1/q."""
    return p(TAU_Q) if p else LaurentScalar()


def u_q(k: int) -> LaurentScalar:
    """(q^{k+1} - q^{-k-1}) / (q - q^{-1}) for any integer k."""
    num = LaurentScalar.q(k + 1) - LaurentScalar.q(-k - 1)
    return num.exact_div(Q - QINV)
