"""Dense integer polynomials in (t, tau)."""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable

from .taupoly import ExactDivisionError, TauPoly


def _trim_rows(rows) -> tuple[TauPoly, ...]:
    rows = list(rows)
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


class BiPoly:
    """Polynomial in t with :class:`TauPoly` coefficients.

    ``rows[i]`` is the coefficient of t**i.  The grid view
    ``grid()[i][j]`` is the integer coefficient of t**i tau**j.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable = ()):
        conv = []
        for r in rows:
            if isinstance(r, TauPoly):
                conv.append(r)
            elif isinstance(r, int):
                conv.append(TauPoly.const(r))
            else:
                conv.append(TauPoly(r))
        object.__setattr__(self, "rows", _trim_rows(conv))

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def __reduce__(self):
        return (BiPoly, (self.rows,))

    @classmethod
    def from_grid(cls, grid) -> "BiPoly":
        return cls(TauPoly(r) for r in grid)

    @classmethod
    def from_tau(cls, p: TauPoly) -> "BiPoly":
        return cls((p,))

    @classmethod
    def from_terms(cls, terms) -> "BiPoly":
        """Build from an iterable of ``(t_power, tau_power, coeff)``."""
        grid: dict[int, dict[int, int]] = {}
        for i, j, c in terms:
            if i < 0 or j < 0:
                raise ValueError("negative exponent in BiPoly")
            row = grid.setdefault(i, {})
            row[j] = row.get(j, 0) + c
        if not grid:
            return cls()
        rows = []
        for i in range(max(grid) + 1):
            row = grid.get(i, {})
            rows.append(TauPoly([row.get(j, 0) for j in range(max(row, default=-1) + 1)]))
        return cls(rows)

    @classmethod
    def t(cls) -> "BiPoly":
        return cls((TauPoly.zero(), TauPoly.one()))

    @classmethod
    def tau(cls) -> "BiPoly":
        return cls((TauPoly((0, 1)),))

    @classmethod
    def one(cls) -> "BiPoly":
        return cls((TauPoly.one(),))

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls(())

    def grid(self) -> list[list[int]]:
        width = max((len(r) for r in self.rows), default=0)
        return [[r[j] for j in range(width)] for r in self.rows]

    def __bool__(self):
        return bool(self.rows)

    @property
    def t_degree(self) -> int:
        return len(self.rows) - 1

    def coeff_t(self, i: int) -> TauPoly:
        return self.rows[i] if 0 <= i < len(self.rows) else TauPoly.zero()

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, TauPoly)):
            return BiPoly((other,))
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.rows == o.rows

    def __hash__(self):
        return hash(("BiPoly", self.rows))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        z = TauPoly.zero()
        return BiPoly(a + b for a, b in zip_longest(self.rows, o.rows, fillvalue=z))

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(-r for r in self.rows)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, TauPoly)):
            return BiPoly(r * other for r in self.rows)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self.rows or not other.rows:
            return BiPoly()
        out = [TauPoly.zero()] * (len(self.rows) + len(other.rows) - 1)
        for i, a in enumerate(self.rows):
            if not a:
                continue
            for j, b in enumerate(other.rows):
                if b:
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def exact_div(self, other) -> "BiPoly":
        """Exact division, long division in t with exact TauPoly steps."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero BiPoly")
        rem = list(self.rows)
        dr = other.rows
        lead, dd = dr[-1], len(dr) - 1
        quot = [TauPoly.zero()] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            try:
                qk = c.exact_div(lead)
            except ExactDivisionError:
                raise ExactDivisionError(self, other, BiPoly(rem)) from None
            quot[k - dd] = qk
            for j, d in enumerate(dr):
                rem[k - dd + j] = rem[k - dd + j] - qk * d
        if any(rem):
            raise ExactDivisionError(self, other, BiPoly(rem))
        return BiPoly(quot)

    def at_t(self, value) -> TauPoly:
        """Substitute an integer or TauPoly for t."""
        acc = TauPoly.zero()
        for r in reversed(self.rows):
            acc = acc * value + r
        return acc

    def at_t_inverse_tau(self) -> TauPoly:
        """Substitute t = 1/tau; raises if the result is not a polynomial."""
        terms: dict[int, int] = {}
        for i, r in enumerate(self.rows):
            for j, c in enumerate(r.coeffs):
                if c:
                    terms[j - i] = terms.get(j - i, 0) + c
        terms = {k: v for k, v in terms.items() if v}
        if terms and min(terms) < 0:
            raise ExactDivisionError(self, "t*tau - 1", terms)
        top = max(terms, default=-1)
        return TauPoly([terms.get(k, 0) for k in range(top + 1)])

    def reversed_t(self, n: int) -> "BiPoly":
        """t**n * p(1/t); requires t-degree <= n."""
        if self.t_degree > n:
            raise ValueError(f"t-degree {self.t_degree} exceeds {n}")
        rows = list(self.rows) + [TauPoly.zero()] * (n + 1 - len(self.rows))
        return BiPoly(reversed(rows))

    def __call__(self, t, tau):
        return sum((r(tau) * t**i for i, r in enumerate(self.rows)), 0)

    def __repr__(self):
        return f"BiPoly({self.grid()})"

    def __str__(self):
        parts = []
        for i, r in enumerate(self.rows):
            if not r:
                continue
            tp = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            body = str(r)
            if tp and body == "1":
                parts.append(tp)
            elif tp:
                parts.append(f"{body}*{tp}" if r.is_monomial() else f"({body})*{tp}")
            else:
                parts.append(body)
        return " + ".join(parts) if parts else "0"
