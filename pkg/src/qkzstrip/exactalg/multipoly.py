"""Sparse multivariate polynomials over an exact coefficient ring.

Coefficients may be Python ints, :class:`TauPoly` or :class:`LaurentScalar`;
the class only relies on ``+``, ``-``, ``*``, truthiness and (for division)
exact quotients of coefficients.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping, Sequence

from .taupoly import ExactDivisionError

Exponent = tuple[int, ...]


def coeff_exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(a, b, r)
        return q
    if isinstance(a, int):
        a = type(b)._coerce(a)
    return a.exact_div(b)


class MultiPoly:
    """Polynomial in ``nvars`` variables stored as {exponent tuple: coeff}.

    With ``caps`` set (one bound or ``None`` per variable) the polynomial
    lives in the truncated ring: products drop every term whose exponent
    exceeds a cap.
    """

    __slots__ = ("nvars", "terms", "caps")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None,
                 caps: Sequence[int | None] | None = None):
        self.nvars = nvars
        self.caps = tuple(caps) if caps is not None else None
        if self.caps is not None and len(self.caps) != nvars:
            raise ValueError("caps length must equal nvars")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent {e}")
            if c and self._in_caps(e):
                clean[e] = c
        self.terms = clean

    def _in_caps(self, e: Exponent) -> bool:
        caps = self.caps
        if caps is None:
            return True
        for x, cap in zip(e, caps):
            if cap is not None and x > cap:
                return False
        return True

    @classmethod
    def _build(cls, nvars, terms, caps):
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p.caps = caps
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, nvars: int, c=1, caps=None) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c}, caps)

    @classmethod
    def var(cls, nvars: int, i: int, c=1, caps=None) -> "MultiPoly":
        """c * x_i with 0-based index i."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): c}, caps)

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1, caps=None) -> "MultiPoly":
        return cls(len(exps), {tuple(exps): c}, caps)

    @classmethod
    def linear(cls, nvars: int, pairs: Iterable[tuple[int, object]], const=None, caps=None) -> "MultiPoly":
        """const + sum c * x_i over ``(i, c)`` pairs."""
        terms: dict[Exponent, object] = {}
        if const is not None:
            terms[(0,) * nvars] = const
        for i, c in pairs:
            e = [0] * nvars
            e[i] = 1
            e = tuple(e)
            terms[e] = terms[e] + c if e in terms else c
        return cls(nvars, terms, caps)

    def with_caps(self, caps) -> "MultiPoly":
        return MultiPoly(self.nvars, self.terms, caps)

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, e: Sequence[int]):
        return self.terms.get(tuple(e), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if not other:
            return not self.terms
        return NotImplemented

    __hash__ = None

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly._build(self.nvars, {(0,) * self.nvars: other} if other else {}, self.caps)

    def _caps_with(self, other):
        if self.caps is None:
            return other.caps
        if other.caps is None or other.caps == self.caps:
            return self.caps
        return tuple(
            b if a is None else a if b is None else min(a, b) for a, b in zip(self.caps, other.caps)
        )

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        caps = self._caps_with(other)
        if caps is not None and caps != self.caps:
            return MultiPoly(self.nvars, out, caps)
        return MultiPoly._build(self.nvars, out, caps)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._build(self.nvars, {e: -c for e, c in self.terms.items()}, self.caps)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        if not c:
            return MultiPoly._build(self.nvars, {}, self.caps)
        out = {}
        for e, x in self.terms.items():
            y = x * c
            if y:
                out[e] = y
        return MultiPoly._build(self.nvars, out, self.caps)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        caps = self._caps_with(other)
        out: dict[Exponent, object] = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        bl = list(b.items())
        for ea, ca in a.items():
            for eb, cb in bl:
                e = tuple(x + y for x, y in zip(ea, eb))
                if caps is not None and not _fits(e, caps):
                    continue
                c = ca * cb
                if e in out:
                    out[e] = out[e] + c
                else:
                    out[e] = c
        return MultiPoly._build(self.nvars, {e: c for e, c in out.items() if c}, caps)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.nvars, 1, self.caps)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other) -> "MultiPoly":
        """Exact quotient by multivariate long division in lex order.

        A leading term of the running remainder that the divisor's leading
        term does not divide proves the division inexact.
        """
        if not isinstance(other, MultiPoly):
            return MultiPoly._build(
                self.nvars, {e: coeff_exact_div(c, other) for e, c in self.terms.items()}, self.caps
            )
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        dlead = max(other.terms)
        dcoef = other.terms[dlead]
        rest = [(e, c) for e, c in other.terms.items() if e != dlead]
        rem = dict(self.terms)
        heap = [tuple(-x for x in e) for e in rem]
        heapq.heapify(heap)
        quot: dict[Exponent, object] = {}
        while heap:
            neg = heapq.heappop(heap)
            e = tuple(-x for x in neg)
            c = rem.get(e)
            if c is None:
                continue
            del rem[e]
            shift = tuple(x - y for x, y in zip(e, dlead))
            if any(s < 0 for s in shift):
                rem[e] = c
                raise ExactDivisionError(self, other, MultiPoly(self.nvars, rem))
            qc = coeff_exact_div(c, dcoef)
            quot[shift] = qc
            for de, dc in rest:
                te = tuple(x + y for x, y in zip(shift, de))
                val = rem.get(te)
                nv = -(qc * dc) if val is None else val - qc * dc
                if nv:
                    if val is None:
                        heapq.heappush(heap, tuple(-x for x in te))
                    rem[te] = nv
                elif val is not None:
                    del rem[te]
        return MultiPoly._build(self.nvars, quot, self.caps)

    # -- substitutions ------------------------------------------------------

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Return p(x_{perm[0]}, ..., x_{perm[n-1]}).

        Variable slot i of p receives variable ``perm[i]``.
        """
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, x in enumerate(e):
                ne[perm[i]] += x
            ne = tuple(ne)
            out[ne] = out[ne] + c if ne in out else c
        return MultiPoly(self.nvars, out, None)

    def swap(self, i: int, j: int) -> "MultiPoly":
        perm = list(range(self.nvars))
        perm[i], perm[j] = j, i
        return self.permute(perm)

    def eval_var(self, i: int, value) -> "MultiPoly":
        """Substitute a coefficient-ring value for x_i (variable kept, degree 0)."""
        out = {}
        powers = {}
        for e, c in self.terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value ** k if k else 1
            pk = powers[k]
            if not pk:
                continue
            ne = e[:i] + (0,) + e[i + 1:]
            v = c * pk
            out[ne] = out[ne] + v if ne in out else v
        return MultiPoly(self.nvars, {e: c for e, c in out.items() if c}, self.caps)

    def drop_var(self, i: int) -> "MultiPoly":
        """Remove variable i, which must not occur."""
        if any(e[i] for e in self.terms):
            raise ValueError(f"variable {i} still occurs")
        caps = None if self.caps is None else self.caps[:i] + self.caps[i + 1:]
        return MultiPoly(self.nvars - 1, {e[:i] + e[i + 1:]: c for e, c in self.terms.items()}, caps)

    def evaluate(self, point: Sequence):
        """Evaluate at a full point; returns a coefficient-ring value."""
        acc = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x ** k
            acc = acc + v
        return acc

    def at_ones(self):
        acc = 0
        for c in self.terms.values():
            acc = acc + c
        return acc

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()}, self.caps)

    def __repr__(self):
        items = sorted(self.terms.items(), reverse=True)
        body = " + ".join(f"({c})*{_mono(e)}" for e, c in items[:8])
        more = "" if len(items) <= 8 else f" + ... ({len(items)} terms)"
        return f"MultiPoly[{self.nvars}]({body or '0'}{more})"


def _fits(e, caps) -> bool:
    for x, cap in zip(e, caps):
        if cap is not None and x > cap:
            return False
    return True


def _mono(e) -> str:
    parts = [f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k]
    return "*".join(parts) or "1"
