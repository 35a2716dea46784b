"""Exact sparse polynomials in e_1..e_r and windowed bivariate Laurent series.

``Poly`` is the canonical form of an element of B_r = Z[e_1, ..., e_r], where
``e_k`` has degree ``k``.  ``LaurentWindow`` holds a truncation of a series in
``z`` and ``w^-1`` together with the rectangle of exponents on which it is
known exactly.
"""

from __future__ import annotations

import operator
from itertools import combinations
from typing import Any, Callable, Mapping, Sequence


class WindowError(ValueError):
    """A requested coefficient lies outside the exactness window."""


class Poly:
    """Immutable sparse polynomial with integer coefficients.

    ``terms`` maps exponent vectors ``(a_1, ..., a_r)`` to nonzero ints and
    stands for ``sum c * e_1^a_1 ... e_r^a_r``.
    """

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.arity = arity
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    exps = tuple(exps)
                    if len(exps) != arity:
                        raise ValueError(f"exponent vector {exps} has wrong length for arity {arity}")
                    clean[exps] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.arity = arity
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, arity: int) -> "Poly":
        return cls._raw(arity, {})

    @classmethod
    def const(cls, arity: int, c: int) -> "Poly":
        return cls._raw(arity, {(0,) * arity: int(c)} if c else {})

    @classmethod
    def one(cls, arity: int) -> "Poly":
        return cls.const(arity, 1)

    @classmethod
    def gen(cls, arity: int, k: int) -> "Poly":
        """The generator ``e_k`` (1-based)."""
        if not 1 <= k <= arity:
            raise ValueError(f"e_{k} is not a generator of a ring with {arity} generators")
        exps = [0] * arity
        exps[k - 1] = 1
        return cls._raw(arity, {tuple(exps): 1})

    def _coerce(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            if other.arity != self.arity:
                raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, int):
            return Poly.const(self.arity, other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int):
            other = Poly.const(self.arity, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self.terms.items())))
        return self._hash

    def __neg__(self) -> "Poly":
        return Poly._raw(self.arity, {k: -c for k, c in self.terms.items()})

    def __add__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Poly._raw(self.arity, out)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Any) -> "Poly":
        if isinstance(other, int):
            if not other:
                return Poly.zero(self.arity)
            return Poly._raw(self.arity, {k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = tuple(map(operator.add, ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return Poly._raw(self.arity, {k: c for k, c in out.items() if c})

    def __rmul__(self, other: Any) -> "Poly":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.one(self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monomial_degree(self, exps: Sequence[int]) -> int:
        return sum((k + 1) * a for k, a in enumerate(exps))

    def degrees(self) -> set[int]:
        return {self.monomial_degree(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw(self.arity, {k: c for k, c in self.terms.items()
                                      if self.monomial_degree(k) == d})

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded reverse-lexicographic order, largest first.

        The grading is the weighted one (``e_k`` has degree ``k``).
        """
        def key(item):
            exps = item[0]
            return (self.monomial_degree(exps), tuple(-a for a in reversed(exps)))
        return sorted(self.terms.items(), key=key, reverse=True)

    def __repr__(self) -> str:
        return f"Poly({self.arity}, {self.terms!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, symbol: str = "e") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for k, a in enumerate(exps, start=1):
                if a == 1:
                    factors.append(f"{symbol}{k}")
                elif a > 1:
                    factors.append(f"{symbol}{k}^{a}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_latex(self, symbol: str = "e") -> str:
        if not self.terms:
            return "0"
        out = ""
        for n, (exps, c) in enumerate(self.sorted_terms()):
            mono = "".join(
                f"{symbol}_{{{k}}}" + (f"^{{{a}}}" if a > 1 else "")
                for k, a in enumerate(exps, start=1) if a
            )
            mag = abs(c)
            body = mono if mono and mag == 1 else f"{mag}{mono}"
            if n == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exps": list(exps)} for exps, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], arity: int | None = None) -> "Poly":
        if arity is None:
            if not data:
                raise ValueError("arity is required to read an empty polynomial")
            arity = len(data[0]["exps"])
        terms: dict[tuple[int, ...], int] = {}
        for item in data:
            exps = tuple(int(a) for a in item["exps"])
            terms[exps] = terms.get(exps, 0) + int(item["coeff"])
        return cls(arity, terms)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Exact ``a op b`` for ``op`` in ``{"add", "sub", "mul"}``."""
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def det(matrix: Sequence[Sequence[Any]], one: Any, mul: Callable[[Any, Any], Any] = operator.mul) -> Any:
    """Determinant over a commutative ring by Laplace expansion along rows.

    Minors are memoised on the set of remaining columns, so the cost is
    ``O(2^n n)`` ring operations and no division is needed.  ``one`` is the
    value of the empty determinant.
    """
    n = len(matrix)
    if n == 0:
        return one
    # minors[cols] = det of rows (n - len(cols))..n-1 restricted to cols
    minors: dict[tuple[int, ...], Any] = {(): one}
    for size in range(1, n + 1):
        row = matrix[n - size]
        for cols in combinations(range(n), size):
            acc = None
            for pos, c in enumerate(cols):
                entry = row[c]
                if not entry:
                    continue
                rest = cols[:pos] + cols[pos + 1:]
                sub = minors[rest]
                if not sub:
                    continue
                term = mul(entry, sub)
                if pos % 2:
                    term = -term
                acc = term if acc is None else acc + term
            minors[cols] = acc if acc is not None else one - one
    return minors[tuple(range(n))]


def _lo(*bounds):
    vals = [b for b in bounds if b is not None]
    return max(vals) if vals else None


def _hi(*bounds):
    vals = [b for b in bounds if b is not None]
    return min(vals) if vals else None


class LaurentWindow:
    """Truncated series in ``z`` and ``w^-1`` with an explicit exact window.

    ``entries`` maps ``(z_exp, w_exp)`` to coefficients (``Poly``, ``int`` or
    anything with ring-like ``+``/``-``/``bool``).  The window
    ``(z_min, z_max, w_min, w_max)`` has this meaning:

    * the true series has no terms with ``z_exp < z_min`` or ``w_exp > w_max``;
    * every coefficient with ``z_exp <= z_max`` and ``w_exp >= w_min`` is stored
      exactly (absent means zero).

    ``z_max`` or ``w_min`` set to ``None`` means no truncation on that side.
    These are the conditions under which products stay exact.
    """

    __slots__ = ("entries", "window", "zero")

    def __init__(self, entries: Mapping[tuple[int, int], Any], zero: Any,
                 window: tuple[int, int | None, int | None, int] | None = None):
        clean = {(int(p), int(q)): c for (p, q), c in entries.items() if c}
        if window is None:
            zs = [p for p, _ in clean] or [0]
            ws = [q for _, q in clean] or [0]
            window = (min(zs), None, None, max(ws))
        z_min, z_max, w_min, w_max = window
        if (z_max is not None and z_max < z_min) or (w_min is not None and w_min > w_max):
            raise WindowError(f"empty window {window}; widen the truncation orders of the inputs")
        for p, q in clean:
            if p < z_min or q > w_max:
                raise ValueError(f"term z^{p} w^{q} lies outside the support bound of {window}")
        self.entries = {k: c for k, c in clean.items() if self._inside(k, window)}
        self.window = window
        self.zero = zero

    @staticmethod
    def _inside(key, window) -> bool:
        p, q = key
        z_min, z_max, w_min, w_max = window
        return (z_min <= p and (z_max is None or p <= z_max)
                and (w_min is None or w_min <= q) and q <= w_max)

    @classmethod
    def constant(cls, c: Any, zero: Any) -> "LaurentWindow":
        return cls({(0, 0): c}, zero, (0, None, None, 0))

    @classmethod
    def monomial(cls, c: Any, z_exp: int, w_exp: int, zero: Any) -> "LaurentWindow":
        return cls({(z_exp, w_exp): c}, zero, (z_exp, None, None, w_exp))

    @classmethod
    def geometric(cls, order: int, start: int = 0) -> "LaurentWindow":
        """``sum_{k=start..order} (z/w)^k``, the expansion of ``w/(w-z)``
        in powers of ``z/w`` (``start=1`` gives ``z/(w-z)``)."""
        return cls({(k, -k): 1 for k in range(start, order + 1)}, 0,
                   (start, order, -order, -start))

    def coeff(self, z_exp: int, w_exp: int) -> Any:
        z_min, z_max, w_min, w_max = self.window
        if z_exp < z_min or w_exp > w_max:
            return self.zero
        if (z_max is not None and z_exp > z_max) or (w_min is not None and w_exp < w_min):
            raise WindowError(f"coefficient of z^{z_exp} w^{w_exp} is outside the exact window "
                              f"{self.window}; widen the truncation")
        return self.entries.get((z_exp, w_exp), self.zero)

    def items(self) -> list[tuple[tuple[int, int], Any]]:
        """Entries ordered by descending ``w`` exponent, then ascending ``z``."""
        return sorted(self.entries.items(), key=lambda kv: (-kv[0][1], kv[0][0]))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __neg__(self) -> "LaurentWindow":
        return LaurentWindow({k: -c for k, c in self.entries.items()}, self.zero, self.window)

    def __add__(self, other: "LaurentWindow") -> "LaurentWindow":
        if not isinstance(other, LaurentWindow):
            return NotImplemented
        a, b = self.window, other.window
        window = (min(a[0], b[0]), _hi(a[1], b[1]), _lo(a[2], b[2]), max(a[3], b[3]))
        out = dict(self.entries)
        for k, c in other.entries.items():
            out[k] = out[k] + c if k in out else c
        return LaurentWindow(out, self.zero, window)

    def __sub__(self, other: "LaurentWindow") -> "LaurentWindow":
        return self + (-other)

    def __mul__(self, other: Any) -> "LaurentWindow":
        if isinstance(other, LaurentWindow):
            return window_mul(self, other)
        return self.map(lambda c: c * other)

    def map(self, f: Callable[[Any], Any], zero: Any = None) -> "LaurentWindow":
        """Apply ``f`` to every coefficient; the window is unchanged."""
        return LaurentWindow({k: f(c) for k, c in self.entries.items()},
                             f(self.zero) if zero is None else zero, self.window)

    def shift(self, dz: int, dw: int) -> "LaurentWindow":
        """Multiply by the monomial ``z^dz w^dw``."""
        z_min, z_max, w_min, w_max = self.window
        window = (z_min + dz, None if z_max is None else z_max + dz,
                  None if w_min is None else w_min + dw, w_max + dw)
        return LaurentWindow({(p + dz, q + dw): c for (p, q), c in self.entries.items()},
                             self.zero, window)

    def restrict(self, z_max: int | None = None, w_min: int | None = None) -> "LaurentWindow":
        """Shrink the exact window to ``z <= z_max`` and ``w >= w_min``."""
        lo, hi, wlo, whi = self.window
        window = (lo, _hi(hi, z_max), _lo(wlo, w_min), whi)
        return LaurentWindow(self.entries, self.zero, window)

    def agrees_with(self, other: "LaurentWindow") -> bool:
        """Exact equality on the intersection of the two windows."""
        a, b = self.window, other.window
        z_max, w_min = _hi(a[1], b[1]), _lo(a[2], b[2])
        keys = set(self.entries) | set(other.entries)
        for p, q in keys:
            if (z_max is not None and p > z_max) or (w_min is not None and q < w_min):
                continue
            if self.coeff(p, q) != other.coeff(p, q):
                return False
        return True

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LaurentWindow):
            return NotImplemented
        return self.window == other.window and self.entries == other.entries

    __hash__ = None

    def __repr__(self) -> str:
        return f"LaurentWindow({dict(self.items())!r}, window={self.window})"

    def to_json(self, value: Callable[[Any], Any] = lambda c: c.to_json()) -> dict:
        return {
            "window": list(self.window),
            "entries": [{"z": p, "w": q, "value": value(c)} for (p, q), c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict, value: Callable[[Any], Any], zero: Any) -> "LaurentWindow":
        window = tuple(data["window"])
        entries = {(int(e["z"]), int(e["w"])): value(e["value"]) for e in data["entries"]}
        return cls(entries, zero, window)

    def to_latex(self, value: Callable[[Any], str] = lambda c: c.to_latex()) -> str:
        if not self.entries:
            return "0"
        parts = []
        for (p, q), c in self.items():
            mono = ""
            if p:
                mono += "z" if p == 1 else f"z^{{{p}}}"
            if q:
                mono += f"w^{{{q}}}"
            parts.append(f"\\left({value(c)}\\right){mono}" if mono else f"\\left({value(c)}\\right)")
        return " + ".join(parts)


def window_mul(a: LaurentWindow, b: LaurentWindow,
               op: Callable[[Any, Any], Any] = operator.mul) -> LaurentWindow:
    """Product of two windowed series, exact on the returned window.

    A product coefficient is exact when every pair contributing to it comes
    from inside both input windows; with supports bounded below in ``z`` and
    above in ``w`` this gives the window computed here.
    """
    (alo, ahi, awlo, awhi), (blo, bhi, bwlo, bwhi) = a.window, b.window
    z_max = _hi(None if ahi is None else ahi + blo, None if bhi is None else bhi + alo)
    w_min = _lo(None if awlo is None else awlo + bwhi, None if bwlo is None else bwlo + awhi)
    window = (alo + blo, z_max, w_min, awhi + bwhi)
    zero = op(a.zero, b.zero)
    out: dict[tuple[int, int], Any] = {}
    for (pa, qa), ca in a.entries.items():
        for (pb, qb), cb in b.entries.items():
            p, q = pa + pb, qa + qb
            if (z_max is not None and p > z_max) or (w_min is not None and q < w_min):
                continue
            t = op(ca, cb)
            out[p, q] = out[p, q] + t if (p, q) in out else t
    return LaurentWindow(out, zero, window)


def series_in_z(coeffs: Sequence[Any], zero: Any, exact: bool = False) -> LaurentWindow:
    """``sum coeffs[k] z^k``; truncated after the last entry unless ``exact``."""
    z_max = None if exact else len(coeffs) - 1
    return LaurentWindow({(k, 0): c for k, c in enumerate(coeffs)}, zero, (0, z_max, None, 0))


def geometric_inverse(e: LaurentWindow, z_max: int) -> LaurentWindow:
    """Invert a power series in ``z`` with constant term 1, through ``z^z_max``.

    ``e`` must have no ``w`` dependence.  The coefficients ``s_k`` of the
    inverse solve ``sum_{i=0..k} e_i s_{k-i} = 0`` for ``k >= 1``.
    """
    if any(q != 0 for _, q in e.entries) or e.window[0] < 0:
        raise ValueError("geometric_inverse expects a power series in z alone")
    if e.window[1] is not None and e.window[1] < z_max:
        raise WindowError(f"input known only through z^{e.window[1]}, need z^{z_max}")
    if e.coeff(0, 0) != 1:
        raise ValueError("constant term is not 1; the series is not invertible here")
    coeffs = [e.coeff(k, 0) for k in range(z_max + 1)]
    s = [coeffs[0]]
    for k in range(1, z_max + 1):
        acc = e.zero
        for i in range(1, k + 1):
            if coeffs[i]:
                acc = acc - coeffs[i] * s[k - i]
        s.append(acc)
    return series_in_z(s, e.zero)
