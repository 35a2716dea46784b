"""Closed formulas for the action of gl_n(Z) on B_r and B_{r,n}.

The generating function ``E(z,w) = sum_{i,j>=0} E_ij z^i w^-j`` acting on a
Schur basis element is computed in two independent ways:

* ``action_first_form``: ``(z/w)^(r-1) / E_r(z)`` times the determinant whose
  first row is ``w^(j-1-lam_j)`` and whose other rows hold ``h_j - h_{j-1}/z``;
* ``action_second_form``: the vertex-operator shape
  ``sum_k (z/w)^k * (Delta_lam - (z/w)^r E_r(w)/E_r(z) Delta_lam(twisted H))``.

For finite ``n`` the action on B_{r,n} is obtained by projecting, and
``action_box_form`` computes it with the truncated ``1 + h_1 z + ... +
h_{n-r} z^{n-r}`` factor instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from functools import lru_cache
from typing import Iterable, Mapping

from .exactpoly import LaurentWindow, Poly, WindowError, det, geometric_inverse, window_mul
from .partitions import Partition
from .symfunc import (HSequence, SchurExpansion, generic_polynomial, hseq, project,
                      project_series, reduce_mod, schur_poly, straighten)


@dataclass(frozen=True)
class TwistedHSequence:
    """Entrywise substitutions of the h-sequence.

    With ``z_twist`` the entry ``h_j`` becomes ``h_j - h_{j-1}/z``; with
    ``w_twist`` it becomes ``sum_{i=0..j} h_{j-i} w^-i``.  The two commute, so
    applying both gives ``sum_i (h_{j-i} - h_{j-i-1}/z) w^-i`` regardless of
    order.
    """

    base: HSequence
    z_twist: bool = False
    w_twist: bool = False

    def entry(self, j: int) -> LaurentWindow:
        return _twisted_entry(self.base.r, j, self.z_twist, self.w_twist)


@lru_cache(maxsize=None)
def _twisted_entry(r: int, j: int, z_twist: bool, w_twist: bool) -> LaurentWindow:
    H = hseq(r)
    zero = Poly.zero(r)
    entries: dict[tuple[int, int], Poly] = {}
    shifts = range(j + 1) if w_twist else (0,)
    for i in shifts:
        entries[0, -i] = H[j - i]
        if z_twist:
            entries[-1, -i] = -H[j - i - 1]
    return LaurentWindow(entries, zero)


def _one(r: int) -> LaurentWindow:
    return LaurentWindow.constant(Poly.one(r), Poly.zero(r))


def _series_det(rows: list[list[LaurentWindow]], r: int) -> LaurentWindow:
    return det(rows, _one(r), window_mul)


def mixed_determinant(lam: Iterable[int], H: TwistedHSequence, r: int) -> LaurentWindow:
    """``Delta_lam(w^-lam, H)``: the ``r x r`` determinant with first row
    ``w^(j-1-lam_j)`` and entries ``H.entry(lam_j - j + i)`` in rows ``i >= 2``.

    ``r`` is the size of the matrix; the coefficients live in the ring of
    ``H`` (which is B_{r-1} for the contraction operator).
    """
    lam = Partition(lam)
    if len(lam) > r:
        raise ValueError(f"{lam} has more than {r} parts")
    if r == 0:
        return _one(H.base.r)
    parts = lam.padded(r)
    s = H.base.r
    first = [LaurentWindow.monomial(Poly.one(s), 0, j - parts[j], Poly.zero(s)) for j in range(r)]
    rows = [first] + [[H.entry(parts[j] - j + i) for j in range(r)] for i in range(1, r)]
    return _series_det(rows, s)


def _inverse_e(r: int, z_max: int) -> LaurentWindow:
    return geometric_inverse(generic_polynomial(r), z_max)


def action_first_form(lam: Iterable[int], r: int, z_max: int, w_span: int | None = None) -> LaurentWindow:
    """``E(z,w) Delta_lam(H_r)`` from the determinantal formula.

    Exact for all ``z`` exponents up to ``z_max`` and, when ``w_span`` is
    given, for ``w`` exponents down to ``-w_span`` (the ``w`` support is finite
    anyway).  The coefficient of ``z^i w^-j`` is ``E_ij Delta_lam(H_r)``.
    """
    lam = Partition(lam)
    if r < 1:
        raise ValueError("the action needs r >= 1")
    if z_max < 0:
        raise ValueError("z_max must be non-negative")
    return _first_form(lam, r, z_max).restrict(w_min=None if w_span is None else -w_span)


@lru_cache(maxsize=None)
def _first_form(lam: Partition, r: int, z_max: int) -> LaurentWindow:
    md = mixed_determinant(lam, TwistedHSequence(hseq(r), z_twist=True), r)
    md = md.shift(r - 1, -(r - 1))
    out = window_mul(_inverse_e(r, z_max - min(md.window[0], 0)), md)
    return out.restrict(z_max=z_max)


def action_second_form(lam: Iterable[int], r: int, z_max: int, w_min: int) -> LaurentWindow:
    """``E(z,w) Delta_lam(H_r)`` from the vertex-operator formula.

    Computes ``i_{w,z}(w/(w-z)) * (1 - (z/w)^r Gamma_r(z,w)) Delta_lam(H_r)``
    where ``Gamma_r(z,w) = E_r(w)/E_r(z)`` times the doubly twisted
    determinant.  The overall sign is fixed by the Clifford relation
    ``b(z) ^ (w beta(w) -| u) = i_{w,z}(w/(w-z)) u - w beta(w) -| (b(z) ^ u)``;
    the opposite sign gives ``-E(z,w)`` (checked in the tests).

    Exact for ``z`` exponents up to ``z_max`` and ``w`` exponents down to
    ``-w_min``.
    """
    lam = Partition(lam)
    if len(lam) > r:
        raise ValueError(f"{lam} has more than {r} parts")
    if r < 1:
        raise ValueError("the action needs r >= 1")
    zero = Poly.zero(r)
    twisted = TwistedHSequence(hseq(r), z_twist=True, w_twist=True)
    parts = lam.padded(r)
    D = _series_det([[twisted.entry(parts[j] - j + i) for j in range(r)] for i in range(r)], r)
    # z^r E_r(w) / w^r is a polynomial in z and w^-1
    e_w = LaurentWindow({(r, k - r): c for (k, _), c in generic_polynomial(r).entries.items()}, zero)
    inv = _inverse_e(r, z_max - min(D.window[0] + r, 0))
    inner = LaurentWindow.constant(schur_poly(lam, r), zero) - window_mul(window_mul(e_w, inv), D)
    inner = inner.restrict(z_max=z_max)
    order = max(z_max, w_min)
    geo = LaurentWindow.geometric(order)
    out = window_mul(geo, inner, lambda c, p: p * c)
    return out.restrict(z_max=z_max, w_min=-w_min)


def gamma(x: SchurExpansion, z_max: int, variant: str = "bar") -> LaurentWindow:
    """The creation-type operator ``B_r -> B_{r+1}((z))``.

    ``Delta_lam(H_r)`` goes to ``Delta_lam(twisted H_{r+1}) / E_{r+1}(z)``.  With
    ``variant="bar"`` the twist is ``h_j - h_{j-1}/z``; ``variant="plain"``
    uses ``sum_i h_{j-i} z^-i`` instead.  Only ``"bar"`` agrees with wedging
    ``z^-r b(z)`` onto ``[b]^r_lam``; see the tests.
    """
    if variant not in ("bar", "plain"):
        raise ValueError(f"unknown variant {variant!r}")
    s = x.r + 1
    zero = Poly.zero(s)
    total = LaurentWindow({}, zero, (-s, z_max, None, 0))
    for lam, c in x.coeffs.items():
        parts = lam.padded(s)
        rows = [[_plain_twist(s, parts[j] - j + i) if variant == "plain"
                 else _twisted_entry(s, parts[j] - j + i, True, False)
                 for j in range(s)] for i in range(s)]
        D = _series_det(rows, s)
        term = window_mul(_inverse_e(s, z_max - min(D.window[0], 0)), D).restrict(z_max=z_max)
        total = total + term * c
    return total.restrict(z_max=z_max)


@lru_cache(maxsize=None)
def _plain_twist(r: int, j: int) -> LaurentWindow:
    # sum_{i=0..j} h_{j-i} z^-i
    H = hseq(r)
    return LaurentWindow({(-i, 0): H[j - i] for i in range(j + 1)}, Poly.zero(r))


def gamma_star(x: SchurExpansion) -> LaurentWindow:
    """The annihilation-type operator ``B_r -> B_{r-1}[w, w^-1]``.

    ``Delta_lam(H_r)`` goes to the ``r x r`` determinant with first row
    ``w^(j-1-lam_j)`` and rows ``h_{lam_j - j + i}`` taken in B_{r-1}.
    """
    if x.r < 1:
        raise ValueError("gamma_star needs r >= 1")
    s = x.r - 1
    total = LaurentWindow({}, Poly.zero(s))
    for lam, c in x.coeffs.items():
        total = total + mixed_determinant(lam, TwistedHSequence(hseq(s)), x.r) * c
    return LaurentWindow(dict(total.entries), total.zero)


def default_z_max(lam: Partition, r: int, n: int) -> int:
    """Window covering every coefficient ``E_ij`` with ``i, j < n``."""
    return lam.weight() + r * (n - r) + r


@lru_cache(maxsize=None)
def action_box_form(lam: Partition, r: int, n: int) -> LaurentWindow:
    """``E(z,w)_n Delta_lam(H_{r,n})`` computed inside B_{r,n}.

    Uses ``(z/w)^(r-1) (1 + h_1 z + ... + h_{n-r} z^(n-r))`` times the
    projected twisted determinant; projection happens after the twist, as it
    must (the two do not commute).  The result is a finite series with
    canonical B_{r,n} representatives as coefficients.
    """
    lam = Partition(lam)
    if n < r:
        raise ValueError(f"n={n} must be at least r={r}")
    if lam and lam[0] > n - r:
        raise ValueError(f"{lam} does not fit in the {r}x{n - r} box")
    H = hseq(r)
    zero = Poly.zero(r)
    md = mixed_determinant(lam, TwistedHSequence(H, z_twist=True), r)
    md = LaurentWindow({k: reduce_mod(c, r, n) for k, c in md.entries.items()}, zero)
    trunc = LaurentWindow({(k, 0): H[k] for k in range(n - r + 1)}, zero)
    prod = window_mul(trunc, md).shift(r - 1, -(r - 1))
    prod = LaurentWindow({k: reduce_mod(c, r, n) for k, c in prod.entries.items()}, zero)
    return project_series(prod, n, r)


def _first_form_for(lam: Partition, r: int, i: int) -> LaurentWindow:
    # round the window up so neighbouring requests share one expansion
    z_max = max(8, -(-(i + 1) // 8) * 8)
    return _first_form(lam, r, z_max)


def act_elementary(i: int, j: int, x: SchurExpansion, n: int | None = None) -> SchurExpansion:
    """``E_ij x`` for a Schur expansion ``x`` of B_r, or of B_{r,n} when ``n``
    is given (defaults to ``x.n``)."""
    if i < 0 or j < 0:
        raise ValueError("matrix indices must be non-negative")
    n = x.n if n is None else n
    if n is not None and not (i < n and j < n):
        raise ValueError(f"E_({i},{j}) is not in gl_{n}")
    r = x.r
    acc = Poly.zero(r)
    for lam, c in x.coeffs.items():
        if n is None:
            coef = _first_form_for(lam, r, i).coeff(i, -j)
        else:
            coef = action_box_form(lam, r, n).coeff(i, -j)
        acc = acc + coef * c
    out = straighten(acc, r)
    return out if n is None else project(out, n)


@dataclass(frozen=True)
class GlMatrix:
    """A finitely supported integer matrix; ``n=None`` means gl_infinity."""

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)
    n: int | None = None

    def __post_init__(self):
        clean = {}
        for (i, j), a in self.entries.items():
            i, j, a = int(i), int(j), int(a)
            if i < 0 or j < 0:
                raise ValueError("matrix indices must be non-negative")
            if self.n is not None and not (i < self.n and j < self.n):
                raise ValueError(f"entry ({i},{j}) outside a {self.n}x{self.n} matrix")
            if a:
                clean[i, j] = clean.get((i, j), 0) + a
        object.__setattr__(self, "entries", {k: v for k, v in clean.items() if v})

    @classmethod
    def elementary(cls, i: int, j: int, n: int | None = None) -> "GlMatrix":
        return cls({(i, j): 1}, n)

    @classmethod
    def identity(cls, n: int) -> "GlMatrix":
        return cls({(k, k): 1 for k in range(n)}, n)

    def __add__(self, other: "GlMatrix") -> "GlMatrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return GlMatrix(out, self.n if self.n == other.n else None)

    def __sub__(self, other: "GlMatrix") -> "GlMatrix":
        return self + GlMatrix({k: -v for k, v in other.entries.items()}, other.n)

    def __matmul__(self, other: "GlMatrix") -> "GlMatrix":
        out: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for (k2, j), b in other.entries.items():
                if k == k2:
                    out[i, j] = out.get((i, j), 0) + a * b
        return GlMatrix(out, self.n if self.n == other.n else None)

    def bracket(self, other: "GlMatrix") -> "GlMatrix":
        return self @ other - other @ self

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [{"i": i, "j": j, "a": str(a)}
                                         for (i, j), a in sorted(self.entries.items())]}

    @classmethod
    def from_json(cls, data: Mapping) -> "GlMatrix":
        """Read ``{"n": int, "entries": [{"i", "j", "a"}]}``; ``a`` is a decimal string."""
        entries: dict[tuple[int, int], int] = {}
        for e in data["entries"]:
            try:
                a = Decimal(str(e["a"]))
            except InvalidOperation:
                raise ValueError(f"matrix entry {e['a']!r} is not a number") from None
            if not a.is_finite() or a != a.to_integral_value():
                raise ValueError(f"matrix entry {e['a']!r} is not an integer")
            key = (int(e["i"]), int(e["j"]))
            entries[key] = entries.get(key, 0) + int(a)
        n = data.get("n")
        return cls(entries, None if n is None else int(n))


def act_matrix(A: GlMatrix, x: SchurExpansion, n: int | None = None) -> SchurExpansion:
    """``delta(A) x = sum a_ij E_ij x``."""
    n = x.n if n is None else n
    if A.n is not None and n is not None and A.n != n:
        raise ValueError(f"matrix of size {A.n} cannot act on B_({x.r},{n})")
    for i, j in A.entries:
        if n is not None and not (i < n and j < n):
            raise ValueError(f"entry ({i},{j}) outside [0,{n})^2")
    total = SchurExpansion(x.r, {}, n)
    for (i, j), a in A.entries.items():
        total = total + act_elementary(i, j, x, n) * a
    return total


__all__ = [
    "TwistedHSequence", "GlMatrix", "WindowError", "mixed_determinant", "action_first_form",
    "action_second_form", "gamma", "gamma_star", "action_box_form", "act_elementary",
    "act_matrix", "default_z_max",
]
