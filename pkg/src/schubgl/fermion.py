"""Brute-force model of the exterior powers of M = (+)_{i>=0} Z b_i.

This is the ground truth for the closed formulas in ``schubert_ops``: it
knows nothing about symmetric functions.  Wedge monomials are stored as
strictly decreasing index tuples, with the sign moved into the coefficient.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Callable, Iterable, Mapping

from .exactpoly import LaurentWindow, window_mul
from .partitions import Partition
from .symfunc import SchurExpansion


def _sort_sign(indices: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting ``indices`` decreasingly, or 0 on repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j and idx[j - 1] < idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


class WedgeElement:
    """An integer combination of wedge monomials of a fixed degree ``r``.

    ``u ^ v`` is the wedge product.
    """

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.r = r
        self.terms: dict[tuple[int, ...], int] = {}
        for mono, c in (terms or {}).items():
            if not c:
                continue
            if len(mono) != r:
                raise ValueError(f"monomial {mono} does not have degree {r}")
            sign, key = _sort_sign(mono)
            if sign:
                self.terms[key] = self.terms.get(key, 0) + sign * c
        self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def monomial(cls, *indices: int) -> "WedgeElement":
        """``b_{i_1} ^ ... ^ b_{i_r}`` in the order given."""
        if any(i < 0 for i in indices):
            raise ValueError("basis indices are non-negative")
        return cls(len(indices), {tuple(indices): 1})

    @classmethod
    def zero(cls, r: int) -> "WedgeElement":
        return cls(r)

    @classmethod
    def basis(cls, lam: Iterable[int], r: int) -> "WedgeElement":
        """``[b]^r_lam = b_{r-1+lam_1} ^ ... ^ b_{lam_r}``."""
        parts = Partition(lam).padded(r)
        return cls(r, {tuple(r - 1 - k + parts[k] for k in range(r)): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return self.terms == other.terms and (self.r == other.r or not self.terms)

    __hash__ = None

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        if not isinstance(other, WedgeElement):
            return NotImplemented
        if other.r != self.r and self.terms and other.terms:
            raise ValueError(f"cannot add degrees {self.r} and {other.r}")
        r = self.r if self.terms else other.r
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return WedgeElement._sorted(r, out)

    def __neg__(self) -> "WedgeElement":
        return WedgeElement._sorted(self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "WedgeElement") -> "WedgeElement":
        return self + (-other)

    def __mul__(self, c: Any) -> "WedgeElement":
        if not isinstance(c, int):
            return NotImplemented
        return WedgeElement._sorted(self.r, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "WedgeElement") -> "WedgeElement":
        return wedge(self, other)

    @classmethod
    def _sorted(cls, r: int, terms: dict) -> "WedgeElement":
        u = cls.__new__(cls)
        u.r = r
        u.terms = {k: c for k, c in terms.items() if c}
        return u

    def __repr__(self) -> str:
        if not self.terms:
            return f"WedgeElement({self.r}, 0)"
        body = " + ".join(f"{c}*b{list(k)}" for k, c in sorted(self.terms.items(), reverse=True))
        return f"WedgeElement({self.r}, {body})"


def b(i: int) -> WedgeElement:
    """The basis vector ``b_i`` of M, as a degree-1 element."""
    return WedgeElement.monomial(i)


def wedge(u: WedgeElement, v: WedgeElement) -> WedgeElement:
    out: dict[tuple[int, ...], int] = {}
    for mu, cu in u.terms.items():
        for mv, cv in v.terms.items():
            sign, key = _sort_sign(mu + mv)
            if sign:
                out[key] = out.get(key, 0) + sign * cu * cv
    return WedgeElement._sorted(u.r + v.r, out)


def contract(j: int, u: WedgeElement) -> WedgeElement:
    """``beta_j`` contracted into ``u`` from the left.

    On a monomial with ``b_j`` in position ``k`` (1-based) this removes the
    factor with sign ``(-1)^(k-1)``.
    """
    if j < 0:
        raise ValueError("dual index must be non-negative")
    if u.r == 0:
        return WedgeElement.zero(0)
    out: dict[tuple[int, ...], int] = {}
    for mono, c in u.terms.items():
        if j in mono:
            k = mono.index(j)
            key = mono[:k] + mono[k + 1:]
            out[key] = out.get(key, 0) + (c if k % 2 == 0 else -c)
    return WedgeElement._sorted(u.r - 1, out)


def delta_elementary(i: int, j: int, u: WedgeElement) -> WedgeElement:
    """``delta(E_ij) u = b_i ^ (beta_j contracted into u)``."""
    if i < 0 or j < 0:
        raise ValueError("matrix indices must be non-negative")
    return wedge(b(i), contract(j, u))


def delta_leibniz(matrix: Mapping[tuple[int, int], int], u: WedgeElement) -> WedgeElement:
    """The derivation extending a matrix to the exterior algebra.

    ``matrix`` maps ``(row, col)`` to entries.  Each factor ``b_k`` of each
    monomial is replaced in place by ``A b_k = sum_i a_{ik} b_i``.
    """
    by_col: dict[int, list[tuple[int, int]]] = {}
    for (row, col), a in matrix.items():
        if a:
            by_col.setdefault(col, []).append((row, a))
    out = WedgeElement.zero(u.r)
    for mono, c in u.terms.items():
        for pos, k in enumerate(mono):
            for row, a in by_col.get(k, ()):
                out = out + WedgeElement(u.r, {mono[:pos] + (row,) + mono[pos + 1:]: c * a})
    return out


def to_schur(u: WedgeElement) -> SchurExpansion:
    """Read ``b_{i_1} ^ ... ^ b_{i_r}`` as ``Delta_lam`` with ``lam_k = i_k - (r-k)``."""
    r = u.r
    coeffs: dict[Partition, int] = {}
    for mono, c in u.terms.items():
        parts = [mono[k] - (r - 1 - k) for k in range(r)]
        assert all(parts[k] >= parts[k + 1] for k in range(r - 1)) and (not parts or parts[-1] >= 0)
        lam = Partition(parts)
        coeffs[lam] = coeffs.get(lam, 0) + c
    return SchurExpansion(r, coeffs)


def from_schur(x: SchurExpansion) -> WedgeElement:
    out = WedgeElement.zero(x.r)
    for lam, c in x.coeffs.items():
        out = out + WedgeElement.basis(lam, x.r) * c
    return out


# -- Schubert derivations ------------------------------------------------------

KINDS = ("+", "bar+", "-", "bar-")


def _shift(i: int, kind: str) -> Callable[[int], int | None]:
    step = i if kind in ("+", "bar+") else -i
    def f(j: int) -> int | None:
        k = j + step
        return k if k >= 0 else None
    return f


@lru_cache(maxsize=None)
def _degree_one(kind: str, j: int, order: int) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """Coefficients ``(k, {index: coeff})`` of the derivation applied to ``b_j``.

    For ``+``/``-`` these are ``sigma_{+-k} b_j``.  For the barred kinds the
    degree-1 series is inverted formally: ``Dbar_0 = 1`` and
    ``Dbar_k = -sum_{i=1..k} D_i Dbar_{k-i}``.
    """
    base = kind.replace("bar", "")
    if kind in ("+", "-"):
        out = []
        for k in range(order + 1):
            t = _shift(k, base)(j)
            if t is not None:
                out.append((k, ((t, 1),)))
        return tuple(out)
    series: list[dict[int, int]] = [{j: 1}]
    for k in range(1, order + 1):
        acc: dict[int, int] = {}
        for i in range(1, k + 1):
            shift = _shift(i, base)
            for idx, c in series[k - i].items():
                t = shift(idx)
                if t is not None:
                    acc[t] = acc.get(t, 0) - c
        series.append({t: c for t, c in acc.items() if c})
    return tuple((k, tuple(sorted(v.items()))) for k, v in enumerate(series) if v)


def _vector_series(kind: str, j: int, order: int, var: str) -> LaurentWindow:
    if kind == "-":
        order = j  # sigma_- b_j stops at b_0
    elif kind != "+":
        order = max(order, 2)
    terms = _degree_one(kind, j, order)
    if kind in ("bar+", "bar-"):
        # the inverse of sum_k sigma_{+-1}^k t^k on M is 1 - sigma_{+-1} t
        assert all(k <= 1 for k, _ in terms), f"inversion of sigma_{kind} did not terminate"
    sign = 1 if kind in ("+", "bar+") else -1
    entries = {}
    for k, vec in terms:
        e = sign * k
        entries[(e, 0) if var == "z" else (0, e)] = WedgeElement(1, {(t,): c for t, c in vec})
    zero = WedgeElement.zero(1)
    if kind == "+":
        return LaurentWindow(entries, zero, (0, order, None, 0))
    return LaurentWindow(entries, zero)


def sigma_ops(kind: str, order: int, u: WedgeElement | LaurentWindow, var: str = "z") -> LaurentWindow:
    """Apply a Schubert derivation to a wedge element or a series of them.

    ``kind`` is one of ``"+"``, ``"bar+"``, ``"-"``, ``"bar-"``.  The action on
    a monomial is the wedge of the degree-1 series of its factors (the
    Hasse-Schmidt property).  Barred kinds get their degree-1 series by
    formal inversion.  Only ``sigma_+`` is an infinite series; it is truncated
    at ``var^order``.  The other kinds are finite on every element and are
    expanded exactly.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if var not in ("z", "w"):
        raise ValueError("variable must be 'z' or 'w'")
    if order < 0:
        raise ValueError("order must be non-negative")
    if kind == "+" and var == "w":
        raise ValueError("sigma_+ is an infinite series in positive powers; only supported in z")
    if isinstance(u, WedgeElement):
        u = LaurentWindow({(0, 0): u}, WedgeElement.zero(u.r), (0, None, None, 0))
    r = u.zero.r
    z_min, z_max, w_min, w_max = u.window
    lowering = kind in ("-", "bar-")
    if lowering and var == "z" and z_max is not None:
        raise ValueError("lowering z exponents of a z-truncated series is never exact")

    entries: dict[tuple[int, int], WedgeElement] = {}
    for (p, q), coef in u.entries.items():
        for mono, c in coef.terms.items():
            acc = LaurentWindow.constant(WedgeElement(0, {(): c}), WedgeElement.zero(0))
            for j in mono:
                acc = window_mul(acc, _vector_series(kind, j, order, var), wedge)
            for (dp, dq), v in acc.entries.items():
                key = (p + dp, q + dq)
                entries[key] = entries[key] + v if key in entries else v

    if kind == "+":
        z_max = z_min + order if z_max is None else min(z_max, z_min + order)
    elif kind == "bar+" and var == "w":
        w_max += r
        w_min = None if w_min is None else w_min + r
    elif lowering and var == "z":
        z_min = min([z_min] + [p for p, _ in entries])
    if z_max is not None:
        entries = {k: v for k, v in entries.items() if k[0] <= z_max}
    if w_min is not None:
        entries = {k: v for k, v in entries.items() if k[1] >= w_min}
    return LaurentWindow(entries, WedgeElement.zero(r), (z_min, z_max, w_min, w_max))


def sigma_coefficient(i: int, u: WedgeElement) -> WedgeElement:
    """``sigma_i u`` for ``i >= 0``: the ``z^i`` coefficient of ``sigma_+(z) u``."""
    return sigma_ops("+", i, u).coeff(i, 0)


def b_series(order: int) -> LaurentWindow:
    """``b(z) = sum_{j>=0} b_j z^j`` through ``z^order``."""
    return LaurentWindow({(j, 0): b(j) for j in range(order + 1)}, WedgeElement.zero(1),
                         (0, order, None, 0))


def series_wedge(a: LaurentWindow, u: LaurentWindow) -> LaurentWindow:
    return window_mul(a, u, wedge)


def scalar_series_times(g: LaurentWindow, u: LaurentWindow) -> LaurentWindow:
    """Multiply a series with integer coefficients into a wedge series."""
    return window_mul(g, u, lambda c, v: v * c)


def series_map(u: LaurentWindow, f: Callable[[WedgeElement], WedgeElement], zero: WedgeElement) -> LaurentWindow:
    return LaurentWindow({k: f(c) for k, c in u.entries.items()}, zero, u.window)


def oracle_action(i: int, j: int, lam: Iterable[int], r: int) -> SchurExpansion:
    """``delta(E_ij) [b]^r_lam`` read back in the Schur basis of B_r."""
    return to_schur(delta_elementary(i, j, WedgeElement.basis(lam, r)))
