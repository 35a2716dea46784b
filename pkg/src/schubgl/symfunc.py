"""The rings B_r = Z[e_1..e_r] and B_{r,n} in the Schur basis.

Elements of B_r are kept as e-polynomials (``Poly``); ``SchurExpansion`` is
the view in the basis of Schur determinants ``Delta_lam(H_r)``.  Elements of
B_{r,n} are Schur expansions supported in the ``r x (n-r)`` box.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .exactpoly import LaurentWindow, Poly, det
from .partitions import Partition, enumerate_box, partitions_of


def generic_polynomial(r: int) -> LaurentWindow:
    """``E_r(z) = 1 - e_1 z + ... + (-1)^r e_r z^r`` as an exact series."""
    entries = {(0, 0): Poly.one(r)}
    for k in range(1, r + 1):
        entries[k, 0] = Poly.gen(r, k) * (-1) ** k
    return LaurentWindow(entries, Poly.zero(r), (0, None, None, 0))


class HSequence:
    """The complete homogeneous elements ``h_j`` of B_r, built on demand.

    ``h_0 = 1``, ``h_j = 0`` for ``j < 0`` and
    ``h_j = sum_{k=1..r} (-1)^(k-1) e_k h_{j-k}``, which is the coefficient
    recursion of ``1 / E_r(z)``.
    """

    def __init__(self, r: int):
        if r < 0:
            raise ValueError("rank must be non-negative")
        self.r = r
        self._zero = Poly.zero(r)
        self._cache = [Poly.one(r)]
        self._gens = [Poly.gen(r, k) for k in range(1, r + 1)]
        self._lock = threading.Lock()

    def __getitem__(self, j: int) -> Poly:
        if j < 0:
            return self._zero
        if j < len(self._cache):
            return self._cache[j]
        with self._lock:
            while len(self._cache) <= j:
                m = len(self._cache)
                acc = self._zero
                for k in range(1, min(m, self.r) + 1):
                    term = self._gens[k - 1] * self._cache[m - k]
                    acc = acc + term if k % 2 else acc - term
                self._cache.append(acc)
        return self._cache[j]

    def __repr__(self) -> str:
        return f"HSequence(r={self.r}, cached={len(self._cache)})"


@lru_cache(maxsize=None)
def hseq(r: int) -> HSequence:
    """Shared ``HSequence`` for rank ``r``."""
    return HSequence(r)


def schur_det(lam: Partition, H: HSequence) -> Poly:
    """``Delta_lam(H) = det(h_{lam_j - j + i})`` of size ``H.r``."""
    return _schur_poly(Partition(lam), H.r)


@lru_cache(maxsize=None)
def _schur_poly(lam: Partition, r: int) -> Poly:
    if len(lam) > r:
        raise ValueError(f"{lam} has more than {r} parts")
    H = hseq(r)
    parts = lam.padded(r)
    matrix = [[H[parts[j] - j + i] for j in range(r)] for i in range(r)]
    return det(matrix, Poly.one(r))


def schur_poly(lam: Partition, r: int) -> Poly:
    """``Delta_lam(H_r)`` as an e-polynomial."""
    return _schur_poly(Partition(lam), r)


@dataclass(frozen=True)
class SchurExpansion:
    """``sum c_lam Delta_lam(H_r)``, an element of B_r or (with ``n``) B_{r,n}."""

    r: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)
    n: int | None = None

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if not c:
                continue
            if len(lam) > self.r:
                raise ValueError(f"{lam} has more than r={self.r} parts")
            if self.n is not None and lam and lam[0] > self.n - self.r:
                raise ValueError(f"{lam} does not fit in the {self.r}x{self.n - self.r} box")
            clean[lam] = clean.get(lam, 0) + int(c)
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def basis(cls, lam: Iterable[int], r: int, n: int | None = None) -> "SchurExpansion":
        return cls(r, {Partition(lam): 1}, n)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return (self.r, self.n, dict(self.coeffs)) == (other.r, other.n, dict(other.coeffs))

    def __hash__(self) -> int:
        return hash((self.r, self.n, frozenset(self.coeffs.items())))

    def _check(self, other: "SchurExpansion") -> None:
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError(f"incompatible rings B_({self.r},{self.n}) and B_({other.r},{other.n})")

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SchurExpansion(self.r, out, self.n)

    def __neg__(self) -> "SchurExpansion":
        return SchurExpansion(self.r, {k: -c for k, c in self.coeffs.items()}, self.n)

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + (-other)

    def __mul__(self, c: int) -> "SchurExpansion":
        return SchurExpansion(self.r, {k: v * c for k, v in self.coeffs.items()}, self.n)

    __rmul__ = __mul__

    def items(self) -> list[tuple[Partition, int]]:
        """Terms by weight, then reverse-lexicographically."""
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))

    def degrees(self) -> set[int]:
        return {lam.weight() for lam in self.coeffs}

    def to_poly(self) -> Poly:
        acc = Poly.zero(self.r)
        for lam, c in self.coeffs.items():
            acc = acc + schur_poly(lam, self.r) * c
        return acc

    def __repr__(self) -> str:
        return f"SchurExpansion(r={self.r}, n={self.n}, {dict(self.items())!r})"

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for lam, c in self.items():
            out.append(f"{c}*D{lam}" if c != 1 else f"D{lam}")
        return " + ".join(out).replace("+ -", "- ")

    def to_latex(self) -> str:
        if not self.coeffs:
            return "0"
        ring = f"H_{{{self.r}}}" if self.n is None else f"H_{{{self.r},{self.n}}}"
        out = ""
        for k, (lam, c) in enumerate(self.items()):
            label = ",".join(map(str, lam)) or "0"
            body = f"\\Delta_{{({label})}}({ring})"
            mag = abs(c)
            if mag != 1:
                body = f"{mag}{body}"
            if k == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "terms": [{"partition": list(lam), "coeff": str(c)} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SchurExpansion":
        coeffs: dict[Partition, int] = {}
        for t in data["terms"]:
            lam = Partition(t["partition"])
            coeffs[lam] = coeffs.get(lam, 0) + int(t["coeff"])
        return cls(int(data["r"]), coeffs, data.get("n"))


def _lead_key(exps: tuple[int, ...]) -> tuple[int, ...]:
    # e-monomial e_1^a_1..e_r^a_r read as the partition (r^a_r, ..., 1^a_1)
    parts: list[int] = []
    for k in range(len(exps), 0, -1):
        parts.extend([k] * exps[k - 1])
    return tuple(parts)


@lru_cache(maxsize=None)
def _straightening_table(r: int, d: int) -> dict[tuple[int, ...], tuple[Partition, Poly]]:
    """Leading e-monomial of each degree-``d`` Schur determinant in B_r.

    The leading monomial is the one whose partition is lexicographically
    smallest.  Schur determinants are unitriangular against e-monomials in
    dominance order, so the leads are distinct with coefficient 1; both facts
    are checked here rather than assumed.
    """
    table: dict[tuple[int, ...], tuple[Partition, Poly]] = {}
    for lam in partitions_of(d, r):
        s = schur_poly(lam, r)
        lead = min(s.terms, key=_lead_key)
        assert s.terms[lead] == 1, f"non-unimodular leading coefficient for {lam}"
        assert lead not in table, f"leading monomial collision at {lam}"
        table[lead] = (lam, s)
    return table


def straighten(p: Poly, r: int) -> SchurExpansion:
    """Write an e-polynomial in the Schur basis of B_r.

    Works one degree at a time: repeatedly take the leading monomial of what
    is left, subtract the Schur determinant that owns it.  This is exact
    back-substitution through a unitriangular integer matrix.
    """
    if p.arity != r:
        raise ValueError(f"polynomial has arity {p.arity}, expected {r}")
    coeffs: dict[Partition, int] = {}
    for d in sorted(p.degrees()):
        rest = p.homogeneous_part(d)
        table = _straightening_table(r, d)
        while rest:
            lead = min(rest.terms, key=_lead_key)
            assert lead in table, f"no Schur determinant leads with {lead}"
            lam, s = table[lead]
            c = rest.terms[lead]
            coeffs[lam] = coeffs.get(lam, 0) + c
            rest = rest - s * c
    return SchurExpansion(r, coeffs)


def project(x: SchurExpansion, n: int) -> SchurExpansion:
    """Image in B_{r,n}: drop every partition with first part above ``n - r``."""
    if n < x.r:
        raise ValueError(f"n={n} must be at least r={x.r}")
    if x.n is not None and x.n < n:
        raise ValueError(f"cannot lift an element of B_({x.r},{x.n}) to n={n}")
    c = n - x.r
    kept = {lam: v for lam, v in x.coeffs.items() if not lam or lam[0] <= c}
    return SchurExpansion(x.r, kept, n)


def reduce_mod(p: Poly, r: int, n: int) -> Poly:
    """Canonical e-polynomial representative of the class of ``p`` in B_{r,n}."""
    return project(straighten(p, r), n).to_poly()


def project_series(x: LaurentWindow, n: int, r: int) -> LaurentWindow:
    """Reduce every coefficient into B_{r,n} and keep exponents below ``n``.

    Coefficients stay e-polynomials, each the canonical representative
    ``sum_{lam in box} c_lam Delta_lam(H_r)`` of its class.
    """
    out = x.map(lambda c: reduce_mod(c, r, n))
    z_min, z_max, w_min, w_max = out.window
    lo = -(n - 1)
    z_cap = n - 1 if z_max is None else min(z_max, n - 1)
    w_cap = lo if w_min is None else max(w_min, lo)
    entries = {(p, q): c for (p, q), c in out.entries.items() if p <= z_cap and q >= w_cap}
    return LaurentWindow(entries, out.zero, (z_min, z_cap, w_cap, w_max))


# -- text parser -------------------------------------------------------------

class ParseError(ValueError):
    """Malformed ring-element expression."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([eh])_?(\d+)|(\*\*|[-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, sym, idx, op = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif sym is not None:
            tokens.append((sym, idx))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


def parse_element(text: str, r: int) -> Poly:
    """Parse an expression in ``e1..er``, ``h1..hK``, integers, ``+ - * ^`` and
    parentheses.  ``h``-symbols are rewritten to e-polynomials immediately.
    """
    tokens = _tokenize(text)
    H = hseq(r)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (expected is not None and tok != ("op", expected)):
            raise ParseError(f"expected {expected or 'more input'} in {text!r}")
        pos += 1
        return tok

    def expr():
        acc = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = unary()
        while peek() == ("op", "*"):
            take("*")
            acc = acc * unary()
        return acc

    def unary():
        if peek() == ("op", "-"):
            take("-")
            return -unary()
        if peek() == ("op", "+"):
            take("+")
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take("^")
            kind, val = take()
            if kind != "int":
                raise ParseError(f"exponent must be a non-negative integer in {text!r}")
            return base ** int(val)
        return base

    def atom():
        kind, val = take()
        if kind == "int":
            return Poly.const(r, int(val))
        if kind == "e":
            k = int(val)
            if not 1 <= k <= r:
                raise ParseError(f"e{k} is not a generator of B_{r}")
            return Poly.gen(r, k)
        if kind == "h":
            return H[int(val)]
        if (kind, val) == ("op", "("):
            inner = expr()
            take(")")
            return inner
        raise ParseError(f"unexpected {val!r} in {text!r}")

    if not tokens:
        raise ParseError("empty expression")
    result = expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input {tokens[pos][1]!r} in {text!r}")
    return result


def box_basis(r: int, n: int) -> list[Partition]:
    return enumerate_box(r, n - r)
