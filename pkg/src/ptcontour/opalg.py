"""Exact operator algebra over the canonical pair [x, p] = i.

Operators are finite sums of monomials ``x^m p^n`` (x-powers kept left of
p-powers) with :class:`~ptcontour.rational.GaussianRational` coefficients.
Products are rewritten into that canonical order through the commutation
relation, which makes operator equality an exact dictionary comparison.

The module builds the transformed Hamiltonian of a parametrized contour
``z(x) = a*sqrt(b + i c x)`` applied to ``p^2 - x^4``, conjugates it with
``exp(f p^3 + g p)`` into its Hermitian equivalent, and carries out the
canonical substitutions that reduce every valid parameter choice to the
single anchor operator ``p^2 + 4x^4 - 2x``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, NamedTuple

from .errors import NonHermitianRho, NonTerminating, NotCanonical, NotHermitizable
from .rational import GaussianRational, I, ONE


def _coeff(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


# (-i)^k for k mod 4
_MINUS_I_POW = (GaussianRational(1), GaussianRational(0, -1),
                GaussianRational(-1), GaussianRational(0, 1))


class OperatorExpr:
    """Normal-ordered polynomial in the canonical pair (x, p).

    Terms map an exponent pair ``(m, n)`` -- meaning ``x^m p^n`` -- to an
    exact complex-rational coefficient.  Zero coefficients are never stored,
    so two equal operators have identical term dictionaries.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], GaussianRational] | None = None):
        clean: dict[tuple[int, int], GaussianRational] = {}
        if terms:
            for (m, n), c in terms.items():
                if m < 0 or n < 0:
                    raise ValueError("exponents must be nonnegative")
                c = _coeff(c)
                if not c.is_zero():
                    clean[(int(m), int(n))] = c
        self._terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "OperatorExpr":
        return cls()

    @classmethod
    def one(cls) -> "OperatorExpr":
        return cls({(0, 0): ONE})

    @classmethod
    def x(cls) -> "OperatorExpr":
        return cls({(1, 0): ONE})

    @classmethod
    def p(cls) -> "OperatorExpr":
        return cls({(0, 1): ONE})

    @classmethod
    def monomial(cls, m: int, n: int, coeff=1) -> "OperatorExpr":
        return cls({(m, n): _coeff(coeff)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], GaussianRational]:
        return dict(self._terms)

    def coeff(self, m: int, n: int) -> GaussianRational:
        return self._terms.get((m, n), GaussianRational(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Maximum total degree m + n; -1 for the zero operator."""
        if not self._terms:
            return -1
        return max(m + n for m, n in self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, GaussianRational(0)) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return OperatorExpr(out)

    def __sub__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return OperatorExpr({k: -c for k, c in self._terms.items()})

    def scale(self, factor) -> "OperatorExpr":
        f = _coeff(factor)
        if f.is_zero():
            return OperatorExpr.zero()
        return OperatorExpr({k: c * f for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("operator powers must be nonnegative integers")
        out = OperatorExpr.one()
        for _ in range(n):
            out = out * self
        return out

    # -- equality ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (m, n), c in sorted(self._terms.items()):
            mono = "*".join((["x" if m == 1 else f"x^{m}"] if m else [])
                            + (["p" if n == 1 else f"p^{n}"] if n else []))
            cs = str(c)
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append(f"-{mono}")
                else:
                    cs = f"({cs})" if ("+" in cs[1:] or "-" in cs[1:]) else cs
                    parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})" if ("+" in cs[1:] or "-" in cs[1:]) else cs)
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization ---------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        out = []
        for (m, n), c in sorted(self._terms.items()):
            out.append({"m": m, "n": n,
                        "re": f"{c.re_num}/{c.re_den}",
                        "im": f"{c.im_num}/{c.im_den}"})
        return out

    @classmethod
    def from_json_obj(cls, obj: Iterable[dict]) -> "OperatorExpr":
        terms = {}
        for t in obj:
            c = GaussianRational(Fraction(t["re"]), Fraction(t["im"]))
            terms[(int(t["m"]), int(t["n"]))] = c
        return cls(terms)

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "OperatorExpr":
        return cls.from_json_obj(json.loads(text))


# ---------------------------------------------------------------------------
# contour parameters
# ---------------------------------------------------------------------------

class Branch(Enum):
    """Square-root branch policy for sampling a contour."""
    PRINCIPAL = "principal"
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class ContourParams:
    """The triple (a, b, c) of ``z(x) = a*sqrt(b + i c x)`` plus branch policy."""

    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    branch: Branch = Branch.PRINCIPAL

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, GaussianRational):
                object.__setattr__(self, name, GaussianRational(v))
        if self.a.is_zero():
            raise ValueError("contour requires a != 0")
        if self.c.is_zero():
            raise ValueError("contour requires c != 0")

    @property
    def a2c(self) -> GaussianRational:
        return self.a * self.a * self.c

    @property
    def real_a2c(self) -> bool:
        return self.a2c.is_real()

    @property
    def real_b_over_c(self) -> bool:
        return (self.b / self.c).is_real()

    def label(self) -> str:
        return f"({self.a},{self.b},{self.c})"


# ---------------------------------------------------------------------------
# core operations
# ---------------------------------------------------------------------------

def _reorder_p_x(n: int, m: int) -> OperatorExpr:
    """Normal-order p^n x^m: sum_k (-i)^k k! C(n,k) C(m,k) x^(m-k) p^(n-k)."""
    terms = {}
    for k in range(min(n, m) + 1):
        c = _MINUS_I_POW[k % 4] * (factorial(k) * comb(n, k) * comb(m, k))
        terms[(m - k, n - k)] = c
    return OperatorExpr(terms)


def multiply(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """Normal-ordered product of two operators."""
    out: dict[tuple[int, int], GaussianRational] = {}
    for (m1, n1), c1 in a._terms.items():
        for (m2, n2), c2 in b._terms.items():
            c = c1 * c2
            # x^m1 p^n1 x^m2 p^n2 = x^m1 (p^n1 x^m2) p^n2
            for (mm, nn), w in _reorder_p_x(n1, m2)._terms.items():
                key = (m1 + mm, nn + n2)
                s = out.get(key, GaussianRational(0)) + c * w
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return OperatorExpr(out)


def commutator(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """[a, b] = ab - ba, normal ordered."""
    return multiply(a, b) - multiply(b, a)


def adjoint(a: OperatorExpr) -> OperatorExpr:
    """Formal adjoint: reverse each monomial, conjugate the coefficient."""
    out = OperatorExpr.zero()
    for (m, n), c in a._terms.items():
        # (x^m p^n)^dagger = p^n x^m, reordered
        out = out + _reorder_p_x(n, m).scale(c.conjugate())
    return out


def is_hermitian(a: OperatorExpr) -> bool:
    return adjoint(a) == a


def bch_conjugate(s: OperatorExpr, a: OperatorExpr, max_depth: int = 16) -> OperatorExpr:
    """Evaluate exp(s) a exp(-s) as the nested-commutator series.

    Sums ad_s^k(a)/k! until the nested commutator vanishes identically.
    Raises :class:`NonTerminating` when the series is still nonzero at
    ``max_depth`` (the generator raises total degree).
    """
    result = a
    nested = a
    for k in range(1, max_depth + 1):
        nested = commutator(s, nested)
        if nested.is_zero():
            return result
        result = result + nested.scale(Fraction(1, factorial(k)))
    raise NonTerminating(
        f"commutator series not terminated after depth {max_depth}")


def build_h1(params: ContourParams) -> OperatorExpr:
    """Transformed Hamiltonian of p^2 - x^4 on the contour z = a*sqrt(b+icx).

    Returns ``-(4/(a^2 c^2))(b+icx) p^2 - (2/(a^2 c)) p - a^4 (b+icx)^2``
    expanded into canonical order.
    """
    a, b, c = params.a, params.b, params.c
    a2 = a * a
    w = OperatorExpr({(0, 0): b, (1, 0): I * c})          # b + i c x
    p2 = OperatorExpr.monomial(0, 2)
    term1 = multiply(w, p2).scale(GaussianRational(-4) / (a2 * c * c))
    term2 = OperatorExpr.monomial(0, 1, GaussianRational(-2) / (a2 * c))
    term3 = multiply(w, w).scale(-(a2 * a2))
    return term1 + term2 + term3


def dyson_coefficients(params: ContourParams) -> tuple[GaussianRational, GaussianRational]:
    """Coefficients (f, g) of the similarity generator f p^3 + g p."""
    a, b, c = params.a, params.b, params.c
    f = GaussianRational(Fraction(-2, 3)) / (a ** 6 * c ** 3)
    g = -(b / c)
    return f, g


class HermitizeResult(NamedTuple):
    h: OperatorExpr
    f: GaussianRational
    g: GaussianRational


def _require_hermitizable(params: ContourParams) -> None:
    if not params.real_a2c:
        raise NotHermitizable(
            f"a^2 c = {params.a2c} is not real for {params.label()}")
    if not params.real_b_over_c:
        raise NonHermitianRho(
            f"b/c = {params.b / params.c} is not real for {params.label()}")


def hermitize(params: ContourParams) -> HermitizeResult:
    """Conjugate the transformed Hamiltonian into its Hermitian equivalent.

    Chooses f = -2/(3 a^6 c^3), g = -b/c and returns
    ``h = exp(S) H1 exp(-S)`` with ``S = f p^3 + g p``.  The result is
    independent of b and Hermitian whenever a^2 c and b/c are real; it must
    coincide term-for-term with :func:`hermitian_form`, which builds the
    same operator from its closed-form coefficients without any commutators.
    """
    _require_hermitizable(params)
    f, g = dyson_coefficients(params)
    s = OperatorExpr({(0, 3): f, (0, 1): g})
    h = bch_conjugate(s, build_h1(params))
    return HermitizeResult(h, f, g)


def hermitian_form(params: ContourParams) -> OperatorExpr:
    """Closed-form Hermitian equivalent, built directly from coefficients.

    ``(4/(a^8 c^4)) p^4 + (2/(a^2 c)) p + (a^4 c^2) x^2`` -- the independent
    route against which the commutator-series construction is checked.
    """
    _require_hermitizable(params)
    a2c = params.a2c
    return OperatorExpr({
        (0, 4): GaussianRational(4) / a2c ** 4,
        (0, 1): GaussianRational(2) / a2c,
        (2, 0): a2c ** 2,
    })


def substitute_linear(a: OperatorExpr, x_image: OperatorExpr,
                      p_image: OperatorExpr) -> OperatorExpr:
    """Homomorphic substitution x -> x_image, p -> p_image.

    The images must form a canonical pair ([x', p'] = i exactly); otherwise
    the substitution would not be an algebra homomorphism.
    """
    if commutator(x_image, p_image) != OperatorExpr.monomial(0, 0, I):
        raise NotCanonical("substitution images do not satisfy [x', p'] = i")
    x_pow = [OperatorExpr.one()]
    p_pow = [OperatorExpr.one()]
    max_m = max((m for m, _ in a._terms), default=0)
    max_n = max((n for _, n in a._terms), default=0)
    for _ in range(max_m):
        x_pow.append(multiply(x_pow[-1], x_image))
    for _ in range(max_n):
        p_pow.append(multiply(p_pow[-1], p_image))
    out = OperatorExpr.zero()
    for (m, n), c in a._terms.items():
        out = out + multiply(x_pow[m], p_pow[n]).scale(c)
    return out


#: the Hermitian anchor p^2 + 4x^4 - 2x every valid contour reduces to
ANCHOR = OperatorExpr({(0, 2): ONE, (4, 0): GaussianRational(4),
                       (1, 0): GaussianRational(-2)})

#: parity image of the anchor (x -> -x)
ANCHOR_PARITY = OperatorExpr({(0, 2): ONE, (4, 0): GaussianRational(4),
                              (1, 0): GaussianRational(2)})


class SwapResult(NamedTuple):
    operator: OperatorExpr
    parity_flipped: bool


def canonical_swap(h: OperatorExpr, params: ContourParams) -> SwapResult:
    """Map the Hermitian equivalent onto the anchor operator.

    Applies x -> 2p/(a^2 c), p -> -(a^2 c) x / 2 followed by the unitary
    dilation (x, p) -> (2x, p/2).  The substitution alone produces
    ``4p^2 + x^4/4 - x``, which is unitarily equivalent to but not literally
    the anchor; the composite lands on ``p^2 + 4x^4 - 2x`` (or its parity
    image, reported through the flag).
    """
    a2c = params.a2c
    swapped = substitute_linear(
        h,
        OperatorExpr.monomial(0, 1, GaussianRational(2) / a2c),
        OperatorExpr.monomial(1, 0, -a2c * Fraction(1, 2)),
    )
    dilated = substitute_linear(
        swapped,
        OperatorExpr.monomial(1, 0, 2),
        OperatorExpr.monomial(0, 1, Fraction(1, 2)),
    )
    if dilated == ANCHOR:
        return SwapResult(dilated, False)
    if dilated == ANCHOR_PARITY:
        return SwapResult(dilated, True)
    raise ValueError(
        f"canonical swap produced neither anchor form: {dilated!r}")
