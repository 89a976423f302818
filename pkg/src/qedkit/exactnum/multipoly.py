"""Sparse polynomials in x, y, z with coefficients in Z[w]/(w^2 + w + 1).

Coefficients are pairs (c0, c1) standing for c0 + c1*w, where w is a
primitive cube root of unity; products reduce w^2 = -1 - w, so stored
w-exponents stay in {0, 1}.  Monomial output order is graded lexicographic
with x > y > z, which keeps string forms and iteration deterministic.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

__all__ = ["MultiPolynomial", "Omega", "expand_product"]

Coeff = tuple[int, int]
Monomial = tuple[int, int, int]

_VARS = ("x", "y", "z")


def _coeff_mul(u: Coeff, v: Coeff) -> Coeff:
    a0, a1 = u
    b0, b1 = v
    # (a0 + a1 w)(b0 + b1 w) with w^2 = -1 - w
    return (a0 * b0 - a1 * b1, a0 * b1 + a1 * b0 - a1 * b1)


def _coeff_conj(u: Coeff) -> Coeff:
    # conj(w) = w^2 = -1 - w
    a0, a1 = u
    return (a0 - a1, -a1)


class Omega:
    """Elements of Z[w]; mostly handy for building factor polynomials."""

    __slots__ = ("re", "om")

    def __init__(self, re: int = 0, om: int = 0) -> None:
        self.re = int(re)
        self.om = int(om)

    def as_pair(self) -> Coeff:
        return (self.re, self.om)

    def __mul__(self, other: "Omega") -> "Omega":
        c = _coeff_mul(self.as_pair(), other.as_pair())
        return Omega(*c)

    def __add__(self, other: "Omega") -> "Omega":
        return Omega(self.re + other.re, self.om + other.om)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Omega):
            return NotImplemented
        return self.re == other.re and self.om == other.om

    def __hash__(self) -> int:
        return hash((self.re, self.om))

    def __repr__(self) -> str:
        return f"Omega({self.re}, {self.om})"


def _grlex_key(m: Monomial) -> tuple:
    return (-(m[0] + m[1] + m[2]), -m[0], -m[1], -m[2])


class MultiPolynomial:
    """Immutable sparse polynomial; no zero coefficients are stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Union[Coeff, int]] = ()) -> None:
        clean: dict[Monomial, Coeff] = {}
        for mono, coeff in dict(terms).items():
            if isinstance(coeff, int):
                coeff = (coeff, 0)
            if coeff != (0, 0):
                clean[(int(mono[0]), int(mono[1]), int(mono[2]))] = (
                    int(coeff[0]), int(coeff[1]))
        self.terms = dict(sorted(clean.items(), key=lambda kv: _grlex_key(kv[0])))

    # -- constructors --------------------------------------------------------

    @classmethod
    def variable(cls, name: str) -> "MultiPolynomial":
        exps = [0, 0, 0]
        exps[_VARS.index(name)] = 1
        return cls({tuple(exps): (1, 0)})

    @classmethod
    def constant(cls, c: Union[int, Omega]) -> "MultiPolynomial":
        pair = c.as_pair() if isinstance(c, Omega) else (int(c), 0)
        return cls({(0, 0, 0): pair})

    @classmethod
    def linear_combo(cls, cx: Union[int, Omega], cy: Union[int, Omega],
                     cz: Union[int, Omega]) -> "MultiPolynomial":
        """cx*x + cy*y + cz*z."""
        def pair(c):
            return c.as_pair() if isinstance(c, Omega) else (int(c), 0)
        return cls({(1, 0, 0): pair(cx), (0, 1, 0): pair(cy),
                    (0, 0, 1): pair(cz)})

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        out = dict(self.terms)
        for mono, (b0, b1) in other.terms.items():
            a0, a1 = out.get(mono, (0, 0))
            out[mono] = (a0 + b0, a1 + b1)
        return MultiPolynomial(out)

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial({m: (-c0, -c1) for m, (c0, c1) in self.terms.items()})

    def __sub__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["MultiPolynomial", int]) -> "MultiPolynomial":
        if isinstance(other, int):
            other = MultiPolynomial.constant(other)
        out: dict[Monomial, Coeff] = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                mono = (i1 + i2, j1 + j2, k1 + k2)
                p0, p1 = _coeff_mul(c1, c2)
                a0, a1 = out.get(mono, (0, 0))
                out[mono] = (a0 + p0, a1 + p1)
        return MultiPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPolynomial":
        if n < 0:
            raise ValueError("negative power")
        acc = MultiPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_real(self) -> bool:
        """True when every coefficient has zero w-part."""
        return all(c1 == 0 for (_, c1) in self.terms.values())

    def conjugate(self) -> "MultiPolynomial":
        return MultiPolynomial(
            {m: _coeff_conj(c) for m, c in self.terms.items()})

    def coefficient(self, mono: Monomial) -> Coeff:
        return self.terms.get(tuple(mono), (0, 0))

    def evaluate(self, x: int, y: int, z: int) -> Coeff:
        """Exact value in Z[w] at integer points."""
        total = (0, 0)
        for (i, j, k), c in self.terms.items():
            scale = (x ** i) * (y ** j) * (z ** k)
            total = (total[0] + c[0] * scale, total[1] + c[1] * scale)
        return total

    def substitute_sq(self) -> "MultiPolynomial":
        """Reduce modulo x^2 + y^2 - 1 by rewriting x^(2m+e) -> (1-y^2)^m x^e.

        Used for trigonometric certificates where x, y play sin, cos.
        """
        one_minus_y2 = MultiPolynomial({(0, 0, 0): (1, 0), (0, 2, 0): (-1, 0)})
        out = MultiPolynomial()
        for (i, j, k), c in self.terms.items():
            part = MultiPolynomial({(i % 2, j, k): c})
            out = out + part * (one_minus_y2 ** (i // 2))
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (i, j, k), (c0, c1) in self.terms.items():
            if c1 == 0:
                coeff = str(c0)
            elif c0 == 0:
                coeff = f"{c1}w"
            else:
                coeff = f"({c0}{c1:+}w)"
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(_VARS, (i, j, k)) if e)
            chunks.append(coeff + ("*" + mono if mono else ""))
        return " + ".join(chunks)


def expand_product(factors: Iterable[MultiPolynomial]) -> MultiPolynomial:
    """Exact expanded product of the given factors."""
    factors = list(factors)
    if not factors:
        raise ValueError("expand_product requires at least one factor")
    acc = factors[0]
    for f in factors[1:]:
        acc = acc * f
    return acc
