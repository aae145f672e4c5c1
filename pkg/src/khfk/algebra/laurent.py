"""Exact Laurent polynomials in one or two formal variables."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Exponent = Tuple[int, ...]


class LaurentPolynomial:
    """Integer-coefficient Laurent polynomial.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    integer coefficients. Instances are treated as immutable.

    >>> t = LaurentPolynomial.monomial(("t",), (1,))
    >>> str(t - 1 + t ** -1)
    't - 1 + t^{-1}'
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None,
                 variables: Sequence[str] = ("t",)):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean: Dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            if isinstance(exp, int):
                exp = (exp,)
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match variables {self.variables}")
            if c:
                c = int(c)
                clean[exp] = clean.get(exp, 0) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # -- construction ---------------------------------------------------
    @classmethod
    def monomial(cls, variables: Sequence[str], exponent: Exponent, coeff: int = 1):
        return cls({tuple(exponent): coeff}, variables)

    @classmethod
    def constant(cls, c: int, variables: Sequence[str] = ("t",)):
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], low: int = 0, variable: str = "t"):
        """Univariate polynomial ``sum coeffs[i] * variable^(low + i)``."""
        return cls({(low + i,): c for i, c in enumerate(coeffs)}, (variable,))

    @classmethod
    def from_counts(cls, counts: Mapping[Exponent, int], variables: Sequence[str]):
        return cls(dict(counts), variables)

    # -- basic protocol -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self.sorted_terms())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.variables)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.variables != self.variables:
                if not other.terms:
                    return LaurentPolynomial({}, self.variables)
                if not self.terms:
                    return other
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.variables)
        raise TypeError(f"cannot combine LaurentPolynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        variables = self.variables if self.terms else other.variables
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, variables)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.terms.items()}, self.variables)
        other = self._coerce(other)
        variables = self.variables if self.terms else other.variables
        out: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out, variables)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("non-unit monomial cannot be inverted")
            return LaurentPolynomial({tuple(-x * -k for x in e): c ** (-k)}, self.variables)
        result = LaurentPolynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- queries --------------------------------------------------------
    def coefficient(self, exponent) -> int:
        if isinstance(exponent, int):
            exponent = (exponent,)
        return self.terms.get(tuple(exponent), 0)

    def sorted_terms(self):
        """Terms in canonical order: descending exponent tuples."""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def degree_range(self, index: int = 0) -> Tuple[int, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        exps = [e[index] for e in self.terms]
        return min(exps), max(exps)

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def is_symmetric(self, index: int = 0) -> bool:
        return self == self.invert_variable(index)

    # -- transformations ------------------------------------------------
    def invert_variable(self, index: int = 0) -> "LaurentPolynomial":
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[index] = -e2[index]
            out[tuple(e2)] = c
        return LaurentPolynomial(out, self.variables)

    def shift(self, offsets: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPolynomial({tuple(a + b for a, b in zip(e, offsets)): c
                                  for e, c in self.terms.items()}, self.variables)

    def rename(self, *names: str) -> "LaurentPolynomial":
        if len(names) != len(self.variables):
            raise ValueError("rename needs one name per variable")
        return LaurentPolynomial(self.terms, names)

    def substitute(self, variable: str, value: int) -> Union["LaurentPolynomial", int]:
        """Substitute an integer (typically -1 or 1) for one variable.

        Returns an int when no variables remain. Substituting ``0`` is
        rejected if any negative exponent is present.
        """
        idx = self.variables.index(variable)
        rest = self.variables[:idx] + self.variables[idx + 1:]
        out: Dict[Exponent, int] = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k < 0:
                if value not in (1, -1):
                    raise ValueError(f"cannot substitute {value} into negative power")
                factor = value ** (-k)
            else:
                factor = value ** k
            key = e[:idx] + e[idx + 1:]
            out[key] = out.get(key, 0) + c * factor
        if not rest:
            return out.get((), 0)
        return LaurentPolynomial(out, rest)

    def evaluate(self, *values) -> int:
        if len(values) != len(self.variables):
            raise ValueError("need one value per variable")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k < 0:
                    if v in (1, -1):
                        term *= v ** (-k)
                    else:
                        raise ValueError("non-unit value at negative exponent")
                else:
                    term *= v ** k
            total += term
        return total

    def collapse(self, weights: Sequence[int], variable: str) -> "LaurentPolynomial":
        """Univariate regrouping by a linear combination of exponents.

        ``collapse((1, -1), "δ")`` turns a (t, u) Poincaré polynomial
        into its δ = t - u polynomial.
        """
        out: Dict[Exponent, int] = {}
        for e, c in self.terms.items():
            k = sum(w * x for w, x in zip(weights, e))
            out[(k,)] = out.get((k,), 0) + c
        return LaurentPolynomial(out, (variable,))

    def symmetrize(self) -> "LaurentPolynomial":
        """Normalize a univariate polynomial up to units ``±t^k``.

        The result is symmetric under ``t -> 1/t`` when possible and has
        positive value at 1 (or positive leading coefficient if it
        vanishes there).
        """
        if not self.terms:
            return self
        lo, hi = self.degree_range()
        if (lo + hi) % 2:
            raise ValueError("polynomial cannot be centred with integer exponents")
        p = self.shift((-(lo + hi) // 2,))
        v = p.evaluate(1)
        sign = 1
        if v < 0 or (v == 0 and p.sorted_terms()[0][1] < 0):
            sign = -1
        return p * sign

    # -- univariate arithmetic used by fraction-free elimination ---------
    def exact_divide(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division of univariate Laurent polynomials.

        Raises ``ArithmeticError`` if ``other`` does not divide ``self``.
        """
        if len(self.variables) != 1:
            raise ValueError("exact_divide is univariate only")
        other = self._coerce(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return self
        num = {e[0]: c for e, c in self.terms.items()}
        den = {e[0]: c for e, c in other.terms.items()}
        dlo = min(den)
        dhi = max(den)
        lead = den[dhi]
        quot: Dict[Exponent, int] = {}
        while num:
            nhi = max(num)
            if nhi - dhi < min(num) - dlo:
                raise ArithmeticError("inexact polynomial division")
            c = num[nhi]
            if c % lead:
                raise ArithmeticError("inexact polynomial division")
            q = c // lead
            k = nhi - dhi
            quot[(k,)] = q
            for d, dc in den.items():
                key = d + k
                val = num.get(key, 0) - q * dc
                if val:
                    num[key] = val
                else:
                    num.pop(key, None)
        return LaurentPolynomial(quot, self.variables)

    # -- rendering --------------------------------------------------------
    def to_dict(self) -> Dict[str, int]:
        """Exponent-string keyed map, e.g. ``{"2,3": 1}``; deterministic."""
        return {",".join(str(x) for x in e): c for e, c in self.sorted_terms()}

    @classmethod
    def from_dict(cls, data: Mapping[str, int], variables: Sequence[str]):
        return cls({tuple(int(x) for x in k.split(",")): v for k, v in data.items()}, variables)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "".join(_power(v, k) for v, k in zip(self.variables, e))
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r}, variables={self.variables})"


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}" if 0 <= k < 10 else f"{var}^{{{k}}}"


def parse_polynomial(text: str, variables: Sequence[str]) -> LaurentPolynomial:
    """Parse the monomial notation produced by ``str``.

    Accepts forms such as ``"t^2u^3 + 2tu^{-1} - 4"``; used to write
    golden values exactly as they are printed in the literature.
    """
    import re

    variables = tuple(variables)
    s = text.replace(" ", "").replace("{", "").replace("}", "")
    if not s:
        return LaurentPolynomial({}, variables)
    if s[0] not in "+-":
        s = "+" + s
    terms: Dict[Exponent, int] = {}
    var_pat = "|".join(re.escape(v) for v in sorted(variables, key=len, reverse=True))
    for chunk in re.split(r"(?<!\^)(?=[+-])", s):
        if not chunk:
            continue
        sign = -1 if chunk[0] == "-" else 1
        body = chunk[1:]
        cm = re.match(r"\d+", body)
        coeff = 1
        if cm:
            coeff = int(cm.group(0))
            body = body[cm.end():]
        exps = [0] * len(variables)
        pos = 0
        for vm in re.finditer(rf"({var_pat})(?:\^(-?\d+))?", body):
            if vm.start() != pos:
                raise ValueError(f"cannot parse monomial {chunk!r}")
            idx = variables.index(vm.group(1))
            exps[idx] += int(vm.group(2)) if vm.group(2) else 1
            pos = vm.end()
        if pos != len(body):
            raise ValueError(f"cannot parse monomial {chunk!r}")
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
    return LaurentPolynomial(terms, variables)


def poly_sum(polys: Iterable[LaurentPolynomial], variables: Sequence[str]) -> LaurentPolynomial:
    total = LaurentPolynomial({}, variables)
    for p in polys:
        total = total + p
    return total
