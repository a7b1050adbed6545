"""Noncommutative and commutative polynomial cores.

A monomial in the free algebra is a *word*: a tuple of 1-based variable
indices, so ``(1, 2, 1)`` stands for x1*x2*x1.  A commutative monomial is
an exponent vector, so ``(2, 1)`` stands for X1^2*X2.  Polynomials map
monomials to complex coefficients; zero coefficients are never stored.

All objects are immutable after construction and safe to share between
threads.  Coefficient arithmetic in this layer is exact complex double
precision: terms are pruned only when a coefficient compares equal to
zero, never by a numerical threshold.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

Word = tuple[int, ...]
Exponents = tuple[int, ...]

_ZERO = complex(0.0)


def multidegree(word: Iterable[int], g: int) -> Exponents:
    """Letter counts of ``word``: entry j-1 is how many times variable j occurs."""
    counts = [0] * g
    for idx in word:
        if not 1 <= idx <= g:
            raise ValueError(f"variable index {idx} out of range [1, {g}]")
        counts[idx - 1] += 1
    return tuple(counts)


def _check_word(word: Word, g: int) -> None:
    for idx in word:
        if not isinstance(idx, int) or not 1 <= idx <= g:
            raise ValueError(f"variable index {idx} out of range [1, {g}] in word {word}")


class NCPolynomial:
    """A finite complex combination of words in g noncommuting variables."""

    __slots__ = ("_g", "_terms")

    def __init__(self, g: int, terms: Mapping[Word, complex] | None = None):
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"arity must be a positive integer, got {g!r}")
        clean: dict[Word, complex] = {}
        if terms:
            for word, coeff in terms.items():
                word = tuple(word)
                _check_word(word, g)
                c = complex(coeff)
                if c != 0:
                    clean[word] = c
        self._g = g
        self._terms = clean

    @classmethod
    def _raw(cls, g: int, terms: dict[Word, complex]) -> "NCPolynomial":
        # Internal fast path: terms already validated and zero-pruned.
        self = object.__new__(cls)
        self._g = g
        self._terms = terms
        return self

    @classmethod
    def zero(cls, g: int) -> "NCPolynomial":
        return cls(g)

    @classmethod
    def one(cls, g: int) -> "NCPolynomial":
        """The empty-word constant 1 (degree 0)."""
        return cls(g, {(): 1.0})

    @classmethod
    def monomial(cls, g: int, word: Iterable[int], coeff: complex = 1.0) -> "NCPolynomial":
        return cls(g, {tuple(word): coeff})

    @classmethod
    def variable(cls, g: int, index: int) -> "NCPolynomial":
        return cls(g, {(index,): 1.0})

    @property
    def g(self) -> int:
        return self._g

    @property
    def terms(self) -> Mapping[Word, complex]:
        return MappingProxyType(self._terms)

    def coeff(self, word: Iterable[int]) -> complex:
        return self._terms.get(tuple(word), _ZERO)

    def sorted_terms(self) -> list[tuple[Word, complex]]:
        """Terms in canonical order: by degree, then lexicographically by word."""
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | None:
        """Maximal word length, or None for the zero polynomial."""
        return max(map(len, self._terms)) if self._terms else None

    def is_homogeneous(self, d: int | None = None) -> bool:
        lengths = {len(w) for w in self._terms}
        if not lengths:
            return True
        if len(lengths) > 1:
            return False
        return d is None or lengths == {d}

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms; None for zero, ValueError if mixed."""
        lengths = {len(w) for w in self._terms}
        if not lengths:
            return None
        if len(lengths) > 1:
            raise ValueError(f"polynomial is not homogeneous (degrees {sorted(lengths)})")
        return lengths.pop()

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(c.imag) <= tol for c in self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self._g == other._g and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial._raw(self._g, {w: -c for w, c in self._terms.items()})

    def _require_same_arity(self, other: "NCPolynomial") -> None:
        if self._g != other._g:
            raise ValueError(f"arity mismatch: {self._g} vs {other._g}")

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        self._require_same_arity(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            s = acc.get(w, _ZERO) + c
            if s == 0:
                acc.pop(w, None)
            else:
                acc[w] = s
        return NCPolynomial._raw(self._g, acc)

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            self._require_same_arity(other)
            acc: dict[Word, complex] = {}
            for u, a in self._terms.items():
                for v, b in other._terms.items():
                    w = u + v
                    s = acc.get(w, _ZERO) + a * b
                    if s == 0:
                        acc.pop(w, None)
                    else:
                        acc[w] = s
            return NCPolynomial._raw(self._g, acc)
        if isinstance(other, (int, float, complex)):
            c = complex(other)
            if c == 0:
                return NCPolynomial._raw(self._g, {})
            return NCPolynomial._raw(self._g, {w: a * c for w, a in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self * other
        return NotImplemented

    def __pow__(self, d: int) -> "NCPolynomial":
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"exponent must be a positive integer, got {d!r}")
        out = self
        for _ in range(d - 1):
            out = out * self
        return out

    def scale(self, c: complex) -> "NCPolynomial":
        return self * c

    def to_text(self) -> str:
        """Canonical text form; parseable back to an equal polynomial.

        Terms are ordered by (degree, word); runs of a repeated variable
        print as powers, e.g. ``x1^3``.
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for word, c in self.sorted_terms():
            mono = _format_word(word)
            if c.imag == 0.0:
                re = c.real
                sign = "-" if re < 0 else "+"
                mag = abs(re)
                if mag == 1.0 and mono:
                    body = mono
                else:
                    body = _format_real(mag) + (f"*{mono}" if mono else "")
            else:
                sign = "+"
                im_sign = "+" if c.imag >= 0 else "-"
                body = f"({_format_real(c.real)}{im_sign}{_format_real(abs(c.imag))}i)"
                if mono:
                    body += f"*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_text

    def __repr__(self) -> str:
        return f"NCPolynomial(g={self._g}, terms={len(self._terms)})"

    def to_json_dict(self) -> dict:
        return {
            "g": self._g,
            "terms": [
                {"word": list(w), "re": c.real, "im": c.imag}
                for w, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "NCPolynomial":
        terms = {
            tuple(entry["word"]): complex(entry["re"], entry.get("im", 0.0))
            for entry in data["terms"]
        }
        return cls(int(data["g"]), terms)


def _format_real(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _format_word(word: Word) -> str:
    if not word:
        return ""
    runs: list[tuple[int, int]] = []
    for idx in word:
        if runs and runs[-1][0] == idx:
            runs[-1] = (idx, runs[-1][1] + 1)
        else:
            runs.append((idx, 1))
    return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in runs)


def nc_mul(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    """Free-algebra product of two polynomials over the same variables."""
    return p * q


def nc_pow(p: NCPolynomial, d: int) -> NCPolynomial:
    """d-th free-algebra power, d >= 1."""
    return p**d


class CPolynomial:
    """A complex polynomial in g commuting variables, keyed by exponent vectors."""

    __slots__ = ("_g", "_terms")

    def __init__(self, g: int, terms: Mapping[Exponents, complex] | None = None):
        if not isinstance(g, int) or g < 1:
            raise ValueError(f"arity must be a positive integer, got {g!r}")
        clean: dict[Exponents, complex] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != g or any(e < 0 or not isinstance(e, int) for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for arity {g}")
                c = complex(coeff)
                if c != 0:
                    clean[exps] = c
        self._g = g
        self._terms = clean

    @classmethod
    def _raw(cls, g: int, terms: dict[Exponents, complex]) -> "CPolynomial":
        self = object.__new__(cls)
        self._g = g
        self._terms = terms
        return self

    @classmethod
    def zero(cls, g: int) -> "CPolynomial":
        return cls(g)

    @property
    def g(self) -> int:
        return self._g

    @property
    def terms(self) -> Mapping[Exponents, complex]:
        return MappingProxyType(self._terms)

    def coeff(self, exps: Iterable[int]) -> complex:
        return self._terms.get(tuple(exps), _ZERO)

    def sorted_terms(self) -> list[tuple[Exponents, complex]]:
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | None:
        return max(sum(e) for e in self._terms) if self._terms else None

    def is_homogeneous(self, d: int | None = None) -> bool:
        totals = {sum(e) for e in self._terms}
        if not totals:
            return True
        if len(totals) > 1:
            return False
        return d is None or totals == {d}

    def homogeneous_degree(self) -> int | None:
        totals = {sum(e) for e in self._terms}
        if not totals:
            return None
        if len(totals) > 1:
            raise ValueError(f"polynomial is not homogeneous (degrees {sorted(totals)})")
        return totals.pop()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Exponents]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CPolynomial):
            return NotImplemented
        return self._g == other._g and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "CPolynomial":
        return CPolynomial._raw(self._g, {e: -c for e, c in self._terms.items()})

    def __add__(self, other: "CPolynomial") -> "CPolynomial":
        if not isinstance(other, CPolynomial):
            return NotImplemented
        if self._g != other._g:
            raise ValueError(f"arity mismatch: {self._g} vs {other._g}")
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, _ZERO) + c
            if s == 0:
                acc.pop(e, None)
            else:
                acc[e] = s
        return CPolynomial._raw(self._g, acc)

    def __sub__(self, other: "CPolynomial") -> "CPolynomial":
        if not isinstance(other, CPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CPolynomial):
            if self._g != other._g:
                raise ValueError(f"arity mismatch: {self._g} vs {other._g}")
            acc: dict[Exponents, complex] = {}
            for e1, a in self._terms.items():
                for e2, b in other._terms.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    s = acc.get(e, _ZERO) + a * b
                    if s == 0:
                        acc.pop(e, None)
                    else:
                        acc[e] = s
            return CPolynomial._raw(self._g, acc)
        if isinstance(other, (int, float, complex)):
            c = complex(other)
            if c == 0:
                return CPolynomial._raw(self._g, {})
            return CPolynomial._raw(self._g, {e: a * c for e, a in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self * other
        return NotImplemented

    def __pow__(self, d: int) -> "CPolynomial":
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"exponent must be a positive integer, got {d!r}")
        out = self
        for _ in range(d - 1):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"CPolynomial(g={self._g}, terms={len(self._terms)})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"X{j+1}" if e == 1 else f"X{j+1}^{e}" for j, e in enumerate(exps) if e
            )
            chunks.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(chunks)

    def to_json_dict(self) -> dict:
        return {
            "g": self._g,
            "terms": [
                {"exponents": list(e), "re": c.real, "im": c.imag}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "CPolynomial":
        terms = {
            tuple(entry["exponents"]): complex(entry["re"], entry.get("im", 0.0))
            for entry in data["terms"]
        }
        return cls(int(data["g"]), terms)
