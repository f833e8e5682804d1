"""Prime fields F_p, polynomials over them, and extensions F_{p^d} = F_p[x]/(m).

Scalar arithmetic lives in :class:`Poly` and :class:`ExtElem`.  The ``batch_*``
functions at the bottom do the same arithmetic on numpy arrays, one field element
per row, and are what the point-counting and classification code uses at scale.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import EvenCharacteristic


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    label: str = ""

    def __post_init__(self):
        if self.p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _strip(coeffs: Iterable[int], p: int) -> tuple[int, ...]:
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Polynomial over F_p, coefficients low degree first.  The zero polynomial has
    no coefficients and degree -1."""

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs, self.p))

    @classmethod
    def x(cls, p: int) -> Poly:
        return cls(p, (0, 1))

    @classmethod
    def const(cls, p: int, c: int) -> Poly:
        return cls(p, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def sort_key(self) -> tuple:
        # canonical order: by degree, then lexicographic on coefficients (low first)
        return (len(self.coeffs), self.coeffs)

    def __lt__(self, other: Poly) -> bool:
        return self.sort_key() < other.sort_key()

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, int):
            return Poly(self.p, (other,))
        return NotImplemented

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly(self.p, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv = pow(other.lead, -1, p)
        rem = list(self.coeffs)
        db = other.degree
        quo = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * inv % p
            if c:
                quo[k - db] = c
                for j, bj in enumerate(other.coeffs):
                    rem[k - db + j] -= c * bj
            rem[k] = 0
        return Poly(p, quo), Poly(p, rem)

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __pow__(self, e: int) -> Poly:
        result, base = Poly(self.p, (1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = pow(self.lead, -1, self.p)
        return Poly(self.p, [c * inv for c in self.coeffs])

    def derivative(self) -> Poly:
        return Poly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.p}, '{format_poly(self)}')"

    @classmethod
    def parse(cls, text: str, p: int) -> Poly:
        return parse_poly(text, p)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if a.p != b.p:
        raise ValueError("polynomials over different fields")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "mod":
        return a % b
    if op == "gcd":
        return poly_gcd(a, b)
    raise ValueError(f"unknown op {op!r}")


def format_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = "x" if k == 1 else f"x^{k}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


_TERM = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int) -> Poly:
    """Parse ``"x^3+2x+1"``-style input.  Also accepts ``-``, ``*`` and spaces."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    if s[0] not in "+-":
        s = "+" + s
    tokens = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in tokens) != s:
        raise ValueError(f"cannot parse {text!r}")
    coeffs: dict[int, int] = {}
    for sign, body in tokens:
        m = _TERM.match(body)
        if m is None or (not m.group(1) and not m.group(2)):
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        k = 0 if not m.group(2) else (int(m.group(3)) if m.group(3) else 1)
        coeffs[k] = coeffs.get(k, 0) + (c if sign == "+" else -c)
    top = max(coeffs)
    return Poly(p, [coeffs.get(k, 0) for k in range(top + 1)])


# ---------------------------------------------------------------------------
# extension fields
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtElem:
    """Element of F_p[x]/(modulus); always carries exactly ``deg(modulus)`` residues."""

    modulus: Poly
    coeffs: tuple[int, ...]

    @classmethod
    def from_poly(cls, modulus: Poly, f: Poly) -> ExtElem:
        r = f % modulus
        d = modulus.degree
        return cls(modulus, r.coeffs + (0,) * (d - len(r.coeffs)))

    @classmethod
    def from_int(cls, modulus: Poly, c: int) -> ExtElem:
        return cls.from_poly(modulus, Poly(modulus.p, (c,)))

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def order(self) -> int:
        """Size of the field this element lives in."""
        return self.p ** self.modulus.degree

    def as_poly(self) -> Poly:
        return Poly(self.p, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _wrap(self, f: Poly) -> ExtElem:
        return ExtElem.from_poly(self.modulus, f)

    def _other(self, other) -> Poly:
        if isinstance(other, ExtElem):
            if other.modulus != self.modulus:
                raise ValueError("elements of different quotient rings")
            return other.as_poly()
        return Poly(self.p, (other,))

    def __add__(self, other) -> ExtElem:
        return self._wrap(self.as_poly() + self._other(other))

    __radd__ = __add__

    def __sub__(self, other) -> ExtElem:
        return self._wrap(self.as_poly() - self._other(other))

    def __neg__(self) -> ExtElem:
        return self._wrap(-self.as_poly())

    def __mul__(self, other) -> ExtElem:
        return self._wrap(self.as_poly() * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ExtElem:
        if e < 0:
            return self.inverse() ** (-e)
        result = ExtElem.from_int(self.modulus, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> ExtElem:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.order - 2)


def ext_eval(m: Poly, f: Poly) -> ExtElem:
    """f(alpha) for alpha a root of the irreducible m, i.e. f mod m."""
    return ExtElem.from_poly(m, f)


class SquareClass(str, Enum):
    ZERO = "zero"
    YES = "yes"
    NO = "no"


def is_square(e: ExtElem) -> SquareClass:
    if e.is_zero():
        return SquareClass.ZERO
    r = e ** ((e.order - 1) // 2)
    return SquareClass.YES if r.coeffs == (1,) + (0,) * (len(r.coeffs) - 1) else SquareClass.NO


def _field_elements(modulus: Poly):
    d, p = modulus.degree, modulus.p
    for digits in itertools.product(range(p), repeat=d):
        yield ExtElem(modulus, digits[::-1])


def ext_sqrt(e: ExtElem) -> ExtElem:
    """A square root of e by Tonelli-Shanks in F_{p^d}."""
    cls = is_square(e)
    if cls is SquareClass.ZERO:
        return e
    if cls is SquareClass.NO:
        raise ValueError("not a square")
    q = e.order
    s, t = 0, q - 1
    while t % 2 == 0:
        s, t = s + 1, t // 2
    z = next(c for c in _field_elements(e.modulus) if is_square(c) is SquareClass.NO)
    one = ExtElem.from_int(e.modulus, 1)
    m, c, u, r = s, z ** t, e ** t, e ** ((t + 1) // 2)
    while u != one:
        i, u2 = 0, u
        while u2 != one:
            u2 = u2 * u2
            i += 1
        b = c ** (2 ** (m - i - 1))
        m, c = i, b * b
        u, r = u * c, r * b
    return r


# ---------------------------------------------------------------------------
# irreducible polynomials
# ---------------------------------------------------------------------------


def _monic_tails(p: int, d: int) -> np.ndarray:
    """All monic degree-d polynomials as their d low coefficients, in canonical order."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((p,) * d).reshape(d, -1).T
    # canonical order compares c_0 first, so c_0 is the slowest-varying digit
    return np.ascontiguousarray(grid.astype(np.int64))


def _tail_codes(tails: np.ndarray, p: int) -> np.ndarray:
    d = tails.shape[1]
    weights = p ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return tails @ weights


@functools.lru_cache(maxsize=None)
def _irreducible_tails(p: int, d: int) -> np.ndarray:
    if d < 1:
        raise ValueError("degree must be positive")
    candidates = _monic_tails(p, d)
    if d == 1:
        return candidates
    composite = np.zeros(p**d, dtype=bool)
    for e in range(1, d // 2 + 1):
        others = _monic_tails(p, d - e)
        others_full = np.hstack([others, np.ones((len(others), 1), dtype=np.int64)])
        for a in _irreducible_tails(p, e):
            a_full = list(a) + [1]
            prod = np.zeros((len(others), d + 1), dtype=np.int64)
            for i, ai in enumerate(a_full):
                if ai:
                    prod[:, i : i + d - e + 1] += ai * others_full
            composite[_tail_codes(prod[:, :d] % p, p)] = True
    out = candidates[~composite]
    out.setflags(write=False)
    return out


def irreducible_tails(p: int, d: int) -> np.ndarray:
    """Monic irreducibles of degree d as an (n, d) array of low coefficients."""
    return _irreducible_tails(p, d)


def count_irreducibles(p: int, d: int) -> int:
    return len(_irreducible_tails(p, d))


def tail_to_poly(tail: Sequence[int], p: int) -> Poly:
    return Poly(p, [int(c) for c in tail] + [1])


def irreducibles(spec: FieldSpec, d: int) -> list[Poly]:
    """Monic irreducible polynomials of degree d over F_p in canonical order."""
    return [tail_to_poly(t, spec.p) for t in _irreducible_tails(spec.p, d)]


def is_irreducible(f: Poly) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    if f.degree < 1:
        return False
    for e in range(1, f.degree // 2 + 1):
        for tail in itertools.product(range(f.p), repeat=e):
            if (f % Poly(f.p, tail + (1,))).is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# batch arithmetic.  Arrays are coefficient-major: shape (d, n) holds n elements
# of F_p[x]/(m), row k being the x^k coefficients.  `tail` holds the d low
# coefficients of the monic modulus, shape (d, n) for per-element moduli or
# (d, 1) for a shared one.
# ---------------------------------------------------------------------------


def batch_mulmod(a: np.ndarray, b: np.ndarray, tail: np.ndarray, p: int) -> np.ndarray:
    d = a.shape[0]
    prod = [None] * (2 * d - 1)
    for i in range(d):
        for j in range(d):
            term = a[i] * b[j]
            prod[i + j] = term if prod[i + j] is None else prod[i + j] + term
    for k in range(2 * d - 2, d - 1, -1):
        c = prod[k] % p
        for i in range(d):
            prod[k - d + i] = prod[k - d + i] - c * tail[i]
    return np.stack([x % p for x in prod[:d]])


def batch_mulx(a: np.ndarray, tail: np.ndarray, p: int) -> np.ndarray:
    top = a[-1]
    shifted = np.empty_like(a)
    shifted[0] = 0
    shifted[1:] = a[:-1]
    return (shifted - top * tail) % p


def batch_ones(d: int, n: int) -> np.ndarray:
    out = np.zeros((d, n), dtype=np.int64)
    out[0] = 1
    return out


def batch_powmod(a: np.ndarray, e: int, tail: np.ndarray, p: int) -> np.ndarray:
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else batch_mulmod(result, base, tail, p)
        e >>= 1
        if e:
            base = batch_mulmod(base, base, tail, p)
    return batch_ones(*a.shape) if result is None else result


def batch_reduce(f: Poly, tail: np.ndarray, n: int) -> np.ndarray:
    """f mod m for each element's modulus m (Horner in the quotient ring)."""
    d = tail.shape[0]
    acc = np.zeros((d, n), dtype=np.int64)
    for c in reversed(f.coeffs):
        acc = batch_mulx(acc, tail, f.p)
        acc[0] = (acc[0] + c) % f.p
    return acc


def batch_eval(f: Poly, xs: np.ndarray, tail: np.ndarray) -> np.ndarray:
    """f(x) for every column x of `xs`, all in one quotient ring."""
    acc = np.zeros_like(xs)
    for c in reversed(f.coeffs):
        acc = batch_mulmod(acc, xs, tail, f.p)
        acc[0] = (acc[0] + c) % f.p
    return acc


def batch_quadratic_character(a: np.ndarray, tail: np.ndarray, p: int) -> np.ndarray:
    """Euler criterion per element: 0 for zero, +1 for nonzero squares, -1 otherwise."""
    d = a.shape[0]
    if p >= 1 << 20:
        raise ValueError("batch arithmetic needs p < 2**20")
    r = batch_powmod(a, (p**d - 1) // 2, tail, p)
    is_one = (r[0] == 1) & ~r[1:].any(axis=0)
    chi = np.where(is_one, 1, -1).astype(np.int8)
    chi[~a.any(axis=0)] = 0
    return chi


def all_field_elements(p: int, d: int) -> np.ndarray:
    return np.ascontiguousarray(_monic_tails(p, d).T)
