"""Sparse multivariate polynomials with integer coefficients.

Variables are ``q``, ``t``, ``x1, x2, ...`` and ``z1, z2, ...``.  A monomial is
a tuple of ``(Var, exponent)`` pairs sorted in the global variable order
``q < t < x1 < x2 < ... < z1 < z2 < ...``; a polynomial is an immutable map
from monomials to nonzero Python ints.
"""

from __future__ import annotations

import re
from itertools import permutations
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence


class Var(NamedTuple):
    """A variable; ``kind`` is one of ``q``, ``t``, ``x``, ``z``.

    The kinds happen to sort alphabetically in the required order, so plain
    tuple comparison gives the global variable order.
    """

    kind: str
    index: int = 0

    def __str__(self) -> str:
        if self.kind in ("q", "t"):
            return self.kind
        return f"{self.kind}{self.index}"


Q = Var("q")
T = Var("t")


def X(i: int) -> Var:
    return _indexed("x", i)


def Z(j: int) -> Var:
    return _indexed("z", j)


def _indexed(kind: str, i: int) -> Var:
    if i < 1:
        raise ValueError(f"{kind}-variable index must be >= 1, got {i}")
    return Var(kind, i)


Monomial = tuple  # tuple[tuple[Var, int], ...]

ONE_MONO: Monomial = ()


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        v1, e1 = m1[i]
        v2, e2 = m2[j]
        if v1 == v2:
            out.append((v1, e1 + e2))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_exponent(m: Monomial, v: Var) -> int:
    for w, e in m:
        if w == v:
            return e
    return 0


class MissingVariableError(KeyError):
    """Raised by :meth:`MPoly.substitute` when a variable has no image."""


class MPoly:
    """Immutable sparse polynomial over the integers.

    Instances are canonical: no zero coefficients are stored, so two
    polynomials are equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        if terms:
            self._terms = {m: c for m, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MPoly":
        # terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- construction -----------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls._raw({ONE_MONO: int(c)} if c else {})

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "MPoly":
        if exp < 0:
            raise ValueError("negative exponents are not supported")
        return cls._raw({((v, exp),) if exp else ONE_MONO: 1})

    @classmethod
    def monomial(cls, exps: Mapping[Var, int], coef: int = 1) -> "MPoly":
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        if any(e < 0 for _, e in mono):
            raise ValueError("negative exponents are not supported")
        return cls._raw({mono: int(coef)} if coef else {})

    @classmethod
    def from_qt(cls, counts: Mapping[tuple[int, int], int]) -> "MPoly":
        """Build ``sum c * q^i * t^j`` from a ``{(i, j): c}`` table."""
        terms = {}
        for (i, j), c in counts.items():
            if not c:
                continue
            mono = []
            if i:
                mono.append((Q, i))
            if j:
                mono.append((T, j))
            terms[tuple(mono)] = c
        return cls._raw(terms)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> list[Var]:
        return sorted({v for m in self._terms for v, _ in m})

    def coefficient(self, exps: Mapping[Var, int]) -> int:
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        return self._terms.get(mono, 0)

    def degree(self, v: Var | None = None) -> int:
        """Total degree, or the degree in ``v``; ``-1`` for the zero polynomial."""
        if not self._terms:
            return -1
        if v is None:
            return max(mono_degree(m) for m in self._terms)
        return max(mono_exponent(m, v) for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "MPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "MPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- transformations --------------------------------------------------

    def substitute(self, mapping: Mapping[Var, "MPoly"] | Callable[[Var], "MPoly"]) -> "MPoly":
        """Simultaneously replace every variable by a polynomial.

        ``mapping`` is either a dict or a callable; a callable may raise
        ``KeyError`` for unmapped variables.
        """
        lookup = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
        powers: dict = {}

        def image(v: Var, e: int) -> MPoly:
            key = (v, e)
            if key not in powers:
                try:
                    base = lookup(v)
                except KeyError:
                    raise MissingVariableError(f"no substitution given for {v}") from None
                powers[key] = _coerce(base) ** e
            return powers[key]

        total = ZERO
        for m, c in self._terms.items():
            term = MPoly.const(c)
            for v, e in m:
                term = term * image(v, e)
            total = total + term
        return total

    def truncate(self, v: Var, n: int | None) -> "MPoly":
        """Drop every term whose exponent of ``v`` exceeds ``n`` (``None`` keeps all)."""
        if n is None:
            return self
        return MPoly._raw({m: c for m, c in self._terms.items() if mono_exponent(m, v) <= n})

    def truncate_degree(self, n: int | None) -> "MPoly":
        if n is None:
            return self
        return MPoly._raw({m: c for m, c in self._terms.items() if mono_degree(m) <= n})

    def swap(self, v: Var, w: Var) -> "MPoly":
        """Exchange two variables."""
        def image(u: Var) -> MPoly:
            return MPoly.var(w if u == v else v if u == w else u)
        return self.substitute(image)

    def evaluate(self, values: Mapping[Var, int]) -> int:
        total = 0
        for m, c in self._terms.items():
            for v, e in m:
                c *= values[v] ** e
            total += c
        return total

    def qt_table(self) -> dict[tuple[int, int], int]:
        """Inverse of :meth:`from_qt`; raises if other variables occur."""
        out = {}
        for m, c in self._terms.items():
            if any(v not in (Q, T) for v, _ in m):
                raise ValueError("polynomial involves variables other than q, t")
            out[(mono_exponent(m, Q), mono_exponent(m, T))] = c
        return out

    # -- rendering --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms by ascending total degree, then descending exponent vector.

        The exponent vector is read in the global variable order, so among
        terms of equal degree ``q`` precedes ``t`` and ``x1`` precedes ``x2``.
        """
        order = self.variables()

        def key(item):
            m = item[0]
            exps = dict(m)
            return (mono_degree(m), tuple(-exps.get(v, 0) for v in order))

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            factors = [str(v) if e == 1 else f"{v}^{e}" for v, e in m]
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if k == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r})"

    def to_json(self) -> list:
        return [
            {"coef": c, "exps": {str(v): e for v, e in m}}
            for m, c in self.sorted_terms()
        ]


ZERO = MPoly()
ONE = MPoly.const(1)
q = MPoly.var(Q)
t = MPoly.var(T)


def x(i: int) -> MPoly:
    return MPoly.var(X(i))


def z(j: int) -> MPoly:
    return MPoly.var(Z(j))


def _coerce(value) -> MPoly:
    if isinstance(value, MPoly):
        return value
    if isinstance(value, int):
        return MPoly.const(value)
    return NotImplemented


def add(p: MPoly, r: MPoly) -> MPoly:
    return p + r


def mul(p: MPoly, r: MPoly) -> MPoly:
    return p * r


def substitute(p: MPoly, mapping) -> MPoly:
    return p.substitute(mapping)


def truncate_q(p: MPoly, n: int | None) -> MPoly:
    return p.truncate(Q, n)


def poly_sum(polys: Iterable[MPoly]) -> MPoly:
    total: dict = {}
    for p in polys:
        for m, c in p.items():
            total[m] = total.get(m, 0) + c
    return MPoly({m: c for m, c in total.items() if c})


def poly_prod(polys: Iterable[MPoly]) -> MPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out


_TERM_RE = re.compile(r"([qt])|([xz])(\d+)")


def parse_var(token: str) -> Var:
    m = _TERM_RE.fullmatch(token)
    if not m:
        raise ValueError(f"unknown variable {token!r}")
    if m.group(1):
        return Var(m.group(1))
    return _indexed(m.group(2), int(m.group(3)))


def parse(text: str) -> MPoly:
    """Parse the text format produced by ``str(MPoly)``."""
    text = text.strip()
    if text == "0":
        return ZERO
    # split into signed terms
    tokens = re.split(r"\s*([+-])\s*", text)
    if tokens[0] == "":
        tokens = tokens[1:]
    else:
        tokens = ["+"] + tokens
    total = ZERO
    for sign, body in zip(tokens[::2], tokens[1::2]):
        coef = 1
        exps: dict[Var, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coef *= int(factor)
                continue
            name, _, power = factor.partition("^")
            v = parse_var(name)
            exps[v] = exps.get(v, 0) + (int(power) if power else 1)
        total = total + MPoly.monomial(exps, -coef if sign == "-" else coef)
    return total


# -- matrices and determinants ----------------------------------------------

PolyMatrix = Sequence[Sequence[MPoly]]


def _check_square(m: PolyMatrix) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    return n


def det(m: PolyMatrix) -> MPoly:
    """Exact determinant by Laplace expansion memoized over column subsets.

    ``dp[S]`` is the minor on the first ``|S|`` rows and the columns in the
    bitmask ``S``; expanding along the last of those rows costs
    ``O(2^n * n)`` polynomial products and needs no division.
    """
    n = _check_square(m)
    rows = [[_coerce(e) for e in row] for row in m]
    dp: dict[int, MPoly] = {0: ONE}
    for k in range(1, n + 1):
        row = rows[k - 1]
        nxt: dict[int, MPoly] = {}
        for mask, minor in dp.items():
            if minor.is_zero():
                continue
            for j in range(n):
                bit = 1 << j
                if mask & bit or row[j].is_zero():
                    continue
                # sign of j's position in mask | bit, counted from the right end
                above = bin(mask >> (j + 1)).count("1")
                term = row[j] * minor
                if above & 1:
                    term = -term
                new = mask | bit
                nxt[new] = nxt[new] + term if new in nxt else term
        dp = nxt
    return dp.get((1 << n) - 1, ZERO)


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_permutation(m: PolyMatrix) -> MPoly:
    """Leibniz-formula determinant; reference for small matrices."""
    n = _check_square(m)
    total = ZERO
    for perm in permutations(range(n)):
        term = MPoly.const(perm_sign(perm))
        for i, j in enumerate(perm):
            term = term * _coerce(m[i][j])
        total = total + term
    return total


