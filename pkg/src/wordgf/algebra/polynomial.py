"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a :class:`Ring`, an ordered tuple of variables.
Monomials are packed into a single Python int: the total degree sits in the
most significant field, followed by one 16-bit field per variable with the
smallest variable (``t``) most significant.  With that layout, monomial
multiplication is integer addition and integer comparison is exactly the
graded-lexicographic order, so the leading term is ``max(terms)``.

Coefficients are stored as ``int`` whenever they are integral and as
``gmpy2.mpq`` otherwise; both compare and hash like :class:`fractions.Fraction`,
which is what every public accessor returns.
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heapify, heappop, heappush
from numbers import Rational as _RationalABC
from typing import Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

from ..errors import DivisionByZero
from .variables import VariableName

Rational = Fraction

_WIDTH = 16
_FIELD = (1 << _WIDTH) - 1
_MAX_EXP = (1 << (_WIDTH - 1)) - 1


_MPQ = type(mpq(1, 2))


def _norm(c):
    """Internal coefficient form: int when integral, mpq otherwise."""
    t = type(c)
    if t is int:
        return c
    if t is _MPQ:
        return int(c.numerator) if c.denominator == 1 else c
    if t is Fraction:
        return c.numerator if c.denominator == 1 else mpq(c.numerator, c.denominator)
    return _norm(as_rational(c))


def _div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if not r else mpq(a, b)
    return _norm(mpq(a) / b)


def as_rational(value) -> Fraction:
    """Exact conversion of int, Fraction or a decimal/``p/q`` string."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if type(value) is _MPQ:
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational string")
        # Fraction parses both "p/q" and terminating decimals exactly.
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class Ring:
    """An ordered set of variables together with the monomial packing."""

    _cache: dict = {}

    def __new__(cls, gens: Iterable[VariableName] = ()):
        key = tuple(sorted(set(gens)))
        ring = cls._cache.get(key)
        if ring is None:
            ring = super().__new__(cls)
            ring._setup(key)
            cls._cache[key] = ring
        return ring

    def _setup(self, gens):
        self.gens = gens
        self.n = n = len(gens)
        self.index = {v: i for i, v in enumerate(gens)}
        self.shifts = tuple((n - 1 - i) * _WIDTH for i in range(n))
        self.deg_shift = n * _WIDTH
        self.deg_unit = 1 << self.deg_shift
        guard = 0
        for k in range(n + 1):
            guard |= 1 << (k * _WIDTH + _WIDTH - 1)
        self.guard = guard
        self._lifts = {}

    def __repr__(self):
        return f"Ring({', '.join(v.render() for v in self.gens)})"

    def __reduce__(self):
        return (Ring, (self.gens,))

    @staticmethod
    def union(*rings: "Ring") -> "Ring":
        first = rings[0]
        if all(r is first for r in rings):
            return first
        gens = set()
        for r in rings:
            gens.update(r.gens)
        return Ring(gens)

    def encode(self, exps: Mapping[int, int]) -> int:
        deg = 0
        m = 0
        for i, e in exps.items():
            if e:
                if e < 0 or e > _MAX_EXP:
                    raise OverflowError(f"exponent {e} out of range")
                deg += e
                m |= e << self.shifts[i]
        if deg > _MAX_EXP:
            raise OverflowError(f"total degree {deg} out of range")
        return m | (deg << self.deg_shift)

    def decode(self, m: int) -> dict[int, int]:
        out = {}
        for i, sh in enumerate(self.shifts):
            e = (m >> sh) & _FIELD
            if e:
                out[i] = e
        return out

    def degree(self, m: int) -> int:
        return m >> self.deg_shift

    def divides(self, small: int, big: int) -> int | None:
        """Return ``big / small`` as a monomial, or None if not divisible."""
        d = (big | self.guard) - small
        if d & self.guard != self.guard:
            return None
        return d ^ self.guard

    def lift_map(self, target: "Ring"):
        """Function re-encoding monomials of this ring into ``target``."""
        if target is self:
            return None
        fn = self._lifts.get(target)
        if fn is None:
            pairs = [(sh, target.shifts[target.index[v]] if v in target.index else None)
                     for v, sh in zip(self.gens, self.shifts)]
            src_deg, dst_deg = self.deg_shift, target.deg_shift

            def fn(m, pairs=pairs):
                out = (m >> src_deg) << dst_deg
                for sh, tsh in pairs:
                    e = (m >> sh) & _FIELD
                    if e:
                        if tsh is None:
                            raise ValueError("monomial uses a variable missing from the target ring")
                        out |= e << tsh
                return out

            self._lifts[target] = fn
        return fn


def _coerce(value) -> "Polynomial":
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction, _MPQ)) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return NotImplemented


class Polynomial:
    """Immutable sparse polynomial; see module docstring for the encoding."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring | None = None) -> "Polynomial":
        return cls(ring or Ring(), {})

    @classmethod
    def constant(cls, value, ring: Ring | None = None) -> "Polynomial":
        ring = ring or Ring()
        c = _norm(value)
        return cls(ring, {0: c} if c else {})

    @classmethod
    def variable(cls, var: VariableName, ring: Ring | None = None) -> "Polynomial":
        ring = ring or Ring((var,))
        i = ring.index[var]
        return cls(ring, {ring.deg_unit | (1 << ring.shifts[i]): 1})

    @classmethod
    def monomial(cls, exps: Mapping[VariableName, int], coeff=1, ring: Ring | None = None) -> "Polynomial":
        ring = ring or Ring(exps)
        c = _norm(as_rational(coeff))
        if not c:
            return cls(ring, {})
        m = ring.encode({ring.index[v]: e for v, e in exps.items()})
        return cls(ring, {m: c})

    @classmethod
    def from_terms(cls, items: Iterable[tuple[Mapping[VariableName, int], object]], ring: Ring | None = None) -> "Polynomial":
        items = list(items)
        if ring is None:
            gens = set()
            for exps, _ in items:
                gens.update(v for v, e in exps.items() if e)
            ring = Ring(gens)
        out: dict = {}
        for exps, coeff in items:
            m = ring.encode({ring.index[v]: e for v, e in exps.items()})
            out[m] = out.get(m, 0) + _norm(as_rational(coeff))
        return cls(ring, {m: c for m, c in out.items() if c})

    # -- ring handling ----------------------------------------------------

    def lift(self, ring: Ring) -> "Polynomial":
        fn = self.ring.lift_map(ring)
        if fn is None:
            return self
        return Polynomial(ring, {fn(m): c for m, c in self.terms.items()})

    def _pair(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return None, None
        if other.ring is self.ring:
            return self, other
        # the unit monomial encodes as 0 in every ring
        if other.is_constant():
            return self, Polynomial(self.ring, other.terms)
        if self.is_constant():
            return Polynomial(other.ring, self.terms), other
        ring = Ring.union(self.ring, other.ring)
        return self.lift(ring), other.lift(ring)

    def compact(self) -> "Polynomial":
        """Same polynomial in the smallest ring holding its variables."""
        used = self.variables()
        if len(used) == self.ring.n:
            return self
        return self.lift(Ring(used))

    # -- queries ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> Fraction:
        """Constant term of the polynomial."""
        return as_rational(self.terms.get(0, 0))

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.terms) >> self.ring.deg_shift

    def variables(self) -> set[VariableName]:
        mask = 0
        for m in self.terms:
            mask |= m
        return {v for v, sh in zip(self.ring.gens, self.ring.shifts) if (mask >> sh) & _FIELD}

    def degree_in(self, var: VariableName) -> int:
        i = self.ring.index.get(var)
        if not self.terms:
            return -1
        if i is None:
            return 0
        sh = self.ring.shifts[i]
        return max((m >> sh) & _FIELD for m in self.terms)

    def leading_term(self) -> tuple[dict[VariableName, int], Fraction]:
        """Leading monomial and coefficient under graded-lex order."""
        m = max(self.terms)
        return self._exps(m), as_rational(self.terms[m])

    def leading_coefficient(self) -> Fraction:
        return as_rational(self.terms[max(self.terms)])

    def _exps(self, m) -> dict[VariableName, int]:
        return {self.ring.gens[i]: e for i, e in self.ring.decode(m).items()}

    def items(self) -> Iterator[tuple[dict[VariableName, int], Fraction]]:
        """Terms in descending graded-lex order as ``(exponents, coeff)``."""
        for m in sorted(self.terms, reverse=True):
            yield self._exps(m), as_rational(self.terms[m])

    def coefficient(self, exps: Mapping[VariableName, int]) -> Fraction:
        try:
            m = self.ring.encode({self.ring.index[v]: e for v, e in exps.items()})
        except KeyError:
            return Fraction(0)
        return as_rational(self.terms.get(m, 0))

    def coeffs_in(self, var: VariableName) -> dict[int, "Polynomial"]:
        """Split into ``{k: coefficient of var**k}``; coefficients keep the ring."""
        i = self.ring.index.get(var)
        if i is None:
            return {0: self} if self.terms else {}
        sh, unit = self.ring.shifts[i], self.ring.deg_unit
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = (m >> sh) & _FIELD
            parts.setdefault(e, {})[m - (e << sh) - e * unit] = c
        return {e: Polynomial(self.ring, d) for e, d in parts.items()}

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if len(a.terms) < len(b.terms):
            a, b = b, a
        out = dict(a.terms)
        for m, c in b.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(a.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        c = _norm(c)
        if not c:
            return Polynomial(self.ring, {})
        if c == 1:
            return self
        return Polynomial(self.ring, {m: _norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, _MPQ)) and not isinstance(other, bool):
            return self.scale(other)
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        if not a.terms or not b.terms:
            return Polynomial(a.ring, {})
        if b.is_constant():
            return a.scale(b.terms[0])
        if a.is_constant():
            return b.scale(a.terms[0])
        if a.degree() + b.degree() > _MAX_EXP:
            raise OverflowError("product degree out of range")
        ta, tb = a.terms, b.terms
        if len(ta) < len(tb):
            ta, tb = tb, ta
        out: dict = {}
        get = out.get
        for mb, cb in tb.items():
            for ma, ca in ta.items():
                k = ma + mb
                out[k] = get(k, 0) + ca * cb
        return Polynomial(a.ring, {m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial.constant(1, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exquo(self, other) -> "Polynomial":
        """Exact quotient ``self / other``; raises ArithmeticError if not exact."""
        a, b = self._pair(other)
        if a is None:
            raise TypeError(f"cannot divide by {type(other).__name__}")
        if not b.terms:
            raise DivisionByZero("polynomial division by zero")
        if b.is_constant():
            lc = b.terms[0]
            return Polynomial(a.ring, {m: _div(c, lc) for m, c in a.terms.items()})
        ring = a.ring
        guard = ring.guard
        lm = max(b.terms)
        lc = b.terms[lm]
        rest = [(m, c) for m, c in b.terms.items() if m != lm]
        rem = dict(a.terms)
        # max-heap of remainder monomials; entries for removed keys are skipped
        heap = [-m for m in rem]
        heapify(heap)
        quo = {}
        while heap:
            m = -heappop(heap)
            c = rem.pop(m, None)
            if c is None:
                continue
            d = (m | guard) - lm
            if d & guard != guard:
                raise ArithmeticError("polynomial division is not exact")
            qm = d ^ guard
            qc = _div(c, lc)
            quo[qm] = qc
            for om, oc in rest:
                k = qm + om
                v = rem.get(k)
                if v is None:
                    rem[k] = -qc * oc
                    heappush(heap, -k)
                else:
                    v = v - qc * oc
                    if v:
                        rem[k] = v
                    else:
                        del rem[k]
        return Polynomial(ring, quo)

    # -- substitution -----------------------------------------------------

    def substitute(self, mapping: Mapping[VariableName, object]) -> "Polynomial":
        """Simultaneous substitution of polynomials or numbers for variables."""
        ring = self.ring
        subs = {}
        for v, value in mapping.items():
            if v in ring.index:
                p = _coerce(value)
                if p is NotImplemented:
                    raise TypeError(f"cannot substitute {type(value).__name__}")
                subs[ring.index[v]] = p
        if not subs or not self.terms:
            return self
        mask = 0
        for m in self.terms:
            mask |= m
        subs = {i: p for i, p in subs.items() if (mask >> ring.shifts[i]) & _FIELD}
        if not subs:
            return self
        keep = [v for i, v in enumerate(ring.gens) if i not in subs]
        target = Ring.union(Ring(keep), *(p.ring for p in subs.values()))
        kept_pairs = [(ring.shifts[i], target.shifts[target.index[v]]) for i, v in enumerate(ring.gens) if i not in subs]
        sub_items = sorted(subs.items())
        groups: dict[tuple, dict] = {}
        for m, c in self.terms.items():
            sig = tuple((m >> ring.shifts[i]) & _FIELD for i, _ in sub_items)
            km, deg = 0, 0
            for sh, tsh in kept_pairs:
                e = (m >> sh) & _FIELD
                if e:
                    km |= e << tsh
                    deg += e
            km |= deg << target.deg_shift
            bucket = groups.setdefault(sig, {})
            bucket[km] = bucket.get(km, 0) + c
        lifted = {i: p.lift(target) for i, p in sub_items}
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = lifted[i] ** e
            return powers[key]

        result = Polynomial(target, {})
        for sig, bucket in groups.items():
            term = Polynomial(target, {m: c for m, c in bucket.items() if c})
            for (i, _), e in zip(sub_items, sig):
                if e:
                    term = term * power(i, e)
                    if not term.terms:
                        break
            result = result + term
        return result

    # -- comparison and display -------------------------------------------

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(
                (tuple(sorted(self._exps(m).items())), c) for m, c in self.terms.items()
            ))
        return self._hash

    def render(self, symbols: Sequence[str] | None = None) -> str:
        """Canonical text form: terms by descending graded-lex order."""
        if not self.terms:
            return "0"
        pieces = []
        for i, m in enumerate(sorted(self.terms, reverse=True)):
            c = as_rational(self.terms[m])
            factors = []
            for j, e in sorted(self.ring.decode(m).items()):
                name = self.ring.gens[j].render(symbols)
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            text = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            body = "*".join([text] + factors)
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self.render()})"


def var(v: VariableName, ring: Ring | None = None) -> Polynomial:
    return Polynomial.variable(v, ring)


def const(c, ring: Ring | None = None) -> Polynomial:
    return Polynomial.constant(c, ring)
