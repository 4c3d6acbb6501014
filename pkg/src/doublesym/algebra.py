"""Exact sparse polynomials over the rationals.

Every polynomial in the package (in the parameters ``a_i``, in the variables
``x_i``, ``y_i``, ``z_i``, in a formal variable ``t``) is a :class:`Poly`.
A monomial is packed into a single Python integer: each variable owns a
16-bit exponent field, and six extra fields at the bottom hold the total
degree in each variable kind.  Multiplying monomials is then integer
addition, and the degree in a kind is a shift and a mask.

Coefficients are ``int`` or :class:`fractions.Fraction`; a fraction with
denominator one is always stored as an ``int``.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import MissingIndex, NotDivisible, NotLinear

KINDS = ("a", "x", "y", "z", "t", "b")
A, X, Y, Z, T, B = range(6)
_NK = len(KINDS)
_BITS = 16
_MASK = (1 << _BITS) - 1
MAX_INDEX = 2047


def _zig(i):
    return 2 * i if i >= 0 else -2 * i - 1


def _unzig(z):
    return z // 2 if z % 2 == 0 else -(z + 1) // 2


def _field(kind, i):
    return _NK + _NK * _zig(i) + kind


@lru_cache(maxsize=None)
def unit(kind, i=0):
    """Packed monomial of the single variable (kind, i)."""
    if abs(i) > MAX_INDEX:
        raise ValueError(f"variable index {i} out of range")
    return (1 << (_BITS * _field(kind, i))) + (1 << (_BITS * kind))


def _kind_mask(kind):
    m = _MASK << (_BITS * kind)
    for z in range(2 * MAX_INDEX + 2):
        m |= _MASK << (_BITS * (_NK + _NK * z + kind))
    return m


_KIND_MASKS = [_kind_mask(k) for k in range(_NK)]


def kind_degree(m, kind):
    return (m >> (_BITS * kind)) & _MASK


def total_degree(m):
    return sum((m >> (_BITS * k)) & _MASK for k in range(_NK))


def kind_part(m, kind):
    """The factor of monomial ``m`` made of variables of one kind."""
    return m & _KIND_MASKS[kind]


@lru_cache(maxsize=1 << 16)
def decode(m):
    """Monomial as a sorted tuple of (kind, index, exponent)."""
    out = []
    m >>= _BITS * _NK
    f = 0
    while m:
        e = m & _MASK
        if e:
            z, kind = divmod(f, _NK)
            out.append((kind, _unzig(z), e))
        m >>= _BITS
        f += 1
    out.sort()
    return tuple(out)


def encode(factors):
    """Inverse of :func:`decode`; accepts any iterable of (kind, index, exp)."""
    m = 0
    for kind, i, e in factors:
        if e < 0:
            raise ValueError("negative exponent")
        m += e * unit(kind, i)
    return m


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(p, c):
    if type(p) is int and type(c) is int and p % c == 0:
        return p // c
    return _norm(Fraction(p) / c)


def _coerce_scalar(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class Poly:
    """Sparse polynomial with exact rational coefficients.

    Values are treated as immutable.  ``terms`` maps packed monomials to
    nonzero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {} if terms is None else terms

    # -- construction ----------------------------------------------------
    @classmethod
    def const(cls, c):
        c = _coerce_scalar(c)
        return cls({0: c} if c else {})

    @classmethod
    def var(cls, kind, i=0):
        return cls({unit(kind, i): 1})

    @classmethod
    def from_factors(cls, items):
        """Build from pairs ``(coeff, [(kind, index, exp), ...])``."""
        out = {}
        for c, factors in items:
            c = _coerce_scalar(c)
            m = encode(factors)
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v)
            else:
                out.pop(m, None)
        return cls(out)

    # -- basic protocol --------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        try:
            return self.terms == Poly.const(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)

    def constant_term(self):
        return self.terms.get(0, 0)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    # -- arithmetic ------------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other):
        other = self._lift(other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v)
            else:
                del out[m]
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = _coerce_scalar(c)
        if not c:
            return Poly()
        return Poly({m: _norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((m2, c2),) = b.items()
            if m2 == 0:
                return self.scale(c2) if a is self.terms else other.scale(c2)
            return Poly({m1 + m2: _norm(c1 * c2) for m1, c1 in a.items()})
        out = {}
        get = out.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = m1 + m2
                v = get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        for m, v in out.items():
            if type(v) is Fraction and v.denominator == 1:
                out[m] = v.numerator
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_trunc(self, other, kind, bound):
        """Product keeping only terms of degree <= bound in ``kind``."""
        other = self._lift(other)
        sh = _BITS * kind
        buckets = {}
        for m, c in other.terms.items():
            buckets.setdefault((m >> sh) & _MASK, []).append((m, c))
        degs = sorted(buckets)
        out = {}
        get = out.get
        for m1, c1 in self.terms.items():
            room = bound - ((m1 >> sh) & _MASK)
            if room < 0:
                continue
            for d in degs:
                if d > room:
                    break
                for m2, c2 in buckets[d]:
                    m = m1 + m2
                    v = get(m, 0) + c1 * c2
                    if v:
                        out[m] = v
                    else:
                        del out[m]
        for m, v in out.items():
            if type(v) is Fraction and v.denominator == 1:
                out[m] = v.numerator
        return Poly(out)

    # -- structure -------------------------------------------------------
    def degree(self, kind=None):
        if not self.terms:
            return -1
        if kind is None:
            return max(total_degree(m) for m in self.terms)
        return max(kind_degree(m, kind) for m in self.terms)

    def truncate(self, kind, bound):
        sh = _BITS * kind
        return Poly({m: c for m, c in self.terms.items() if (m >> sh) & _MASK <= bound})

    def component(self, kind, d):
        """Homogeneous component of degree ``d`` in the variables of ``kind``."""
        sh = _BITS * kind
        return Poly({m: c for m, c in self.terms.items() if (m >> sh) & _MASK == d})

    def split(self, *kinds):
        """Map from monomials in the given kinds to their coefficient polynomials."""
        mask = 0
        for kind in kinds:
            mask |= _KIND_MASKS[kind]
        out = {}
        for m, c in self.terms.items():
            k = m & mask
            out.setdefault(k, {})[m - k] = c
        return {k: Poly(v) for k, v in out.items()}

    def variables(self):
        found = set()
        for m in self.terms:
            for kind, i, _ in decode(m):
                found.add((kind, i))
        return found

    def indices(self, kind=A):
        return sorted(i for k, i in self.variables() if k == kind)

    def coefficient(self, factors):
        return self.terms.get(encode(factors), 0)

    # -- substitutions ---------------------------------------------------
    def _remap(self, fn):
        """Apply a variable map ``fn(kind, i) -> (kind, i, sign)``."""
        out = {}
        for m, c in self.terms.items():
            new = 0
            sign = 1
            for kind, i, e in decode(m):
                k2, i2, s = fn(kind, i)
                new += e * unit(k2, i2)
                if s < 0 and e % 2:
                    sign = -sign
            v = out.get(new, 0) + sign * c
            if v:
                out[new] = v
            else:
                del out[new]
        return Poly(out)

    def shift(self, k):
        """Replace every ``a_i`` by ``a_{i+k}``."""
        if k == 0:
            return self
        return self._remap(lambda kind, i: (kind, i + k if kind == A else i, 1))

    def dualize(self):
        """Replace every ``a_i`` by ``-a_{1-i}``."""
        return self._remap(lambda kind, i: (kind, 1 - i, -1) if kind == A else (kind, i, 1))

    def substitute(self, mapping):
        """Substitute polynomials for variables.

        ``mapping`` sends ``(kind, index)`` to a :class:`Poly` (or scalar).
        Variables not in the mapping are kept.
        """
        mapping = {key: self._lift(v) for key, v in mapping.items()}
        powers = {}

        def power(key, e):
            got = powers.get((key, e))
            if got is None:
                got = mapping[key] if e == 1 else power(key, e - 1) * mapping[key]
                powers[(key, e)] = got
            return got

        out = Poly()
        acc = {}
        for m, c in self.terms.items():
            keep = 0
            subs = []
            for kind, i, e in decode(m):
                if (kind, i) in mapping:
                    subs.append(((kind, i), e))
                else:
                    keep += e * unit(kind, i)
            acc.setdefault(tuple(subs), {})
            v = acc[tuple(subs)].get(keep, 0) + c
            if v:
                acc[tuple(subs)][keep] = v
            else:
                del acc[tuple(subs)][keep]
        for subs, rest in acc.items():
            if not rest:
                continue
            piece = Poly({m: _norm(c) for m, c in rest.items()})
            for key, e in subs:
                piece = piece * power(key, e)
            out = out + piece
        return out

    def specialize(self, spec, kind=A):
        """Replace the variables of ``kind`` by the numbers given by ``spec``."""
        out = {}
        for m, c in self.terms.items():
            v = c
            keep = 0
            for k, i, e in decode(m):
                if k == kind:
                    v = v * spec.value(i) ** e
                else:
                    keep += e * unit(k, i)
            s = out.get(keep, 0) + v
            if s:
                out[keep] = s
            else:
                out.pop(keep, None)
        return Poly({m: _norm(c) for m, c in out.items()})

    def evaluate(self, spec):
        """Exact value of a polynomial in the ``a_i`` under a specialization."""
        p = self.specialize(spec)
        if not p.is_constant():
            raise ValueError("polynomial involves variables other than a_i")
        return _norm(Fraction(p.constant_term()))

    # -- serialization ---------------------------------------------------
    def sorted_terms(self):
        """Terms in canonical order: total degree, then factor list."""
        return sorted(self.terms.items(), key=lambda mc: (total_degree(mc[0]), decode(mc[0])))

    def to_json(self):
        terms = []
        for m, c in self.sorted_terms():
            item = {"coeff": format_rational(c), "vars": {}}
            for kind, i, e in decode(m):
                if kind == A:
                    item["vars"][str(i)] = e
                else:
                    item.setdefault("other", []).append([KINDS[kind], i, e])
            terms.append(item)
        return {"terms": terms}

    @classmethod
    def from_json(cls, data):
        items = []
        for t in data["terms"]:
            factors = [(A, int(i), e) for i, e in t["vars"].items()]
            factors += [(KINDS.index(k), i, e) for k, i, e in t.get("other", [])]
            items.append((parse_rational(t["coeff"]), factors))
        return cls.from_factors(items)


def const(c):
    return Poly.const(c)


def a(i):
    return Poly.var(A, i)


def x(i):
    return Poly.var(X, i)


def y(i):
    return Poly.var(Y, i)


def z(i):
    return Poly.var(Z, i)


def tvar():
    return Poly.var(T)


ZERO = Poly()
ONE = Poly.const(1)


def shift(p, k):
    return p.shift(k)


def dualize(p):
    return p.dualize()


def evaluate(p, spec):
    return p.evaluate(spec)


def poly_sum(items):
    acc = {}
    for p in items:
        for m, c in p.terms.items():
            v = acc.get(m, 0) + c
            if v:
                acc[m] = v
            else:
                del acc[m]
    return Poly({m: _norm(c) for m, c in acc.items()})


def poly_prod(items):
    out = ONE
    for p in items:
        out = out * p
        if not out:
            break
    return out


def exact_div_linear(p, lin):
    """Quotient of ``p`` by a linear form, which must divide it exactly.

    The division runs as univariate division in the largest variable of
    ``lin`` (largest index among the ``a_i``).  Raises :class:`NotLinear`
    if ``lin`` is not a nonzero linear form and :class:`NotDivisible` if a
    remainder is left.
    """
    if not lin.terms or any(total_degree(m) != 1 for m in lin.terms):
        raise NotLinear(f"not a linear form: {lin}")
    lead = max(lin.terms, key=lambda m: decode(m)[0][:2])
    kind, idx, _ = decode(lead)[0]
    c = lin.terms[lead]
    rest = Poly({m: v for m, v in lin.terms.items() if m != lead})
    u = unit(kind, idx)
    sh = _BITS * _field(kind, idx)

    by_power = {}
    for m, v in p.terms.items():
        e = (m >> sh) & _MASK
        by_power.setdefault(e, {})[m - e * u] = v
    if not by_power:
        return Poly()
    top = max(by_power)
    coeffs = {e: Poly(t) for e, t in by_power.items()}
    quot = {}
    q_next = Poly()
    for k in range(top, 0, -1):
        num = coeffs.get(k, ZERO) - rest * q_next
        q = Poly({m: _div(v, c) for m, v in num.terms.items()})
        quot[k - 1] = q
        q_next = q
    if coeffs.get(0, ZERO) != rest * q_next:
        raise NotDivisible(f"{p} is not divisible by {lin}")
    out = {}
    for e, q in quot.items():
        for m, v in q.terms.items():
            out[m + e * u] = v
    return Poly(out)


# -- text form -----------------------------------------------------------

def format_rational(c):
    c = _norm(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _var_name(kind, i):
    if kind == A:
        return f"a[{i}]"
    if kind == B:
        return f"b[{i}]"
    if kind == T:
        return "t"
    return f"{KINDS[kind]}{i}"


def format_monomial(m):
    parts = []
    for kind, i, e in sorted(decode(m), key=lambda f: (f[0] != A, f[0], f[1])):
        name = _var_name(kind, i)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_poly(p):
    if not p.terms:
        return "0"
    out = []
    for n, (m, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        mag = -c if neg else c
        mono = format_monomial(m)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if n == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<avar>[ab]\[\s*-?\d+\s*\])|(?P<xvar>[xyz]\d+)"
    r"|(?P<t>t)|(?P<op>[-+*^()\[\]]))"
)


def parse_rational(text):
    return _norm(Fraction(text.strip()))


def parse_poly(text):
    """Parse the canonical text form (and any sum/product expression of it)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 12]!r}")
        pos = mt.end()
        kind = mt.lastgroup
        tokens.append((kind, mt.group(kind)))
    tokens.append(("end", None))
    state = {"i": 0}

    def peek():
        return tokens[state["i"]]

    def take():
        tok = tokens[state["i"]]
        state["i"] += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        val = term().scale(sign)
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = power()
        while peek() == ("op", "*"):
            take()
            val = val * power()
        return val

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, num = take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(num)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Poly.const(parse_rational(val))
        if kind == "avar":
            idx = int(val[2:-1])
            return Poly.var(A if val[0] == "a" else B, idx)
        if kind == "xvar":
            return Poly.var(KINDS.index(val[0]), int(val[1:]))
        if kind == "t":
            return tvar()
        if (kind, val) in (("op", "("), ("op", "[")):
            inner = expr()
            closing = take()
            if closing[1] not in (")", "]"):
                raise ValueError("unbalanced brackets")
            return inner
        if (kind, val) == ("op", "-"):
            return -power()
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in polynomial: {peek()[1]!r}")
    return result


def dumps_poly(p):
    return json.dumps(p.to_json(), sort_keys=True)


# -- specializations -----------------------------------------------------

@dataclass(frozen=True)
class ASpec:
    """A numerical specialization of the parameters ``a_i``.

    ``kind`` is one of ``zero``, ``shifted`` (a_i = -i+1), ``frobenius``
    (a_i = -i+1/2), ``custom`` (explicit values plus an optional affine
    default ``p*i + q``) or ``generic`` (seeded pseudorandom rationals).
    """

    kind: str
    values: tuple = ()
    default: tuple | None = None
    seed: int = 0
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def value(self, i):
        if self.kind == "zero":
            return 0
        if self.kind == "shifted":
            return 1 - i
        if self.kind == "frobenius":
            return Fraction(1, 2) - i
        if self.kind == "custom":
            for j, v in self.values:
                if j == i:
                    return v
            if self.default is None:
                raise MissingIndex(f"custom specialization has no value for a[{i}]")
            p, q = self.default
            return _norm(p * i + q)
        if self.kind == "generic":
            got = self._cache.get(i)
            if got is None:
                # Seeded per index so values do not depend on query order.
                rng = random.Random(f"doublesym:{self.seed}:{i}")
                got = _norm(Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 997)))
                self._cache[i] = got
            return got
        raise ValueError(f"unknown specialization kind {self.kind!r}")

    def __str__(self):
        if self.kind == "generic":
            return f"generic:{self.seed}"
        return self.kind


ZERO_SPEC = ASpec("zero")
SHIFTED = ASpec("shifted")
FROBENIUS = ASpec("frobenius")


def generic_spec(seed):
    return ASpec("generic", seed=seed)


def custom_spec(values, default=None):
    vals = tuple(sorted((int(i), _norm(Fraction(v))) for i, v in dict(values).items()))
    if default is not None:
        default = (_norm(Fraction(default[0])), _norm(Fraction(default[1])))
    return ASpec("custom", values=vals, default=default)


_AFFINE = re.compile(r"^\s*(?:(?P<p>-?\d+(?:/\d+)?)\s*\*\s*i|(?P<bare>-?)i)?\s*(?:(?P<sign>[-+])?\s*(?P<q>\d+(?:/\d+)?))?\s*$")


def parse_custom_spec(text):
    """Parse lines ``i = n/d`` and an optional ``default = p*i + q``."""
    values = {}
    default = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad specialization line: {raw!r}")
        lhs, rhs = (s.strip() for s in line.split("=", 1))
        if lhs == "default":
            mt = _AFFINE.match(rhs)
            if not mt or not rhs:
                raise ValueError(f"default must be affine in i: {rhs!r}")
            if mt.group("p") is not None:
                p = Fraction(mt.group("p"))
            elif mt.group("bare") is not None:
                p = Fraction(-1 if mt.group("bare") == "-" else 1)
            else:
                p = Fraction(0)
            q = Fraction(mt.group("q")) if mt.group("q") else Fraction(0)
            if mt.group("sign") == "-":
                q = -q
            elif mt.group("sign") is None and mt.group("q") and (mt.group("p") or mt.group("bare") is not None):
                raise ValueError(f"default must be affine in i: {rhs!r}")
            default = (p, q)
        else:
            values[int(lhs)] = Fraction(rhs)
    return custom_spec(values, default)


def parse_spec(text, reader=None):
    """Parse ``zero|shifted|frobenius|generic:<seed>|custom:<file>``."""
    if text in ("zero", "shifted", "frobenius"):
        return ASpec(text)
    if text.startswith("generic:"):
        return generic_spec(int(text.split(":", 1)[1]))
    if text.startswith("custom:"):
        path = text.split(":", 1)[1]
        if reader is None:
            with open(path, encoding="utf-8") as fh:
                body = fh.read()
        else:
            body = reader(path)
        return parse_custom_spec(body)
    raise ValueError(f"unknown specialization {text!r}")


def det(matrix, one=ONE):
    """Determinant by Laplace expansion along rows, memoized on column sets.

    Works for any entries supporting ``+``, ``-``, ``*`` and truthiness
    (zero entries are skipped).
    """
    size = len(matrix)
    if size == 0:
        return one
    memo = {}

    def minor(row, cols):
        if row == size:
            return one
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = None
        sign = 1
        for j in range(size):
            if not cols >> j & 1:
                continue
            entry = matrix[row][j]
            if entry:
                sub = minor(row + 1, cols & ~(1 << j))
                if sub:
                    term = entry * sub
                    if total is None:
                        total = term if sign > 0 else -term
                    else:
                        total = total + term if sign > 0 else total - term
            sign = -sign
        if total is None:
            total = one - one
        memo[key] = total
        return total

    return minor(0, (1 << size) - 1)
