"""Sparse multivariate polynomials over Z with a weighted grading.

Every ring is an ordered registry of variables with positive integer
weights.  The registry order is fixed at construction and induces the
canonical monomial order used everywhere for serialization: graded
lexicographic by total weighted degree, ties broken lexicographically
by registry position (earlier variables take precedence), largest
monomial first.

Coefficients are plain Python ints, so no arithmetic ever overflows.
All values are immutable after construction and safe to share between
threads or worker processes.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

__all__ = [
    "RingSpec",
    "Polynomial",
    "NotHomogeneousError",
    "ring_make",
    "variable",
    "constant",
    "poly_add",
    "poly_mul",
    "weighted_degree",
    "substitute",
    "canonical_string",
]

_IDENT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")

# Canonical registry order for the rings this package constructs: t and u
# first, then the Chern classes, then the hyperplane classes by ascending
# subscript, then the torus characters and tau.  Names outside the
# convention sort after everything else, alphabetically.
_XI_RE = re.compile(r"xi([0-9]*)([a-z_0-9]*)\Z")


def registry_sort_key(name: str) -> tuple:
    if name == "t":
        return (0,)
    if name == "u":
        return (1,)
    if name in ("c1", "c2", "c3"):
        return (2, int(name[1]))
    m = _XI_RE.match(name)
    if m and name != "xi":
        num = int(m.group(1)) if m.group(1) else 0
        return (3, num, m.group(2))
    if name in ("t1", "t2"):
        return (4, int(name[1]))
    if name == "tau":
        return (5,)
    return (6, name)


class NotHomogeneousError(ValueError):
    """A polynomial expected to be homogeneous has terms of two degrees.

    Carries two witness terms as (exponent_tuple, degree) pairs.
    """

    def __init__(self, ring: "RingSpec", witness_a, witness_b):
        self.witness_a = witness_a
        self.witness_b = witness_b
        mono_a = _monomial_string(ring, witness_a[0]) or "1"
        mono_b = _monomial_string(ring, witness_b[0]) or "1"
        super().__init__(
            "not homogeneous: term %s has degree %d, term %s has degree %d"
            % (mono_a, witness_a[1], mono_b, witness_b[1])
        )


class RingSpec:
    """Ordered registry of (name, weight) pairs defining a graded ring."""

    __slots__ = ("names", "weights", "_index", "_hash")

    def __init__(self, vars: Iterable[tuple[str, int]]):
        names = []
        weights = []
        for name, weight in vars:
            if not isinstance(name, str) or not _IDENT_RE.match(name):
                raise ValueError("invalid identifier: %r" % (name,))
            if not isinstance(weight, int) or weight < 1:
                raise ValueError("non-positive weight for %s: %r" % (name, weight))
            if name in names:
                raise ValueError("duplicate name: %s" % name)
            names.append(name)
            weights.append(weight)
        self.names: tuple[str, ...] = tuple(names)
        self.weights: tuple[int, ...] = tuple(weights)
        self._index = {n: i for i, n in enumerate(self.names)}
        self._hash = hash((self.names, self.weights))

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingSpec):
            return NotImplemented
        return self.names == other.names and self.weights == other.weights

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "RingSpec(%s)" % ", ".join(
            "%s:%d" % nv for nv in zip(self.names, self.weights)
        )

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("variable %r not in ring %r" % (name, self)) from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def weight_of(self, name: str) -> int:
        return self.weights[self.index(name)]

    def exponent_degree(self, exps: tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def with_var(self, name: str, weight: int) -> "RingSpec":
        """Ring extended by a fresh variable, inserted at its canonical
        registry position."""
        if name in self._index:
            raise ValueError("name collision: %s" % name)
        vars = list(zip(self.names, self.weights))
        key = registry_sort_key(name)
        pos = len(vars)
        for i, (n, _) in enumerate(vars):
            if registry_sort_key(n) > key:
                pos = i
                break
        vars.insert(pos, (name, weight))
        return RingSpec(vars)

    def without(self, name: str) -> "RingSpec":
        i = self.index(name)
        vars = [nv for j, nv in enumerate(zip(self.names, self.weights)) if j != i]
        return RingSpec(vars)


def ring_make(vars: Iterable[tuple[str, int]]) -> RingSpec:
    return RingSpec(vars)


def _term_sort_key(ring: RingSpec, exps: tuple[int, ...]):
    return (ring.exponent_degree(exps), exps)


def _monomial_string(ring: RingSpec, exps: tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(ring.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial over a RingSpec.

    Terms map exponent tuples (one entry per registry variable) to
    nonzero integer coefficients.  Two polynomials are equal iff they
    have equal rings and identical term maps.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[tuple[int, ...], int]):
        nvars = len(ring)
        clean = {}
        for exps, coeff in terms.items():
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError("bad exponent vector %r for %r" % (exps, ring))
            clean[exps] = coeff
        self.ring = ring
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(ring: RingSpec) -> "Polynomial":
        return Polynomial(ring, {})

    @staticmethod
    def const(ring: RingSpec, c: int) -> "Polynomial":
        return Polynomial(ring, {(0,) * len(ring): c})

    @staticmethod
    def var(ring: RingSpec, name: str) -> "Polynomial":
        exps = [0] * len(ring)
        exps[ring.index(name)] = 1
        return Polynomial(ring, {tuple(exps): 1})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exps), 0)

    def support_names(self) -> set[str]:
        names = set()
        for exps in self.terms:
            for name, e in zip(self.ring.names, exps):
                if e:
                    names.add(name)
        return names

    def degree_in(self, name: str) -> int:
        """Largest exponent of a single variable (0 for the zero polynomial)."""
        i = self.ring.index(name)
        return max((exps[i] for exps in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        key = lambda item: _term_sort_key(self.ring, item[0])
        return sorted(self.terms.items(), key=key, reverse=True)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.exponent_degree(e) for e in self.terms}
        return len(degs) <= 1

    def weighted_degree(self) -> int:
        """Common weighted degree of all terms.

        Raises ValueError on the zero polynomial (callers treat 0 as
        homogeneous of every degree) and NotHomogeneousError, with two
        witness terms, on mixed degrees.
        """
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        it = iter(self.sorted_terms())
        exps0, _ = next(it)
        d0 = self.ring.exponent_degree(exps0)
        for exps, _ in it:
            d = self.ring.exponent_degree(exps)
            if d != d0:
                raise NotHomogeneousError(self.ring, (exps0, d0), (exps, d))
        return d0

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch: %r vs %r" % (self.ring, other.ring))
            return other
        if isinstance(other, int):
            return Polynomial.const(self.ring, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = terms.get(exps, 0) + coeff
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(e, 0) + c1 * c2
                if c:
                    terms[e] = c
                else:
                    terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self.sorted_terms())

    # -- serialization ---------------------------------------------------

    def canonical(self) -> str:
        """Canonical string: terms largest-first, signed decimal coefficients,
        `name^k` factors joined by `*`, `^1` and unit coefficients elided."""
        if not self.terms:
            return "0"
        pieces = []
        for i, (exps, coeff) in enumerate(self.sorted_terms()):
            mono = _monomial_string(self.ring, exps)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%d*%s" % (mag, mono)
            if i == 0:
                pieces.append("-" + body if coeff < 0 else body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.canonical()

    def __repr__(self) -> str:
        return "Polynomial(%s)" % self.canonical()

    def substitute(
        self,
        images: Mapping[str, "Polynomial"],
        target: RingSpec | None = None,
    ) -> "Polynomial":
        """Apply a graded ring homomorphism given by variable images.

        Every variable occurring in the polynomial needs an image, and
        each image must be homogeneous of its variable's weight (the zero
        polynomial counts as homogeneous of every degree).  The result is
        homogeneous of the same degree whenever the input is.
        """
        if target is None:
            for img in images.values():
                target = img.ring
                break
            else:
                target = self.ring
        for name, img in images.items():
            if img.ring != target:
                raise ValueError("image of %s lives in the wrong ring" % name)
            if img.terms:
                d = img.weighted_degree()
                if d != self.ring.weight_of(name):
                    raise ValueError(
                        "image of %s has degree %d, expected %d"
                        % (name, d, self.ring.weight_of(name))
                    )
        missing = self.support_names() - set(images)
        if missing:
            raise ValueError("missing image for: %s" % ", ".join(sorted(missing)))

        # cache powers of each image as needed
        powers: dict[str, list[Polynomial]] = {}

        def image_power(name: str, k: int) -> Polynomial:
            cache = powers.setdefault(name, [Polynomial.const(target, 1)])
            while len(cache) <= k:
                cache.append(cache[-1] * images[name])
            return cache[k]

        result = Polynomial.zero(target)
        for exps, coeff in self.terms.items():
            term = Polynomial.const(target, coeff)
            for name, e in zip(self.ring.names, exps):
                if e:
                    term = term * image_power(name, e)
            result = result + term
        return result


def variable(ring: RingSpec, name: str) -> Polynomial:
    return Polynomial.var(ring, name)


def constant(ring: RingSpec, c: int) -> Polynomial:
    return Polynomial.const(ring, c)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def weighted_degree(p: Polynomial) -> int:
    return p.weighted_degree()


def substitute(
    p: Polynomial, images: Mapping[str, Polynomial], target: RingSpec | None = None
) -> Polynomial:
    return p.substitute(images, target)


def canonical_string(p: Polynomial) -> str:
    return p.canonical()
