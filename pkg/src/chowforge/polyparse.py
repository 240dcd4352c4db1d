"""Parser and printer for the polynomial DSL used by CLI inputs and golden files.

Grammar (tightest binding last):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | power
    power  := atom ('^' INT)?
    atom   := INT | IDENT | '(' expr ')'

Identifiers are ASCII ``[a-z][a-z0-9_]*``; subscripted math symbols map
as xi_{2a} -> ``xi2a``, t_1 -> ``t1``, tau -> ``tau`` and so on (the full
table is in the README).  Implicit multiplication is rejected: ``2t`` is
an error, write ``2*t``.

Ideal files consist of a header line ``ring: name:weight, ...`` followed
by one relation per line.  ``#`` starts a comment; blank lines are
ignored.  Every relation must be homogeneous under the declared weights.
"""

from __future__ import annotations

from .intpoly import NotHomogeneousError, Polynomial, RingSpec, ring_make

__all__ = [
    "ParseError",
    "parse_poly",
    "parse_ideal_file",
    "format_ideal_file",
    "format_ring_header",
]


class ParseError(ValueError):
    """Syntax or validation error, carrying the byte offset of the first
    offending token (and a 1-based line number for file input)."""

    def __init__(self, message: str, pos: int, line: int | None = None):
        self.pos = pos
        self.line = line
        where = "line %d, " % line if line is not None else ""
        super().__init__("%soffset %d: %s" % (where, pos, message))


_OPS = "+-*^()"


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(("int", src[i:j], i))
            i = j
            continue
        if "a" <= ch <= "z":
            j = i
            while j < n and (src[j].isdigit() or src[j] == "_" or "a" <= src[j] <= "z"):
                j += 1
            tokens.append(("ident", src[i:j], i))
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: RingSpec):
        self.tokens = _tokenize(src)
        self.ring = ring
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def advance(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def error(self, message: str):
        kind, value, pos = self.peek()
        shown = "end of input" if kind == "end" else repr(value)
        raise ParseError("%s (got %s)" % (message, shown), pos)

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek()[0] != "end":
            self.error("trailing input")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        if self.peek()[0] == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind != "int":
                raise ParseError("non-integer exponent", pos)
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "int":
            self.advance()
            return Polynomial.const(self.ring, int(value))
        if kind == "ident":
            if value not in self.ring:
                raise ParseError("undeclared identifier %r" % value, pos)
            self.advance()
            return Polynomial.var(self.ring, value)
        if kind == "(":
            self.advance()
            p = self.expr()
            if self.peek()[0] != ")":
                self.error("expected ')'")
            self.advance()
            return p
        self.error("expected integer, identifier or '('")


def parse_poly(src: str, ring: RingSpec) -> Polynomial:
    """Parse one polynomial expression into canonical internal form."""
    return _Parser(src, ring).parse()


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _parse_ring_header(body: str, lineno: int, offset: int) -> RingSpec:
    vars = []
    for chunk in body.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("empty declaration in ring header", offset, lineno)
        name, sep, weight = chunk.partition(":")
        name = name.strip()
        weight = weight.strip()
        if not sep or not weight.lstrip("-").isdigit():
            raise ParseError(
                "ring header entries must be name:weight, got %r" % chunk,
                offset,
                lineno,
            )
        try:
            vars.append((name, int(weight)))
        except ValueError:
            raise ParseError("bad ring declaration %r" % chunk, offset, lineno)
    try:
        return ring_make(vars)
    except ValueError as exc:
        raise ParseError(str(exc), offset, lineno) from None


def parse_ideal_file(src: str) -> tuple[RingSpec, list[Polynomial]]:
    """Parse an ideal file: ring header, then one homogeneous relation per line."""
    ring: RingSpec | None = None
    relations: list[Polynomial] = []
    offset = 0
    for lineno, raw in enumerate(src.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if line:
            if ring is None:
                if not line.startswith("ring:"):
                    raise ParseError("ring header missing", offset, lineno)
                ring = _parse_ring_header(line[len("ring:"):], lineno, offset)
            else:
                try:
                    p = parse_poly(line, ring)
                except ParseError as exc:
                    raise ParseError(
                        str(exc).split(": ", 1)[-1], offset + exc.pos, lineno
                    ) from None
                if p.terms and not p.is_homogeneous():
                    try:
                        p.weighted_degree()
                    except NotHomogeneousError as exc:
                        raise ParseError(
                            "inhomogeneous relation (degrees %d and %d)"
                            % (exc.witness_a[1], exc.witness_b[1]),
                            offset,
                            lineno,
                        ) from None
                relations.append(p)
        offset += len(raw) + 1
    if ring is None:
        raise ParseError("ring header missing", 0, 1)
    return ring, relations


def format_ring_header(ring: RingSpec) -> str:
    return "ring: " + ", ".join(
        "%s:%d" % nv for nv in zip(ring.names, ring.weights)
    )


def format_ideal_file(ring: RingSpec, relations) -> str:
    """Serialize a ring and relation list in the ideal-file format.

    The output parses back to the same data, which is the round-trip
    contract the golden files rely on.
    """
    lines = [format_ring_header(ring)]
    lines.extend(p.canonical() for p in relations)
    return "\n".join(lines) + "\n"
