"""Exact coefficient arithmetic for structure constants.

Two modes: plain arbitrary-precision integers (``int``) and sparse Laurent
polynomials in q (``laurent``).  A value is a map from q-exponent to a
nonzero integer; int mode only ever uses exponent 0.  Values are immutable
and hashable.

Structure constants must be nonnegative, but general ring elements need
signed coefficients, so the sign restriction is enforced at the validation
boundaries (parsing and table building), not here.
"""

INT = "int"
LAURENT = "laurent"
_MODES = (INT, LAURENT)


class CoefficientError(ValueError):
    """Bad mode, or arithmetic across modes."""


class CoefficientSyntaxError(CoefficientError):
    """Unparseable coefficient text; ``offset`` is the byte position."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class Coefficient:
    """Sparse exponent-to-value map, canonically sorted, no zero values."""

    __slots__ = ("mode", "terms")

    def __init__(self, mode, terms=()):
        if mode not in _MODES:
            raise CoefficientError(f"unknown coefficient mode {mode!r}")
        clean = {}
        for exp, value in dict(terms).items():
            if value == 0:
                continue
            if mode == INT and exp != 0:
                raise CoefficientError("q-exponents are not allowed in int mode")
            clean[int(exp)] = int(value)
        self.mode = mode
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def zero(cls, mode):
        return cls(mode)

    @classmethod
    def one(cls, mode):
        return cls(mode, {0: 1})

    @classmethod
    def of(cls, value, mode):
        """Coerce an int (or pass through a matching Coefficient)."""
        if isinstance(value, Coefficient):
            if value.mode != mode:
                raise CoefficientError(
                    f"expected a {mode} coefficient, got {value.mode}")
            return value
        return cls(mode, {0: int(value)})

    @classmethod
    def q_power(cls, exponent, value=1):
        return cls(LAURENT, {exponent: value})

    def is_nonnegative(self):
        return all(v > 0 for v in self.terms.values())

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Coefficient)
                and self.mode == other.mode and self.terms == other.terms)

    def __hash__(self):
        return hash((self.mode, tuple(self.terms.items())))

    def _check_mode(self, other):
        if not isinstance(other, Coefficient):
            raise TypeError(
                f"cannot combine Coefficient with {type(other).__name__}")
        if self.mode != other.mode:
            raise CoefficientError(f"mode mismatch: {self.mode} vs {other.mode}")

    def __add__(self, other):
        self._check_mode(other)
        terms = dict(self.terms)
        for exp, value in other.terms.items():
            new = terms.get(exp, 0) + value
            if new:
                terms[exp] = new
            else:
                del terms[exp]
        return Coefficient(self.mode, terms)

    def __mul__(self, other):
        self._check_mode(other)
        terms = {}
        for ea, va in self.terms.items():
            for eb, vb in other.terms.items():
                exp = ea + eb
                new = terms.get(exp, 0) + va * vb
                if new:
                    terms[exp] = new
                else:
                    del terms[exp]
        return Coefficient(self.mode, terms)

    def __neg__(self):
        return Coefficient(self.mode, {e: -v for e, v in self.terms.items()})

    def __str__(self):
        return format_coefficient(self)

    def __repr__(self):
        return f"Coefficient({self.mode!r}, {self.terms!r})"


def format_coefficient(c):
    """Canonical text: terms in increasing exponent order, e.g. 'q^-1 + 1 + 2q^3'."""
    if not c.terms:
        return "0"
    parts = []
    for exp, value in c.terms.items():
        if exp == 0:
            parts.append(str(value))
        else:
            q = "q" if exp == 1 else f"q^{exp}"
            parts.append(q if value == 1 else f"{value}{q}")
    return " + ".join(parts)


def parse_coefficient(text, mode):
    """Parse ``term ('+' term)*`` where term is ``[uint]['q'['^' int]]``.

    Whitespace-insensitive; like terms are collected.  Raises
    CoefficientSyntaxError with the byte offset of the problem.
    """
    if mode not in _MODES:
        raise CoefficientError(f"unknown coefficient mode {mode!r}")
    n = len(text)
    pos = _skip_ws(text, 0)
    if pos == n:
        raise CoefficientSyntaxError("empty coefficient", pos)
    terms = {}
    while True:
        pos, exp, value = _scan_term(text, pos, mode)
        new = terms.get(exp, 0) + value
        if new:
            terms[exp] = new
        else:
            terms.pop(exp, None)
        pos = _skip_ws(text, pos)
        if pos == n:
            break
        if text[pos] != "+":
            raise CoefficientSyntaxError(f"expected '+', found {text[pos]!r}", pos)
        pos = _skip_ws(text, pos + 1)
        if pos == n:
            raise CoefficientSyntaxError("dangling '+'", pos)
    return Coefficient(mode, terms)


def add_coefficients(a, b):
    """Exponent-wise sum; requires matching modes."""
    return a + b


def multiply_coefficients(a, b):
    """Convolution product; requires matching modes."""
    return a * b


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _scan_uint(text, pos):
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        return start, None
    return pos, int(text[start:pos])


def _scan_term(text, pos, mode):
    if text[pos] == "-":
        raise CoefficientSyntaxError("negative literal coefficient", pos)
    pos, value = _scan_uint(text, pos)
    probe = _skip_ws(text, pos) if value is not None else pos
    if probe < len(text) and text[probe] == "q":
        if mode == INT:
            raise CoefficientSyntaxError("'q' is not allowed in int mode", probe)
        pos = probe + 1
        exp = 1
        probe = _skip_ws(text, pos)
        if probe < len(text) and text[probe] == "^":
            pos = _skip_ws(text, probe + 1)
            sign = 1
            if pos < len(text) and text[pos] == "-":
                sign = -1
                pos += 1
            pos, mag = _scan_uint(text, pos)
            if mag is None:
                raise CoefficientSyntaxError("expected integer exponent after '^'", pos)
            exp = sign * mag
        return pos, exp, 1 if value is None else value
    if value is None:
        raise CoefficientSyntaxError(f"expected term, found {text[pos]!r}", pos)
    return pos, 0, value
