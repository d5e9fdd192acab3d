"""Line-oriented ring-file format and canonical serialization.

Grammar ('#' starts a comment, blank lines are skipped)::

    ring "NAME"
    coeff int|laurent
    basis LABEL ...
    unit LABEL ...                      (optional, at most one line)
    block SRC DST: LABEL[, LABEL ...]   (optional, one line per block)
    mul LABEL LABEL = 0 | TERM [+ TERM ...]

A TERM is ``[MONOMIAL *] LABEL`` where MONOMIAL follows the coefficient
grammar (``2``, ``q``, ``3q^-2`` ...); repeating a label accumulates, so a
coefficient with several monomials serializes as repeated terms.  Labels
match [A-Za-z0-9_]+ and "block SRC DST" assigns source and target objects.

Unspecified products are zero, except products with declared units, which
default to whatever the unit axioms force: with blocks the unit of the
matching object acts as the identity, and a single unit without blocks is
a two-sided identity.  With several units and no blocks the axioms do not
pin individual products down, so nothing is defaulted.
"""

import re
from pathlib import Path

from .coefficients import (INT, LAURENT, Coefficient, CoefficientError,
                           parse_coefficient)
from .zring import (AssociativityViolation, RingError, RingValidationError,
                    build_ring)

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class RingFileError(RingError):
    def __init__(self, message, source="<ring>", line=None):
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


def _check_label(label, source, line):
    if not _LABEL_RE.match(label):
        raise RingFileError(f"bad label {label!r}", source, line)
    return label


def parse_ring_file(text, source="<ring>"):
    """Parse and fully validate a ring file; diagnostics carry line numbers."""
    name = None
    mode = None
    labels = None
    units = None
    blocks = {}
    rows = {}
    pair_lines = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "ring":
            if name is not None:
                raise RingFileError("duplicate 'ring' line", source, line_no)
            m = re.fullmatch(r'"([^"]*)"', rest)
            name = m.group(1) if m else rest
            if not name:
                raise RingFileError("missing ring name", source, line_no)
        elif word == "coeff":
            if name is None:
                raise RingFileError(
                    "'ring', 'coeff' and 'basis' lines must come first",
                    source, line_no)
            if mode is not None:
                raise RingFileError("duplicate 'coeff' line", source, line_no)
            if rest not in (INT, LAURENT):
                raise RingFileError(
                    f"coeff must be 'int' or 'laurent', got {rest!r}",
                    source, line_no)
            mode = rest
        elif word == "basis":
            if name is None or mode is None:
                raise RingFileError(
                    "'ring', 'coeff' and 'basis' lines must come first",
                    source, line_no)
            if labels is not None:
                raise RingFileError("duplicate 'basis' line", source, line_no)
            labels = [_check_label(t, source, line_no) for t in rest.split()]
            if not labels:
                raise RingFileError("empty basis", source, line_no)
        elif word == "unit":
            _require_header(name, mode, labels, source, line_no)
            if units is not None:
                raise RingFileError("duplicate 'unit' line", source, line_no)
            units = [_check_label(t, source, line_no) for t in rest.split()]
        elif word == "block":
            _require_header(name, mode, labels, source, line_no)
            head, sep, members = rest.partition(":")
            if not sep:
                raise RingFileError("block line needs ':'", source, line_no)
            objs = head.split()
            if len(objs) != 2:
                raise RingFileError(
                    "block line needs two object names", source, line_no)
            src, dst = (_check_label(o, source, line_no) for o in objs)
            for lab in members.split(","):
                lab = lab.strip()
                if not lab:
                    raise RingFileError("empty block member", source, line_no)
                _check_label(lab, source, line_no)
                if lab in blocks:
                    raise RingFileError(
                        f"label {lab!r} assigned to two blocks", source, line_no)
                blocks[lab] = (src, dst)
        elif word == "mul":
            _require_header(name, mode, labels, source, line_no)
            head, sep, sum_text = rest.partition("=")
            if not sep:
                raise RingFileError("mul line needs '='", source, line_no)
            factors = head.split()
            if len(factors) != 2:
                raise RingFileError(
                    "mul line needs two factor labels", source, line_no)
            a, b = factors
            for lab in (a, b):
                if lab not in labels:
                    raise RingFileError(
                        f"unknown label {lab!r}", source, line_no)
            if (a, b) in rows:
                raise RingFileError(
                    f"duplicate 'mul {a} {b}' (first at line "
                    f"{pair_lines[(a, b)]})", source, line_no)
            rows[(a, b)] = _parse_sum(sum_text.strip(), mode, labels,
                                      source, line_no)
            pair_lines[(a, b)] = line_no
        else:
            raise RingFileError(f"unknown directive {word!r}", source, line_no)

    _require_header(name, mode, labels, source, line_no=None)
    if blocks:
        missing = [lab for lab in labels if lab not in blocks]
        if missing:
            raise RingFileError(
                f"labels without a block: {', '.join(missing)}", source)
    if units is not None:
        for u in units:
            if u not in labels:
                raise RingFileError(f"unknown unit label {u!r}", source)
        _fill_unit_defaults(rows, labels, units, blocks or None, mode)

    tensor = {pair: row for pair, row in rows.items() if row}
    try:
        return build_ring(labels, tensor, mode, blocks or None, units,
                          name=name)
    except RingValidationError as exc:
        hints = list(exc.hints)
        for v in exc.violations:
            if isinstance(v, AssociativityViolation):
                for pair in ((v.alpha, v.beta), (v.beta, v.gamma)):
                    if pair not in pair_lines:
                        hint = (f"hint: no 'mul {pair[0]} {pair[1]}' line in "
                                f"{source}; the product defaulted to 0")
                        if hint not in hints:
                            hints.append(hint)
        raise RingValidationError(exc.ring_name, exc.violations, hints) \
            from None


def _require_header(name, mode, labels, source, line_no):
    if name is None or mode is None or labels is None:
        raise RingFileError(
            "'ring', 'coeff' and 'basis' lines must come first",
            source, line_no)


def _parse_sum(text, mode, labels, source, line_no):
    if text == "0":
        return {}
    if not text:
        raise RingFileError("empty product (write '= 0')", source, line_no)
    row = {}
    for piece in text.split("+"):
        piece = piece.strip()
        coeff_text, star, label = piece.rpartition("*")
        label = label.strip()
        if label not in labels:
            raise RingFileError(f"unknown label {label!r}", source, line_no)
        if star:
            try:
                c = parse_coefficient(coeff_text.strip(), mode)
            except CoefficientError as exc:
                raise RingFileError(str(exc), source, line_no) from None
        else:
            c = Coefficient.one(mode)
        if label in row:
            c = row[label] + c
        if c:
            row[label] = c
        else:
            row.pop(label, None)
    return row


def _fill_unit_defaults(rows, labels, units, blocks, mode):
    one = Coefficient.one(mode)
    unit_set = set(units)
    for u in units:
        for g in labels:
            for pair, unit_on_left in (((u, g), True), ((g, u), False)):
                if pair in rows:
                    continue
                if blocks is not None:
                    obj = blocks[u][0]
                    src, dst = blocks[g]
                    acts = (dst == obj) if unit_on_left else (src == obj)
                elif len(unit_set) == 1:
                    acts = True
                else:
                    continue  # several units, no blocks: nothing is forced
                if acts:
                    rows[pair] = {g: one}


def serialize_ring(ring):
    """Canonical text: basis order everywhere, every nonzero product
    spelled out, multi-monomial coefficients as repeated terms."""
    for lab in ring.labels:
        if not _LABEL_RE.match(lab):
            raise RingError(f"label {lab!r} cannot be serialized")
    lines = [f'ring "{ring.name}"', f"coeff {ring.mode}",
             "basis " + " ".join(ring.labels)]
    if ring.units is not None:
        lines.append("unit " + " ".join(ring.labels[u]
                                        for u in sorted(ring.units)))
    if ring.blocks is not None:
        objects = []
        for src, dst in ring.blocks:
            for obj in (src, dst):
                if obj not in objects:
                    objects.append(obj)
        order = {obj: i for i, obj in enumerate(objects)}
        grouped = {}
        for i, pair in enumerate(ring.blocks):
            grouped.setdefault(pair, []).append(ring.labels[i])
        for pair in sorted(grouped, key=lambda p: (order[p[0]], order[p[1]])):
            lines.append(
                f"block {pair[0]} {pair[1]}: " + ",".join(grouped[pair]))
    n = ring.size
    for a in range(n):
        for b in range(n):
            row = ring.tensor.get((a, b))
            if not row:
                continue
            terms = []
            for g in sorted(row):
                for exp, value in row[g].terms.items():
                    if exp == 0 and value == 1:
                        terms.append(ring.labels[g])
                    else:
                        mono = Coefficient(ring.mode, {exp: value})
                        terms.append(f"{mono}*{ring.labels[g]}")
            lines.append(
                f"mul {ring.labels[a]} {ring.labels[b]} = " + " + ".join(terms))
    return "\n".join(lines) + "\n"


def resolve_ring_arg(arg):
    """Accept 'gallery:NAME' or a ring-file path (for the CLI)."""
    if arg.startswith("gallery:"):
        from .gallery import load_gallery
        return load_gallery(arg[len("gallery:"):])
    path = Path(arg)
    try:
        text = path.read_text()
    except OSError as exc:
        raise RingFileError(f"cannot read ring file: {exc}", str(path)) \
            from None
    return parse_ring_file(text, source=str(path))
