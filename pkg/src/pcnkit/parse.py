"""Text formats for functions and linearized maps.

Function grammar (one function per line, whitespace separated)::

    mono [a=<elem>] d=<int>
    poly <exp>:<elem> ...
    do q:<i>,<j>:<elem> ... l:<i>:<elem> ... c:<elem>
    lut <elem> ...            (exactly p^n values)
    lutfile <path>            (one elem per line)

Linearized / affine maps::

    lin <i>:<elem> ... [+g:<elem>]
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ArgumentError, ParseError
from .field import Field
from .functions import AffineMap, DOQuadratic, FnRepr, Lut, Monomial, Univariate

_INT = re.compile(r"0[xX][0-9a-fA-F]+|\d+")


def _tokens(line: str):
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _int(tok: str, col: int, line: int, what: str) -> int:
    if not _INT.fullmatch(tok):
        raise ParseError(f"expected a non-negative integer for {what}", line, col, tok)
    return int(tok, 0)


def _elem(tok, col, line, field: Field | None, what="coefficient") -> int:
    v = _int(tok, col, line, what)
    if field is not None and v >= field.q:
        raise ParseError(f"{what} {v} out of range for GF({field.q})", line, col, tok)
    return v


def _fields(tok: str, col: int, line: int, n: int) -> list[tuple[str, int]]:
    """Split ``a:b:c`` into parts, tracking the column of each."""
    out, pos = [], col
    for part in tok.split(":"):
        out.append((part, pos))
        pos += len(part) + 1
    if len(out) != n or any(not p for p, _ in out):
        raise ParseError(f"malformed term, expected {n} ':'-separated parts", line, col, tok)
    return out


def _only_line(text: str) -> tuple[str, int]:
    lines = [(i + 1, ln) for i, ln in enumerate(text.splitlines()) if ln.split("#")[0].strip()]
    if not lines:
        raise ParseError("empty function spec", 1, 1)
    if len(lines) > 1:
        raise ParseError("expected exactly one function per line", lines[1][0], 1)
    lineno, ln = lines[0]
    return ln.split("#")[0], lineno


def parse_function(text: str, field: Field | None = None, *, line: int = 1) -> FnRepr:
    """Parse one function spec. ``lut``/``lutfile`` forms require ``field``."""
    src, off = _only_line(text)
    ln = line + off - 1
    toks = _tokens(src)
    kw, kcol = toks[0]
    rest = toks[1:]
    if kw == "mono":
        return _parse_mono(rest, ln, field)
    if kw == "poly":
        return _parse_poly(rest, ln, field)
    if kw == "do":
        return _parse_do(rest, ln, field)
    if kw == "lut":
        return _parse_lut([(t, c) for t, c in rest], ln, field)
    if kw == "lutfile":
        if len(rest) != 1:
            raise ParseError("lutfile takes exactly one path", ln, kcol, kw)
        return _parse_lutfile(rest[0][0], field, ln, rest[0][1])
    if kw == "lin":
        m = parse_affine(src, field, line=ln)
        return m
    raise ParseError(
        "unknown function form (expected mono, poly, do, lut, lutfile or lin)", ln, kcol, kw
    )


def parse_functions(text: str, field: Field | None = None) -> list[FnRepr]:
    out = []
    for i, ln in enumerate(text.splitlines()):
        if ln.split("#")[0].strip():
            out.append(parse_function(ln, field, line=i + 1))
    return out


def _parse_mono(toks, ln, field):
    vals: dict[str, int] = {}
    for tok, col in toks:
        m = re.fullmatch(r"(a|d)=(.*)", tok)
        if not m:
            raise ParseError("expected a=<elem> or d=<int>", ln, col, tok)
        key, val = m.groups()
        if key in vals:
            raise ParseError(f"duplicate key {key!r}", ln, col, tok)
        vcol = col + 2
        if key == "a":
            vals["a"] = _elem(val, vcol, ln, field)
        else:
            vals["d"] = _int(val, vcol, ln, "exponent")
            if vals["d"] < 1:
                raise ParseError("monomial exponent must be >= 1", ln, vcol, val)
    if "d" not in vals:
        raise ParseError("mono needs d=<int>", ln, 1)
    return Monomial(vals.get("a", 1), vals["d"])


def _parse_poly(toks, ln, field):
    coeffs: dict[int, int] = {}
    if not toks:
        raise ParseError("poly needs at least one <exp>:<elem> term", ln, 1)
    for tok, col in toks:
        (e, ecol), (c, ccol) = _fields(tok, col, ln, 2)
        exp = _int(e, ecol, ln, "exponent")
        if exp in coeffs:
            raise ParseError(f"duplicate exponent {exp}", ln, ecol, e)
        coeffs[exp] = _elem(c, ccol, ln, field)
    return Univariate.from_dict(coeffs)


def _parse_do(toks, ln, field):
    quad: dict[tuple[int, int], int] = {}
    lin: dict[int, int] = {}
    const = None
    for tok, col in toks:
        if tok.startswith("q:"):
            (_, _), (ij, ijcol), (c, ccol) = _fields(tok, col, ln, 3)
            parts = ij.split(",")
            if len(parts) != 2:
                raise ParseError("expected q:<i>,<j>:<elem>", ln, ijcol, tok)
            i = _int(parts[0], ijcol, ln, "index i")
            j = _int(parts[1], ijcol + len(parts[0]) + 1, ln, "index j")
            if not i < j:
                raise ParseError("DO term needs i < j", ln, ijcol, ij)
            if field is not None and j >= field.n:
                raise ParseError(f"index {j} must be < n={field.n}", ln, ijcol, ij)
            if (i, j) in quad:
                raise ParseError(f"duplicate term ({i},{j})", ln, col, tok)
            quad[(i, j)] = _elem(c, ccol, ln, field)
        elif tok.startswith("l:"):
            (_, _), (i_s, icol), (c, ccol) = _fields(tok, col, ln, 3)
            i = _int(i_s, icol, ln, "index")
            if field is not None and i >= field.n:
                raise ParseError(f"index {i} must be < n={field.n}", ln, icol, i_s)
            if i in lin:
                raise ParseError(f"duplicate linear term {i}", ln, col, tok)
            lin[i] = _elem(c, ccol, ln, field)
        elif tok.startswith("c:"):
            (_, _), (c, ccol) = _fields(tok, col, ln, 2)
            if const is not None:
                raise ParseError("duplicate constant", ln, col, tok)
            const = _elem(c, ccol, ln, field, "constant")
        else:
            raise ParseError("expected q:<i>,<j>:<elem>, l:<i>:<elem> or c:<elem>", ln, col, tok)
    return DOQuadratic.from_dicts(quad, lin, const or 0)


def _parse_lut(toks, ln, field):
    if field is None:
        raise ArgumentError("a lut spec needs the field to be known")
    if len(toks) != field.q:
        col = toks[-1][1] if toks else 1
        raise ParseError(f"lut needs exactly {field.q} values, got {len(toks)}", ln, col)
    return Lut(field, [_elem(t, c, ln, field, "lut value") for t, c in toks])


def _parse_lutfile(path: str, field, ln, col):
    if field is None:
        raise ArgumentError("a lut spec needs the field to be known")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read lut file: {exc.strerror}", ln, col, path) from None
    vals = []
    for i, row in enumerate(text.splitlines()):
        row = row.split("#")[0].strip()
        if row:
            vals.append(_elem(row, 1, i + 1, field, "lut value"))
    if len(vals) != field.q:
        raise ParseError(f"lut file has {len(vals)} values, need {field.q}", ln, col, path)
    return Lut(field, vals)


def parse_affine(text: str, field: Field | None = None, *, line: int = 1) -> AffineMap:
    src, off = _only_line(text)
    ln = line + off - 1
    toks = _tokens(src)
    if toks[0][0] != "lin":
        raise ParseError("linearized map must start with 'lin'", ln, toks[0][1], toks[0][0])
    coeffs: dict[int, int] = {}
    g = None
    for tok, col in toks[1:]:
        if tok.startswith("+g:"):
            if g is not None:
                raise ParseError("duplicate translation", ln, col, tok)
            g = _elem(tok[3:], col + 3, ln, field, "translation")
            continue
        (i_s, icol), (c, ccol) = _fields(tok, col, ln, 2)
        i = _int(i_s, icol, ln, "index")
        if field is not None and i >= field.n:
            raise ParseError(f"index {i} must be < n={field.n}", ln, icol, i_s)
        if i in coeffs:
            raise ParseError(f"duplicate index {i}", ln, icol, i_s)
        coeffs[i] = _elem(c, ccol, ln, field)
    return AffineMap.from_dict(coeffs, g or 0)


def format_function(F: FnRepr) -> str:
    if isinstance(F, Monomial):
        return f"mono a={F.a} d={F.d}"
    if isinstance(F, Univariate):
        return "poly " + " ".join(f"{e}:{c}" for e, c in F.terms) if F.terms else "poly 0:0"
    if isinstance(F, DOQuadratic):
        parts = ["do"]
        parts += [f"q:{i},{j}:{c}" for i, j, c in F.quad]
        parts += [f"l:{i}:{c}" for i, c in F.linear]
        if F.const:
            parts.append(f"c:{F.const}")
        return " ".join(parts)
    if isinstance(F, Lut):
        return "lut " + " ".join(map(str, F.values.tolist()))
    if isinstance(F, AffineMap):
        return format_affine(F)
    raise ArgumentError(f"cannot format {type(F).__name__}")


def format_affine(A: AffineMap) -> str:
    parts = ["lin"] + [f"{i}:{c}" for i, c in A.coeffs]
    if A.translation:
        parts.append(f"+g:{A.translation}")
    return " ".join(parts)
