"""Text formats, the cycle-notation parser, the built-in catalog, reports.

Three line-oriented UTF-8 formats, "#" starting a comment anywhere:

cycle set            n 4
                     sigma 1 := (2,4)
                     sigma 2 := (1,3)
                     sigma 3 := (1,2,3,4)
                     sigma 4 := (1,4,3,2)

solution             n 2, then n "lambda k := <perm>" rows, then n
                     "rho k := <perm>" rows.

brace                m 2, then the m x m addition table (rows of 0-based
                     integers), a blank line, then the multiplication table.

Permutations are written in disjoint-cycle notation on 1-based points:
"()" is the identity, a cycle is "(" int ("," int)+ ")", whitespace is
tolerated anywhere, points absent from every cycle are fixed. Overlapping
cycles are rejected rather than composed; the ambiguity is not worth the
risk of silent corruption.

parse and render are mutually inverse on valid values. Parsing always ends
with the full structural validation, so syntax errors (ParseError) and
axiom failures (CycleSetError and friends) stay distinct.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib.resources import files as _resource_files

from .brace import LeftBrace
from .cycleset import CycleSet, SolutionYBE, cyclic_cycle_set
from .errors import ParseError
from .perm import Perm, cycles


# -- permutations -----------------------------------------------------------

def parse_perm(text: str, degree: int) -> Perm:
    """Parse disjoint-cycle notation into a permutation of the given degree.

    Errors carry the 1-based column of the offending token.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty permutation", col=1)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, len(text) + 1)

    images = list(range(degree))
    seen: set[int] = set()

    # "()" alone is the identity
    if (len(tokens) == 2 and tokens[0][0] == "(" and tokens[1][0] == ")"):
        return tuple(images)

    while pos < len(tokens):
        tok, col = peek()
        if tok != "(":
            raise ParseError(f"expected '(' but found {tok!r}", col=col)
        pos += 1
        cycle = []
        while True:
            tok, col = peek()
            if tok is None or not tok.isdigit():
                raise ParseError(f"expected a point but found {tok!r}", col=col)
            point = int(tok)
            if not 1 <= point <= degree:
                raise ParseError(f"point {point} out of range 1..{degree}", col=col)
            if point - 1 in seen:
                raise ParseError(f"point {point} repeated across cycles", col=col)
            seen.add(point - 1)
            cycle.append(point - 1)
            pos += 1
            tok, col = peek()
            if tok == ",":
                pos += 1
                continue
            if tok == ")":
                pos += 1
                break
            raise ParseError(f"expected ',' or ')' but found {tok!r}", col=col)
        if len(cycle) < 2:
            raise ParseError("a cycle needs at least two points", col=col)
        for i, p in enumerate(cycle):
            images[p] = cycle[(i + 1) % len(cycle)]
    return tuple(images)


def _tokenize(text: str) -> list[tuple[str, int]]:
    """Split into tokens ((, ), comma, integer) with 1-based columns."""
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "(),":
            out.append((ch, i + 1))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append((text[i:j], i + 1))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", col=i + 1)
    return out


def render_perm(p: Perm) -> str:
    """Disjoint cycles on 1-based points; '()' for the identity."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cs)


# -- cycle set files --------------------------------------------------------

def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _parse_header(lines, keyword: str) -> int:
    if not lines:
        raise ParseError(f"missing '{keyword} <size>' header", line=1)
    lineno, line = lines[0]
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit():
        raise ParseError(f"expected '{keyword} <size>' header", line=lineno)
    size = int(parts[1])
    if size < 1:
        raise ParseError("size must be at least 1", line=lineno)
    return size


def _parse_perm_rows(lines, keyword: str, n: int, start: int) -> tuple[Perm, ...]:
    rows = []
    for k in range(n):
        at = start + k
        if at >= len(lines):
            raise ParseError(
                f"expected {n} '{keyword}' rows but found {k}",
                line=lines[-1][0] if lines else 1)
        lineno, line = lines[at]
        head, sep, body = line.partition(":=")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] != keyword:
            raise ParseError(f"expected '{keyword} {k + 1} := <perm>'", line=lineno)
        if not parts[1].isdigit() or int(parts[1]) != k + 1:
            raise ParseError(
                f"rows must appear in order; expected {keyword} {k + 1}",
                line=lineno)
        try:
            rows.append(parse_perm(body, n))
        except ParseError as e:
            raise ParseError(f"in {keyword} {k + 1}: {e.args[0]}", line=lineno) from None
    return tuple(rows)


def parse_cycle_set(text: str) -> CycleSet:
    """Parse and validate a cycle set file."""
    lines = _significant_lines(text)
    n = _parse_header(lines, "n")
    rows = _parse_perm_rows(lines, "sigma", n, 1)
    if len(lines) > 1 + n:
        raise ParseError("trailing content after the last row", line=lines[1 + n][0])
    return CycleSet(rows)


def render_cycle_set(X: CycleSet) -> str:
    out = [f"n {X.size}"]
    for k, row in enumerate(X.sigma, start=1):
        out.append(f"sigma {k} := {render_perm(row)}")
    return "\n".join(out) + "\n"


# -- solution files ---------------------------------------------------------

def parse_solution(text: str) -> SolutionYBE:
    """Parse and validate a solution file (lambda rows then rho rows)."""
    lines = _significant_lines(text)
    n = _parse_header(lines, "n")
    lam = _parse_perm_rows(lines, "lambda", n, 1)
    rho = _parse_perm_rows(lines, "rho", n, 1 + n)
    if len(lines) > 1 + 2 * n:
        raise ParseError("trailing content after the last row",
                         line=lines[1 + 2 * n][0])
    return SolutionYBE(lam, rho)


def render_solution(s: SolutionYBE) -> str:
    out = [f"n {s.size}"]
    for k, row in enumerate(s.lam, start=1):
        out.append(f"lambda {k} := {render_perm(row)}")
    for k, row in enumerate(s.rho, start=1):
        out.append(f"rho {k} := {render_perm(row)}")
    return "\n".join(out) + "\n"


# -- brace files ------------------------------------------------------------

def parse_brace(text: str) -> LeftBrace:
    """Parse and validate a brace file (addition table, blank line,
    multiplication table)."""
    rows: list[tuple[int, list[int]]] = []
    for lineno, line in _significant_lines(text):
        parts = line.split()
        if not all(p.isdigit() for p in parts):
            if rows:
                raise ParseError("expected a row of integers", line=lineno)
        rows.append((lineno, parts))
    if not rows:
        raise ParseError("missing 'm <order>' header", line=1)
    lineno, parts = rows[0]
    if len(parts) != 2 or parts[0] != "m" or not parts[1].isdigit():
        raise ParseError("expected 'm <order>' header", line=lineno)
    m = int(parts[1])
    if m < 1:
        raise ParseError("order must be at least 1", line=lineno)
    body = rows[1:]
    if len(body) != 2 * m:
        raise ParseError(f"expected {2 * m} table rows, found {len(body)}",
                         line=body[-1][0] if body else lineno)
    tables = []
    for half in (body[:m], body[m:]):
        t = []
        for rl, parts in half:
            if len(parts) != m or not all(p.isdigit() for p in parts):
                raise ParseError(f"expected a row of {m} integers", line=rl)
            vals = [int(p) for p in parts]
            bad = next((v for v in vals if v >= m), None)
            if bad is not None:
                raise ParseError(f"entry {bad} out of range 0..{m - 1}", line=rl)
            t.append(tuple(vals))
        tables.append(tuple(t))
    return LeftBrace(tables[0], tables[1])


def render_brace(B: LeftBrace) -> str:
    out = [f"m {B.order}"]
    for row in B.add:
        out.append(" ".join(str(v) for v in row))
    out.append("")
    for row in B.mul:
        out.append(" ".join(str(v) for v in row))
    return "\n".join(out) + "\n"


# -- catalog ----------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    provenance: str
    cycle_set: CycleSet
    expected: dict


def _load_fixture(name: str) -> CycleSet:
    text = (_resource_files("ybe") / "data" / f"{name}.txt").read_text()
    return parse_cycle_set(text)


_FIXTURES = (
    ("P4", "p4",
     "size-4 simple cycle set, the smallest simple one of non-prime size",
     "transitive cycle base of the brace B_{8,27} (braces database)",
     {"group_order": 8, "ideal_sizes": (1, 4, 8), "simple": True,
      "indecomposable": True, "irretractable": True}),
    ("E12a", "e12a",
     "size-12 simple cycle set whose brace is itself simple",
     "transitive cycle base of the simple brace B_{24,94} (braces database)",
     {"group_order": 24, "ideal_sizes": (1, 24), "simple": True,
      "brace_simple": True, "indecomposable": True, "irretractable": True}),
    ("E12b", "e12b",
     "size-12 simple cycle set with a non-simple brace of order 48",
     "transitive cycle base of the brace B_{48,1532} (braces database)",
     {"group_order": 48, "ideal_sizes": (1, 24, 48), "simple": True,
      "indecomposable": True, "irretractable": True}),
    ("E16", "e16",
     "size-16 simple cycle set with a brace of order 32",
     "transitive cycle base of the brace B_{32,24526} (braces database)",
     {"group_order": 32, "ideal_sizes": (1, 16, 32), "simple": True,
      "indecomposable": True, "irretractable": True}),
    ("E27", "e27",
     "size-27 simple cycle set with a brace of order 81",
     "transitive cycle base of the brace B_{81,705} (braces database)",
     {"group_order": 81, "ideal_sizes": (1, 27, 81), "simple": True,
      "indecomposable": True, "irretractable": True}),
)

_CYCLIC_PRIMES = (2, 3, 5, 7)


def catalog() -> tuple[CatalogEntry, ...]:
    """The built-in cycle sets with their independently known facts.

    The five fixture entries are stored in the cycle set file format and
    parsed on access, so the regression suite exercises the parser; the
    cyclic family is generated.
    """
    entries = [
        CatalogEntry(cid, desc, prov, _load_fixture(fname), dict(expected))
        for cid, fname, desc, prov, expected in _FIXTURES
    ]
    for p in _CYCLIC_PRIMES:
        entries.append(CatalogEntry(
            f"C_{p}",
            f"cyclic cycle set on {p} points, every row the same {p}-cycle",
            "standard model of the indecomposable cycle set of prime size",
            cyclic_cycle_set(p),
            {"group_order": p, "ideal_sizes": (1, p), "simple": True,
             "indecomposable": True, "irretractable": False,
             "multipermutation_level": 1},
        ))
    return tuple(entries)


def catalog_ids() -> tuple[str, ...]:
    return tuple(e.id for e in catalog())


def catalog_get(entry_id: str) -> CatalogEntry:
    """Look an entry up by id, tolerating case and the C7/C_7 spelling."""
    wanted = entry_id.replace("_", "").lower()
    for e in catalog():
        if e.id.replace("_", "").lower() == wanted:
            return e
    raise KeyError(f"no catalog entry {entry_id!r}; known ids: "
                   + ", ".join(catalog_ids()))


# -- reports ----------------------------------------------------------------

def emit_report(results: dict, as_json: bool = False) -> str:
    """Render an analysis mapping as stable text or JSON.

    Keys keep their insertion order; nested mappings indent in text mode.
    Tuples and frozensets are emitted as sorted lists in JSON.
    """
    if as_json:
        return json.dumps(_jsonable(results), indent=2) + "\n"
    lines: list[str] = []
    _render_text(results, lines, 0)
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    return value


def _render_text(value, lines: list[str], depth: int, key: str | None = None):
    pad = "  " * depth
    label = f"{pad}{key}: " if key is not None else pad
    if isinstance(value, dict):
        if key is not None:
            lines.append(f"{pad}{key}:")
        for k, v in value.items():
            _render_text(v, lines, depth + (key is not None), k)
    elif isinstance(value, (list, tuple)) and any(isinstance(v, dict) for v in value):
        if key is not None:
            lines.append(f"{pad}{key}:")
        for v in value:
            sub: list[str] = []
            _render_text(v, sub, depth + 1)
            if sub:
                sub[0] = sub[0][: 2 * depth] + "- " + sub[0][2 * depth + 2:]
            lines.extend(sub)
    elif isinstance(value, (list, tuple)):
        lines.append(label + "[" + ", ".join(str(_jsonable(v)) for v in value) + "]")
    elif isinstance(value, bool):
        lines.append(label + ("yes" if value else "no"))
    else:
        lines.append(label + str(value))
