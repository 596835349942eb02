"""Text and JSON notation for cyclic and metacyclic data sets.

Text forms:
    cyclic      (4,0;((1,4),3),((3,4),3),((1,2),2))     grouped cones
                (12,1;(1,6),(5,6))                      singleton cones
                (4,6,1;)                                free action, d shown
    metacyclic  ((2·4,2,-1),0;[(0,1),(1,2),2]_3,[(1,4),(0,1),4])
                with "_s" a multiplicity suffix on a triple

The degree separator "·" may also be written "x" on input; output always uses
"·".  The twist factor prints as "-1" when k = n-1.  Parse errors report the
byte offset of the offending token.
"""

from __future__ import annotations

import json
from math import gcd

from .cyclic import CyclicDataSet, MalformedDataSetError

JSON_SCHEMA = "mcg/1"


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.byte_offset = len(text[:pos].encode("utf-8"))
        token = text[pos:pos + 12] or "<end of input>"
        super().__init__(
            f"{message} at byte offset {self.byte_offset} (near {token!r})"
        )


class _Scanner:
    """Minimal tokenizer over the characters ( ) [ ] , ; _ · x - and digits."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self._skip_ws()
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.text, self.pos)
        self.pos += 1

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise ParseError("expected an integer", self.text, start)
        return int(self.text[start:self.pos])

    def end(self) -> None:
        self._skip_ws()
        if self.pos < len(self.text):
            raise ParseError("trailing input", self.text, self.pos)


# -- cyclic ----------------------------------------------------------------


def _parse_cone_item(sc: _Scanner) -> list[tuple[int, int]]:
    """One cone entry: (c,m) or ((c,m),mult).  Returns the expanded pairs."""
    sc.expect("(")
    if sc.peek() == "(":
        sc.expect("(")
        c = sc.integer()
        sc.expect(",")
        m = sc.integer()
        sc.expect(")")
        sc.expect(",")
        mult = sc.integer()
        sc.expect(")")
        if mult < 1:
            raise ParseError("multiplicity must be positive", sc.text, sc.pos)
        return [(c, m)] * mult
    c = sc.integer()
    sc.expect(",")
    m = sc.integer()
    sc.expect(")")
    return [(c, m)]


def parse_cyclic(text: str) -> CyclicDataSet:
    sc = _Scanner(text)
    sc.expect("(")
    n = sc.integer()
    sc.expect(",")
    g0 = sc.integer()
    d = 0
    if sc.accept(","):
        d = sc.integer()
    sc.expect(";")
    cones: list[tuple[int, int]] = []
    while not sc.accept(")"):
        if cones:
            sc.expect(",")
        cones.extend(_parse_cone_item(sc))
    sc.end()
    try:
        return CyclicDataSet(n, g0, d, tuple(cones))
    except MalformedDataSetError as exc:
        raise ParseError(str(exc), text, 0) from exc


def format_cyclic(ds: CyclicDataSet) -> str:
    head = f"({ds.n},{ds.g0}"
    if ds.is_free:
        return head + (f",{ds.d};)" if ds.d else ";)")
    parts = []
    for (c, m), mult in ds.grouped():
        parts.append(f"(({c},{m}),{mult})" if mult > 1 else f"({c},{m})")
    return head + ";" + ",".join(parts) + ")"


def cyclic_to_json(ds: CyclicDataSet) -> dict:
    return {
        "schema": JSON_SCHEMA,
        "type": "cyclic",
        "n": ds.n,
        "g0": ds.g0,
        "d": ds.d,
        "cones": [
            {"c": c, "m": m, "mult": mult} for (c, m), mult in ds.grouped()
        ],
    }


def cyclic_from_json(obj: dict) -> CyclicDataSet:
    if obj.get("schema") != JSON_SCHEMA:
        raise ValueError(f"unsupported schema: {obj.get('schema')!r}")
    cones: list[tuple[int, int]] = []
    for entry in obj.get("cones", []):
        cones.extend([(entry["c"], entry["m"])] * entry.get("mult", 1))
    return CyclicDataSet(obj["n"], obj["g0"], obj.get("d", 0), tuple(cones))


# -- metacyclic ------------------------------------------------------------


def _format_k(k: int, n: int) -> str:
    return "-1" if k == n - 1 else str(k)


def parse_meta(text: str):
    """Parse a metacyclic data set string.

    The degree is written "A·B" (or "AxB").  It is read as u = A, n = B; when
    that assignment violates the parameter constraints (r must divide n and
    the triples' orders must divide m and n), the swapped reading n = A,
    u = B is tried, since both orders occur in the source notation.
    """
    from .meta import MetacyclicDataSet

    sc = _Scanner(text)
    sc.expect("(")
    sc.expect("(")
    first = sc.integer()
    sc._skip_ws()
    if sc.peek() == "·":
        sc.pos += 1
    elif sc.peek() in ("x", "X"):
        sc.pos += 1
    else:
        raise ParseError("expected degree separator '·' or 'x'", sc.text, sc.pos)
    second = sc.integer()
    sc.expect(",")
    r = sc.integer()
    sc.expect(",")
    k = sc.integer()
    sc.expect(")")
    sc.expect(",")
    g0 = sc.integer()
    sc.expect(";")
    triples: list[tuple[tuple[int, int], tuple[int, int], int]] = []
    while not sc.accept(")"):
        if triples:
            sc.expect(",")
        sc.expect("[")
        sc.expect("(")
        c1 = sc.integer()
        sc.expect(",")
        n11 = sc.integer()
        sc.expect(")")
        sc.expect(",")
        sc.expect("(")
        c2 = sc.integer()
        sc.expect(",")
        n12 = sc.integer()
        sc.expect(")")
        sc.expect(",")
        order = sc.integer()
        sc.expect("]")
        mult = 1
        if sc.accept("_"):
            mult = sc.integer()
            if mult < 1:
                raise ParseError("multiplicity must be positive", sc.text, sc.pos)
        triples.extend([((c1, n11), (c2, n12), order)] * mult)
    sc.end()

    def build(u: int, n: int):
        return MetacyclicDataSet(u, n, r, k % n, g0, tuple(triples))

    try:
        return build(first, second)
    except ValueError as exc_first:
        try:
            return build(second, first)
        except ValueError:
            raise ParseError(str(exc_first), text, 0) from exc_first


def format_meta(ds) -> str:
    head = f"(({ds.u}·{ds.n},{ds.r},{_format_k(ds.k, ds.n)}),{ds.g0};"
    parts = []
    for ((c1, n11), (c2, n12), order), mult in _grouped_triples(ds):
        body = f"[({c1},{n11}),({c2},{n12}),{order}]"
        parts.append(f"{body}_{mult}" if mult > 1 else body)
    return head + ",".join(parts) + ")"


def _grouped_triples(ds):
    out: list[list] = []
    for triple in ds.triples:
        if out and out[-1][0] == triple:
            out[-1][1] += 1
        else:
            out.append([triple, 1])
    return [(t, m) for t, m in out]


def meta_to_json(ds) -> dict:
    return {
        "schema": JSON_SCHEMA,
        "type": "meta",
        "u": ds.u,
        "n": ds.n,
        "r": ds.r,
        "k": ds.k,
        "g0": ds.g0,
        "triples": [
            {"c1": c1, "n11": n11, "c2": c2, "n12": n12, "order": order,
             "mult": mult}
            for ((c1, n11), (c2, n12), order), mult in _grouped_triples(ds)
        ],
    }


def meta_from_json(obj: dict):
    from .meta import MetacyclicDataSet

    if obj.get("schema") != JSON_SCHEMA:
        raise ValueError(f"unsupported schema: {obj.get('schema')!r}")
    triples: list[tuple[tuple[int, int], tuple[int, int], int]] = []
    for entry in obj.get("triples", []):
        triple = ((entry["c1"], entry["n11"]), (entry["c2"], entry["n12"]),
                  entry["order"])
        triples.extend([triple] * entry.get("mult", 1))
    return MetacyclicDataSet(obj["u"], obj["n"], obj["r"], obj["k"],
                             obj["g0"], tuple(triples))


def parse_any(text: str):
    """Parse either kind of data set from text or a JSON object string."""
    stripped = text.strip()
    if stripped.startswith("{"):
        obj = json.loads(stripped)
        if obj.get("type") == "meta":
            return meta_from_json(obj)
        return cyclic_from_json(obj)
    if stripped.startswith("(("):
        return parse_meta(stripped)
    return parse_cyclic(stripped)
