"""Reader and writer for ``.lmap`` link-map description files.

A file is line oriented; ``#`` starts a comment. Grammar::

    linkmap <name>
    dp+ <id> sign=<+1|-1> n=<int>
    dp- <id> sign=<+1|-1> n=<int>
    pair <id> = <dp-id> <dp-id>
    disk <id> pair=<pair-id> primary=<int> framed=<0|1>
      x sign=<+1|-1> m=<int>
    end
    sphere <id> eps=<+1|-1> w2=<0|1>
      d sign=<+1|-1> exp=<int>
    end
    handles <int>

``serialize`` writes the records in exactly this order with two-space
indentation inside blocks. Comment lines before the ``linkmap`` header are
kept and written back; all other comments are dropped.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .invariants import DoublePoint, Intersection, WhitneyDiskData
from .wall import DiscPoint, PairingData, SphereClass

__all__ = [
    "LinkMapDocument",
    "ParseError",
    "parse",
    "serialize",
    "load",
    "kirk_example",
    "kirk_text",
    "build_kirk",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line, self.col, self.message = line, col, message
        super().__init__(f"line {line}, col {col}: {message}" if line else message)


@dataclass(frozen=True)
class LinkMapDocument:
    name: str
    dp_plus: tuple[DoublePoint, ...] = ()
    dp_minus: tuple[DoublePoint, ...] = ()
    pairs: tuple[tuple[str, str, str], ...] = ()
    disks: tuple[WhitneyDiskData, ...] = ()
    spheres: tuple[SphereClass, ...] = ()
    handles: int | None = None
    header: tuple[str, ...] = field(default=(), compare=False)

    @property
    def framed(self) -> bool:
        return all(w.framed for w in self.disks)


_ID = r"[A-Za-z_][A-Za-z0-9_.+\-']*"
_INT = r"-?\d+"
_SIGN = r"[+-]1"
_BIT = r"[01]"

_FIELD_SPECS = {
    "dp": (("sign", _SIGN), ("n", _INT)),
    "disk": (("pair", _ID), ("primary", _INT), ("framed", _BIT)),
    "x": (("sign", _SIGN), ("m", _INT)),
    "sphere": (("eps", _SIGN), ("w2", _BIT)),
    "d": (("sign", _SIGN), ("exp", _INT)),
}


def _strip_comment(line: str) -> str:
    if line.lstrip().startswith("#"):
        return ""
    m = re.search(r"\s#", line)
    return line[: m.start()] if m else line


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.ids: dict[str, int] = {}

    def fail(self, lineno: int, col: int, msg: str):
        raise ParseError(msg, lineno, col)

    def tokens(self, lineno: int, raw: str) -> list[tuple[str, int]]:
        return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", raw)]

    def fields(self, lineno: int, toks, layout) -> dict[str, str]:
        if len(toks) != len(layout):
            col = toks[len(layout)][1] if len(toks) > len(layout) else (toks[-1][1] if toks else 1)
            self.fail(lineno, col, f"expected {len(layout)} fields: {' '.join(k + '=' for k, _ in layout)}")
        out = {}
        for (tok, col), (key, pat) in zip(toks, layout):
            if "=" not in tok:
                self.fail(lineno, col, f"expected {key}=..., got {tok!r}")
            k, v = tok.split("=", 1)
            if k != key:
                self.fail(lineno, col, f"expected field {key!r}, got {k!r}")
            if not re.fullmatch(pat, v):
                what = "sign must be +1 or -1" if pat == _SIGN else f"malformed value for {key}: {v!r}"
                self.fail(lineno, col + len(k) + 1, what)
            out[k] = v
        return out

    def declare(self, ident: str, lineno: int, col: int):
        if not re.fullmatch(_ID, ident):
            self.fail(lineno, col, f"malformed identifier {ident!r}")
        if ident in self.ids:
            self.fail(lineno, col, f"duplicate id {ident!r} (first declared on line {self.ids[ident]})")
        self.ids[ident] = lineno

    def parse(self) -> LinkMapDocument:
        header: list[str] = []
        name = None
        dp = {"dp+": [], "dp-": []}
        pairs: list[tuple[str, str, str, int, int]] = []
        disks: list[tuple[WhitneyDiskData, int, int]] = []
        spheres: list[SphereClass] = []
        handles = None
        block = None  # (kind, head fields, items, lineno)

        for lineno, raw_line in enumerate(self.lines, 1):
            if name is None and raw_line.lstrip().startswith("#"):
                header.append(raw_line.rstrip())
                continue
            raw = _strip_comment(raw_line).rstrip()
            if not raw.strip():
                continue
            toks = self.tokens(lineno, raw)
            word, col = toks[0]
            if name is None:
                if word != "linkmap":
                    self.fail(lineno, col, "expected 'linkmap <name>' header")
                rest = raw.strip()[len("linkmap"):].strip()
                if not rest:
                    self.fail(lineno, col + len(word), "missing link map name")
                name = rest
                continue

            if block is not None:
                kind, head, items, start = block
                item_word = "x" if kind == "disk" else "d"
                if word == "end" and len(toks) == 1:
                    if kind == "disk":
                        w = WhitneyDiskData(
                            head["id"],
                            int(head["primary"]),
                            tuple(items),
                            pair=head["pair"],
                            framed=head["framed"] == "1",
                        )
                        disks.append((w, start, head["pair_col"]))
                    else:
                        pd = PairingData(head["id"], tuple(items), int(head["eps"]))
                        spheres.append(SphereClass(head["id"], pd, int(head["w2"])))
                    block = None
                elif word == item_word:
                    f = self.fields(lineno, toks[1:], _FIELD_SPECS[item_word])
                    if kind == "disk":
                        items.append(Intersection(int(f["sign"]), int(f["m"])))
                    else:
                        items.append(DiscPoint(int(f["sign"]), int(f["exp"])))
                else:
                    self.fail(lineno, col, f"expected '{item_word} ...' or 'end' inside {kind} block")
                continue

            if word in ("dp+", "dp-"):
                if len(toks) < 2:
                    self.fail(lineno, col, "missing id")
                ident, icol = toks[1]
                self.declare(ident, lineno, icol)
                f = self.fields(lineno, toks[2:], _FIELD_SPECS["dp"])
                dp[word].append(DoublePoint(int(f["sign"]), int(f["n"]), ident))
            elif word == "pair":
                if len(toks) != 5 or toks[2][0] != "=":
                    self.fail(lineno, col, "expected 'pair <id> = <dp-id> <dp-id>'")
                ident, icol = toks[1]
                self.declare(ident, lineno, icol)
                pairs.append((ident, toks[3][0], toks[4][0], lineno, toks[3][1]))
            elif word in ("disk", "sphere"):
                if len(toks) < 2:
                    self.fail(lineno, col, "missing id")
                ident, icol = toks[1]
                self.declare(ident, lineno, icol)
                head = self.fields(lineno, toks[2:], _FIELD_SPECS[word])
                head["id"] = ident
                if word == "disk":
                    head["pair_col"] = toks[2][1]
                block = (word, head, [], lineno)
            elif word == "handles":
                if len(toks) != 2 or not re.fullmatch(r"\d+", toks[1][0]):
                    self.fail(lineno, col, "expected 'handles <nonnegative int>'")
                if handles is not None:
                    self.fail(lineno, col, "duplicate handles line")
                handles = int(toks[1][0])
            else:
                self.fail(lineno, col, f"unknown record {word!r}")

        if name is None:
            raise ParseError("missing 'linkmap' header", len(self.lines) or 1, 1)
        if block is not None:
            self.fail(block[3], 1, f"unterminated {block[0]} block")

        plus_ids = {p.id for p in dp["dp+"]}
        for ident, a, b, lineno, col in pairs:
            for ref, rcol in ((a, col), (b, col + len(a) + 1)):
                if ref not in plus_ids:
                    self.fail(lineno, rcol, f"pair {ident!r} references undeclared double point {ref!r}")
        pair_ids = {p[0] for p in pairs}
        for w, lineno, col in disks:
            if w.pair not in pair_ids:
                self.fail(lineno, col, f"disk {w.id!r} references undeclared pair {w.pair!r}")

        return LinkMapDocument(
            name=name,
            dp_plus=tuple(dp["dp+"]),
            dp_minus=tuple(dp["dp-"]),
            pairs=tuple(p[:3] for p in pairs),
            disks=tuple(w for w, _, _ in disks),
            spheres=tuple(spheres),
            handles=handles,
            header=tuple(header),
        )


def parse(text: str | bytes) -> LinkMapDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not UTF-8: {e}") from None
    return _Parser(text).parse()


def _sign(v: int) -> str:
    return "+1" if v > 0 else "-1"


def serialize(doc: LinkMapDocument) -> str:
    out = list(doc.header)
    out.append(f"linkmap {doc.name}")
    for tag, pts in (("dp+", doc.dp_plus), ("dp-", doc.dp_minus)):
        for p in pts:
            out.append(f"{tag} {p.id} sign={_sign(p.sign)} n={p.n}")
    for ident, a, b in doc.pairs:
        out.append(f"pair {ident} = {a} {b}")
    for w in doc.disks:
        out.append(f"disk {w.id} pair={w.pair} primary={w.primary} framed={int(w.framed)}")
        out.extend(f"  x sign={_sign(x.sign)} m={x.m}" for x in w.intersections)
        out.append("end")
    for s in doc.spheres:
        out.append(f"sphere {s.id} eps={_sign(s.pairing.eps)} w2={s.w2}")
        out.extend(f"  d sign={_sign(p.sign)} exp={p.exp}" for p in s.pairing.points)
        out.append("end")
    if doc.handles is not None:
        out.append(f"handles {doc.handles}")
    return "\n".join(out) + "\n"


def load(path) -> LinkMapDocument:
    with open(path, "rb") as fh:
        return parse(fh.read())


def kirk_text() -> str:
    return resources.files("linktau.data").joinpath("kirk.lmap").read_text(encoding="utf-8")


def kirk_example() -> LinkMapDocument:
    return parse(kirk_text())


def build_kirk() -> LinkMapDocument:
    """The bundled example assembled directly in code, for cross-checking the file."""
    dp_plus = []
    pairs = []
    for i, n in enumerate((0, 1, 1, 1, 1), 1):
        dp_plus += [DoublePoint(1, n, f"p{i}+"), DoublePoint(-1, n, f"p{i}-")]
        pairs.append((f"w{i}", f"p{i}+", f"p{i}-"))
    dp_minus = [DoublePoint(-1, 1, f"q{i}") for i in range(1, 5)] + [DoublePoint(1, 2, "q5")]
    disks = [
        WhitneyDiskData("W1", 0, ((1, 0),), pair="w1"),
        WhitneyDiskData("W2", 1, ((1, 1), (1, 1), (-1, -1), (-1, -1), (1, 0)), pair="w2"),
        WhitneyDiskData("W3", 1, (), pair="w3"),
        WhitneyDiskData("W4", 1, ((1, 0),), pair="w4"),
        WhitneyDiskData("W5", 1, ((1, 0),), pair="w5"),
    ]
    once = ((1, 0), (1, 1))
    spheres = [SphereClass.build(f"A{i}", once) for i in range(1, 5)]
    spheres.append(SphereClass.build("A5", once + once))
    return LinkMapDocument(
        name="kirk",
        dp_plus=tuple(dp_plus),
        dp_minus=tuple(dp_minus),
        pairs=tuple(pairs),
        disks=tuple(disks),
        spheres=tuple(spheres),
        handles=5,
    )
