"""Group presentations attached to rectangles, and their text export.

Generators are numbered 1..n for g1..gn and n+1..n+m for h1..hm.  A word is
a list of (generator index, +1 or -1) letters.  The export is a script in
the usual finitely-presented-group syntax, one block per rectangle:

    # rectangle n=2 m=2 id=<hash>
    F := FreeGroup("g1","g2","h1","h2");
    rels := [ F.1*F.3*F.4^-1*F.2^-1, F.1*F.4*F.3^-1*F.2^-1 ];
    G := F / rels;
    # associated group = universal torsion-free image of G

Blocks are separated by one blank line.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .canon import canonical_form
from .core import OutOfRange, PartialRectangle, Position, RectangleError

Letter = tuple  # (generator index, exponent)

TORSION_FREE_NOTE = "# associated group = universal torsion-free image of G"


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple  # tuples of letters
    n: int = 0
    m: int = 0
    ident: str = ""

    def __post_init__(self):
        k = len(self.generators)
        rels = tuple(tuple((int(g), int(e)) for g, e in w) for w in self.relators)
        for w in rels:
            for g, e in w:
                if not 1 <= g <= k or e not in (1, -1):
                    raise ValueError(f"bad letter ({g},{e}) for {k} generators")
            if _free_reduce(w) != w:
                raise ValueError(f"relator {w} is not freely reduced")
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", rels)


def _free_reduce(word: Iterable[Letter]) -> tuple:
    out: list = []
    for g, e in word:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def generator_names(n: int, m: int) -> list[str]:
    return [f"g{i}" for i in range(1, n + 1)] + [f"h{j}" for j in range(1, m + 1)]


def rectangle_id(rect: PartialRectangle) -> str:
    """Short hash of the canonical form, or of rect itself when it has none."""
    try:
        key = canonical_form(rect)
    except RectangleError:
        key = rect
    blob = json.dumps([key.n, key.m, list(key.match)], separators=(",", ":"))
    return hashlib.sha1(blob.encode()).hexdigest()[:16]


def associated_presentation(rect: PartialRectangle) -> GroupPresentation:
    """One relator g_i h_j h_j'^-1 g_i'^-1 per edge, (i, j) the smaller endpoint."""
    n = rect.n
    rels = []
    for p, q in rect.edges:  # p < q lexicographically
        rels.append(_free_reduce([(p.row, 1), (n + p.col, 1), (n + q.col, -1), (q.row, -1)]))
    return GroupPresentation(generator_names(n, rect.m), tuple(rels), n, rect.m, rectangle_id(rect))


def core_presentation(rect: PartialRectangle, p) -> GroupPresentation:
    """The associated presentation with g_{p.row} = h_{p.col} = 1 added."""
    p = Position(*p)
    if not (1 <= p.row <= rect.n and 1 <= p.col <= rect.m):
        raise OutOfRange(f"{p} outside {rect.n}x{rect.m}")
    base = associated_presentation(rect)
    extra = (((p.row, 1),), ((rect.n + p.col, 1),))
    return GroupPresentation(base.generators, base.relators + extra, base.n, base.m, base.ident)


# -- text format ----------------------------------------------------------


def _format_word(word: Sequence[Letter]) -> str:
    return "*".join(f"F.{g}" if e == 1 else f"F.{g}^-1" for g, e in word)


def format_block(pres: GroupPresentation) -> str:
    gens = ",".join(f'"{g}"' for g in pres.generators)
    rels = ", ".join(_format_word(w) for w in pres.relators)
    return "\n".join([
        f"# rectangle n={pres.n} m={pres.m} id={pres.ident}",
        f"F := FreeGroup({gens});",
        f"rels := [ {rels} ];" if rels else "rels := [ ];",
        "G := F / rels;",
        TORSION_FREE_NOTE,
    ])


def format_presentations(presentations: Sequence[GroupPresentation]) -> str:
    if not presentations:
        return ""
    return "\n\n".join(format_block(p) for p in presentations) + "\n"


def write_atomic(path, text: str) -> None:
    """Write text to path through a temporary file in the same directory."""
    path = os.fspath(path)
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def export_presentations(presentations: Sequence[GroupPresentation], path) -> None:
    """Blocks in input order; an empty list writes an empty file.  Raises OSError."""
    write_atomic(path, format_presentations(list(presentations)))


_HEADER = re.compile(r"# rectangle n=(\d+) m=(\d+) id=(\S*)$")
_GENS = re.compile(r"F := FreeGroup\((.*)\);$")
_RELS = re.compile(r"rels := \[ ?(.*?) ?\];$")
_LETTER = re.compile(r"F\.(\d+)(\^-1)?$")


def parse_presentations(text: str) -> list[GroupPresentation]:
    """Inverse of :func:`format_presentations`."""
    out = []
    for block in (b for b in text.split("\n\n") if b.strip()):
        lines = block.strip("\n").split("\n")
        if len(lines) != 5:
            raise ValueError(f"block has {len(lines)} lines, expected 5")
        head, gens, rels, quot, note = lines
        mh, mg, mr = _HEADER.match(head), _GENS.match(gens), _RELS.match(rels)
        if not (mh and mg and mr) or quot != "G := F / rels;" or note != TORSION_FREE_NOTE:
            raise ValueError(f"malformed block starting {head!r}")
        names = [g.strip().strip('"') for g in mg.group(1).split(",")]
        words = []
        body = mr.group(1).strip()
        for w in body.split(", ") if body else []:
            letters = []
            for tok in w.split("*"):
                ml = _LETTER.match(tok)
                if not ml:
                    raise ValueError(f"bad letter {tok!r}")
                letters.append((int(ml.group(1)), -1 if ml.group(2) else 1))
            words.append(tuple(letters))
        out.append(GroupPresentation(tuple(names), tuple(words), int(mh.group(1)), int(mh.group(2)), mh.group(3)))
    return out
