"""Source files, byte spans, and span-precise text patching.

Offsets throughout the toolkit are byte offsets into the UTF-8 encoding of
the file. For ASCII sources (the overwhelming majority of Solidity code)
byte and character offsets coincide; for anything else the conversion
helpers below keep the two views consistent.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import OutOfBoundsError, OverlapError

_PRAGMA_RE = re.compile(r"pragma\s+solidity\s+([^;]+);")


@dataclass(frozen=True)
class Span:
    """Half-open byte range [start, end) with 1-based line/column coordinates."""

    start: int
    end: int
    start_line: int = 0
    start_col: int = 0
    end_line: int = 0
    end_col: int = 0

    def __post_init__(self):
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid span [{self.start}, {self.end})")

    def contains(self, other: "Span") -> bool:
        return self.start <= other.start and other.end <= self.end

    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end

    @property
    def key(self) -> tuple[int, int]:
        return (self.start, self.end)


class LineIndex:
    """Maps byte offsets to 1-based (line, col) under the text's actual newlines."""

    def __init__(self, data: bytes):
        self._starts = [0]
        idx = data.find(b"\n")
        while idx != -1:
            self._starts.append(idx + 1)
            idx = data.find(b"\n", idx + 1)
        self._size = len(data)

    def linecol(self, offset: int) -> tuple[int, int]:
        if offset < 0 or offset > self._size:
            raise OutOfBoundsError(f"offset {offset} outside [0, {self._size}]")
        line = bisect.bisect_right(self._starts, offset)
        return line, offset - self._starts[line - 1] + 1

    def span(self, start: int, end: int) -> Span:
        sl, sc = self.linecol(start)
        el, ec = self.linecol(end)
        return Span(start, end, sl, sc, el, ec)


@dataclass
class SourceFile:
    """A Solidity source file: workspace-relative path plus full text."""

    path: str
    content: str
    pragma: str | None = None
    _data: bytes = field(init=False, repr=False)
    _index: LineIndex = field(init=False, repr=False)

    def __post_init__(self):
        self._data = self.content.encode("utf-8")
        self._index = LineIndex(self._data)
        if self.pragma is None:
            m = _PRAGMA_RE.search(self.content)
            if m:
                self.pragma = m.group(1).strip()

    @classmethod
    def load(cls, path: str | Path, root: str | Path | None = None) -> "SourceFile":
        p = Path(path)
        rel = p.relative_to(root).as_posix() if root else p.as_posix()
        return cls(path=rel, content=p.read_text(encoding="utf-8"))

    @property
    def data(self) -> bytes:
        return self._data

    def span(self, start: int, end: int) -> Span:
        return self._index.span(start, end)

    def text(self, span: Span) -> str:
        return self._data[span.start : span.end].decode("utf-8")

    def is_legacy_dialect(self) -> bool:
        """True when the pragma pins the file below 0.5 (the 0.4.x dialect)."""
        if not self.pragma:
            return False
        m = re.search(r"0\.(\d+)", self.pragma)
        return bool(m) and int(m.group(1)) < 5


@dataclass(frozen=True)
class Edit:
    """Replace the text at ``span`` with ``replacement``."""

    span: Span
    replacement: str


def apply_edits(content: str, edits: list[Edit]) -> str:
    """Apply a batch of non-overlapping edits as if simultaneously.

    Raises OverlapError / OutOfBoundsError before touching anything.
    """
    data = content.encode("utf-8")
    ordered = sorted(edits, key=lambda e: e.span.start)
    for e in ordered:
        if e.span.end > len(data):
            raise OutOfBoundsError(
                f"edit [{e.span.start}, {e.span.end}) exceeds length {len(data)}"
            )
    for a, b in zip(ordered, ordered[1:]):
        if a.span.end > b.span.start:
            raise OverlapError(
                f"edits [{a.span.start}, {a.span.end}) and [{b.span.start}, {b.span.end}) overlap"
            )
    out = []
    cursor = 0
    for e in ordered:
        out.append(data[cursor : e.span.start])
        out.append(e.replacement.encode("utf-8"))
        cursor = e.span.end
    out.append(data[cursor:])
    return b"".join(out).decode("utf-8")


def invert_edits(content: str, edits: list[Edit]) -> list[Edit]:
    """Edits that undo ``edits`` when applied to apply_edits(content, edits)."""
    data = content.encode("utf-8")
    ordered = sorted(edits, key=lambda e: e.span.start)
    inverses = []
    shift = 0
    for e in ordered:
        original = data[e.span.start : e.span.end].decode("utf-8")
        new_start = e.span.start + shift
        new_len = len(e.replacement.encode("utf-8"))
        inverses.append(Edit(Span(new_start, new_start + new_len), original))
        shift += new_len - (e.span.end - e.span.start)
    return inverses
