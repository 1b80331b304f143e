"""Streaming reader and writer for planar-code files.

Layout: an optional ``>>planar_code<<`` header, then records. A record
starts with the vertex count as one byte; a 0 byte instead announces the
wide variant, where the count and every following entry are unsigned
16-bit little-endian values. For each vertex 1..n its clockwise neighbours
follow (1-based), closed by a 0 entry.
"""

from __future__ import annotations

import io
from typing import BinaryIO, Iterator

from fullwiener.graph import FullereneGraph, GraphError

HEADER = b">>planar_code<<"
_HEADERS = {
    b">>planar_code<<": "little",
    b">>planar_code le<<": "little",
    b">>planar_code be<<": "big",
}
_BLOCK = 1 << 16


class RecordError(ValueError):
    """A record could not be decoded. ``index`` is 0-based, ``offset`` in bytes."""

    def __init__(self, message: str, index: int | None = None, offset: int | None = None):
        self.index = index
        self.offset = offset
        where = ""
        if index is not None:
            where = f" (record {index} at byte {offset})"
        super().__init__(message + where)


class StreamError(RecordError):
    """Nothing more can be read after this error."""


class TruncatedRecord(StreamError):
    pass


class BadHeader(StreamError):
    pass


class NonCubicRecord(RecordError):
    pass


class IdOutOfRange(RecordError):
    pass


class InvalidGraphRecord(RecordError):
    """Record decoded but the graph breaks a graph invariant (symmetry, order, ...)."""


class OrderTooLargeForNarrow(ValueError):
    pass


def encode(g: FullereneGraph, wide: bool | None = None) -> bytes:
    """One record for ``g``; ``wide=None`` picks the narrow form when it fits."""
    n = g.order
    if wide is None:
        wide = n > 255
    if not wide:
        if n > 255:
            raise OrderTooLargeForNarrow(f"order {n} needs the wide variant")
        out = bytearray([n])
        for nbrs in g.rotation:
            out.extend(u + 1 for u in nbrs)
            out.append(0)
        return bytes(out)
    if n > 0xFFFF:
        raise OrderTooLargeForNarrow(f"order {n} exceeds the 16-bit variant")
    out = bytearray(b"\x00")
    out += n.to_bytes(2, "little")
    for nbrs in g.rotation:
        for u in nbrs:
            out += (u + 1).to_bytes(2, "little")
        out += b"\x00\x00"
    return bytes(out)


def write(g: FullereneGraph, sink: BinaryIO, wide: bool | None = None) -> int:
    data = encode(g, wide)
    sink.write(data)
    return len(data)


def write_all(graphs, sink: BinaryIO, *, header: bool = False, wide: bool | None = None) -> int:
    written = 0
    if header:
        sink.write(HEADER)
        written += len(HEADER)
    for g in graphs:
        written += write(g, sink, wide)
    return written


class PlanarCodeStream:
    """Decode one record at a time from a binary stream.

    Memory is bounded by one read block plus one record. Records that are
    complete but invalid raise a :class:`RecordError` subclass and leave
    the stream on the next record boundary, so reading can continue;
    :class:`StreamError` (truncation, bad header) ends the stream.
    """

    def __init__(self, source: BinaryIO, *, check_order: bool = True):
        self._src = source
        self._buf = b""
        self._pos = 0
        self._base = 0  # absolute offset of _buf[0]
        self._eof = False
        self._mark: int | None = None
        self._order = "little"
        self.check_order = check_order
        self.header_present: bool | None = None
        self.graphs_read = 0
        self.records_seen = 0
        self.last_record: bytes = b""
        self.last_offset = 0

    @classmethod
    def from_bytes(cls, data: bytes, **kw) -> "PlanarCodeStream":
        return cls(io.BytesIO(data), **kw)

    @property
    def offset(self) -> int:
        return self._base + self._pos

    def _available(self) -> int:
        return len(self._buf) - self._pos

    def _fill(self, need: int) -> bool:
        """Make ``need`` unread bytes available; False if the stream ends first."""
        if self._available() >= need:
            return True
        keep = self._pos if self._mark is None else min(self._pos, self._mark)
        if keep:
            # drop consumed bytes, but never the start of the record being decoded
            self._base += keep
            self._buf = self._buf[keep:]
            self._pos -= keep
            if self._mark is not None:
                self._mark -= keep
        have = len(self._buf)
        if have - self._pos >= need:
            return True
        need += self._pos
        chunks = [self._buf]
        have = len(self._buf)
        while have < need and not self._eof:
            chunk = self._src.read(max(_BLOCK, need - have))
            if not chunk:
                self._eof = True
                break
            chunks.append(chunk)
            have += len(chunk)
        self._buf = b"".join(chunks)
        return have >= need

    def _read_header(self) -> None:
        longest = max(len(h) for h in _HEADERS)
        self._fill(longest)
        head = self._buf[self._pos:self._pos + longest]
        # a narrow record may start with n = 62 (">"), but never with ">>" and then a letter
        if not (head.startswith(b">>") and head[2:3].isalpha()):
            self.header_present = False
            return
        for h, order in _HEADERS.items():
            if head.startswith(h):
                self._pos += len(h)
                self._order = order
                self.header_present = True
                return
        self.header_present = False
        self._eof = True
        self._pos = len(self._buf)
        raise BadHeader(f"unrecognised header {head!r}", 0, 0)

    def _entry(self, width: int) -> int:
        if not self._fill(width):
            raise EOFError
        b = self._buf[self._pos:self._pos + width]
        self._pos += width
        return b[0] if width == 1 else int.from_bytes(b, self._order)  # type: ignore[arg-type]

    def _cubic_fast_path(self, n: int) -> list[list[int]] | None:
        # narrow cubic record: every 4th byte is a terminator and no other byte is 0
        size = 4 * n
        if not self._fill(size):
            return None
        body = self._buf[self._pos:self._pos + size]
        if body[3::4] != bytes(n) or body.count(0) != n:
            return None
        self._pos += size
        return [[body[i] - 1, body[i + 1] - 1, body[i + 2] - 1] for i in range(0, size, 4)]

    def read_raw(self) -> list[list[int]] | None:
        """Decode the next record into 0-based neighbour lists (any degree)."""
        if self.header_present is None:
            self._read_header()
        if not self._fill(1):
            return None
        index = self.records_seen
        start = self.offset
        self.last_offset = start
        self.records_seen += 1
        self._mark = self._pos
        try:
            n = self._entry(1)
            width = 1
            if n == 0:
                width = 2
                n = self._entry(2)
            fast = None if width == 2 else self._cubic_fast_path(n)
            if fast is not None:
                lists = fast
            else:
                lists = []
                for _ in range(n):
                    nbrs = []
                    while True:
                        x = self._entry(width)
                        if x == 0:
                            break
                        nbrs.append(x - 1)
                    lists.append(nbrs)
        except EOFError:
            self._eof = True
            self._pos = len(self._buf)
            self._mark = None
            raise TruncatedRecord("stream ends inside a record", index, start) from None
        self.last_record = self._buf[self._mark:self._pos]
        self._mark = None
        bad_id = next((u + 1 for nbrs in lists for u in nbrs if not 0 <= u < n), None)
        if bad_id is not None:
            raise IdOutOfRange(f"neighbour id {bad_id} outside 1..{n}", index, start)
        return lists

    def read_next(self) -> FullereneGraph | None:
        """Next graph, or None at end of stream."""
        lists = self.read_raw()
        if lists is None:
            return None
        index = self.records_seen - 1
        for v, nbrs in enumerate(lists):
            if len(nbrs) != 3:
                raise NonCubicRecord(f"vertex {v + 1} has {len(nbrs)} neighbours", index, self.last_offset)
        try:
            g = FullereneGraph.from_adjacency(lists, label=f"#{index}@{self.last_offset}", check_order=self.check_order)
        except GraphError as err:
            raise InvalidGraphRecord(f"{type(err).__name__}: {err}", index, self.last_offset) from err
        self.graphs_read += 1
        return g

    def __iter__(self) -> Iterator[FullereneGraph]:
        while True:
            g = self.read_next()
            if g is None:
                return
            yield g


def read_all(data: bytes | BinaryIO, **kw) -> list[FullereneGraph]:
    stream = PlanarCodeStream.from_bytes(data, **kw) if isinstance(data, bytes) else PlanarCodeStream(data, **kw)
    return list(stream)
