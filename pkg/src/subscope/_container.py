"""Byte-level helpers for the DIMX-family container files.

Layout shared by all containers in this package::

    magic   4 bytes ASCII
    version u32 little-endian
    count   u32 little-endian (number of sections)
    then `count` sections, each:
        tag     4 bytes ASCII (space padded)
        length  u64 little-endian (payload byte length)
        payload `length` bytes

All multi-byte integers are little-endian.  Floats are 64-bit IEEE-754
little-endian, row-major for matrices.
"""

from __future__ import annotations

import os
import struct

import numpy as np

from .exceptions import BadMagic, IoFailure, ShapeMismatch, VersionMismatch

_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")

FLOAT = np.dtype("<f8")


def pack_matrix(a: np.ndarray) -> bytes:
    """Serialize a 2-D float array as u64 rows, u64 cols, row-major f64 payload."""
    a = np.ascontiguousarray(a, dtype=FLOAT)
    rows, cols = a.shape
    return _U64.pack(rows) + _U64.pack(cols) + a.tobytes(order="C")


def unpack_matrix(payload: bytes, tag: str, offset: int) -> np.ndarray:
    if len(payload) < 16:
        raise ShapeMismatch(
            f"section {tag!r} at offset {offset}: payload too short for matrix header"
        )
    rows = _U64.unpack_from(payload, 0)[0]
    cols = _U64.unpack_from(payload, 8)[0]
    expected = 16 + 8 * rows * cols
    if len(payload) != expected:
        raise ShapeMismatch(
            f"section {tag!r} at offset {offset}: declared shape {rows}x{cols} "
            f"needs {expected} bytes, payload has {len(payload)}"
        )
    data = np.frombuffer(payload, dtype=FLOAT, count=rows * cols, offset=16)
    return data.reshape(rows, cols).copy()


def write_container(path, magic: bytes, sections: list[tuple[str, bytes]]) -> None:
    """Write sections under the given 4-byte magic. Atomic: temp file + rename."""
    if len(magic) != 4:
        raise ValueError("magic must be exactly 4 bytes")
    blob = bytearray()
    blob += magic
    blob += _U32.pack(1)
    blob += _U32.pack(len(sections))
    for tag, payload in sections:
        tag_bytes = tag.encode("ascii").ljust(4)
        if len(tag_bytes) != 4:
            raise ValueError(f"section tag {tag!r} does not fit in 4 bytes")
        blob += tag_bytes
        blob += _U64.pack(len(payload))
        blob += payload
    tmp = f"{path}.tmp"
    try:
        with open(tmp, "wb") as fh:
            fh.write(blob)
        os.replace(tmp, path)
    except OSError as exc:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise IoFailure(f"failed to write {path}: {exc}") from exc


def read_container(path, magic: bytes) -> list[tuple[str, bytes, int]]:
    """Read a container, returning (tag, payload, payload_offset) per section."""
    try:
        with open(path, "rb") as fh:
            blob = fh.read()
    except OSError as exc:
        raise IoFailure(f"failed to read {path}: {exc}") from exc
    if len(blob) < 12:
        raise BadMagic(f"{path}: file too short ({len(blob)} bytes) for a container header")
    if blob[:4] != magic:
        raise BadMagic(f"{path}: bad magic {blob[:4]!r} at offset 0, expected {magic!r}")
    version = _U32.unpack_from(blob, 4)[0]
    if version != 1:
        raise VersionMismatch(f"{path}: unsupported version {version} at offset 4, expected 1")
    count = _U32.unpack_from(blob, 8)[0]
    sections = []
    pos = 12
    for _ in range(count):
        if pos + 12 > len(blob):
            raise ShapeMismatch(f"{path}: truncated section header at offset {pos}")
        tag = blob[pos : pos + 4].decode("ascii", errors="replace").rstrip()
        length = _U64.unpack_from(blob, pos + 4)[0]
        start = pos + 12
        if start + length > len(blob):
            raise ShapeMismatch(
                f"{path}: section {tag!r} at offset {pos} declares {length} bytes, "
                f"file ends after {len(blob) - start}"
            )
        sections.append((tag, blob[start : start + length], start))
        pos = start + length
    if pos != len(blob):
        raise ShapeMismatch(f"{path}: {len(blob) - pos} trailing bytes after last section")
    return sections
