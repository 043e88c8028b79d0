"""Single-file binary container for arrays plus a JSON header.

Layout (all integers little-endian):

    bytes 0..7    magic, 8 ASCII bytes identifying the file kind
    bytes 8..11   uint32 N, byte length of the UTF-8 JSON header
    bytes 12..    JSON header, exactly N bytes
    then          raw array payloads, back to back, in header order

The header is ``{"meta": {...}, "arrays": [{"name", "dtype", "shape"}, ...]}``.
Array payloads are C-order raw bytes of the stated dtype. Nothing in the file
depends on wall-clock time, so writing the same content twice produces
byte-identical files.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

DATASET_MAGIC = b"KFDSET01"
CHECKPOINT_MAGIC = b"KFCKPT01"
LOG_MAGIC = b"KFDLOG01"


class RecordFormatError(ValueError):
    pass


def write_record(path: str | Path, magic: bytes, meta: dict, arrays: dict[str, np.ndarray]) -> None:
    if len(magic) != 8:
        raise ValueError("magic must be exactly 8 bytes")
    index = []
    payloads = []
    for name, arr in arrays.items():
        arr = np.ascontiguousarray(arr)
        index.append({"name": name, "dtype": arr.dtype.str, "shape": list(arr.shape)})
        payloads.append(arr.tobytes())
    header = json.dumps({"meta": meta, "arrays": index}, sort_keys=True).encode("utf-8")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        f.write(magic)
        f.write(struct.pack("<I", len(header)))
        f.write(header)
        for p in payloads:
            f.write(p)


def read_record(path: str | Path, magic: bytes) -> tuple[dict, dict[str, np.ndarray]]:
    with open(path, "rb") as f:
        got = f.read(8)
        if got != magic:
            raise RecordFormatError(f"{path}: expected magic {magic!r}, found {got!r}")
        (hlen,) = struct.unpack("<I", f.read(4))
        header = json.loads(f.read(hlen).decode("utf-8"))
        arrays = {}
        for entry in header["arrays"]:
            dtype = np.dtype(entry["dtype"])
            shape = tuple(entry["shape"])
            n = dtype.itemsize * int(np.prod(shape, dtype=np.int64)) if shape else dtype.itemsize
            buf = f.read(n)
            if len(buf) != n:
                raise RecordFormatError(f"{path}: truncated payload for array {entry['name']!r}")
            arrays[entry["name"]] = np.frombuffer(buf, dtype=dtype).reshape(shape).copy()
    return header["meta"], arrays
