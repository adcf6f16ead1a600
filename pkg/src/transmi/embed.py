"""Embedding matrices: binary I/O and initialization of rows for new subwords.

Binary layout (little-endian)::

    b"TMIE" | u32 version=1 | u32 precision=32 | u64 rows | u64 dim | rows*dim f32

Row ``i`` always belongs to tokenizer id ``i``.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from os import PathLike
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, EmbeddingFormatError, ProvenanceError

MAGIC = b"TMIE"
VERSION = 1
PRECISION = 32
_HEADER = struct.Struct("<4sIIQQ")
_DTYPE = np.dtype("<f4")


@dataclass(frozen=True, eq=False)
class EmbeddingMatrix:
    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data)
        if data.ndim != 2:
            raise ValueError("embedding data must be 2-D (rows, dim)")
        if data.shape[1] < 1:
            raise ValueError("embedding dim must be positive")
        data = np.array(data, dtype=_DTYPE, order="C", copy=True)
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def empty(cls, dim: int) -> "EmbeddingMatrix":
        return cls(np.zeros((0, dim), dtype=_DTYPE))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int:
        return self.data.shape[1]

    def __len__(self) -> int:
        return self.rows

    def __getitem__(self, i):
        return self.data[i]

    def __eq__(self, other):
        if not isinstance(other, EmbeddingMatrix):
            return NotImplemented
        return self.data.shape == other.data.shape and self.data.tobytes() == other.data.tobytes()

    def to_bytes(self) -> bytes:
        return _HEADER.pack(MAGIC, VERSION, PRECISION, self.rows, self.dim) + self.data.tobytes()


def from_bytes(raw: bytes, origin: str = "<bytes>") -> EmbeddingMatrix:
    if len(raw) < _HEADER.size:
        raise EmbeddingFormatError(f"{origin}: truncated header")
    magic, version, precision, rows, dim = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise EmbeddingFormatError(f"{origin}: bad magic {magic!r}")
    if version != VERSION or precision != PRECISION:
        raise EmbeddingFormatError(f"{origin}: unsupported version {version} / precision {precision}")
    if dim < 1:
        raise EmbeddingFormatError(f"{origin}: dim must be positive")
    expected = rows * dim * _DTYPE.itemsize
    payload = raw[_HEADER.size :]
    if len(payload) < expected:
        raise EmbeddingFormatError(f"{origin}: truncated payload ({len(payload)} of {expected} bytes)")
    if len(payload) > expected:
        raise EmbeddingFormatError(f"{origin}: {len(payload) - expected} trailing bytes")
    return EmbeddingMatrix(np.frombuffer(payload, dtype=_DTYPE).reshape(rows, dim))


def load_embeddings(path: str | PathLike) -> EmbeddingMatrix:
    with open(path, "rb") as f:
        return from_bytes(f.read(), str(path))


def save_embeddings(matrix: EmbeddingMatrix, path: str | PathLike) -> None:
    with open(path, "wb") as f:
        f.write(matrix.to_bytes())


def load_embeddings_tsv(path: str | PathLike) -> EmbeddingMatrix:
    """Import ``id<TAB>v1<TAB>...<TAB>vd`` lines; ids must cover 0..n-1 exactly once."""
    rows: dict[int, list[float]] = {}
    dim = None
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            try:
                idx = int(fields[0])
                vec = [float(x) for x in fields[1:]]
            except ValueError:
                raise EmbeddingFormatError(f"{path}:{lineno}: non-numeric field") from None
            if dim is None:
                dim = len(vec)
            if len(vec) != dim or dim == 0:
                raise EmbeddingFormatError(f"{path}:{lineno}: expected {dim} values, got {len(vec)}")
            if idx in rows:
                raise EmbeddingFormatError(f"{path}:{lineno}: duplicate id {idx}")
            rows[idx] = vec
    if dim is None:
        raise EmbeddingFormatError(f"{path}: no rows")
    if sorted(rows) != list(range(len(rows))):
        raise EmbeddingFormatError(f"{path}: ids are not contiguous from 0")
    return EmbeddingMatrix(np.array([rows[i] for i in range(len(rows))], dtype=np.float64))


def initialize_new_rows(e_orig: EmbeddingMatrix, resolutions: Sequence) -> EmbeddingMatrix:
    """One row per resolution: a copy of the single source row, or the mean of all sources.

    Means are accumulated in float64 and rounded to float32 once.
    """
    out = np.empty((len(resolutions), e_orig.dim), dtype=_DTYPE)
    for k, res in enumerate(resolutions):
        ids = list(res.provenance)
        if not ids:
            raise ProvenanceError(f"resolution {res.v!r} has no provenance")
        bad = [i for i in ids if not 0 <= i < e_orig.rows]
        if bad:
            raise ProvenanceError(f"provenance id {bad[0]} out of range for {e_orig.rows} rows")
        if len(ids) == 1:
            out[k] = e_orig.data[ids[0]]
        else:
            acc = e_orig.data[ids].astype(np.float64).sum(axis=0)
            out[k] = (acc / len(ids)).astype(_DTYPE)
    return EmbeddingMatrix(out)


def concat(e_orig: EmbeddingMatrix, e_add: EmbeddingMatrix) -> EmbeddingMatrix:
    if e_orig.dim != e_add.dim:
        raise DimensionMismatchError(f"cannot concatenate dim {e_orig.dim} with dim {e_add.dim}")
    return EmbeddingMatrix(np.concatenate([e_orig.data, e_add.data], axis=0))
