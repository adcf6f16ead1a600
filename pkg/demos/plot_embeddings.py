"""
Extending an embedding matrix
=============================

New rows are appended after the originals.  A row copied from a single
source is bit-identical to it; an averaged row is the mean of its sources
computed in float64 and rounded once.
"""

import tempfile
from pathlib import Path

import numpy as np

import transmi
from transmi.merge import Resolution

rng = np.random.default_rng(0)
emb = transmi.EmbeddingMatrix(rng.standard_normal((6, 4)))
new = transmi.initialize_new_rows(emb, [Resolution("a", -1.0, (2,)), Resolution("b", -1.0, (0, 3, 5))])
full = transmi.concat(emb, new)
print(full.rows, "x", full.dim)

print("copy identical:", full[6].tobytes() == emb[2].tobytes())
print("mean          :", full[7])
print("numpy mean    :", emb.data[[0, 3, 5]].astype(np.float64).mean(axis=0).astype(np.float32))

# the binary file is a 28-byte header followed by little-endian float32
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "e.bin"
    transmi.save_embeddings(full, path)
    print(path.stat().st_size, "bytes =", 28 + 4 * full.rows * full.dim)
    print("round trip:", transmi.load_embeddings(path) == full)
