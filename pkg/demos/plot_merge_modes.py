"""
Resolving ambiguous transliterations
====================================

The simplified and traditional spellings of "sun" both romanize to
``taiyang``.  Each merge mode picks a different score for the new entry,
and in turn a different embedding row.
"""

import numpy as np

import transmi
from transmi.unigram import UnigramModel

table = transmi.load_default_rules()
model = UnigramModel.from_pieces(
    [("<unk>", -20.0), ("▁太阳", -8.1), ("▁太陽", -7.5), ("▁tai", -9.0), ("yang", -9.5)],
    specials=["<unk>"],
)
emb = transmi.EmbeddingMatrix(np.arange(10, dtype=np.float32).reshape(5, 2))

for mode in transmi.MergeMode:
    merged, resolutions, report = transmi.merge(model, table, mode)
    (r,) = resolutions
    rows = transmi.initialize_new_rows(emb, resolutions)
    print(f"{mode.value:3}  score {r.chosen_score:6.2f}  provenance {r.provenance}  row {rows[0].tolist()}")

print(report.histogram)

# the new entry now outscores the two fragments
print(transmi.tokenize(merged, "taiyang").pieces)
