"""
Merging a romanized sentence into a Hani tokenizer
==================================================

A small tokenizer knows the Hani words of "today is good weather" but only
ragged Latin fragments.  After merging the transliterations of its own
vocabulary, the romanized sentence splits along the same word boundaries as
the native one.
"""

from pathlib import Path

import transmi
from transmi.unigram import load_model

data = Path(transmi.__file__).parent / "data"
original = load_model(data / "weather.tokenizer.json")
table = transmi.load_default_rules()

native = "今天是个好天气"
romanized = transmi.transliterate(table, native)
print("romanized:", romanized)

# before: the Latin fragments win by default
print("original :", " ".join(transmi.tokenize(original, romanized).pieces))

# merge keeps the highest score when several entries romanize alike
merged, resolutions, report = transmi.merge(original, table, "max")
for r in resolutions:
    print(f"  added {r.v!r:12} score {r.chosen_score:6.2f} from id {r.provenance}")

print("merged   :", " ".join(transmi.tokenize(merged, romanized).pieces))

# native text tokenizes exactly as before
assert transmi.tokenize(merged, native).ids == transmi.tokenize(original, native).ids
print("native   :", " ".join(transmi.tokenize(merged, native).pieces))
