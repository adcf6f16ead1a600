"""
Shorter sequences on romanized text
===================================

A toy multilingual tokenizer is merged with its own transliterations and
both versions tokenize the same 100 sentences, once in their native scripts
and once romanized.
"""

from pathlib import Path

import transmi
from transmi.pipeline import read_sentences, sequence_stats
from transmi.unigram import load_model

data = Path(transmi.__file__).parent / "data"
original = load_model(data / "toy.tokenizer.json")
merged, _, report = transmi.merge(original, transmi.load_default_rules(), "max")
print("vocabulary:", report.counts["original_size"], "->", report.counts["merged_size"])
print("histogram :", report.histogram)

for label in ["native", "translit"]:
    sentences = read_sentences(data / f"corpus_{label}.txt")
    a = sequence_stats(original, label, sentences).average
    b = sequence_stats(merged, label, sentences).average
    print(f"{label:9} {a:6.2f} -> {b:6.2f}")

# one romanized sentence, before and after
line = read_sentences(data / "corpus_translit.txt")[0]
print(line)
print(" ".join(transmi.tokenize(original, line).pieces))
print(" ".join(transmi.tokenize(merged, line).pieces))
