"""
Rule-based romanization
=======================

The bundled tables cover Cyrillic, Greek, Devanagari, a sample of Han
characters, and a few Latin ligatures.  At every position the longest
matching source wins; equal lengths fall back to the rule priority.
"""

import transmi
from transmi.translit import Rule, RuleTable

table = transmi.load_default_rules()
print(f"{table.name}: {len(table)} rules")

for text in ["Привет, мир", "θάλασσα", "नमस्ते", "太陽 and 太阳", "Straße café", "२०२४"]:
    print(f"{text:14} -> {transmi.transliterate(table, text)}")

# romanizing twice changes nothing
once = transmi.transliterate(table, "Привет")
print("idempotent:", transmi.transliterate(table, once) == once)

# a hand-written table: the two-character rule beats the single ones
custom = RuleTable([
    Rule("д", "d"), Rule("ж", "zh"), Rule("дж", "j"), Rule("е", "e"), Rule("м", "m"), Rule("и", "i"),
    Rule("щ", "sch"), Rule("щ", "shch", 1),
])
print(transmi.transliterate(custom, "джем щи"))
