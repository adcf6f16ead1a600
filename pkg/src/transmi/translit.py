"""Rule-table transliteration into Latin script.

Rules are ``source -> target`` rewrites with an integer priority, loaded from
``<script>.rules.tsv`` files.  Text is scanned left to right; at each position
the longest matching source wins, then the highest priority, then the rule that
appeared first.  Latin letters and digits not covered by a rule are kept with
their diacritics stripped; anything else without a rule is copied through.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from os import PathLike
from pathlib import Path

from .errors import DuplicateRuleError, RuleError

RULE_SUFFIX = ".rules.tsv"
_TARGET_RE = re.compile(r"[A-Za-z0-9']*")
_OUTPUT_CHAR = re.compile(r"[A-Za-z0-9']")
_SPECIAL_TOKEN = re.compile(r"<[^<>\s]+>|\[[A-Z_]+\]")


@dataclass(frozen=True)
class Rule:
    source: str
    target: str
    priority: int = 0

    def __post_init__(self):
        if not self.source:
            raise RuleError("rule source must be non-empty")
        # keeps the output alphabet a fixed point of every table
        if _OUTPUT_CHAR.search(self.source):
            raise RuleError(f"rule source {self.source!r} overlaps the Latin output alphabet")
        if not _TARGET_RE.fullmatch(self.target):
            raise RuleError(f"rule target {self.target!r} is outside the Latin output alphabet")


@dataclass(frozen=True)
class RuleTable:
    rules: tuple[Rule, ...]
    name: str = ""
    _by_source: dict = field(init=False, repr=False, compare=False, hash=False)
    _lengths: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        by_source: dict[str, Rule] = {}
        seen = set()
        for rule in self.rules:
            key = (rule.source, rule.priority)
            if key in seen:
                raise DuplicateRuleError(f"duplicate rule for {rule.source!r} at priority {rule.priority}")
            seen.add(key)
            # first rule wins among equal priorities, so only replace on strictly higher
            current = by_source.get(rule.source)
            if current is None or rule.priority > current.priority:
                by_source[rule.source] = rule
        object.__setattr__(self, "_by_source", by_source)
        object.__setattr__(self, "_lengths", tuple(sorted({len(s) for s in by_source}, reverse=True)))

    def __len__(self) -> int:
        return len(self.rules)

    def lookup(self, text: str, pos: int) -> Rule | None:
        """Winning rule at ``text[pos:]``, or None."""
        for length in self._lengths:
            rule = self._by_source.get(text[pos : pos + length])
            if rule is not None:
                return rule
        return None

    @property
    def max_target_len(self) -> int:
        return max((len(r.target) for r in self.rules), default=0)

    @property
    def min_source_len(self) -> int:
        return min((len(r.source) for r in self.rules), default=1)


def parse_rules(text: str, origin: str = "<string>") -> list[Rule]:
    rules = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) not in (2, 3):
            raise RuleError(f"{origin}:{lineno}: expected source<TAB>target[<TAB>priority]")
        try:
            priority = int(parts[2]) if len(parts) == 3 and parts[2].strip() else 0
            rules.append(Rule(parts[0], parts[1], priority))
        except ValueError:
            raise RuleError(f"{origin}:{lineno}: priority must be an integer") from None
        except RuleError as exc:
            raise RuleError(f"{origin}:{lineno}: {exc}") from None
    return rules


def load_rules(directory: str | PathLike) -> RuleTable:
    """Union of every ``*.rules.tsv`` file in ``directory`` (files in name order)."""
    directory = Path(directory)
    if not directory.is_dir():
        raise RuleError(f"{directory}: not a directory")
    files = sorted(p for p in directory.iterdir() if p.name.endswith(RULE_SUFFIX))
    if not files:
        raise RuleError(f"{directory}: no rule files")
    rules: list[Rule] = []
    origin_of: dict[tuple[str, int], str] = {}
    for path in files:
        for rule in parse_rules(path.read_text(encoding="utf-8"), str(path)):
            key = (rule.source, rule.priority)
            if key in origin_of:
                raise DuplicateRuleError(
                    f"duplicate rule {rule.source!r} (priority {rule.priority}) in {path} and {origin_of[key]}"
                )
            origin_of[key] = str(path)
            rules.append(rule)
    name = "+".join(p.name[: -len(RULE_SUFFIX)] for p in files)
    return RuleTable(tuple(rules), name)


def default_rules_dir() -> Path:
    """Directory holding the bundled Cyrillic, Greek, Devanagari, Han and Latin tables."""
    return Path(str(resources.files("transmi") / "rules"))


def load_default_rules() -> RuleTable:
    return load_rules(default_rules_dir())


def is_latin_letter(ch: str) -> bool:
    return ch.isalpha() and unicodedata.name(ch, "").startswith("LATIN ")


def strip_diacritics(ch: str) -> str:
    decomposed = unicodedata.normalize("NFD", ch)
    return "".join(c for c in decomposed if not unicodedata.combining(c))


def transliterate(table: RuleTable, text: str) -> str:
    out = []
    i, n = 0, len(text)
    while i < n:
        rule = table.lookup(text, i)
        if rule is not None:
            out.append(rule.target)
            i += len(rule.source)
            continue
        ch = text[i]
        if ch.isdecimal():
            out.append(str(unicodedata.decimal(ch)))
        elif is_latin_letter(ch):
            out.append(strip_diacritics(ch) or ch)
        else:
            out.append(ch)
        i += 1
    return "".join(out)


def is_special_syntax(surface: str) -> bool:
    return bool(_SPECIAL_TOKEN.fullmatch(surface))


def transliterate_token(table: RuleTable, surface: str, marker: str = "▁") -> str:
    """Transliterate a vocabulary surface, keeping a leading boundary marker."""
    if surface == marker or is_special_syntax(surface):
        return surface
    if surface.startswith(marker):
        return marker + transliterate(table, surface[len(marker) :])
    return transliterate(table, surface)
