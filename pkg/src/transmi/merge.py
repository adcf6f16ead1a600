"""Merge transliterated subwords into a Unigram vocabulary.

Every non-special vocabulary entry is transliterated into a triplet
``(v, w_id, s)``.  Transliterations already in the vocabulary need nothing;
those produced by exactly one entry are added with that entry's score; the
rest form ambiguity groups resolved by a :class:`MergeMode`.  Added scores are
not renormalized, since only their order affects segmentation.
"""

from __future__ import annotations

import enum
import statistics
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Collection, Iterable, Sequence

from .translit import RuleTable, is_latin_letter, transliterate_token
from .unigram import UnigramModel, dumps_canonical, extend_vocabulary

HISTOGRAM_BUCKETS = ("1", "2", "3", ">3")


class MergeMode(str, enum.Enum):
    MIN = "min"
    MAX = "max"
    AVG = "avg"


@dataclass(frozen=True)
class Triplet:
    v: str
    w_id: int
    s: float


@dataclass(frozen=True)
class Skip:
    w_id: int
    reason: str  # "special" or "unusable"


@dataclass(frozen=True)
class AmbiguityGroup:
    v: str
    members: tuple[Triplet, ...]

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError(f"ambiguity group {self.v!r} needs at least two members")
        if any(t.v != self.v for t in self.members):
            raise ValueError(f"ambiguity group {self.v!r} has a member with a different transliteration")
        if len({t.w_id for t in self.members}) != len(self.members):
            raise ValueError(f"ambiguity group {self.v!r} repeats a source id")


@dataclass(frozen=True)
class Resolution:
    v: str
    chosen_score: float
    provenance: tuple[int, ...]


@dataclass
class MergeReport:
    mode: MergeMode
    counts: dict[str, int]
    histogram: dict[str, int]
    additions: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "counts": dict(self.counts),
            "histogram": dict(self.histogram),
            "additions": list(self.additions),
        }

    def dumps(self) -> str:
        return dumps_canonical(self.to_dict())


# -- step 1: triplets -------------------------------------------------------------


def is_usable(v: str, marker: str) -> bool:
    body = v[len(marker) :] if v.startswith(marker) else v
    return bool(body) and all(c.isascii() and (c.isalnum() or c == "'") for c in body)


def scan_vocabulary(model: UnigramModel, table: RuleTable) -> tuple[list[Triplet], list[Skip]]:
    """Transliterate every entry; returns usable triplets and the skipped entries."""
    triplets, skipped = [], []
    specials = model.special_ids
    for entry in model.entries:
        if entry.id in specials:
            skipped.append(Skip(entry.id, "special"))
            continue
        v = transliterate_token(table, entry.surface, model.marker)
        if is_usable(v, model.marker):
            triplets.append(Triplet(v, entry.id, entry.score))
        else:
            skipped.append(Skip(entry.id, "unusable"))
    return triplets, skipped


def build_triplets(model: UnigramModel, table: RuleTable) -> list[Triplet]:
    return scan_vocabulary(model, table)[0]


# -- step 2: partition and resolve ------------------------------------------------


def partition_triplets(
    triplets: Iterable[Triplet], model: UnigramModel
) -> tuple[list[Triplet], list[Triplet], list[AmbiguityGroup]]:
    """Split into (already in vocabulary, one-to-one, ambiguity groups)."""
    existing, by_v = [], defaultdict(list)
    for t in triplets:
        if t.v in model:
            existing.append(t)
        else:
            by_v[t.v].append(t)
    one_to_one = sorted((ts[0] for ts in by_v.values() if len(ts) == 1), key=lambda t: t.w_id)
    groups = [
        AmbiguityGroup(v, tuple(sorted(ts, key=lambda t: t.w_id)))
        for v, ts in sorted(by_v.items())
        if len(ts) > 1
    ]
    return existing, one_to_one, groups


def resolve_group(group: AmbiguityGroup, mode: MergeMode | str) -> Resolution:
    mode = MergeMode(mode)
    members = group.members
    if mode is MergeMode.AVG:
        # exact rational mean, rounded once: stays within [min, max]
        mean = float(statistics.mean(t.s for t in members))
        return Resolution(group.v, mean, tuple(sorted(t.w_id for t in members)))
    if mode is MergeMode.MIN:
        pick = min(members, key=lambda t: (t.s, t.w_id))
    else:
        pick = min(members, key=lambda t: (-t.s, t.w_id))
    return Resolution(group.v, pick.s, (pick.w_id,))


def ambiguity_histogram(triplets: Iterable[Triplet], exclude: Collection[str] = ()) -> dict[str, int]:
    """Count distinct transliterations by how many entries produce them.

    Transliterations in ``exclude`` (typically the original vocabulary) are
    not new and are left out.
    """
    counts = Counter(t.v for t in triplets if t.v not in exclude)
    hist = dict.fromkeys(HISTOGRAM_BUCKETS, 0)
    for n in counts.values():
        hist[str(n) if n <= 3 else ">3"] += 1
    return hist


def _latin_sourced(model: UnigramModel, ids: Sequence[int]) -> bool:
    """True when every source surface is already Latin (e.g. diacritic variants)."""
    for i in ids:
        letters = [c for c in model.surface(i) if c.isalpha()]
        if not letters or not all(is_latin_letter(c) for c in letters):
            return False
    return True


def merge_vocabulary(
    model: UnigramModel,
    triplets: Sequence[Triplet],
    mode: MergeMode | str,
) -> tuple[UnigramModel, list[Resolution], MergeReport]:
    mode = MergeMode(mode)
    existing, one_to_one, groups = partition_triplets(triplets, model)

    resolutions = [Resolution(t.v, t.s, (t.w_id,)) for t in one_to_one]
    resolutions += [resolve_group(g, mode) for g in groups]
    merged = extend_vocabulary(model, [(r.v, r.chosen_score) for r in resolutions])

    n_special = sum(1 for e in model.entries if e.id in model.special_ids)
    n_unusable = len(model) - n_special - len(triplets)
    additions = []
    latin_variants = 0
    for k, r in enumerate(resolutions):
        latin = _latin_sourced(model, r.provenance)
        latin_variants += latin
        additions.append(
            {
                "surface": r.v,
                "score": r.chosen_score,
                "provenance": list(r.provenance),
                "kind": "one_to_one" if k < len(one_to_one) else "ambiguous",
                "latin_source": latin,
            }
        )
    counts = {
        "already_in_vocab": len(existing),
        "one_to_one_added": len(one_to_one),
        "ambiguous_added": sum(len(g.members) for g in groups),
        "ambiguous_groups": len(groups),
        "skipped_special": n_special,
        "skipped_unusable": n_unusable,
        "latin_variants_added": latin_variants,
        "original_size": len(model),
        "merged_size": len(merged),
    }
    report = MergeReport(mode, counts, ambiguity_histogram(triplets, model), additions)
    return merged, resolutions, report


def merge(model: UnigramModel, table: RuleTable, mode: MergeMode | str):
    """Transliterate ``model``'s vocabulary with ``table`` and merge under ``mode``."""
    return merge_vocabulary(model, build_triplets(model, table), mode)
