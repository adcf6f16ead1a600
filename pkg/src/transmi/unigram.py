"""Unigram subword tokenizer: model container, JSON format, Viterbi segmentation.

The model is a plain ordered vocabulary of ``(surface, score)`` pairs where the
score is a log probability.  Segmentation picks the sequence of surfaces that
maximizes the summed score over the normalized input.  Ties are broken by
preferring fewer tokens and then the lexicographically smallest id sequence.

Any character may also be covered by the unknown token at the unknown score
per character; consecutive unknown characters are emitted as one unknown
token.  Because this fallback does not depend on the vocabulary, extending the
vocabulary only ever adds candidate segmentations.  With an unknown score
below every piece score, as in SentencePiece models, unknown tokens end up
covering the characters no surface can reach.
"""

from __future__ import annotations

import json
import math
import unicodedata
from dataclasses import dataclass, field
from os import PathLike
from typing import Iterable, Sequence

from .errors import DuplicateSurfaceError, FormatError

MARKER = "▁"
FORMAT_NAME = "transmi-unigram"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class TokenEntry:
    surface: str
    score: float
    id: int


@dataclass(frozen=True)
class Segmentation:
    """``pieces[k]`` is the text covered by ``ids[k]``; an unknown piece may span
    several characters and contributes the unknown score once per character."""

    ids: tuple[int, ...]
    pieces: tuple[str, ...]
    total_score: float

    def __len__(self) -> int:
        return len(self.ids)

    def text(self) -> str:
        return "".join(self.pieces)


@dataclass(frozen=True)
class UnigramModel:
    entries: tuple[TokenEntry, ...]
    unk: int
    specials: frozenset[int] = frozenset()
    marker: str = MARKER
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _matchable: dict = field(init=False, repr=False, compare=False, hash=False)
    _max_len: int = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.marker) != 1:
            raise ValueError("marker must be a single character")
        index = {}
        for pos, entry in enumerate(self.entries):
            if entry.id != pos:
                raise ValueError(f"entry {entry.surface!r} has id {entry.id}, expected {pos}")
            if not entry.surface:
                raise FormatError(f"empty surface at id {pos}")
            if not math.isfinite(entry.score):
                raise FormatError(f"non-finite score for {entry.surface!r}")
            if entry.surface in index:
                raise DuplicateSurfaceError(entry.surface)
            index[entry.surface] = pos
        n = len(self.entries)
        if not 0 <= self.unk < n:
            raise FormatError(f"unk id {self.unk} out of range")
        for sid in self.specials:
            if not 0 <= sid < n:
                raise FormatError(f"special id {sid} out of range")
        blocked = set(self.specials) | {self.unk}
        matchable = {s: i for s, i in index.items() if i not in blocked}
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_matchable", matchable)
        object.__setattr__(self, "_max_len", max(map(len, matchable), default=0))

    @classmethod
    def from_pieces(
        cls,
        pieces: Iterable[tuple[str, float]],
        unk: str = "<unk>",
        specials: Iterable[str] = (),
        marker: str = MARKER,
    ) -> "UnigramModel":
        """Build a model from ``(surface, score)`` pairs, naming unk and specials by surface."""
        entries = tuple(TokenEntry(s, float(sc), i) for i, (s, sc) in enumerate(pieces))
        index = {}
        for e in entries:
            if e.surface in index:
                raise DuplicateSurfaceError(e.surface)
            index[e.surface] = e.id
        try:
            unk_id = index[unk]
            special_ids = frozenset(index[s] for s in specials)
        except KeyError as exc:
            raise FormatError(f"declared token {exc.args[0]!r} is not in the vocabulary") from None
        return cls(entries, unk_id, special_ids, marker)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, surface: str) -> bool:
        return surface in self._index

    def id_of(self, surface: str) -> int:
        return self._index[surface]

    def get_id(self, surface: str, default=None):
        return self._index.get(surface, default)

    def surface(self, token_id: int) -> str:
        return self.entries[token_id].surface

    def score(self, token_id: int) -> float:
        return self.entries[token_id].score

    @property
    def surfaces(self) -> list[str]:
        return [e.surface for e in self.entries]

    @property
    def special_ids(self) -> frozenset[int]:
        """Specials plus unk: ids that segmentation never matches literally."""
        return self.specials | {self.unk}

    def pieces(self) -> list[tuple[str, float]]:
        return [(e.surface, e.score) for e in self.entries]


def normalize(text: str, marker: str = MARKER) -> str:
    """NFKC-normalize, turn spaces into ``marker`` and prefix one ``marker``."""
    if not text:
        return ""
    return marker + unicodedata.normalize("NFKC", text).replace(" ", marker)


def tokenize(model: UnigramModel, text: str) -> Segmentation:
    return segment(model, normalize(text, model.marker))


def segment(model: UnigramModel, s: str) -> Segmentation:
    """Viterbi over already-normalized text ``s``."""
    n = len(s)
    lookup = model._matchable
    max_len = model._max_len
    scores = [e.score for e in model.entries]
    unk, unk_score = model.unk, scores[model.unk]

    # State (i, u): best segmentation of s[i:] given whether the piece before i
    # is unknown (u=1), in which case an unknown char at i extends that piece.
    # Id sequences are cons cells (id, rest) so tails are shared, not copied.
    score = [[0.0, 0.0] for _ in range(n + 1)]
    count = [[0, 0] for _ in range(n + 1)]
    ids = [[(), ()] for _ in range(n + 1)]
    step = [[None, None] for _ in range(n + 1)]  # (end, token id) of the chosen piece

    for i in range(n - 1, -1, -1):
        # vocabulary pieces are independent of u
        b_score, b_count, b_ids, b_step = None, 0, (), None
        for length in range(1, min(max_len, n - i) + 1):
            tid = lookup.get(s[i : i + length])
            if tid is None:
                continue
            j = i + length
            cand = scores[tid] + score[j][0]
            c_count = count[j][0] + 1
            c_ids = (tid, ids[j][0])
            if b_score is None or _better(cand, c_count, c_ids, b_score, b_count, b_ids):
                b_score, b_count, b_ids, b_step = cand, c_count, c_ids, (j, tid)
        u_score = unk_score + score[i + 1][1]
        for u in (0, 1):
            u_count = count[i + 1][1] + (0 if u else 1)
            u_ids = ids[i + 1][1] if u else (unk, ids[i + 1][1])
            if b_score is None or _better(u_score, u_count, u_ids, b_score, b_count, b_ids):
                score[i][u], count[i][u], ids[i][u], step[i][u] = u_score, u_count, u_ids, (i + 1, unk)
            else:
                score[i][u], count[i][u], ids[i][u], step[i][u] = b_score, b_count, b_ids, b_step

    out_ids, pieces = [], []
    i, u = 0, 0
    while i < n:
        j, tid = step[i][u]
        if tid == unk and u:
            pieces[-1] += s[i:j]
        else:
            out_ids.append(tid)
            pieces.append(s[i:j])
        i, u = j, int(tid == unk)
    return Segmentation(tuple(out_ids), tuple(pieces), score[0][0])


def _better(score_a, count_a, ids_a, score_b, count_b, ids_b) -> bool:
    if score_a != score_b:
        return score_a > score_b
    if count_a != count_b:
        return count_a < count_b
    return _lex_less(ids_a, ids_b)


def _lex_less(a: tuple, b: tuple) -> bool:
    """Lexicographic ``a < b`` over cons-cell id sequences."""
    while a is not b:
        if not a:
            return bool(b)
        if not b:
            return False
        if a[0] != b[0]:
            return a[0] < b[0]
        a, b = a[1], b[1]
    return False


def best_score(model: UnigramModel, text: str) -> float:
    return tokenize(model, text).total_score


def extend_vocabulary(model: UnigramModel, additions: Sequence[tuple[str, float]]) -> UnigramModel:
    """Append ``additions`` after the existing entries. Scores are stored as given."""
    seen = set()
    for surface, _ in additions:
        if surface in model:
            raise DuplicateSurfaceError(surface, f"surface {surface!r} already in vocabulary")
        if surface in seen:
            raise DuplicateSurfaceError(surface, f"surface {surface!r} repeated in additions")
        seen.add(surface)
    base = len(model)
    entries = model.entries + tuple(
        TokenEntry(s, float(sc), base + k) for k, (s, sc) in enumerate(additions)
    )
    return UnigramModel(entries, model.unk, model.specials, model.marker)


# -- serialization -----------------------------------------------------------


def dumps_canonical(obj) -> str:
    """Canonical JSON: sorted keys, ", " / ": " separators, shortest float repr."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(", ", ": "), allow_nan=False) + "\n"


def model_to_dict(model: UnigramModel) -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "marker": model.marker,
        "unk": model.surface(model.unk),
        "specials": [model.surface(i) for i in sorted(model.specials)],
        "vocab": [[e.surface, float(e.score)] for e in model.entries],
    }


def model_from_dict(doc) -> UnigramModel:
    if not isinstance(doc, dict):
        raise FormatError("tokenizer document must be a JSON object")
    if doc.get("format") != FORMAT_NAME:
        raise FormatError(f"unexpected format {doc.get('format')!r}, expected {FORMAT_NAME!r}")
    if doc.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported version {doc.get('version')!r}")
    if "unk" not in doc:
        raise FormatError("missing unk declaration")
    unk = doc["unk"]
    marker = doc.get("marker", MARKER)
    specials = doc.get("specials", [])
    vocab = doc.get("vocab")
    if not isinstance(unk, str) or not isinstance(marker, str) or len(marker) != 1:
        raise FormatError("unk must be a string and marker a single character")
    if not isinstance(specials, list) or not all(isinstance(s, str) for s in specials):
        raise FormatError("specials must be a list of strings")
    if not isinstance(vocab, list):
        raise FormatError("vocab must be a list of [surface, score] pairs")
    pieces = []
    for pos, item in enumerate(vocab):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not isinstance(item[0], str)
            or isinstance(item[1], bool)
            or not isinstance(item[1], (int, float))
        ):
            raise FormatError(f"vocab entry {pos} is not a [surface, score] pair")
        if not item[0]:
            raise FormatError(f"vocab entry {pos} has an empty surface")
        pieces.append((item[0], float(item[1])))
    return UnigramModel.from_pieces(pieces, unk=unk, specials=specials, marker=marker)


def load_model(path: str | PathLike) -> UnigramModel:
    with open(path, encoding="utf-8") as f:
        raw = f.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON: {exc}") from None
    return model_from_dict(doc)


def save_model(model: UnigramModel, path: str | PathLike) -> None:
    data = dumps_canonical(model_to_dict(model)).encode("utf-8")
    with open(path, "wb") as f:
        f.write(data)
