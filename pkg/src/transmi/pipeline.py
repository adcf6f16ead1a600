"""End-to-end merge pipeline and corpus sequence-length statistics."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from os import PathLike
from pathlib import Path
from typing import Iterable, Sequence

from .embed import concat, initialize_new_rows, load_embeddings, save_embeddings
from .errors import RowCountMismatchError, TransmiError
from .merge import MergeMode, MergeReport, merge
from .translit import load_rules
from .unigram import UnigramModel, load_model, save_model, tokenize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineConfig:
    tokenizer_path: Path
    rules_dir: Path
    mode: MergeMode
    out_tokenizer: Path
    report_path: Path
    embeddings_path: Path | None = None
    out_embeddings: Path | None = None

    def __post_init__(self):
        object.__setattr__(self, "mode", MergeMode(self.mode))
        if (self.embeddings_path is None) != (self.out_embeddings is None):
            raise TransmiError("--embeddings and --out-embeddings must be given together")


def run_merge_pipeline(config: PipelineConfig) -> MergeReport:
    """Transliterate, merge and (optionally) extend embeddings; writes every artifact."""
    model = load_model(config.tokenizer_path)
    table = load_rules(config.rules_dir)
    e_orig = None
    if config.embeddings_path is not None:
        e_orig = load_embeddings(config.embeddings_path)
        if e_orig.rows != len(model):
            raise RowCountMismatchError(
                f"{config.embeddings_path}: {e_orig.rows} rows but tokenizer has {len(model)} entries"
            )

    merged, resolutions, report = merge(model, table, config.mode)
    log.info("mode=%s added=%d", config.mode.value, len(resolutions))

    save_model(merged, config.out_tokenizer)
    if e_orig is not None:
        extended = concat(e_orig, initialize_new_rows(e_orig, resolutions))
        assert extended.rows == len(merged)
        save_embeddings(extended, config.out_embeddings)
    Path(config.report_path).write_bytes(report.dumps().encode("utf-8"))
    return report


# -- sequence length statistics ---------------------------------------------------


@dataclass(frozen=True)
class CorpusStats:
    label: str
    sentences: int
    tokens: int

    @property
    def average(self) -> float:
        return self.tokens / self.sentences


def read_sentences(path: str | PathLike) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return [line.rstrip("\n") for line in f if line.strip()]


def sequence_stats(model: UnigramModel, label: str, sentences: Iterable[str]) -> CorpusStats:
    n = total = 0
    for sentence in sentences:
        n += 1
        total += len(tokenize(model, sentence))
    if n == 0:
        raise TransmiError(f"corpus {label!r} has no sentences")
    return CorpusStats(label, n, total)


def compare_corpora(
    model_a: UnigramModel,
    corpora: Sequence[tuple[str, Path]],
    model_b: UnigramModel | None = None,
) -> tuple[list[dict], list[str]]:
    """Per-label average sequence length for one or two models.

    Returns the table rows and the labels skipped because their file had no
    sentences.
    """
    rows, skipped = [], []
    for label, path in corpora:
        sentences = read_sentences(path)
        if not sentences:
            log.warning("corpus %s (%s) is empty; skipped", label, path)
            skipped.append(label)
            continue
        a = sequence_stats(model_a, label, sentences)
        row = {"label": label, "sentences": a.sentences, "tokens_a": a.tokens, "avg_a": a.average}
        if model_b is not None:
            b = sequence_stats(model_b, label, sentences)
            row.update(tokens_b=b.tokens, avg_b=b.average, delta=b.average - a.average)
        rows.append(row)
    return rows, skipped


def format_table(rows: list[dict]) -> str:
    two = bool(rows) and "avg_b" in rows[0]
    header = ["label", "sentences", "avg_a"] + (["avg_b", "delta"] if two else [])
    body = []
    for r in rows:
        cells = [r["label"], str(r["sentences"]), f"{r['avg_a']:.3f}"]
        if two:
            cells += [f"{r['avg_b']:.3f}", f"{r['delta']:+.3f}"]
        body.append(cells)
    widths = [max(len(c) for c in col) for col in zip(header, *body)]
    lines = []
    for cells in [header] + body:
        parts = [cells[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(cells[1:], widths[1:])]
        lines.append("  ".join(parts))
    return "\n".join(lines)

