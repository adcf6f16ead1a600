"""Training-free adaptation of Unigram tokenizers and embeddings to transliterated text."""

from .embed import (
    EmbeddingMatrix,
    concat,
    initialize_new_rows,
    load_embeddings,
    load_embeddings_tsv,
    save_embeddings,
)
from .errors import TransmiError
from .merge import (
    AmbiguityGroup,
    MergeMode,
    MergeReport,
    Resolution,
    Triplet,
    ambiguity_histogram,
    build_triplets,
    merge,
    merge_vocabulary,
    partition_triplets,
    resolve_group,
)
from .translit import (
    Rule,
    RuleTable,
    default_rules_dir,
    load_default_rules,
    load_rules,
    transliterate,
    transliterate_token,
)
from .unigram import (
    Segmentation,
    TokenEntry,
    UnigramModel,
    best_score,
    extend_vocabulary,
    load_model,
    normalize,
    save_model,
    tokenize,
)

__version__ = "0.1.0"
