"""Regenerate the bundled fixtures under src/transmi/data/.

    python3 tools/build_fixtures.py

weather.tokenizer.json   Hani + Latin-fragment vocabulary for the "today is good weather" example
toy.tokenizer.json      small multilingual vocabulary (Latn/Cyrl/Grek/Hani/Deva)
toy.embeddings.bin      16-dim float32 rows for toy.tokenizer.json
corpus_native.txt       100 sentences in their original scripts
corpus_translit.txt     the same 100 sentences transliterated with the bundled rules
"""

import random
from pathlib import Path

import numpy as np

from transmi.embed import EmbeddingMatrix, save_embeddings
from transmi.translit import load_default_rules, transliterate
from transmi.unigram import UnigramModel, save_model

OUT = Path(__file__).resolve().parent.parent / "src" / "transmi" / "data"
SPECIALS = ["<pad>", "<s>", "</s>", "<unk>"]
M = "▁"
# unknown characters cost this much each, well below any real piece
UNK_SCORE = -20.0

WEATHER = [
    ("▁今天", -8.0), ("是个", -9.0), ("好", -7.0), ("天气", -9.0),
    ("▁jint", -10.0), ("ian", -9.0), ("shig", -11.0), ("ehao", -11.0), ("tian", -8.0), ("qi", -8.0),
    ("▁jin", -11.5), ("ti", -10.5), ("an", -10.5), ("sh", -12.0),
]

# (pieces of one word, in the order they are written)
WORDS = {
    "Cyrl": [["▁мир"], ["▁дом"], ["▁книг", "а"], ["▁да"], ["▁нет"], ["▁привет"], ["▁вод", "а"],
             ["▁хорошо"], ["▁день"], ["▁ден", "ь"], ["▁ночь"], ["▁город"], ["▁люд", "и"], ["▁та"]],
    "Grek": [["▁μισό"], ["▁νερό"], ["▁καλή"], ["▁μέρα"], ["▁σπίτι"], ["▁ήλιος"], ["▁θάλασσα"], ["▁τα"]],
    "Hani": [["▁今天"], ["是个"], ["好"], ["天气"], ["▁太阳"], ["▁太陽"], ["▁中国"], ["▁中國"],
             ["▁我", "们"], ["▁我", "們"], ["▁他"], ["▁她"], ["人"], ["▁学生"], ["▁學生"], ["爱"], ["愛"],
             ["书"], ["書"], ["汉字"], ["漢字"], ["▁朋友"], ["吃饭"], ["吃飯"], ["喝茶"], ["十"], ["是"]],
    "Deva": [["▁नमस्ते"], ["▁पानी"], ["▁घर"], ["▁दिन"], ["▁रात"], ["▁किताब"], ["▁दोस्त"]],
}
LATIN_PIECES = ["▁the", "▁and", "ing", "▁is", "er", "an", "in", "on", "▁café", "▁wo", "▁de", "ta"]
OTHER = ["▁", ",", ".", "▁→"]


def weather_model() -> UnigramModel:
    pieces = [(s, UNK_SCORE if s == "<unk>" else 0.0) for s in SPECIALS] + WEATHER
    return UnigramModel.from_pieces(pieces, unk="<unk>", specials=SPECIALS)


def toy_model(rng: random.Random) -> UnigramModel:
    pieces = [(s, UNK_SCORE if s == "<unk>" else 0.0) for s in SPECIALS]
    pieces += [(c, -12.0) for c in "abcdefghijklmnopqrstuvwxyz"]
    pieces += [(p, round(rng.uniform(-10.0, -6.0), 2)) for p in LATIN_PIECES + OTHER]
    seen = {p for p, _ in pieces}
    for words in WORDS.values():
        for word in words:
            for p in word:
                if p not in seen:
                    seen.add(p)
                    pieces.append((p, round(rng.uniform(-11.0, -5.0), 2)))
    return UnigramModel.from_pieces(pieces, unk="<unk>", specials=SPECIALS)


def sentences(rng: random.Random, n: int) -> list[str]:
    out = []
    scripts = sorted(WORDS)
    for _ in range(n):
        words = WORDS[rng.choice(scripts)]
        picked = [rng.choice(words) for _ in range(rng.randint(3, 7))]
        out.append(" ".join("".join(pieces).lstrip(M) for pieces in picked))
    return out


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20240501)
    save_model(weather_model(), OUT / "weather.tokenizer.json")
    toy = toy_model(rng)
    save_model(toy, OUT / "toy.tokenizer.json")
    emb = np.random.default_rng(7).standard_normal((len(toy), 16)).astype(np.float32)
    save_embeddings(EmbeddingMatrix(emb), OUT / "toy.embeddings.bin")

    table = load_default_rules()
    native = sentences(rng, 100)
    (OUT / "corpus_native.txt").write_text("\n".join(native) + "\n", encoding="utf-8")
    translit = [transliterate(table, s) for s in native]
    (OUT / "corpus_translit.txt").write_text("\n".join(translit) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
