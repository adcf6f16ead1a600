"""Regenerate the bundled rule tables under src/transmi/rules/.

    python3 tools/build_rule_tables.py
"""

import unicodedata
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "transmi" / "rules"

CYRILLIC = {
    "а": "a", "б": "b", "в": "v", "г": "g", "д": "d", "е": "e", "ё": "yo",
    "ж": "zh", "з": "z", "и": "i", "й": "y", "к": "k", "л": "l", "м": "m",
    "н": "n", "о": "o", "п": "p", "р": "r", "с": "s", "т": "t", "у": "u",
    "ф": "f", "х": "kh", "ц": "ts", "ч": "ch", "ш": "sh", "щ": "shch",
    "ъ": "", "ы": "y", "ь": "", "э": "e", "ю": "yu", "я": "ya",
}

GREEK = {
    "α": "a", "β": "v", "γ": "g", "δ": "d", "ε": "e", "ζ": "z", "η": "i",
    "θ": "th", "ι": "i", "κ": "k", "λ": "l", "μ": "m", "ν": "n", "ξ": "x",
    "ο": "o", "π": "p", "ρ": "r", "σ": "s", "ς": "s", "τ": "t", "υ": "y",
    "φ": "f", "χ": "ch", "ψ": "ps", "ω": "o",
    "ά": "a", "έ": "e", "ή": "i", "ί": "i", "ό": "o", "ύ": "y", "ώ": "o",
    "ϊ": "i", "ϋ": "y", "ΐ": "i", "ΰ": "y",
}
GREEK_DIGRAPHS = {"ου": "ou", "ού": "ou", "γγ": "ng", "γκ": "gk", "μπ": "mp", "ντ": "nt"}

DEVA_CONSONANTS = {
    "क": "k", "ख": "kh", "ग": "g", "घ": "gh", "ङ": "ng",
    "च": "ch", "छ": "chh", "ज": "j", "झ": "jh", "ञ": "ny",
    "ट": "t", "ठ": "th", "ड": "d", "ढ": "dh", "ण": "n",
    "त": "t", "थ": "th", "द": "d", "ध": "dh", "न": "n",
    "प": "p", "फ": "ph", "ब": "b", "भ": "bh", "म": "m",
    "य": "y", "र": "r", "ल": "l", "व": "v",
    "श": "sh", "ष": "sh", "स": "s", "ह": "h",
    # base + nukta (NFC/NFKC decomposes the precomposed forms)
    "क़": "q", "ख़": "kh", "ग़": "gh", "ज़": "z", "ड़": "r", "ढ़": "rh", "फ़": "f", "य़": "y",
}
DEVA_VOWELS = {
    "अ": "a", "आ": "aa", "इ": "i", "ई": "ii", "उ": "u", "ऊ": "uu", "ऋ": "ri",
    "ए": "e", "ऐ": "ai", "ओ": "o", "औ": "au",
}
DEVA_MATRAS = {
    "ा": "aa", "ि": "i", "ी": "ii", "ु": "u", "ू": "uu", "ृ": "ri",
    "े": "e", "ै": "ai", "ो": "o", "ौ": "au",
}
DEVA_SIGNS = {"्": "", "ं": "n", "ँ": "n", "ः": "h", "़": "", "ऽ": ""}
DEVA_DIGITS = {chr(0x0966 + d): str(d) for d in range(10)}

HAN = {
    "今": "jin", "天": "tian", "是": "shi", "个": "ge", "個": "ge", "好": "hao",
    "气": "qi", "氣": "qi", "太": "tai", "阳": "yang", "陽": "yang", "中": "zhong",
    "国": "guo", "國": "guo", "人": "ren", "大": "da", "小": "xiao", "日": "ri",
    "月": "yue", "水": "shui", "火": "huo", "山": "shan", "学": "xue", "學": "xue",
    "生": "sheng", "我": "wo", "你": "ni", "他": "ta", "她": "ta", "们": "men",
    "們": "men", "的": "de", "不": "bu", "了": "le", "在": "zai", "有": "you",
    "这": "zhe", "這": "zhe", "上": "shang", "下": "xia", "一": "yi", "二": "er",
    "三": "san", "十": "shi", "明": "ming", "年": "nian", "来": "lai", "來": "lai",
    "去": "qu", "说": "shuo", "說": "shuo", "家": "jia", "爱": "ai", "愛": "ai",
    "书": "shu", "書": "shu", "语": "yu", "語": "yu", "汉": "han", "漢": "han",
    "字": "zi", "文": "wen", "朋": "peng", "友": "you", "吃": "chi", "饭": "fan",
    "飯": "fan", "喝": "he", "茶": "cha",
}

LATIN = {
    "ß": "ss", "æ": "ae", "Æ": "Ae", "œ": "oe", "Œ": "Oe", "ø": "o", "Ø": "O",
    "đ": "d", "Đ": "D", "ð": "d", "Ð": "D", "ł": "l", "Ł": "L", "þ": "th",
    "Þ": "Th", "ı": "i", "ŋ": "ng", "Ŋ": "Ng", "ħ": "h", "Ħ": "H",
}


def write(name: str, header: str, rows: list[tuple[str, str, int]]) -> None:
    lines = [f"# {header}", "# source<TAB>target<TAB>priority"]
    lines += [f"{unicodedata.normalize('NFC', s)}\t{t}\t{p}" for s, t, p in rows]
    (OUT / f"{name}.rules.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    cyrl = [(c, t, 0) for c, t in CYRILLIC.items()]
    cyrl += [(c.upper(), t, 0) for c, t in CYRILLIC.items()]
    write("Cyrl", "Cyrillic (Russian inventory), lowercase output", cyrl)

    upper = {c.upper(): t for c, t in GREEK.items() if c not in "ςΐΰ"}
    grek = [(c, t, 0) for c, t in {**GREEK, **upper}.items()]
    grek += [(c, t, 0) for c, t in GREEK_DIGRAPHS.items()]
    write("Grek", "Greek (monotonic), lowercase output", grek)

    deva = []
    for c, t in DEVA_CONSONANTS.items():
        deva.append((c, t + "a", 0))
        deva.append((c + "्", t, 0))
        deva += [(c + m, t + v, 0) for m, v in DEVA_MATRAS.items()]
    deva += [(c, t, 0) for c, t in {**DEVA_VOWELS, **DEVA_MATRAS, **DEVA_SIGNS, **DEVA_DIGITS}.items()]
    write("Deva", "Devanagari consonant/vowel/matra subset; no schwa deletion", deva)

    write("Hani", "Han -> toneless pinyin demo table", [(c, t, 0) for c, t in HAN.items()])
    write("Latn", "Latin letters without a canonical decomposition", [(c, t, 0) for c, t in LATIN.items()])


if __name__ == "__main__":
    main()
