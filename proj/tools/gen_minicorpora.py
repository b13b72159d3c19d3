#!/usr/bin/env python3
"""Generate the bundled synthetic mini-corpora under data/minicorpora/.

Ten labeled corpora (two per task, 250 usable pairs each) and two unlabeled
general-purpose corpora. Output is deterministic for a given --seed.

Each labeled corpus reserves a block of pairs whose texts both lie in the
100-180 character window, spread evenly over the summed-length bins, so the
annotation sampler can run with its default settings.
"""

import argparse
import csv
import json
import random
import unicodedata
from pathlib import Path

SUBJECTS = [
    ("dog", "dogs"), ("woman", "women"), ("child", "children"), ("cyclist", "cyclists"),
    ("farmer", "farmers"), ("student", "students"), ("chef", "chefs"), ("musician", "musicians"),
    ("old man", "old men"), ("girl", "girls"), ("boy", "boys"), ("tourist", "tourists"),
    ("worker", "workers"), ("teacher", "teachers"), ("runner", "runners"), ("cat", "cats"),
]
ADJS = ["small", "tall", "young", "happy", "tired", "smiling", "quiet", "busy", "cheerful",
        "careful", "curious", "elderly", "brave", "calm", "friendly", "hungry"]
COLOURS = ["red", "blue", "green", "yellow", "white", "black", "brown", "orange"]
OBJECTS = ["ball", "bicycle", "basket", "guitar", "kite", "umbrella", "book", "camera",
           "sandwich", "map", "ladder", "bucket", "newspaper", "backpack"]
PLACES = ["the park", "a crowded street", "the beach", "a small kitchen", "the market",
          "a snowy hill", "the river bank", "an old bridge", "the train station",
          "a quiet library", "the garden", "a busy square", "the harbour", "a narrow alley", "a cafe terrace"]
VERBS = [("carries", "carrying", "carried"), ("holds", "holding", "held"),
         ("throws", "throwing", "threw"), ("repairs", "repairing", "repaired"),
         ("examines", "examining", "examined"), ("paints", "painting", "painted"),
         ("cleans", "cleaning", "cleaned"), ("lifts", "lifting", "lifted"),
         ("sells", "selling", "sold"), ("watches", "watching", "watched")]
TIMES = ["in the morning", "at dusk", "on a sunny afternoon", "late at night",
         "during the festival", "after the rain", "before lunch", "on a cold day"]

# complex -> simple rewrites used by the simplification corpora
COMPLEX = {
    "approximately": "about", "commence": "start", "utilize": "use", "subsequently": "later",
    "demonstrate": "show", "numerous": "many", "assistance": "help", "purchase": "buy",
    "endeavour": "try", "sufficient": "enough", "residence": "home", "inquire": "ask",
    "terminate": "end", "additional": "more", "facilitate": "help", "consequently": "so",
    "individuals": "people", "obtain": "get", "accompany": "go with", "regarding": "about",
}
FACT_TOPICS = ["the committee", "the municipal council", "the research institute",
               "the regional authority", "the university", "the organisation",
               "the hospital", "the museum", "the laboratory", "the foundation"]

# formal -> casual rewrites used by the style corpora
CASUAL = {
    "you": "u", "are": "r", "going to": "gonna", "want to": "wanna", "do not": "don't",
    "I am": "I'm", "it is": "it's", "cannot": "can't", "very": "super", "yes": "yeah",
    "hello": "hey", "friends": "pals", "excellent": "awesome", "perhaps": "maybe",
    "would you": "would ya", "thank you": "thanks", "because": "cuz", "please": "pls",
}
FORMAL_OPENERS = ["I would like to inform you that", "Please be advised that",
                  "It is my pleasure to confirm that", "I am writing to let you know that",
                  "With respect, I must say that", "Kindly note that"]
CASUAL_CLOSERS = ["lol", "haha", "!!", "tbh", ":)", "for real", "ngl", "!!!"]
FORMAL_BODIES = [
    "you are going to receive the package {when}",
    "I am very grateful for your assistance with the {obj}",
    "it is not possible to attend the meeting {when}",
    "we cannot accept the {obj} because it is damaged",
    "you do not need to bring the {obj} to {place}",
    "I want to thank you for the excellent {obj}",
    "perhaps you would like to join us at {place} {when}",
    "the {obj} is very important to my friends",
    "hello, it is a pleasure to meet you at {place}",
    "I cannot find the {obj} that you left at {place}",
]


def article(word):
    return "an" if word[0] in "aeiou" else "a"


class Scene:
    def __init__(self, rng):
        self.subj, self.subj_pl = rng.choice(SUBJECTS)
        self.adj = rng.choice(ADJS)
        self.colour = rng.choice(COLOURS)
        self.obj = rng.choice(OBJECTS)
        self.place = rng.choice(PLACES)
        self.verb = rng.choice(VERBS)
        self.time = rng.choice(TIMES)
        self.extra_obj = rng.choice(OBJECTS)
        self.extra_place = rng.choice(PLACES)


def clause_pool(s):
    """Descriptive clauses about a scene, ordered by importance."""
    return [
        f"{article(s.adj).capitalize()} {s.adj} {s.subj} {s.verb[0]} {article(s.colour)} {s.colour} {s.obj} in {s.place}",
        f"while other people walk past {s.time}",
        f"and a second {s.subj} waits nearby with {article(s.extra_obj)} {s.extra_obj}",
        f"as the light slowly changes over {s.extra_place}",
        f"and nobody seems to notice the noise",
        f"before heading home through {s.extra_place}",
    ]


def caption_pair(rng, s, intensity):
    # Two independent descriptions of the same picture.
    a_parts = clause_pool(s)
    n = 1 + int(intensity * (len(a_parts) - 1) + rng.random())
    a = " ".join(a_parts[:max(1, n)]) + "."
    alt = [
        f"There is {article(s.subj)} {s.subj} {s.verb[1]} {article(s.obj)} {s.obj}",
        f"The {s.colour} {s.obj} is in the hands of {article(s.adj)} {s.adj} {s.subj}",
        f"{article(s.subj).capitalize()} {s.subj} seen {s.time} at {s.place} {s.verb[1]} something {s.colour}",
        f"A photo of {s.place} with {article(s.subj)} {s.subj} and {article(s.obj)} {s.obj}",
    ]
    b = rng.choice(alt)
    extras = [f"next to another {s.subj}", f"with {article(s.extra_obj)} {s.extra_obj} in the background",
              f"near {s.extra_place}", "in the middle of the frame", f"while it is {s.time.split(' ', 1)[-1]}",
              "under a wide open sky"]
    rng.shuffle(extras)
    k = int(intensity * len(extras) + rng.random())
    b = " ".join([b] + extras[:k]) + "."
    return a, b


def compression_pair(rng, s, intensity):
    parts = clause_pool(s)
    n = 2 + int(intensity * (len(parts) - 2) + rng.random())
    parts = parts[:n]
    a = " ".join(parts) + "."
    # Drop modifiers and trailing clauses; keep word order.
    keep_clauses = max(1, round(len(parts) * (0.35 + 0.6 * rng.random())))
    words = " ".join(parts[:keep_clauses]).split()
    drop = {s.adj, s.colour, "slowly", "other", "second", "nearby"}
    p_drop = 0.5 + 0.5 * rng.random()
    words = [w for w in words if not (w in drop and rng.random() < p_drop)]
    b = " ".join(words) + "."
    return a, b


def simplification_pair(rng, s, intensity):
    topic = rng.choice(FACT_TOPICS)
    words = list(COMPLEX)
    rng.shuffle(words)
    w = words[:6]
    sentences = [
        f"{topic.capitalize()} will {w[0]} {w[1]} resources to {w[2]} the {s.obj} project",
        f"and {w[3]} {w[4]} individuals who inquire regarding the {s.place.split()[-1]}",
        f"in order to {w[5]} the {s.subj_pl} {s.time}",
        f"which was announced {s.time} by the director",
        f"following numerous requests from the {s.subj_pl}",
    ]
    n = 2 + int(intensity * (len(sentences) - 2) + rng.random())
    a = " ".join(sentences[:n]) + "."
    b = a
    for hard, easy in COMPLEX.items():
        b = b.replace(hard, easy)
    # Split the long sentence into short ones.
    b = b.replace(" and ", ". They ", 1).replace(" which was ", ". This was ", 1)
    b = b.replace(" in order to ", ". This will ", 1)
    return a, b


def style_pair(rng, s, intensity):
    bodies = rng.sample(FORMAL_BODIES, 3)
    n = 1 + int(intensity * 2 + rng.random())
    fill = dict(obj=s.obj, place=s.place, when=s.time)
    formal = rng.choice(FORMAL_OPENERS) + " " + ", and ".join(b.format(**fill) for b in bodies[:n]) + "."
    casual = " ".join(b.format(**fill) for b in bodies[:n])
    for f, c in sorted(CASUAL.items(), key=lambda kv: -len(kv[0])):
        casual = casual.replace(f, c)
    casual = casual.replace(",", "").lower() + " " + rng.choice(CASUAL_CLOSERS)
    if rng.random() < 0.5:
        return formal, casual
    return casual, formal


def entailment_pair(rng, s, intensity):
    parts = clause_pool(s)
    n = 2 + int(intensity * (len(parts) - 2) + rng.random())
    premise = " ".join(parts[:n]) + "."
    hyps = [
        f"Someone is {s.verb[1]} an object outside",
        f"There is a person {s.verb[1]} something",
        f"A {s.subj} is outdoors with a {s.obj}",
        f"An object is being {s.verb[2]} by a {s.subj}",
    ]
    hyp = rng.choice(hyps)
    extra = [f"and other people are around", f"and it happens {s.time}",
             f"and there is a second {s.subj}", f"somewhere near {s.place}",
             "and the place is not empty", "and the weather allows it"]
    rng.shuffle(extra)
    k = int(intensity * len(extra) + rng.random())
    hyp = " ".join([hyp] + extra[:k]) + "."
    return premise, hyp


def non_entailment_pair(rng, s, label):
    premise = " ".join(clause_pool(s)[:3]) + "."
    if label == "contradiction":
        hyp = f"Nobody is {s.verb[1]} anything and the {s.subj} is asleep at home."
    else:
        hyp = f"The {s.subj} is probably waiting for a friend who is late {s.time}."
    return premise, hyp


GENERATORS = {
    "ImageRecaptioning": caption_pair,
    "SentenceCompression": compression_pair,
    "SentenceSimplification": simplification_pair,
    "StyleTransfer": style_pair,
    "TextualEntailment": entailment_pair,
}

LO, HI, BINS = 100, 180, 8


def sum_bin(a, b):
    lo, hi = 2 * LO, 2 * HI
    return (len(a) + len(b) - lo) * BINS // (hi - lo + 1)


def in_window(a, b):
    return LO <= len(a) <= HI and LO <= len(b) <= HI


def filler_sentences(rng, s):
    pool = [f"It was {s.time}.", f"The {s.obj} was {s.colour}.", "Everything looked ordinary.",
            f"The {s.subj} did not hurry.", "It was a long day.", "Nothing else happened.",
            f"People were talking about {s.extra_place}.", "The air was still."]
    rng.shuffle(pool)
    return pool


DANGLING = {"a", "an", "the", "with", "over", "in", "of", "and", "at", "to", "by", "was", "did",
            "is", "while", "as", "before", "after", "on", "near", "not", "other", "second", "it",
            "that", "who", "which", "will", "for", "from", "through", "during", "there", "people"}


def cut(text, target):
    """Shorten to at most target characters at a word boundary."""
    if len(text) <= target:
        return text
    words = text[:text.rfind(" ", 0, target)].split(" ")
    while len(words) > 1 and words[-1].rstrip(",.").lower() in DANGLING:
        words.pop()
    return " ".join(words).rstrip(" ,.") + "."


def fit_pair(rng, s, a, b, ta, tb):
    # Shared filler keeps the two sides about the same content when padded.
    tail = " " + " ".join(filler_sentences(rng, s))
    if len(a) < ta:
        a = a + tail
    if len(b) < tb:
        b = b + tail
    return cut(a, ta), cut(b, tb)


def bin_bounds(b):
    lo, hi = 2 * LO, 2 * HI
    width = hi - lo + 1
    start = lo + (b * width + BINS - 1) // BINS
    stop = lo + ((b + 1) * width + BINS - 1) // BINS - 1
    return start, stop


def make_pairs(rng, task, n_total, n_windowed):
    """n_windowed pairs spread over the length bins, the rest unconstrained."""
    gen = GENERATORS[task]
    out = []
    per_bin = [n_windowed // BINS + (1 if i < n_windowed % BINS else 0) for i in range(BINS)]
    for b, need in enumerate(per_bin):
        start, stop = bin_bounds(b)
        got = 0
        while got < need:
            s = Scene(rng)
            a, t = gen(rng, s, rng.random())
            if not (in_window(a, t) and sum_bin(a, t) == b):
                # Stretch or trim both sides into the bin, keeping their ratio.
                total = rng.randint(start, stop) + rng.randint(0, 12)
                ratio = len(t) / len(a)
                ta = min(HI, max(LO, round(total / (1 + ratio))))
                tb = min(HI, max(LO, total - ta))
                a, t = fit_pair(rng, s, a, t, ta, tb)
            if in_window(a, t) and sum_bin(a, t) == b:
                out.append((a, t))
                got += 1
    while len(out) < n_total:
        s = Scene(rng)
        out.append(gen(rng, s, rng.random()))
    rng.shuffle(out)
    return out


def decompose_some(rng, text):
    """Occasionally use NFD accents so ingestion has something to normalize."""
    if rng.random() < 0.05:
        text = text.replace("cafe", unicodedata.normalize("NFD", "café"))
    return text


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")


def write_delimited(path, header, rows, delimiter):
    with open(path, "w", encoding="utf-8", newline="") as f:
        if delimiter == "\t":
            if header:
                f.write("\t".join(header) + "\n")
            for r in rows:
                f.write("\t".join(str(x) for x in r) + "\n")
        else:
            w = csv.writer(f, lineterminator="\n")
            if header:
                w.writerow(header)
            w.writerows(rows)


def build(out_dir: Path, seed: int, per_dataset: int, windowed: int):
    rng = random.Random(seed)
    out_dir.mkdir(parents=True, exist_ok=True)
    descriptors = []

    def descriptor(name, files, fmt, mapping, gold=None, header=True, filt=None):
        d = {"name": name, "paths": files, "format": fmt, "header": header, "mapping": mapping}
        if gold:
            d["gold_task"] = gold
        if filt:
            d["filter"] = filt
        (out_dir / f"{name}.descriptor.json").write_text(json.dumps(d, indent=2) + "\n")
        descriptors.append(name)

    # ImageRecaptioning: JSONL and CSV
    pairs = make_pairs(rng, "ImageRecaptioning", per_dataset, windowed)
    write_jsonl(out_dir / "caption_scenes.jsonl",
                [{"caption_1": a, "caption_2": b, "image": f"img{i:04d}"} for i, (a, b) in enumerate(pairs)])
    descriptor("caption_scenes", ["caption_scenes.jsonl"], "jsonl",
               {"text_a": "caption_1", "text_b": "caption_2"}, gold="ImageRecaptioning")

    pairs = make_pairs(rng, "ImageRecaptioning", per_dataset, windowed)
    rows = [[f"p{i}", a, b] for i, (a, b) in enumerate(pairs)]
    rows.insert(17, ["bad", "", "An empty first caption is dropped."])
    write_delimited(out_dir / "caption_objects.csv", ["pid", "first", "second"], rows, ",")
    descriptor("caption_objects", ["caption_objects.csv"], "csv",
               {"text_a": "first", "text_b": "second"}, gold="ImageRecaptioning")

    # SentenceCompression: TSV (two files, headerless, index mapping) and JSONL
    pairs = make_pairs(rng, "SentenceCompression", per_dataset, windowed)
    half = len(pairs) // 2
    rows = [[a, b] for a, b in pairs]
    rows.insert(40, ["A row with a missing compressed side."])
    write_delimited(out_dir / "compress_news_1.tsv", None, rows[:half], "\t")
    write_delimited(out_dir / "compress_news_2.tsv", None, rows[half:], "\t")
    descriptor("compress_news", ["compress_news_1.tsv", "compress_news_2.tsv"], "tsv",
               {"text_a": 0, "text_b": 1}, gold="SentenceCompression", header=False)

    pairs = make_pairs(rng, "SentenceCompression", per_dataset, windowed)
    write_jsonl(out_dir / "compress_reviews.jsonl",
                [{"long": decompose_some(rng, a), "short": b} for a, b in pairs])
    descriptor("compress_reviews", ["compress_reviews.jsonl"], "jsonl",
               {"text_a": "long", "text_b": "short"}, gold="SentenceCompression")

    # SentenceSimplification: JSONL and TSV
    pairs = make_pairs(rng, "SentenceSimplification", per_dataset, windowed)
    write_jsonl(out_dir / "simplify_encyclopedia.jsonl",
                [{"complex": a, "simple": b} for a, b in pairs])
    descriptor("simplify_encyclopedia", ["simplify_encyclopedia.jsonl"], "jsonl",
               {"text_a": "complex", "text_b": "simple"}, gold="SentenceSimplification")

    pairs = make_pairs(rng, "SentenceSimplification", per_dataset, windowed)
    write_delimited(out_dir / "simplify_science.tsv", ["original", "simplified"],
                    [[a, b] for a, b in pairs], "\t")
    descriptor("simplify_science", ["simplify_science.tsv"], "tsv",
               {"text_a": "original", "text_b": "simplified"}, gold="SentenceSimplification")

    # StyleTransfer: CSV with a task column (mapping) and JSONL
    pairs = make_pairs(rng, "StyleTransfer", per_dataset, windowed)
    write_delimited(out_dir / "style_formality.csv", ["source", "target", "task"],
                    [[a, b, "style transfer"] for a, b in pairs], ",")
    descriptor("style_formality", ["style_formality.csv"], "csv",
               {"text_a": "source", "text_b": "target", "task": "task"})

    pairs = make_pairs(rng, "StyleTransfer", per_dataset, windowed)
    write_jsonl(out_dir / "style_register.jsonl", [{"a": a, "b": b} for a, b in pairs])
    descriptor("style_register", ["style_register.jsonl"], "jsonl", {"text_a": "a", "text_b": "b"},
               gold="StyleTransfer")

    # TextualEntailment: CSV and TSV with non-entailed rows to filter out
    for name, fmt, ext in (("entail_premises", "csv", "csv"), ("entail_stories", "tsv", "tsv")):
        pairs = make_pairs(rng, "TextualEntailment", per_dataset, windowed)
        rows = [[a, b, "entailment"] for a, b in pairs]
        for _ in range(per_dataset // 3):
            label = rng.choice(["neutral", "contradiction"])
            a, b = non_entailment_pair(rng, Scene(rng), label)
            rows.insert(rng.randrange(len(rows) + 1), [a, b, label])
        write_delimited(out_dir / f"{name}.{ext}", ["premise", "hypothesis", "gold_label"], rows,
                        "," if fmt == "csv" else "\t")
        descriptor(name, [f"{name}.{ext}"], fmt, {"text_a": "premise", "text_b": "hypothesis"},
                   gold="TextualEntailment", filt={"field": "gold_label", "equals": ["entailment"]})

    # General-purpose corpora: unlabeled mixtures with a task skew, plus a
    # binary quality column in the style of paraphrase identification data.
    mixes = {
        "general_news": {"SentenceCompression": 0.45, "ImageRecaptioning": 0.05,
                         "SentenceSimplification": 0.25, "StyleTransfer": 0.05, "TextualEntailment": 0.20},
        "general_forum": {"SentenceCompression": 0.10, "ImageRecaptioning": 0.15,
                          "SentenceSimplification": 0.05, "StyleTransfer": 0.50, "TextualEntailment": 0.20},
    }
    for name, mix in mixes.items():
        rows = []
        tasks = list(mix)
        weights = [mix[t] for t in tasks]
        for i in range(400):
            task = rng.choices(tasks, weights)[0]
            a, b = GENERATORS[task](rng, Scene(rng), rng.random())
            rows.append([str(rng.randint(0, 1)), f"{i}a", f"{i}b", a, b])
        write_delimited(out_dir / f"{name}.tsv", ["quality", "id_1", "id_2", "string_1", "string_2"], rows, "\t")
        descriptor(name, [f"{name}.tsv"], "tsv", {"text_a": "string_1", "text_b": "string_2"})

    return descriptors


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "minicorpora")
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--per-dataset", type=int, default=250)
    ap.add_argument("--windowed", type=int, default=120,
                    help="pairs per dataset placed inside the annotation length window")
    args = ap.parse_args()
    names = build(args.out, args.seed, args.per_dataset, args.windowed)
    print(f"wrote {len(names)} corpora to {args.out}")


if __name__ == "__main__":
    main()
