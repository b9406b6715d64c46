"""Independent oracle for the metrics report.

Generates a seeded 200-record pairs file (ASCII words and punctuation only, so
tokenization is a regex) and writes the expected summary.txt, summary.csv and
scatter.csv computed here from first principles, plus a small fixture of
embedding cosines for the trigram hashing embedder.

Run from anywhere; outputs land next to this script. Re-running is
deterministic.
"""
import json
import math
import pathlib
import random
import re
import struct

HERE = pathlib.Path(__file__).resolve().parent
OUT = HERE / "golden" / "metrics200"
MASK = (1 << 64) - 1

# --- tokenization and edit distance -----------------------------------------

def tokens(text):
    return re.findall(r"[A-Za-z0-9]+|[^A-Za-z0-9\s]", text.lower())


def levenshtein(a, b):
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i]
        for j, y in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]

# --- trigram hashing embedder ------------------------------------------------

def mix64(x):
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & MASK
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & MASK
    x ^= x >> 31
    return x


def trigram_hash(a, b, c):
    h = 0xCBF29CE484222325
    for cp in (a, b, c):
        for shift in (0, 8, 16, 24):
            h ^= (cp >> shift) & 0xFF
            h = (h * 0x100000001B3) & MASK
    return mix64(h)


def embed(text, dim):
    canon = " ".join(text.split()).lower()
    assert canon and canon.isascii()
    cps = [2, 2] + [ord(ch) for ch in canon] + [2, 2]
    v = [0.0] * dim
    for i in range(len(cps) - 2):
        h = trigram_hash(cps[i], cps[i + 1], cps[i + 2])
        v[(h & 0xFFFFFFFF) % dim] += -1.0 if h >> 63 else 1.0
    sq = 0.0
    for x in v:
        sq += x * x
    n = math.sqrt(sq)
    return [x / n for x in v]


def cosine(a, b, dim):
    va, vb = embed(a, dim), embed(b, dim)
    s = 0.0
    for x, y in zip(va, vb):
        s += x * y
    return max(-1.0, min(1.0, s))

# --- statistics --------------------------------------------------------------

def median(values):
    v = sorted(values)
    n = len(v)
    return v[n // 2] if n % 2 else (v[n // 2 - 1] + v[n // 2]) / 2


def p5(values):
    v = sorted(values)
    return v[max(1, math.ceil(len(v) * 5 / 100)) - 1]


def pearson(xs, ys):
    n = len(xs)
    if n < 2:
        return None
    mx, my = sum(xs) / n, sum(ys) / n
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    if sxx == 0 or syy == 0:
        return None
    return max(-1.0, min(1.0, sxy / math.sqrt(sxx * syy)))


def stats(group):
    n = len(group)
    edits = [r["edits"] for r in group]
    paired = [r for r in group if r["cosine"] is not None]
    cos = [r["cosine"] for r in paired]
    return {
        "n": n,
        "median_edits": float(median(edits)),
        "mean_edits": sum(edits) / n,
        "pct_le_2": 100.0 * sum(e <= 2 for e in edits) / n,
        "pct_le_5": 100.0 * sum(e <= 5 for e in edits) / n,
        "n_cosine": len(cos),
        "mean_cosine": sum(cos) / len(cos),
        "median_cosine": median(cos),
        "p5_cosine": p5(cos),
        "pearson_r": pearson([float(r["edits"]) for r in paired], cos),
    }

# --- rendering ---------------------------------------------------------------

NAMES = {"zero_shot": "Zero-shot", "rag": "RAG", "baseline": "Baseline"}
ORDER = ["zero_shot", "rag", "baseline"]


def table(header, rows):
    widths = [max(len(r[c]) for r in [header] + rows) for c in range(len(header))]
    lines = []
    for r in [header] + rows:
        cells = [r[0].ljust(widths[0])] + [r[c].rjust(widths[c]) for c in range(1, len(r))]
        lines.append("  ".join(cells).rstrip(" "))
    return "\n".join(lines) + "\n"


def fmt_median(v):
    return "%.0f" % v if v == math.floor(v) else "%.1f" % v


def summary_txt(by_mode):
    modes = [m for m in ORDER if m in by_mode]
    s = by_mode
    out = "Token-level edit distance\n"
    out += table(["Method", "N", "Median edits", "Mean edits", "% ≤2 edits", "% ≤5 edits"],
                 [[NAMES[m], str(s[m]["n"]), fmt_median(s[m]["median_edits"]), "%.2f" % s[m]["mean_edits"],
                   "%.1f" % s[m]["pct_le_2"], "%.1f" % s[m]["pct_le_5"]] for m in modes])
    out += "\nCosine similarity between original and generated responses\n"
    out += table(["Method", "N", "Mean cosine", "Median cosine", "5th percentile"],
                 [[NAMES[m], str(s[m]["n_cosine"]), "%.3f" % s[m]["mean_cosine"],
                   "%.3f" % s[m]["median_cosine"], "%.3f" % s[m]["p5_cosine"]] for m in modes])
    out += "\nPearson r between edit distance and cosine similarity\n"
    out += table(["Method", "N", "r"],
                 [[NAMES[m], str(s[m]["n_cosine"]),
                   "n/a" if s[m]["pearson_r"] is None else "%.2f" % s[m]["pearson_r"]] for m in modes])
    return out


def g17(v):
    return "%.17g" % v


def summary_csv(by_mode):
    out = "mode,n,median_edits,mean_edits,pct_le_2,pct_le_5,n_cosine,mean_cosine,median_cosine,p5_cosine,pearson_r\n"
    for m in ORDER:
        if m not in by_mode:
            continue
        s = by_mode[m]
        out += ",".join([m, str(s["n"]), g17(s["median_edits"]), g17(s["mean_edits"]), g17(s["pct_le_2"]),
                         g17(s["pct_le_5"]), str(s["n_cosine"]), g17(s["mean_cosine"]), g17(s["median_cosine"]),
                         g17(s["p5_cosine"]), "" if s["pearson_r"] is None else g17(s["pearson_r"])]) + "\n"
    return out

# --- corpus ------------------------------------------------------------------

WORDS = ("the team meeting ran late again and everyone felt tired after lunch we should book a table "
         "for dinner tonight near the station this weather is really hot so bring water my phone "
         "battery died during the call please send the report before noon tomorrow traffic was "
         "terrible on the expressway").split()
SWAPS = "sian shiok kiasu chope makan jialat steady shack blur paiseh".split()
PUNCT = [",", ".", "!", "?"]


def sentence(rng):
    words = [rng.choice(WORDS) for _ in range(rng.randint(3, 14))]
    if rng.random() < 0.5:
        words[0] = words[0].capitalize()
    out = []
    for i, w in enumerate(words):
        out.append(w)
        if i + 1 < len(words) and rng.random() < 0.12:
            out[-1] += ","
    return " ".join(out) + rng.choice(PUNCT[1:])


def text(rng):
    return " ".join(sentence(rng) for _ in range(rng.randint(1, 3)))


def substitute(rng, original, count):
    parts = original.split(" ")
    for _ in range(count):
        i = rng.randrange(len(parts))
        trail = re.sub(r"^[A-Za-z0-9]+", "", parts[i])
        parts[i] = rng.choice(SWAPS) + trail
    return " ".join(parts)


def paraphrase(rng, original):
    parts = original.split(" ")
    cut = max(1, len(parts) // 3)
    parts = parts[cut:] + parts[:cut]
    for i in range(len(parts)):
        if rng.random() < 0.6:
            trail = re.sub(r"^[A-Za-z0-9]+", "", parts[i])
            parts[i] = rng.choice(WORDS + SWAPS) + trail
    return " ".join(parts)


def corpus():
    rng = random.Random(20240601)
    records = []
    for i in range(200):
        mode = ORDER[i % 3]
        original = text(rng)
        if mode == "baseline":
            generated = original.upper() if rng.random() < 0.1 else original
        elif mode == "rag":
            generated = substitute(rng, original, rng.choice([0, 1, 1, 1, 2, 3]))
        else:
            generated = paraphrase(rng, original)
        records.append({"id": "m%03d" % (i + 1), "mode": mode, "original": original, "generated": generated})
    records[4]["generated"] = ""  # a rag record without a cosine
    records[7]["original"] = "   "  # and another
    return records


def main():
    dim = 256
    records = corpus()
    with open(HERE / "metrics200.jsonl", "w", encoding="utf-8", newline="\n") as f:
        for r in records:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")

    scored = []
    for r in records:
        e = levenshtein(tokens(r["original"]), tokens(r["generated"]))
        c = None
        if r["original"].strip() and r["generated"].strip():
            c = cosine(r["original"], r["generated"], dim)
        scored.append({"mode": r["mode"], "edits": e, "cosine": c})

    by_mode = {m: stats([s for s in scored if s["mode"] == m]) for m in ORDER}
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "summary.txt").write_text(summary_txt(by_mode), encoding="utf-8", newline="\n")
    (OUT / "summary.csv").write_text(summary_csv(by_mode), encoding="utf-8", newline="\n")
    scatter = "mode,edit_distance,cosine\n" + "".join(
        "%s,%d,%s\n" % (s["mode"], s["edits"], "" if s["cosine"] is None else g17(s["cosine"])) for s in scored)
    (OUT / "scatter.csv").write_text(scatter, encoding="utf-8", newline="\n")

    pairs = [
        ("that sounds really exhausting", "that sounds really sian"),
        ("Back-to-back meetings can wear anyone down.", "back-to-back   MEETINGS can wear anyone down."),
        ("You must try this dish, it's amazing!", "Eh, this dish damn shiok, must try!"),
        ("abc", "xyz"),
    ]
    fixture = [{"a": a, "b": b, "dim": d, "cosine": cosine(a, b, d)} for a, b in pairs for d in (64, 256)]
    (HERE / "embedding_cosines.json").write_text(json.dumps(fixture, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
