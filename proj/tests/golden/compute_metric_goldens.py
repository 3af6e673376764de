#!/usr/bin/env python3
"""Reference computation for the frozen metric values in the C++ test suites.

Implements corpus BLEU (orders 1-4, exponential smoothing, 13a tokenization,
effective-order truncation, brevity penalty exp(1 - r/c) for c < r) and
chrF2 (byte n-grams up to order 6, whitespace removed, per-order F2 averaged
over effective orders) directly from their definitions, with no shared code
with the C++ implementation. Run it to regenerate the constants asserted in
tests/test_metrics.cpp and tests/acceptance.cpp.
"""

import math
import re
from collections import Counter


def tokenize_13a(line: str):
    line = line.replace("<skipped>", "")
    line = line.replace("-\n", "")
    line = line.replace("\n", " ")
    line = line.replace("&quot;", '"')
    line = line.replace("&amp;", "&")
    line = line.replace("&lt;", "<")
    line = line.replace("&gt;", ">")
    line = f" {line} "
    line = re.sub(r"([\{-\~\[-\` -\&\(-\+\:-\@\/])", r" \1 ", line)
    line = re.sub(r"([^0-9])([\.,])", r"\1 \2 ", line)
    line = re.sub(r"([\.,])([^0-9])", r" \1 \2", line)
    line = re.sub(r"([0-9])(-)", r"\1 - ", line)
    return line.split()


def ngram_counts(tokens, n):
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(hyps, refs):
    assert len(hyps) == len(refs)
    match = [0] * 4
    total = [0] * 4
    hyp_len = 0
    ref_len = 0
    for hyp, ref in zip(hyps, refs):
        h = tokenize_13a(hyp)
        r = tokenize_13a(ref)
        hyp_len += len(h)
        ref_len += len(r)
        for n in range(1, 5):
            hc = ngram_counts(h, n)
            rc = ngram_counts(r, n)
            match[n - 1] += sum(min(c, rc[g]) for g, c in hc.items())
            total[n - 1] += max(0, len(h) - n + 1)

    smooth = 1.0
    log_sum = 0.0
    eff_order = 0
    for n in range(1, 5):
        if total[n - 1] == 0:
            break
        eff_order = n
        if match[n - 1] == 0:
            smooth *= 2.0
            p = 1.0 / (smooth * total[n - 1])
        else:
            p = match[n - 1] / total[n - 1]
        log_sum += math.log(p)
    if eff_order == 0 or hyp_len == 0:
        return 0.0
    bp = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    return 100.0 * bp * math.exp(log_sum / eff_order)


def chrf2(hyps, refs, max_order=6, beta=2.0):
    assert len(hyps) == len(refs)
    match = [0] * max_order
    hyp_total = [0] * max_order
    ref_total = [0] * max_order
    for hyp, ref in zip(hyps, refs):
        h = re.sub(r"\s+", "", hyp)
        r = re.sub(r"\s+", "", ref)
        for n in range(1, max_order + 1):
            hc = Counter(h[i : i + n] for i in range(len(h) - n + 1))
            rc = Counter(r[i : i + n] for i in range(len(r) - n + 1))
            match[n - 1] += sum(min(c, rc[g]) for g, c in hc.items())
            hyp_total[n - 1] += max(0, len(h) - n + 1)
            ref_total[n - 1] += max(0, len(r) - n + 1)

    f_sum = 0.0
    eff_orders = 0
    factor = beta * beta
    for n in range(max_order):
        if hyp_total[n] == 0 and ref_total[n] == 0:
            continue
        eff_orders += 1
        prec = match[n] / hyp_total[n] if hyp_total[n] > 0 else 0.0
        rec = match[n] / ref_total[n] if ref_total[n] > 0 else 0.0
        denom = factor * prec + rec
        if denom > 0:
            f_sum += (1.0 + factor) * prec * rec / denom
    if eff_orders == 0:
        return 0.0
    return 100.0 * f_sum / eff_orders


CORPORA = {
    "identity": (
        ["the cat sat on the mat", "a stitch in time saves nine"],
        ["the cat sat on the mat", "a stitch in time saves nine"],
    ),
    "short_hyp": (
        ["the cat sat"],
        ["the cat sat down"],
    ),
    "disjoint": (
        ["aa bb cc dd ee ff gg hh ii jj kk ll mm nn oo pp qq rr ss tt"],
        ["uv vw wx xy yz zu uw vx wy xz yu zv ux vy wz xu yv zw uy vz"],
    ),
    "punct_pair": (
        ["Hello, world!", "the quick brown fox jumps"],
        ["Hello, world.", "the quick brown fox jumped"],
    ),
}


if __name__ == "__main__":
    for name, (hyps, refs) in CORPORA.items():
        print(f"{name}:")
        print(f"  tokens_hyp = {[tokenize_13a(h) for h in hyps]}")
        print(f"  bleu  = {corpus_bleu(hyps, refs):.10f}")
        print(f"  chrf2 = {chrf2(hyps, refs):.10f}")
