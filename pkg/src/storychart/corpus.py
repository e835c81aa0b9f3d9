"""Text ingestion: sentences, tokens, segments, frequencies and trends.

Everything here is a pure function over immutable values: a loaded
``Document`` never changes, so it is safe to share between threads.
"""

from __future__ import annotations

import re
import unicodedata
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
import warnings

from .errors import (
    EmptyDocument,
    InvalidEncoding,
    SegmentCountTooLarge,
    UnknownTermWarning,
)

SENTENCE_TERMINATORS = frozenset(".!?…")

# Abbreviations whose trailing period never ends a sentence.
ABBREVIATIONS = frozenset(
    ["sr", "sra", "dr", "dra", "prof", "eng", "exmo", "art", "pág"]
)

# A word is a maximal run of letters/digits, optionally joined by internal
# hyphens or apostrophes ("disse-lhe", "d'água"); anything else that is not
# whitespace becomes a single-character punctuation token.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’\-][^\W_]+)*|[^\s]")


def normalize_term(surface: str) -> str:
    """Canonical comparison form: Unicode NFC, lowercased, diacritics kept."""
    return unicodedata.normalize("NFC", surface).lower()


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    start: int
    end: int
    sentence_index: int
    segment_index: int
    is_stopword: bool = False

    @property
    def is_word(self) -> bool:
        """True for word tokens, False for punctuation tokens."""
        return self.surface[0].isalnum()


@dataclass(frozen=True)
class Document:
    """An ingested text with sentence, token and segment structure.

    ``sentences`` are character spans, non-overlapping and ascending.
    ``segments`` are half-open token index ranges that partition
    ``[0, len(tokens))``; sizes differ by at most one, with any remainder
    given to the earliest segments.
    """

    text: str
    sentences: tuple[tuple[int, int], ...]
    tokens: tuple[Token, ...]
    segments: tuple[tuple[int, int], ...]
    segment_count: int

    def segment_of_offset(self, char_offset: int) -> int:
        """Segment index of the token covering a character offset."""
        starts = [t.start for t in self.tokens]
        i = bisect_right(starts, char_offset) - 1
        return self.tokens[max(i, 0)].segment_index


@dataclass(frozen=True)
class FrequencyTable:
    """Term counts over normalized token forms.

    ``total_tokens`` is the number of word (non-punctuation) tokens in the
    document, so any filtered count sum stays below it.
    """

    entries: dict[str, int]
    total_tokens: int

    def top(self, n: int) -> list[tuple[str, int]]:
        """The n most frequent terms, ties broken by ascending term."""
        ranked = sorted(self.entries.items(), key=lambda kv: (-kv[1], kv[0]))
        return ranked[:n]


@dataclass(frozen=True)
class TrendSeries:
    """Per-segment counts for a fixed list of terms (rows follow ``terms``)."""

    terms: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]
    segment_count: int


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Split text into sentence character spans.

    A sentence ends at '.', '!', '?' or '…' followed by whitespace and an
    uppercase letter, or at end of text.  A period directly after a listed
    abbreviation never terminates.  Trailing text without a terminator forms
    a final sentence.
    """
    spans: list[tuple[int, int]] = []
    n = len(text)
    start = _next_nonspace(text, 0)
    i = start
    while i < n:
        ch = text[i]
        if ch in SENTENCE_TERMINATORS and start <= i:
            if ch == "." and _preceding_word(text, i) in ABBREVIATIONS:
                i += 1
                continue
            if _is_boundary(text, i):
                spans.append((start, i + 1))
                start = _next_nonspace(text, i + 1)
                i = start
                continue
        i += 1
    if start < n:
        end = n
        while end > start and text[end - 1].isspace():
            end -= 1
        if end > start:
            spans.append((start, end))
    return spans


def _next_nonspace(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _preceding_word(text: str, i: int) -> str:
    j = i
    while j > 0 and text[j - 1].isalpha():
        j -= 1
    return normalize_term(text[j:i])


def _is_boundary(text: str, i: int) -> bool:
    if i + 1 >= len(text):
        return True
    if not text[i + 1].isspace():
        return False
    k = _next_nonspace(text, i + 1)
    return k >= len(text) or text[k].isupper()


def tokenize(text: str, sentences: list[tuple[int, int]] | tuple = ()) -> list[Token]:
    """Scan text into tokens; sentence indices come from the given spans.

    Segment indices are left at 0 and stopword flags unset; both are filled
    in by ``load_document``.
    """
    tokens: list[Token] = []
    sent_i = 0
    for m in _TOKEN_RE.finditer(text):
        start, end = m.start(), m.end()
        while sent_i < len(sentences) and start >= sentences[sent_i][1]:
            sent_i += 1
        surface = m.group()
        tokens.append(
            Token(
                surface=surface,
                normalized=normalize_term(surface),
                start=start,
                end=end,
                sentence_index=min(sent_i, max(len(sentences) - 1, 0)),
                segment_index=0,
            )
        )
    return tokens


def remove_stopwords(tokens: list[Token], stopword_set: frozenset[str] | set[str]) -> list[Token]:
    """Mark (never delete) tokens whose normalized form is a stopword."""
    return [replace(t, is_stopword=t.normalized in stopword_set) for t in tokens]


def segment_ranges(token_count: int, segment_count: int) -> list[tuple[int, int]]:
    """Equal-size token ranges; the remainder goes to the earliest segments."""
    base, extra = divmod(token_count, segment_count)
    ranges = []
    pos = 0
    for s in range(segment_count):
        size = base + (1 if s < extra else 0)
        ranges.append((pos, pos + size))
        pos += size
    return ranges


def load_document(
    data: bytes | str,
    segment_count: int = 10,
    stopwords: frozenset[str] | set[str] | None = None,
) -> Document:
    """Decode, sentence-split, tokenize and segment a text.

    ``stopwords`` defaults to the bundled Portuguese list; pass an empty set
    to disable marking.  Raises ``InvalidEncoding`` for non-UTF-8 input or
    control characters other than newline/tab, ``EmptyDocument`` when no
    token survives, ``SegmentCountTooLarge`` when there are fewer tokens
    than segments.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidEncoding(f"input is not valid UTF-8: {exc}") from None
    else:
        text = data
    for ch in text:
        if unicodedata.category(ch) == "Cc" and ch not in ("\n", "\t"):
            raise InvalidEncoding(f"control character {ch!r} not allowed")
    if segment_count < 1:
        raise ValueError("segment_count must be >= 1")

    sentences = tuple(split_sentences(text))
    tokens = tokenize(text, sentences)
    if not tokens:
        raise EmptyDocument("text contains no tokens")
    if segment_count > len(tokens):
        raise SegmentCountTooLarge(
            f"{segment_count} segments requested but only {len(tokens)} tokens"
        )
    if stopwords is None:
        stopwords = load_stopwords()
    tokens = remove_stopwords(tokens, stopwords)

    segments = segment_ranges(len(tokens), segment_count)
    seg_tokens = []
    for seg_index, (lo, hi) in enumerate(segments):
        for t in tokens[lo:hi]:
            seg_tokens.append(replace(t, segment_index=seg_index))
    return Document(
        text=text,
        sentences=sentences,
        tokens=tuple(seg_tokens),
        segments=tuple(segments),
        segment_count=segment_count,
    )


def term_frequencies(
    doc: Document,
    include_stopwords: bool = False,
    min_length: int = 2,
) -> FrequencyTable:
    """Count normalized forms of word tokens, skipping stopwords by default."""
    counts: Counter[str] = Counter()
    total = 0
    for t in doc.tokens:
        if not t.is_word:
            continue
        total += 1
        if t.is_stopword and not include_stopwords:
            continue
        if len(t.normalized) < min_length:
            continue
        counts[t.normalized] += 1
    return FrequencyTable(entries=dict(counts), total_tokens=total)


def trend_series(doc: Document, terms: list[str]) -> TrendSeries:
    """Per-segment occurrence counts for each term (exact normalized match).

    Terms are normalized before matching.  A term that never occurs yields
    an all-zero row and records an ``UnknownTermWarning``.
    """
    if not terms:
        raise ValueError("terms must be non-empty")
    normed = tuple(normalize_term(t) for t in terms)
    rows = []
    for term in normed:
        row = [0] * doc.segment_count
        for t in doc.tokens:
            if t.normalized == term:
                row[t.segment_index] += 1
        if sum(row) == 0:
            warnings.warn(
                f"term {term!r} does not occur in the document",
                UnknownTermWarning,
                stacklevel=2,
            )
        rows.append(tuple(row))
    return TrendSeries(terms=normed, counts=tuple(rows), segment_count=doc.segment_count)


def parse_stopword_text(content: str) -> frozenset[str]:
    """One normalized term per line; blank lines and '#' comments ignored."""
    terms = set()
    for line in content.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        terms.add(normalize_term(line))
    return frozenset(terms)


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Stopwords from a file, or the bundled Portuguese list when no path."""
    if path is None:
        content = resources.files("storychart.data").joinpath("stopwords_pt.txt").read_text("utf-8")
    else:
        content = Path(path).read_text("utf-8")
    return parse_stopword_text(content)
