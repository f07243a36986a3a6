"""Message catalogs (CSV) and the fallback-chain lookup used by renderers.

Catalog files follow the GeoGebra-era convention: one ``id,key,text`` row
per phrase with an optional fourth tooltip column, ``#`` comment lines, and
blank lines.  The numeric id is carried along for round-tripping but plays
no role in lookup; keys are what renderers resolve.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import CatalogError


@dataclass(frozen=True)
class CatalogEntry:
    id: int
    key: str
    text: str
    tooltip: Optional[str] = None


@dataclass(frozen=True)
class Catalog:
    language: str
    entries: Tuple[CatalogEntry, ...]
    _by_key: Dict[str, CatalogEntry] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        by_key = {e.key: e for e in self.entries}
        object.__setattr__(self, "_by_key", by_key)

    def get(self, key: str) -> Optional[str]:
        e = self._by_key.get(key)
        return e.text if e is not None else None

    def keys(self) -> Iterable[str]:
        return self._by_key.keys()

    def __len__(self) -> int:
        return len(self.entries)


def load_catalog(source, language: str) -> Catalog:
    """Parse CSV catalog text (str or bytes) into a :class:`Catalog`.

    Raises :class:`CatalogError` with a line number for a non-integer id,
    a row with fewer than three fields, or a duplicate key (the message
    names both offending lines).
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8", errors="replace")
    source = source.lstrip("﻿")
    entries: List[CatalogEntry] = []
    first_line: Dict[str, int] = {}
    for lineno, raw in enumerate(source.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            row = next(csv.reader(io.StringIO(raw)))
        except (csv.Error, StopIteration) as exc:
            raise CatalogError(f"malformed CSV row: {exc}", line=lineno) from exc
        if len(row) < 3:
            raise CatalogError(
                f"expected at least 3 fields (id,key,text), got {len(row)}", line=lineno
            )
        try:
            entry_id = int(row[0])
        except ValueError:
            raise CatalogError(f"id {row[0]!r} is not an integer", line=lineno) from None
        if entry_id < 0:
            raise CatalogError(f"id {entry_id} is negative", line=lineno)
        # Keys are kept verbatim: stray whitespace is exactly the kind of
        # drift `lint` exists to flag, so parsing must not paper over it.
        key = row[1]
        if not key:
            raise CatalogError("empty key", line=lineno)
        if key in first_line:
            raise CatalogError(
                f"duplicate key {key!r} (first defined on line {first_line[key]})",
                line=lineno,
            )
        first_line[key] = lineno
        tooltip = row[3] if len(row) > 3 and row[3].strip() else None
        entries.append(CatalogEntry(entry_id, key, row[2], tooltip))
    return Catalog(language, tuple(entries))


@dataclass(frozen=True)
class CatalogChain:
    """Ordered catalogs, most specific first; English conventionally last.

    Lookup is total: a key missing from every catalog falls back to the key
    itself, so rendering never crashes on an untranslated phrase.
    """

    catalogs: Tuple[Catalog, ...]

    def lookup(self, key: str) -> str:
        for cat in self.catalogs:
            text = cat.get(key)
            if text is not None and text != "":
                return text
        return key

    def __call__(self, key: str) -> str:
        return self.lookup(key)


@dataclass(frozen=True)
class LintFinding:
    language: str
    kind: str  # "missing" | "extra" | "empty" | "near_miss"
    key: str
    detail: str = ""

    def __str__(self) -> str:
        msg = f"{self.language}: {self.kind.replace('_', '-')} key {self.key!r}"
        return f"{msg} ({self.detail})" if self.detail else msg


def _normalized(text: str) -> str:
    return " ".join(text.split()).lower()


def lint(catalogs: Sequence[Catalog], baseline: Catalog) -> List[LintFinding]:
    """Compare each catalog against the baseline (usually English).

    Reports keys missing from a catalog, extra keys the baseline lacks,
    entries whose text is empty, and near-misses: keys absent from the
    baseline that match a baseline key up to case or whitespace (the usual
    shape of spelling drift, e.g. ``"Prove "`` vs ``"Prove"``).
    """
    findings: List[LintFinding] = []
    base_keys = set(baseline.keys())
    base_by_norm: Dict[str, str] = {}
    for key in sorted(base_keys):
        base_by_norm.setdefault(_normalized(key), key)
    for cat in catalogs:
        if cat.language == baseline.language:
            continue
        keys = set(cat.keys())
        for key in sorted(base_keys - keys):
            findings.append(LintFinding(cat.language, "missing", key))
        for key in sorted(keys - base_keys):
            counterpart = base_by_norm.get(_normalized(key))
            if counterpart is not None:
                findings.append(
                    LintFinding(
                        cat.language,
                        "near_miss",
                        key,
                        f"probably means baseline key {counterpart!r}",
                    )
                )
            else:
                findings.append(LintFinding(cat.language, "extra", key))
        for key in sorted(keys):
            if not (cat.get(key) or "").strip():
                findings.append(LintFinding(cat.language, "empty", key))
    return findings
