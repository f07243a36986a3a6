"""Access to bundled data files: rule sets, message catalogs, fixtures."""
from __future__ import annotations

from importlib import resources
from typing import Dict, List

from .errors import CatalogError
from .i18n import Catalog, CatalogChain, load_catalog
from .rules import RuleBase, load_rules

_DATA = resources.files(__name__.rsplit(".", 1)[0]) / "data"


def baseline_rules_text() -> str:
    return (_DATA / "rules" / "baseline.rules").read_text(encoding="utf-8")


def baseline_rules() -> RuleBase:
    return load_rules(baseline_rules_text())


def catalog_languages() -> List[str]:
    out = []
    for entry in (_DATA / "i18n").iterdir():
        if entry.name.endswith(".csv"):
            out.append(entry.name[: -len(".csv")])
    return sorted(out)


def catalog_text(language: str) -> str:
    path = _DATA / "i18n" / f"{language}.csv"
    try:
        return path.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError):
        raise CatalogError(f"no bundled catalog for language {language!r}") from None


def load_builtin_catalog(language: str) -> Catalog:
    return load_catalog(catalog_text(language), language)


def builtin_catalogs() -> Dict[str, Catalog]:
    return {lang: load_builtin_catalog(lang) for lang in catalog_languages()}


def catalog_chain(language: str) -> CatalogChain:
    """Chain for *language* with English as the final fallback."""
    cats = []
    if language != "en":
        cats.append(load_builtin_catalog(language))
    cats.append(load_builtin_catalog("en"))
    return CatalogChain(tuple(cats))


def fixture_names() -> List[str]:
    out = []
    for entry in (_DATA / "fixtures").iterdir():
        if entry.name.endswith(".gcs"):
            out.append(entry.name[: -len(".gcs")])
    return sorted(out)


def fixture_text(name: str) -> str:
    return (_DATA / "fixtures" / f"{name}.gcs").read_text(encoding="utf-8")
