"""Lexical URL features for scoring live URLs with a trained model.

Only features computable from the URL string itself are implemented; page
content and third-party lookups are out of scope.  Each feature matches a
column of the public training corpus by exact name and by definition (the
definitions were cross-checked against the corpus values; see
docs/url_features.md for the full list).  Two conventions worth calling
out because they differ from what the names suggest:

* ``https_token`` is a suspicion flag: 0 when the scheme is https, 1
  otherwise.
* count features count over the WHOLE url string (``nb_dots`` includes
  dots in the path, not just the hostname).

The corpus ``ip`` column is deliberately absent: its stored values do not
derive from the URL string, so no lexical extractor can align with it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from urllib.parse import urlparse

import numpy as np

from .ensemble import EnsembleModel, ensemble_predict_proba

_SHORTENERS = re.compile(
    r"bit\.ly|goo\.gl|shorte\.st|go2l\.ink|x\.co|ow\.ly|t\.co|tinyurl|tr\.im|"
    r"is\.gd|cli\.gs|yfrog\.com|migre\.me|ff\.im|tiny\.cc|url4\.eu|twit\.ac|"
    r"su\.pr|twurl\.nl|snipurl\.com|short\.to|BudURL\.com|ping\.fm|post\.ly|"
    r"Just\.as|bkite\.com|snipr\.com|fic\.kr|loopt\.us|doiop\.com|short\.ie|"
    r"kl\.am|wp\.me|rubyurl\.com|om\.ly|to\.ly|bit\.do|lnkd\.in|db\.tt|qr\.ae|"
    r"adf\.ly|bitly\.com|cur\.lv|ity\.im|q\.gs|po\.st|bc\.vc|twitthis\.com|"
    r"u\.to|j\.mp|buzurl\.com|cutt\.us|u\.bb|yourls\.org|prettylinkpro\.com|"
    r"scrnch\.me|filoops\.info|vzturl\.com|qr\.net|1url\.com|tweez\.me|v\.gd|"
    r"link\.zip\.net"
)
_HYPHENATED_DOMAIN = re.compile(r"https?://[^\-]+-[^\-]+/")


@dataclass(frozen=True)
class UrlFeatureVector:
    values: np.ndarray
    names: list[str]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.names, self.values.tolist()))


def _parts(url: str):
    if not url:
        raise ValueError("empty URL")
    if "://" not in url:
        url = "http://" + url
    parsed = urlparse(url)
    if not parsed.hostname:
        raise ValueError(f"no host in URL {url!r}")
    return url, parsed


def _digit_ratio(text: str) -> float:
    return sum(c.isdigit() for c in text) / len(text) if text else 0.0


# name -> (url, parsed) -> value; insertion order fixes the vector layout
_EXTRACTORS = {
    "length_url": lambda u, p: len(u),
    "length_hostname": lambda u, p: len(p.hostname),
    "nb_dots": lambda u, p: u.count("."),
    "nb_hyphens": lambda u, p: u.count("-"),
    "nb_at": lambda u, p: u.count("@"),
    "nb_qm": lambda u, p: u.count("?"),
    "nb_and": lambda u, p: u.count("&"),
    "nb_or": lambda u, p: u.count("|"),
    "nb_eq": lambda u, p: u.count("="),
    "nb_underscore": lambda u, p: u.count("_"),
    "nb_tilde": lambda u, p: u.count("~"),
    "nb_percent": lambda u, p: u.count("%"),
    "nb_slash": lambda u, p: u.count("/"),
    "nb_star": lambda u, p: u.count("*"),
    "nb_colon": lambda u, p: u.count(":"),
    "nb_comma": lambda u, p: u.count(","),
    "nb_semicolumn": lambda u, p: u.count(";"),
    "nb_dollar": lambda u, p: u.count("$"),
    "nb_space": lambda u, p: u.count(" ") + u.count("%20"),
    "nb_www": lambda u, p: u.count("www"),
    "https_token": lambda u, p: 0 if p.scheme == "https" else 1,
    "ratio_digits_url": lambda u, p: _digit_ratio(u),
    "ratio_digits_host": lambda u, p: _digit_ratio(p.hostname),
    "punycode": lambda u, p: 1 if "xn--" in u else 0,
    "port": lambda u, p: 0 if p.port is None else 1,
    "nb_subdomains": lambda u, p: min(max(u.count("."), 1), 3),
    "prefix_suffix": lambda u, p: 1 if _HYPHENATED_DOMAIN.search(u) else 0,
    "shortening_service": lambda u, p: 1 if _SHORTENERS.search(u) else 0,
}

LEXICAL_FEATURE_NAMES = tuple(_EXTRACTORS)


def extract_lexical(url: str) -> UrlFeatureVector:
    """Extract every lexical feature from a raw URL string.

    Pure and deterministic; a missing scheme defaults to http.  Raises
    ValueError for an empty string or a URL with no host.
    """
    full, parsed = _parts(url)
    values = np.array(
        [float(fn(full, parsed)) for fn in _EXTRACTORS.values()], dtype=np.float64
    )
    return UrlFeatureVector(values=values, names=list(_EXTRACTORS))


def score_url(
    model: EnsembleModel,
    url: str,
    overrides: dict[str, float] | None = None,
) -> tuple[float, str]:
    """P(phishing) and a verdict for a raw URL.

    Every feature the model selected must either be lexical or appear in
    ``overrides``; otherwise the error lists the missing feature names so
    the caller knows which non-lexical values to supply.
    """
    overrides = overrides or {}
    lexical = extract_lexical(url).as_dict()

    missing = [
        name
        for name in model.selected_feature_names
        if name not in lexical and name not in overrides
    ]
    if missing:
        raise ValueError(
            "model needs non-lexical feature(s) with no override supplied: "
            + ", ".join(sorted(missing))
        )

    width = max(model.selected_features) + 1
    row = np.zeros(width, dtype=np.float64)
    for idx, name in zip(model.selected_features, model.selected_feature_names):
        row[idx] = overrides[name] if name in overrides else lexical[name]

    proba = ensemble_predict_proba(model, row)
    verdict = "phishing" if proba >= model.threshold else "legitimate"
    return proba, verdict
