"""Score raw URL strings with a model trained only on lexical features.

The default pipeline selects reputation features (page rank, traffic,
hyperlink counts) that cannot be computed from a URL string, so a model
meant for live URL scoring is trained here on the corpus restricted to
its lexical columns.  Accuracy is lower than the full model's, which is
the honest price of needing nothing but the string itself.
"""

from pathlib import Path

import numpy as np

from phishkit import (
    Dataset,
    PipelineConfig,
    ensemble_scores,
    evaluate_predictions,
    load_csv,
    score_url,
    train_pipeline,
)
from phishkit.url_features import LEXICAL_FEATURE_NAMES

DATA = Path(__file__).resolve().parent.parent / "data" / "dataset_phishing.csv"

full = load_csv(DATA)
lexical_columns = [full.feature_names.index(n) for n in LEXICAL_FEATURE_NAMES]
data = Dataset(
    features=full.features[:, lexical_columns].copy(),
    labels=full.labels.copy(),
    feature_names=list(LEXICAL_FEATURE_NAMES),
    urls=full.urls,
)

config = PipelineConfig(top_n=15)
model, split = train_pipeline(data, config)
report = evaluate_predictions(
    split.test.labels, ensemble_scores(model, split.test.features)
)
print(f"lexical-only ensemble: test accuracy {report.accuracy_pct:.2f}%, "
      f"AUC {report.auc:.3f}")
print("uses:", ", ".join(model.selected_feature_names), "\n")

SAMPLES = [
    "https://www.wikipedia.org/",
    "https://github.com/",
    "https://github.com/numpy/numpy/pulls",  # long path: a known weak spot
    "http://paypal.com.account-verify123.example.top/login?id=77",
    "http://192.168.12.9/secure/update/banking",
    "https://bit.ly/3xy9z",
    "http://free-gift.cards4u.win/claim%20now/xn--80ak6aa92e",
]

for url in SAMPLES:
    proba, verdict = score_url(model, url)
    print(f"  {verdict:10s} p={proba:.3f}  {url}")

print("\nThese scores come from URL shape alone; a low-probability verdict "
      "is not an endorsement of the page behind it.")
