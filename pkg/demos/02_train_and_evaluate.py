"""Train the weighted soft-voting ensemble and evaluate it on held-out data.

The pipeline: stratified 80/20 split, information-gain ranking on the
training side, top-20 selection, standardization, five base models, then
one ROC-AUC weight per model.  Expect roughly half a minute for the full
corpus; the random forest dominates the cost.
"""

import time
from pathlib import Path

from phishkit import (
    PipelineConfig,
    ensemble_scores,
    evaluate_predictions,
    load_csv,
    save_model,
    train_pipeline,
)
from phishkit.metrics import format_report_table
from phishkit.preprocessing import transform

DATA = Path(__file__).resolve().parent.parent / "data" / "dataset_phishing.csv"
MODEL_OUT = Path(__file__).resolve().parent / "ensemble_model.json"

data = load_csv(DATA)
config = PipelineConfig()  # 80/20, seed 42, top 20, AUC weights

t0 = time.monotonic()
model, split = train_pipeline(data, config)
print(f"trained in {time.monotonic() - t0:.0f}s")
print("selected:", ", ".join(model.selected_feature_names), "\n")

rows = []
X_test = transform(model.scaler, split.test.features[:, model.selected_features])
for member in model.members:
    rows.append((member.kind.value,
                 evaluate_predictions(split.test.labels, member.proba(X_test))))

ensemble_report = evaluate_predictions(
    split.test.labels, ensemble_scores(model, split.test.features)
)
rows.append(("Ensemble", ensemble_report))

print(format_report_table(rows))
print("\nmember weights (train ROC-AUC):")
for member, weight in zip(model.members, model.weights):
    print(f"  {member.kind.value:4s} {weight:.4f}")

save_model(model, MODEL_OUT, config=config, metrics_snapshot=ensemble_report)
print(f"\nmodel saved to {MODEL_OUT}")
