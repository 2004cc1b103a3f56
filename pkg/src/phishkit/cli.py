"""Command-line entry point.

Commands
--------
train      fit the full pipeline on a CSV and save a model file
compare    metrics for all five classifiers before/after selection+scaling
evaluate   score a saved model against a labeled CSV
rank       information-gain ranking of a CSV's features
predict    score a single URL with a saved model

Exit codes: 0 success, 1 usage error, 2 data/model-file error, 3 internal
error.  A JSON config file (--config or the PHISHKIT_CONFIG environment
variable) supplies defaults; explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import csv as csv_module
import json
import os
import sys

import numpy as np

from .classifiers import (
    HyperParams,
    KnnParams,
    LogRegParams,
    MEMBER_ORDER,
    NaiveBayesParams,
    RandomForestParams,
    SvmParams,
    train,
)
from .config import WEIGHTING_MODES, PipelineConfig
from .dataset import load_csv, stratified_split
from .ensemble import ensemble_scores, train_pipeline
from .errors import DataError, ModelFormatError, PhishkitError
from .feature_selection import BinningSpec, rank_features
from .metrics import EvalReport, evaluate_predictions, format_report_table
from .persistence import load_model, save_model
from .preprocessing import fit_scaler, transform
from .url_features import score_url

CONFIG_ENV_VAR = "PHISHKIT_CONFIG"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="phishkit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pipeline_flags(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="feature CSV path")
        p.add_argument("--label-column", default=None)
        p.add_argument("--test-fraction", type=float, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--top", type=int, default=None, dest="top_n")
        p.add_argument("--bins", type=int, default=None)
        p.add_argument("--weighting", choices=WEIGHTING_MODES, default=None)
        p.add_argument("--config", default=None, help="JSON config file")
        # per-classifier hyperparameter overrides
        p.add_argument("--rf-trees", type=int, default=None)
        p.add_argument("--rf-max-depth", type=int, default=None)
        p.add_argument("--knn-k", type=int, default=None)
        p.add_argument("--svm-lambda", type=float, default=None)
        p.add_argument("--svm-epochs", type=int, default=None)
        p.add_argument("--lr-rate", type=float, default=None)
        p.add_argument("--lr-epochs", type=int, default=None)
        p.add_argument("--lr-l2", type=float, default=None)
        p.add_argument("--nb-smoothing", type=float, default=None)

    p_train = sub.add_parser("train", help="train and save an ensemble model")
    add_pipeline_flags(p_train)
    p_train.add_argument("--out", default="model.json", help="model file path")
    p_train.add_argument("--report-format", choices=("text", "json"), default="text")

    p_compare = sub.add_parser(
        "compare", help="before/after feature-selection comparison"
    )
    add_pipeline_flags(p_compare)
    p_compare.add_argument("--out", default=None, help="long-form CSV path")
    p_compare.add_argument(
        "--report-format", choices=("text", "json", "csv"), default="text"
    )

    p_eval = sub.add_parser("evaluate", help="evaluate a saved model on a CSV")
    p_eval.add_argument("--model", required=True)
    p_eval.add_argument("--input", required=True)
    p_eval.add_argument("--label-column", default=None)
    p_eval.add_argument("--config", default=None)
    p_eval.add_argument("--out", default=None, help="JSON report path")
    p_eval.add_argument("--report-format", choices=("text", "json"), default="text")

    p_rank = sub.add_parser("rank", help="information-gain feature ranking")
    p_rank.add_argument("--input", required=True)
    p_rank.add_argument("--label-column", default=None)
    p_rank.add_argument("--top", type=int, default=None, dest="top_n")
    p_rank.add_argument("--bins", type=int, default=None)
    p_rank.add_argument("--config", default=None)
    p_rank.add_argument("--out", default=None)
    p_rank.add_argument(
        "--report-format", choices=("text", "csv", "json"), default="text"
    )

    p_predict = sub.add_parser("predict", help="score a single URL")
    p_predict.add_argument("--model", required=True)
    p_predict.add_argument("--url", required=True)
    p_predict.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="value for a non-lexical feature (repeatable)",
    )
    p_predict.add_argument("--report-format", choices=("text", "json"), default="text")

    return parser


def _load_config(args) -> PipelineConfig:
    """Defaults < config file < explicit flags."""
    raw: dict = {}
    path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DataError(f"cannot read config file {path!r}: {exc}") from exc

    base = PipelineConfig.from_dict(raw) if raw else PipelineConfig()
    hp = base.hyperparams

    def pick(flag_value, current):
        return current if flag_value is None else flag_value

    if hasattr(args, "rf_trees"):
        hp = HyperParams(
            rf=RandomForestParams(
                n_trees=pick(args.rf_trees, hp.rf.n_trees),
                max_depth=pick(args.rf_max_depth, hp.rf.max_depth),
                min_samples_split=hp.rf.min_samples_split,
                features_per_split=hp.rf.features_per_split,
            ),
            knn=KnnParams(k=pick(args.knn_k, hp.knn.k)),
            svm=SvmParams(
                lam=pick(args.svm_lambda, hp.svm.lam),
                epochs=pick(args.svm_epochs, hp.svm.epochs),
            ),
            lr=LogRegParams(
                learning_rate=pick(args.lr_rate, hp.lr.learning_rate),
                epochs=pick(args.lr_epochs, hp.lr.epochs),
                l2=pick(args.lr_l2, hp.lr.l2),
            ),
            nb=NaiveBayesParams(
                var_smoothing=pick(args.nb_smoothing, hp.nb.var_smoothing)
            ),
        )

    return PipelineConfig(
        label_column=pick(getattr(args, "label_column", None), base.label_column),
        test_fraction=pick(getattr(args, "test_fraction", None), base.test_fraction),
        seed=pick(getattr(args, "seed", None), base.seed),
        top_n=pick(getattr(args, "top_n", None), base.top_n),
        bins=pick(getattr(args, "bins", None), base.bins),
        weighting=pick(getattr(args, "weighting", None), base.weighting),
        threshold=base.threshold,
        hyperparams=hp,
    )


def _cmd_train(args) -> int:
    config = _load_config(args)
    data = load_csv(args.input, label_column=config.label_column)
    model, split = train_pipeline(data, config)

    rows = []
    X_test = transform(
        model.scaler, split.test.features[:, model.selected_features]
    )
    for member in model.members:
        report = evaluate_predictions(split.test.labels, member.proba(X_test))
        rows.append((member.kind.value, report))
    ensemble_report = evaluate_predictions(
        split.test.labels, ensemble_scores(model, split.test.features),
        threshold=model.threshold,
    )
    rows.append(("Ensemble", ensemble_report))

    save_model(model, args.out, config=config, metrics_snapshot=ensemble_report)

    if args.report_format == "json":
        print(json.dumps(
            {
                "model_file": args.out,
                "selected_features": model.selected_feature_names,
                "weights": model.weights.tolist(),
                "test_metrics": {name: r.to_dict() for name, r in rows},
            },
            indent=2,
        ))
    else:
        print(f"model written to {args.out}")
        print(f"selected features ({len(model.selected_features)}): "
              + ", ".join(model.selected_feature_names))
        print(f"weights ({config.weighting}): "
              + ", ".join(f"{m.kind.value}={w:.4f}"
                          for m, w in zip(model.members, model.weights)))
        print()
        print(format_report_table(rows))
    return 0


_CONDITIONS = ("before", "after")


def compare_reports(data, config) -> dict[str, dict[str, EvalReport]]:
    """Five classifiers x two conditions on one shared split.

    before: all features, raw values.  after: top-n information-gain
    features, standardized.  Both selection and scaling come from the
    training side only.
    """
    split = stratified_split(data, config.test_fraction, config.seed)
    out: dict[str, dict[str, EvalReport]] = {c: {} for c in _CONDITIONS}

    ranking = rank_features(split.train, BinningSpec(max_bins=config.bins))
    top_n = min(config.top_n, data.n_features)
    selected = [score.feature_index for score in ranking[:top_n]]
    scaler = fit_scaler(split.train.features[:, selected])

    matrices = {
        "before": (split.train.features, split.test.features),
        "after": (
            transform(scaler, split.train.features[:, selected]),
            transform(scaler, split.test.features[:, selected]),
        ),
    }
    for condition, (X_train, X_test) in matrices.items():
        for kind in MEMBER_ORDER:
            member = train(kind, config.hyperparams, X_train,
                           split.train.labels, seed=config.seed)
            report = evaluate_predictions(split.test.labels, member.proba(X_test))
            out[condition][kind.value] = report
    return out


def comparison_csv_rows(reports) -> list[tuple]:
    rows = [("classifier", "condition", "accuracy_pct", "precision", "recall", "f1")]
    for condition in _CONDITIONS:
        for kind in MEMBER_ORDER:
            r = reports[condition][kind.value]
            rows.append((kind.value, condition, repr(r.accuracy_pct),
                         repr(r.precision), repr(r.recall), repr(r.f1)))
    return rows


def _cmd_compare(args) -> int:
    config = _load_config(args)
    data = load_csv(args.input, label_column=config.label_column)
    reports = compare_reports(data, config)

    csv_rows = comparison_csv_rows(reports)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            csv_module.writer(fh).writerows(csv_rows)

    if args.report_format == "json":
        print(json.dumps(
            {c: {k: r.to_dict() for k, r in reports[c].items()}
             for c in _CONDITIONS},
            indent=2,
        ))
    elif args.report_format == "csv":
        writer = csv_module.writer(sys.stdout)
        writer.writerows(csv_rows)
    else:
        print("before feature selection and standardization (all features, raw):")
        print(format_report_table(
            [(k.value, reports["before"][k.value]) for k in MEMBER_ORDER]))
        print()
        print(f"after feature selection and standardization "
              f"(top {min(config.top_n, data.n_features)}, standardized):")
        print(format_report_table(
            [(k.value, reports["after"][k.value]) for k in MEMBER_ORDER]))
        if args.out:
            print(f"\nlong-form CSV written to {args.out}")
    return 0


def _cmd_evaluate(args) -> int:
    config = _load_config(args)
    model = load_model(args.model)
    data = load_csv(args.input, label_column=config.label_column)

    missing = [name for name in model.selected_feature_names
               if name not in data.feature_names]
    if missing:
        raise DataError(
            "dataset is missing feature column(s) the model needs: "
            + ", ".join(sorted(missing))
        )

    width = max(model.selected_features) + 1
    X_raw = np.zeros((data.n_samples, width), dtype=np.float64)
    for idx, name in zip(model.selected_features, model.selected_feature_names):
        X_raw[:, idx] = data.features[:, data.feature_names.index(name)]

    report = evaluate_predictions(
        data.labels, ensemble_scores(model, X_raw), threshold=model.threshold
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    if args.report_format == "json":
        print(report.to_json())
    else:
        print(format_report_table([("Ensemble", report)]))
        cm = report.confusion
        print(f"\nconfusion: tp={cm.tp} fn={cm.fn} fp={cm.fp} tn={cm.tn}"
              f"  auc={report.auc:.3f}")
    return 0


def _cmd_rank(args) -> int:
    config = _load_config(args)
    data = load_csv(args.input, label_column=config.label_column)
    ranking = rank_features(data, BinningSpec(max_bins=config.bins))
    if getattr(args, "top_n", None):
        ranking = ranking[: args.top_n]

    if args.report_format == "json":
        text = json.dumps(
            [
                {
                    "rank": s.rank,
                    "feature": s.feature_name,
                    "gain_bits": s.gain,
                }
                for s in ranking
            ],
            indent=2,
        )
    elif args.report_format == "csv":
        lines = ["feature,gain_bits"]
        lines += [f"{s.feature_name},{s.gain!r}" for s in ranking]
        text = "\n".join(lines)
    else:
        width = max(len(s.feature_name) for s in ranking)
        lines = [f"{'feature'.ljust(width)}  gain_bits"]
        lines += [f"{s.feature_name.ljust(width)}  {s.gain:.6f}" for s in ranking]
        text = "\n".join(lines)

    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0


def _cmd_predict(args) -> int:
    model = load_model(args.model)
    overrides = {}
    for item in args.override:
        name, sep, value = item.partition("=")
        if not sep:
            raise DataError(f"override {item!r} is not NAME=VALUE")
        try:
            overrides[name] = float(value)
        except ValueError:
            raise DataError(f"override {item!r}: {value!r} is not a number") from None

    try:
        proba, verdict = score_url(model, args.url, overrides)
    except ValueError as exc:
        raise DataError(str(exc)) from exc

    if args.report_format == "json":
        print(json.dumps(
            {"url": args.url, "probability": proba, "verdict": verdict}
        ))
    else:
        print(f"{verdict}  p(phishing)={proba:.4f}  {args.url}")
    return 0


_COMMANDS = {
    "train": _cmd_train,
    "compare": _cmd_compare,
    "evaluate": _cmd_evaluate,
    "rank": _cmd_rank,
    "predict": _cmd_predict,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DataError, ModelFormatError) as exc:
        print(f"phishkit: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"phishkit: error: {exc}", file=sys.stderr)
        return 2
    except PhishkitError as exc:
        print(f"phishkit: internal error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"phishkit: internal error: {exc!r}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
