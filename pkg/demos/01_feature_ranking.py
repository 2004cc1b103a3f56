"""Rank the corpus features by information gain and chart the top 20.

Information gain measures how much knowing one feature's (discretized)
value reduces uncertainty about the phishing/legitimate label.  Reputation
features collected from search engines and traffic services dominate the
top of the list, but several purely lexical URL properties (nb_www,
ratio_digits_url, nb_dots, length_url) also make the cut.
"""

from pathlib import Path

from phishkit import BinningSpec, load_csv, rank_features

DATA = Path(__file__).resolve().parent.parent / "data" / "dataset_phishing.csv"

data = load_csv(DATA)
print(f"loaded {data.n_samples} rows x {data.n_features} features\n")

ranking = rank_features(data, BinningSpec(max_bins=10))

print("top 20 features by information gain (bits):\n")
top = ranking[:20]
widest = max(len(s.feature_name) for s in top)
for score in top:
    bar = "#" * round(40 * score.gain / top[0].gain)
    print(f"{score.rank:3d}  {score.feature_name.ljust(widest)}  "
          f"{score.gain:.4f}  {bar}")

print("\nbottom 5 (no measurable signal):")
for score in ranking[-5:]:
    print(f"{score.rank:3d}  {score.feature_name.ljust(widest)}  {score.gain:.4f}")
