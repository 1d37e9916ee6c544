"""Compare the graph-based ranking against PFI and sampled Shapley values.

All three methods rank the Pima diabetes features. PFI measures the held-out
accuracy drop when a column is shuffled; the Shapley estimator samples feature
orderings and credits each feature with its marginal retraining contribution.

Run: python demos/03_method_comparison.py  (about half a minute)
"""
from pathlib import Path

from famex import (
    ClassifierSpec,
    famex,
    load_csv,
    permutation_importance,
    rank_features,
    shapley_importance,
)

DATA = Path(__file__).parent.parent / "data"


def main():
    print("=" * 72)
    print("Importance method comparison: Pima diabetes")
    print("=" * 72)

    ds = load_csv(DATA / "pima.csv")
    probe = ClassifierSpec(kind="decision_tree", seed=42)

    graph_rank = rank_features(famex(ds))
    pfi = permutation_importance(probe, ds.samples, ds.labels, repeats=10, seed=42)
    shap = shapley_importance(probe, ds.samples, ds.labels, permutations=64, seed=42)
    pfi_rank = [ds.feature_names[i] for i in pfi.ranking()]
    shap_rank = [ds.feature_names[i] for i in shap.ranking()]

    print(f"\n{'rank':<5} {'graph-based':<18} {'pfi':<18} {'shapley_mc':<18}")
    print("-" * 62)
    for i in range(ds.n_features):
        print(f"{i + 1:<5} {graph_rank[i]:<18} {pfi_rank[i]:<18} {shap_rank[i]:<18}")

    print("\nPFI values (accuracy drop):")
    for i in pfi.ranking():
        print(f"  {ds.feature_names[i]:<18} {pfi.values[i]:+.4f}")

    print("\nShapley values (marginal accuracy contribution):")
    for i in shap.ranking():
        print(f"  {ds.feature_names[i]:<18} {shap.values[i]:+.4f}")

    agree = [n for n in graph_rank[:3] if n in set(pfi_rank[:3]) | set(shap_rank[:3])]
    print(f"\nTop-3 agreement with at least one baseline: {agree}")


if __name__ == "__main__":
    main()
