"""famex: feature-association-map explainability toolkit.

Scores feature importance by combining a correlation-graph redundancy grade
with mutual-information relevance, ships permutation and sampled-Shapley
baselines, and evaluates rankings through a top/bottom-subset classification
harness built on from-scratch classifiers.
"""

from .baselines import ImportanceVector, permutation_importance, shapley_importance
from .dataset import DataError, Dataset, DiscretizedColumn, discretize, load_csv
from .fam import (
    FamEdge,
    FamGraph,
    FamVertex,
    build_fam_graph,
    export_graph,
    grade_features,
    graph_from_json,
)
from .harness import (
    EvaluationReport,
    ExperimentConfig,
    HarnessError,
    render_report,
    run_experiment,
    select_subset,
)
from .models import (
    ClassifierSpec,
    CvResult,
    predict,
    stratified_kfold,
    train,
)
from .scoring import (
    FeatureScores,
    famex,
    importance_scores,
    rank_features,
    relevance_scores,
    similarity_scores,
)
from .stats import (
    CorrelationMatrix,
    MutualInformationVector,
    correlation_matrix,
    entropy,
    joint_entropy,
    mi_classif,
    mutual_information,
    pearson,
)

__version__ = "0.1.0"

__all__ = [
    "ClassifierSpec",
    "CorrelationMatrix",
    "CvResult",
    "DataError",
    "Dataset",
    "DiscretizedColumn",
    "EvaluationReport",
    "ExperimentConfig",
    "FamEdge",
    "FamGraph",
    "FamVertex",
    "FeatureScores",
    "HarnessError",
    "ImportanceVector",
    "MutualInformationVector",
    "build_fam_graph",
    "correlation_matrix",
    "discretize",
    "entropy",
    "export_graph",
    "famex",
    "grade_features",
    "graph_from_json",
    "importance_scores",
    "joint_entropy",
    "load_csv",
    "mi_classif",
    "mutual_information",
    "pearson",
    "permutation_importance",
    "predict",
    "rank_features",
    "relevance_scores",
    "render_report",
    "run_experiment",
    "select_subset",
    "shapley_importance",
    "similarity_scores",
    "stratified_kfold",
    "train",
]
