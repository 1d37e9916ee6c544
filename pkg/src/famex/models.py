"""From-scratch classifiers used as evaluation instruments, plus stratified CV.

Four kinds: linear SVM (mini-batch subgradient descent on hinge loss,
one-vs-rest for multi-class), CART decision tree (Gini), random forest
(bootstrap + feature subsampling + majority vote), and Gaussian naive Bayes.
All training is deterministic given the spec's seed.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass, field

import numpy as np

CLASSIFIER_KINDS = ("svm", "decision_tree", "random_forest", "naive_bayes")

_ALLOWED_HYPERPARAMETERS = {
    "svm": {"c": 1.0, "epochs": 1000, "batch_size": 64},
    "decision_tree": {"max_depth": 10, "min_samples_split": 2, "min_samples_leaf": 1},
    "random_forest": {
        "n_trees": 100,
        "max_depth": 16,
        "min_samples_split": 2,
        "min_samples_leaf": 1,
    },
    "naive_bayes": {"var_smoothing": 1e-9},
}


def derived_rng(*keys) -> np.random.Generator:
    """Deterministic generator from a tuple of ints/strings.

    Strings are folded in via crc32 so the derivation is stable across runs
    and platforms (unlike hash()).
    """
    entropy = [k if isinstance(k, int) else zlib.crc32(str(k).encode()) for k in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))


@dataclass(frozen=True)
class ClassifierSpec:
    kind: str
    hyperparameters: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in CLASSIFIER_KINDS:
            raise ValueError(f"unknown classifier kind {self.kind!r}, expected one of {CLASSIFIER_KINDS}")
        allowed = _ALLOWED_HYPERPARAMETERS[self.kind]
        unknown = set(self.hyperparameters) - set(allowed)
        if unknown:
            raise ValueError(f"unknown hyperparameters for {self.kind}: {sorted(unknown)}")

    def resolved(self) -> dict:
        params = dict(_ALLOWED_HYPERPARAMETERS[self.kind])
        params.update(self.hyperparameters)
        return params


@dataclass(frozen=True)
class CvResult:
    fold_accuracies: tuple[float, ...]
    mean: float
    std: float
    folds: int
    seed: int


def _validate_training_data(X: np.ndarray, y: np.ndarray):
    if X.size == 0 or y.size == 0:
        raise ValueError("empty training data")
    if X.shape[0] != y.shape[0]:
        raise ValueError(f"{X.shape[0]} rows but {y.shape[0]} labels")
    if len(np.unique(y)) < 2:
        raise ValueError("training data contains a single class")


class _BaseClassifier:
    def __init__(self, spec: ClassifierSpec):
        self.spec = spec
        self.params = spec.resolved()
        self.classes_: np.ndarray | None = None
        self._n_features: int | None = None

    def fit(self, X, y):
        raise NotImplementedError

    def predict(self, X):
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self._n_features:
            raise ValueError(f"expected {self._n_features} columns, got shape {X.shape}")
        if X.shape[0] == 0:
            return self.classes_[:0]
        return self.classes_[self._predict_indices(X)]

    def _predict_indices(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _setup(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y)
        _validate_training_data(X, y)
        self.classes_, y_idx = np.unique(y, return_inverse=True)
        self._n_features = X.shape[1]
        return X, y_idx


class LinearSVM(_BaseClassifier):
    """Linear soft-margin SVM trained with mini-batch SGD on the hinge loss.

    Features are standardized internally; regularization follows the usual
    soft-margin form with lambda = 1 / (c * m). Multi-class is one-vs-rest.
    """

    def fit(self, X, y):
        X, y_idx = self._setup(X, y)
        self._mu = X.mean(axis=0)
        sd = X.std(axis=0)
        self._sd = np.where(sd > 0, sd, 1.0)
        Z = (X - self._mu) / self._sd

        k = len(self.classes_)
        n_models = 1 if k == 2 else k
        self._w = np.zeros((n_models, X.shape[1]))
        self._b = np.zeros(n_models)
        rngs = derived_rng(self.spec.seed, "svm").spawn(n_models)
        for cls in range(n_models):
            # binary: one hyperplane whose positive side is class index 1
            target = np.where(y_idx == (1 if k == 2 else cls), 1.0, -1.0)
            self._w[cls], self._b[cls] = self._fit_binary(Z, target, rngs[cls])
        return self

    def _fit_binary(self, Z, target, rng):
        m, n = Z.shape
        lam = 1.0 / (self.params["c"] * m)
        batch = min(self.params["batch_size"], m)
        w = np.zeros(n)
        b = 0.0
        t = 0
        for _ in range(self.params["epochs"]):
            order = rng.permutation(m)
            for start in range(0, m, batch):
                idx = order[start : start + batch]
                t += 1
                eta = 1.0 / (lam * t + 1.0)
                Zb, yb = Z[idx], target[idx]
                margin = yb * (Zb @ w + b)
                viol = margin < 1.0
                grad_w = lam * w
                if viol.any():
                    grad_w = grad_w - (yb[viol, None] * Zb[viol]).sum(axis=0) / len(idx)
                    grad_b = -yb[viol].sum() / len(idx)
                else:
                    grad_b = 0.0
                w = w - eta * grad_w
                b = b - eta * grad_b
        return w, b

    def _predict_indices(self, X):
        Z = (X - self._mu) / self._sd
        scores = Z @ self._w.T + self._b
        if len(self.classes_) == 2:
            return (scores[:, 0] > 0).astype(np.intp)
        return np.argmax(scores, axis=1)


class _TreeNode:
    __slots__ = ("feature", "threshold", "left", "right", "value")

    def __init__(self, value=None, feature=None, threshold=None, left=None, right=None):
        self.value = value
        self.feature = feature
        self.threshold = threshold
        self.left = left
        self.right = right


def _gini(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts / total
    return float(1.0 - (p * p).sum())


class DecisionTree(_BaseClassifier):
    """CART classifier with Gini impurity and midpoint thresholds."""

    def __init__(self, spec: ClassifierSpec, max_features: int | None = None, rng=None):
        super().__init__(spec)
        self._max_features = max_features
        self._rng = rng

    def fit(self, X, y):
        X, y_idx = self._setup(X, y)
        self._k = len(self.classes_)
        if self._rng is None:
            self._rng = derived_rng(self.spec.seed, "tree")
        self._root = self._grow(X, y_idx, depth=0)
        return self

    def _best_split(self, X, y_idx, feature_ids):
        best = None  # (neg_gain, feat, threshold)
        total_counts = np.bincount(y_idx, minlength=self._k).astype(np.float64)
        m = len(y_idx)
        parent = _gini(total_counts)
        for f in feature_ids:
            col = X[:, f]
            order = np.argsort(col, kind="stable")
            sv, sy = col[order], y_idx[order]
            cut = np.nonzero(sv[:-1] != sv[1:])[0]
            if cut.size == 0:
                continue
            if self._k == 2:
                ones = sy.cumsum()[cut].astype(np.float64)
                left = np.stack([(cut + 1) - ones, ones], axis=1)
            else:
                one_hot = np.zeros((m, self._k))
                one_hot[np.arange(m), sy] = 1.0
                left = one_hot.cumsum(axis=0)[cut]
            right = total_counts - left
            n_left = (cut + 1).astype(np.float64)
            n_right = m - n_left
            ok = (n_left >= self.params["min_samples_leaf"]) & (
                n_right >= self.params["min_samples_leaf"]
            )
            if not ok.any():
                continue
            gini_l = 1.0 - ((left / n_left[:, None]) ** 2).sum(axis=1)
            gini_r = 1.0 - ((right / n_right[:, None]) ** 2).sum(axis=1)
            child = (n_left * gini_l + n_right * gini_r) / m
            child[~ok] = np.inf
            pos = int(np.argmin(child))
            gain = parent - child[pos]
            if gain <= 1e-12:
                continue
            threshold = (sv[cut[pos]] + sv[cut[pos] + 1]) / 2.0
            cand = (-gain, f, threshold)
            if best is None or cand < best:
                best = cand
        return best

    def _grow(self, X, y_idx, depth):
        counts = np.bincount(y_idx, minlength=self._k)
        leaf = _TreeNode(value=int(np.argmax(counts)))
        max_depth = self.params["max_depth"]
        if (
            (max_depth is not None and depth >= max_depth)
            or len(y_idx) < self.params["min_samples_split"]
            or np.count_nonzero(counts) == 1
        ):
            return leaf
        n = X.shape[1]
        if self._max_features is not None and self._max_features < n:
            feature_ids = np.sort(self._rng.choice(n, self._max_features, replace=False))
        else:
            feature_ids = np.arange(n)
        best = self._best_split(X, y_idx, feature_ids)
        if best is None:
            return leaf
        _, feat, threshold = best
        mask = X[:, feat] <= threshold
        node = _TreeNode(feature=feat, threshold=threshold)
        node.left = self._grow(X[mask], y_idx[mask], depth + 1)
        node.right = self._grow(X[~mask], y_idx[~mask], depth + 1)
        return node

    def _predict_indices(self, X):
        out = np.empty(X.shape[0], dtype=np.intp)
        for i, row in enumerate(X):
            node = self._root
            while node.value is None:
                node = node.left if row[node.feature] <= node.threshold else node.right
            out[i] = node.value
        return out


class RandomForest(_BaseClassifier):
    """Bagged CART trees with sqrt(n) features per split and majority vote."""

    def fit(self, X, y):
        X, y_idx = self._setup(X, y)
        self._k = len(self.classes_)
        m, n = X.shape
        max_features = max(1, int(np.sqrt(n)))
        tree_spec = ClassifierSpec(
            kind="decision_tree",
            hyperparameters={
                "max_depth": self.params["max_depth"],
                "min_samples_split": self.params["min_samples_split"],
                "min_samples_leaf": self.params["min_samples_leaf"],
            },
            seed=self.spec.seed,
        )
        rngs = derived_rng(self.spec.seed, "forest").spawn(self.params["n_trees"])
        self._trees = []
        for rng in rngs:
            boot = rng.integers(0, m, size=m)
            tree = DecisionTree(tree_spec, max_features=max_features, rng=rng)
            # bootstrap may lose a class; the tree only needs >= 1 present
            tree.classes_ = np.arange(self._k)
            tree._n_features = n
            tree._k = self._k
            tree._root = tree._grow(X[boot], y_idx[boot], depth=0)
            self._trees.append(tree)
        return self

    def _predict_indices(self, X):
        votes = np.zeros((X.shape[0], self._k), dtype=np.intp)
        for tree in self._trees:
            pred = tree._predict_indices(X)
            votes[np.arange(X.shape[0]), pred] += 1
        return np.argmax(votes, axis=1)


class GaussianNaiveBayes(_BaseClassifier):
    """Gaussian class-conditional densities with variance smoothing."""

    def fit(self, X, y):
        X, y_idx = self._setup(X, y)
        k = len(self.classes_)
        eps = self.params["var_smoothing"] * max(float(X.var(axis=0).max()), 1e-30)
        self._log_prior = np.log(np.bincount(y_idx, minlength=k) / len(y_idx))
        self._mu = np.stack([X[y_idx == c].mean(axis=0) for c in range(k)])
        self._var = np.stack([X[y_idx == c].var(axis=0) for c in range(k)]) + eps
        return self

    def _predict_indices(self, X):
        # log N(x; mu, var) summed over features, per class
        ll = -0.5 * (
            np.log(2 * np.pi * self._var).sum(axis=1)[None, :]
            + (((X[:, None, :] - self._mu[None, :, :]) ** 2) / self._var[None, :, :]).sum(axis=2)
        )
        return np.argmax(ll + self._log_prior[None, :], axis=1)


_CLASSIFIERS = {
    "svm": LinearSVM,
    "decision_tree": DecisionTree,
    "random_forest": RandomForest,
    "naive_bayes": GaussianNaiveBayes,
}


def make_classifier(spec: ClassifierSpec) -> _BaseClassifier:
    return _CLASSIFIERS[spec.kind](spec)


def train(spec: ClassifierSpec, X, y) -> _BaseClassifier:
    """Fit a fresh classifier of the spec's kind. Deterministic given seed."""
    return make_classifier(spec).fit(X, y)


def predict(model: _BaseClassifier, X) -> np.ndarray:
    return model.predict(X)


def accuracy(model: _BaseClassifier, X, y) -> float:
    y = np.asarray(y)
    if len(y) == 0:
        raise ValueError("cannot score an empty test set")
    return float(np.mean(model.predict(X) == y))


def stratified_fold_indices(y, k: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Disjoint test folds preserving class proportions within one sample."""
    y = np.asarray(y)
    folds: list[list[int]] = [[] for _ in range(k)]
    offset = 0
    for cls in np.unique(y):
        idx = np.nonzero(y == cls)[0]
        if len(idx) < k:
            raise ValueError(f"class {cls!r} has {len(idx)} members, fewer than k={k}")
        rng.shuffle(idx)
        for i, sample in enumerate(idx):
            folds[(i + offset) % k].append(int(sample))
        offset += len(idx)  # rotate so small classes do not pile into fold 0
    return [np.sort(np.array(f, dtype=np.intp)) for f in folds]


def stratified_kfold(X, y, k: int, spec: ClassifierSpec, seed: int = 0) -> CvResult:
    """k-fold cross-validated accuracy with stratified, seed-shuffled folds."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y)
    folds = stratified_fold_indices(y, k, derived_rng(seed, "folds"))
    accs = []
    for fold_no, test_idx in enumerate(folds):
        mask = np.ones(len(y), dtype=bool)
        mask[test_idx] = False
        fold_spec = ClassifierSpec(
            kind=spec.kind,
            hyperparameters=spec.hyperparameters,
            seed=int(derived_rng(seed, spec.seed, fold_no).integers(2**31)),
        )
        model = train(fold_spec, X[mask], y[mask])
        accs.append(accuracy(model, X[test_idx], y[test_idx]))
    accs_arr = np.array(accs)
    return CvResult(
        fold_accuracies=tuple(accs),
        mean=float(accs_arr.mean()),
        std=float(accs_arr.std()),
        folds=k,
        seed=seed,
    )


def stratified_holdout(y, test_fraction: float, rng: np.random.Generator):
    """(train_idx, test_idx) split preserving class proportions."""
    y = np.asarray(y)
    test: list[int] = []
    for cls in np.unique(y):
        idx = np.nonzero(y == cls)[0]
        rng.shuffle(idx)
        n_test = max(1, int(round(len(idx) * test_fraction)))
        test.extend(idx[:n_test].tolist())
    test_idx = np.sort(np.array(test, dtype=np.intp))
    mask = np.ones(len(y), dtype=bool)
    mask[test_idx] = False
    return np.nonzero(mask)[0], test_idx
