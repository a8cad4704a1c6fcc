"""scikit-learn compatible front end.

Rows of ``X`` are line bundles on a fixed fan: one integer coefficient per
ray.  ``transform`` maps them to their invariant-curve degrees (one column
per wall), ``predict`` answers "is the bundle k-jet ample?".
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .divisors import NOT_SPANNED, LineBundle
from .errors import DimensionError, ParameterError
from .fan import Fan
from .fanfile import parse_fan_file
from .intersection import intersection_table, wall_relation


def check_bundle_array(X, n_rays: int) -> np.ndarray:
    """Validate X as a 2-D integer array with one column per ray."""
    arr = np.asarray(X)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D array of coefficients, got shape {arr.shape}")
    if arr.shape[1] != n_rays:
        raise DimensionError(f"expected {n_rays} coefficients per row, got {arr.shape[1]}")
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
            raise ValueError("bundle coefficients must be integers")
    elif arr.dtype.kind not in "iub":
        raise ValueError(f"bundle coefficients must be integers, got dtype {arr.dtype}")
    return arr.astype(np.int64)


def _as_fan(fan) -> Fan:
    if isinstance(fan, Fan):
        return fan
    if isinstance(fan, str):
        return parse_fan_file(fan)[0]
    raise ParameterError("fan must be a Fan or the text of a fan file")


class JetAmplenessClassifier(ClassifierMixin, TransformerMixin, BaseEstimator):
    """Classify bundles on ``fan`` as k-jet ample or not.

    Parameters
    ----------
    fan : Fan or str
        The fan, or the text of a fan file.
    k : int
        Jet order to test.
    """

    def __init__(self, fan=None, k: int = 1):
        self.fan = fan
        self.k = k

    def fit(self, X=None, y=None):
        fan = _as_fan(self.fan)
        if self.k < 0:
            raise ParameterError(f"k must be >= 0, got {self.k}")
        if X is not None:
            check_bundle_array(X, fan.n_rays)
        self.fan_ = fan
        self.walls_ = fan.walls
        self.wall_relations_ = [wall_relation(fan, w) for w in fan.walls]
        self.n_features_in_ = fan.n_rays
        self.classes_ = np.array([False, True])
        return self

    def transform(self, X) -> np.ndarray:
        """Degrees L.V(tau), shape (n_bundles, n_walls)."""
        check_is_fitted(self)
        arr = check_bundle_array(X, self.n_features_in_)
        return np.array(
            [intersection_table(LineBundle(self.fan_, row.tolist())) for row in arr],
            dtype=np.int64,
        ).reshape(len(arr), len(self.walls_))

    def decision_function(self, X) -> np.ndarray:
        """min_tau L.V(tau) - k; non-negative exactly for k-jet ample bundles."""
        return self.transform(X).min(axis=1) - self.k

    def predict(self, X) -> np.ndarray:
        return self.decision_function(X) >= 0

    def jet_levels(self, X) -> list:
        """Jet level per bundle; the NOT_SPANNED marker where it is undefined."""
        mins = self.transform(X).min(axis=1)
        return [NOT_SPANNED if v < 0 else int(v) for v in mins]
