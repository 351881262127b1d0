"""scikit-learn style wrapper around the l1-dimension pipeline.

``fit`` takes a square distance matrix (nested lists, numpy arrays of
integers or objects holding Fractions / ``"p/q"`` strings) and learns the
least dimension together with an exact embedding; ``transform`` returns those
coordinates as an object array of Fractions.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exceptions import ParameterError
from .l1dim import Budgets, cross_validate
from .metric import TwoDistanceParams, check_distance_matrix, validate_metric
from .rational import as_rational


class L1Embedding(TransformerMixin, BaseEstimator):
    """Least-dimensional isometric embedding of a finite metric into l1.

    Parameters
    ----------
    a, b : rational
        Two-distance parameters used by the GH route, ``0 < a < b <= 2a``.
    route : {"all", "gh", "coloring"}
        Which characterizations to run; every computed one must agree.
    budget_gh, budget_family, budget_cut_points : int
        Size guards for exact GH, the triple count of the graph family and the
        number of points admitted to cut enumeration.

    Attributes
    ----------
    dimension_ : int
    embedding_ : ndarray of Fraction, shape (n_points, dimension_)
    decomposition_ : CutDecomposition
    hypergraph_ : NestingHypergraph
    report_ : L1Report
    n_features_in_ : int
    """

    def __init__(self, a=1, b=2, route="all", budget_gh=8, budget_family=12, budget_cut_points=14):
        self.a = a
        self.b = b
        self.route = route
        self.budget_gh = budget_gh
        self.budget_family = budget_family
        self.budget_cut_points = budget_cut_points

    def _validate_params(self):
        for name in ("budget_gh", "budget_family", "budget_cut_points"):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or value < 1:
                raise ParameterError(f"{name} must be a positive integer, got {value!r}")
        if self.route not in ("all", "gh", "coloring"):
            raise ParameterError(f"unknown route {self.route!r}")
        return TwoDistanceParams(as_rational(self.a), as_rational(self.b))

    def fit(self, X, y=None):
        params = self._validate_params()
        space = validate_metric(X, allow_pseudo=True)
        budgets = Budgets(self.budget_gh, self.budget_family, self.budget_cut_points)
        report = cross_validate(space, params, budgets, self.route)
        self._fit_dist = space.dist
        self.report_ = report
        self.dimension_ = report.dimension
        self.decomposition_ = report.decomposition
        self.hypergraph_ = report.hypergraph
        self.embedding_ = np.array(report.embedding, dtype=object).reshape(space.n, report.dimension)
        self.n_features_in_ = space.n
        return self

    def transform(self, X):
        """Coordinates of the fitted points; ``X`` must be the fitted matrix.

        The embedding is a property of the whole metric, so out-of-sample
        points cannot be placed.
        """
        check_is_fitted(self, "embedding_")
        rows = check_distance_matrix(X)
        if len(rows) != self.n_features_in_:
            raise ValueError(f"expected a {self.n_features_in_}x{self.n_features_in_} matrix, got {len(rows)} rows")
        if tuple(tuple(r) for r in rows) != self._fit_dist:
            raise ValueError("transform only accepts the matrix passed to fit")
        return self.embedding_.copy()

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y).embedding_.copy()
