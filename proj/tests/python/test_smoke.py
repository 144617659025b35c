"""Smoke tests for the Python bindings: end-to-end over the main operations."""

import math

import numpy as np
import pytest

import braingk as bg


def test_bin_ados():
    assert bg.bin_ados(8) == bg.SeverityClass.Mild
    assert bg.bin_ados(13) == bg.SeverityClass.Moderate
    assert bg.bin_ados(14) == bg.SeverityClass.Severe
    with pytest.raises(ValueError):
        bg.bin_ados(-1)


def test_znormalize():
    values, degenerate = bg.znormalize(np.array([1.0, 2.0, 3.0]))
    assert not degenerate
    assert abs(values.mean()) < 1e-12
    assert abs((values**2).mean() - 1.0) < 1e-12

    zeros, flag = bg.znormalize(np.array([4.0, 4.0, 4.0, 4.0]))
    assert flag
    assert np.all(zeros == 0)


def test_pssk_closed_form():
    diagram = bg.PersistenceDiagram(np.array([[0.0, 1.0]]))
    expected = (1.0 - math.exp(-0.5)) / (4.0 * math.pi)
    assert bg.pssk(diagram, diagram, 0.5) == pytest.approx(expected, abs=1e-9)


def test_delay_embed_and_rips():
    series = np.sin(2 * np.pi * np.arange(60) / 12.0)
    cloud = bg.delay_embed(series, 2, 3)
    assert len(cloud) == 57
    result = bg.rips_persistence(cloud)
    # A clean sine gives a dominant 1-cycle.
    h1 = result.h1.drop_infinite().pairs
    assert h1.shape[0] >= 1
    assert (h1[:, 1] >= h1[:, 0]).all()


def test_lasso_duplicate_row():
    rng = np.random.default_rng(0)
    data = rng.normal(size=(3, 24))
    data[1] = data[0]
    cfg = bg.SolverConfig()
    cfg.lambda_ = 0.01
    w = bg.l1_graph(data, cfg)
    assert w.values[0, 1] == pytest.approx(0.995, abs=1e-6)
    assert np.allclose(w.values, w.values.T)
    assert np.all(np.diag(w.values) == 0)


def test_pipeline_loo_on_synthetic_cohort():
    cohort = bg.generate_synthetic_cohort(1, 12, 8, 80)
    assert len(cohort) == 12
    graphs = []
    features = []
    for subject in cohort:
        sim = bg.normalize_unit_interval(bg.pearson_similarity(subject.data))
        features.append(bg.vectorize_upper(sim))
        graphs.append(bg.binarize(sim, 0.5))

    labels = [bg.bin_ados(s.ados) for s in cohort]
    wl = bg.normalize_kernel(bg.wl_kernel(graphs, 3))
    report = bg.loo_evaluate(wl, labels)
    assert report.accuracy >= 90.0
    assert report.confusion.trace() >= 0.9 * len(cohort)

    linear = bg.normalize_kernel(bg.linear_kernel(features))
    trad = bg.loo_evaluate(linear, labels)
    assert report.accuracy >= trad.accuracy


def test_kernel_sum_and_svm():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(8, 12))
    k1 = bg.KernelMatrix(a @ a.T, "k1")
    k2 = bg.KernelMatrix(np.eye(8), "k2")
    mixed = bg.sum_kernel([bg.normalize_kernel(k1), bg.normalize_kernel(k2)], [0.5, 0.5])
    assert mixed.normalized
    eigvals = np.linalg.eigvalsh(mixed.values)
    assert eigvals.min() >= -1e-8 * eigvals.max()

    y = [1, -1, 1, -1, 1, -1, 1, -1]
    model = bg.train_svm(mixed.values, y)
    assert abs(sum(model.alpha[i] * y[i] for i in range(8))) < 1e-8
