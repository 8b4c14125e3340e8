import cmath
import math
from fractions import Fraction

import pytest

import sigforge

TREFOIL = [[-1, 1], [0, -1]]


def test_trefoil():
    assert sigforge.validate(TREFOIL)
    assert sigforge.signature(TREFOIL, 0) == -2
    assert sigforge.signature(TREFOIL, Fraction(3, 4)) == 0
    assert sigforge.averaged_signature(TREFOIL, Fraction(1, 2)) == Fraction(-1)
    raw, normalized = sigforge.alexander_polynomial(TREFOIL)
    assert normalized == [1, -1, 1]


def test_step_function():
    f = sigforge.step_function(TREFOIL)
    assert f["interval_values"] == [-2, 0]
    assert f["point_values"] == [-1]
    assert all(-1 < s < 1 for s in f["samples"])


def test_errors():
    with pytest.raises(sigforge.ParityViolation):
        sigforge.validate([[1, 0], [0, 1]])
    with pytest.raises(sigforge.PreconditionError):
        sigforge.jump_polynomial(1, Fraction(1, 10))
    with pytest.raises(sigforge.ParseError):
        sigforge.validate(TREFOIL, parity="sideways")


def test_constructions():
    assert sigforge.jump_polynomial(0, Fraction(1, 10)) == [3, -6, 5, -6, 3]
    d = sigforge.highdim_jump_polynomial(0, Fraction(1, 10))
    assert sum(d) == -1
    assert sum(c * (-1) ** i for i, c in enumerate(d)) == 529
    assert sigforge.highdim_validate_polynomial(d)
    assert sigforge.lambda_coefficients([1, -1, 1, -1, 1]) == [1, 3, 1]
    v = sigforge.hankel_realize([1, -1, 1])
    assert sigforge.alexander_polynomial(v)[1] == [1, -1, 1]


def test_metabolic_peak():
    w = sigforge.metabolic_peak([1, -1, 1], 1)
    assert len(w) == 8
    f = sigforge.step_function(w)
    assert f["point_values"] == [2]
    assert f["interval_values"] == [0, 0]
    assert sigforge.verify_metabolizer([row[:4] for row in w[:4]], [[1, 0, 0, 0], [0, 1, 0, 0]])
    h = sigforge.metabolic_peak([-1, 1, -1], 1, highdim=True)
    assert sigforge.step_function(h, parity="highdim")["point_values"] == [2]


def test_independence():
    pts = [Fraction(-3, 5), Fraction(-1, 10), Fraction(2, 5)]
    m = sigforge.independence_certificate(pts, 2)
    assert [sigforge.signature(m, c) for c in pts] == [0, 2, 0]


def test_float_oracle_agrees():
    r = sigforge.signature_float(TREFOIL, 1j)
    assert r["signature"] == -2 and r["gap_certified"]
    omega = cmath.exp(1j * math.pi / 3)
    w = sigforge.metabolic_peak([1, -1, 1], 1)
    assert not sigforge.signature_float(w, omega)["gap_certified"]
