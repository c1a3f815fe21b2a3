# ictog/tests/test_eeioa.py
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from config.app_config import SolverConfig
from eeioa.coefficients import TechnicalCoefficients, technical_coefficients, total_output_from_demand
from eeioa.footprint import footprint, group_footprint
from eeioa.solvers import DirectSolver, IterativeSolver, get_solver, leontief_solve
from mrio_core.exceptions import DimensionMismatch, NegativeOutput, NonConvergence, NumericError
from mrio_core.groups import SectorGroup
from mrio_core.tables import RegionSectorIndex, TransactionTable

HAND_Z = [[0.0, 2.0], [1.0, 0.0]]
HAND_A = [[0.0, 0.5], [0.5, 0.0]]


@pytest.fixture
def hand_table():
    return TransactionTable.from_dense(2022, RegionSectorIndex.product(["XX"], ["A", "B"]), HAND_Z)


@pytest.fixture
def solver_config():
    return SolverConfig()


class TestCoefficients:
    def test_hand_normalization(self, hand_table):
        coefficients = technical_coefficients(hand_table, np.array([2.0, 4.0]))
        np.testing.assert_array_equal(coefficients.matrix.toarray(), HAND_A)
        assert coefficients.zero_output_columns == ()
        assert coefficients.is_productive

    def test_zero_matrix(self):
        table = TransactionTable.from_dense(2022, RegionSectorIndex.product(["XX"], ["A", "B"]), np.zeros((2, 2)))
        coefficients = technical_coefficients(table, np.array([1.0, 1.0]))
        assert coefficients.matrix.nnz == 0

    def test_zero_output_column_reported(self, hand_table):
        coefficients = technical_coefficients(hand_table, np.array([0.0, 4.0]))
        np.testing.assert_array_equal(coefficients.matrix.toarray(), [[0.0, 0.5], [0.0, 0.0]])
        assert coefficients.zero_output_columns == (0,)

    def test_dimension_mismatch(self, hand_table):
        with pytest.raises(DimensionMismatch):
            technical_coefficients(hand_table, np.array([1.0, 2.0, 3.0]))

    def test_negative_output(self, hand_table):
        with pytest.raises(NegativeOutput):
            technical_coefficients(hand_table, np.array([-1.0, 2.0]))

    def test_total_output_from_demand(self, hand_table):
        np.testing.assert_array_equal(total_output_from_demand(hand_table, np.array([1.0, 1.0])), [3.0, 2.0])

    def test_column_sum_warning(self, caplog):
        coefficients = TechnicalCoefficients.from_dense([[1.2]])
        assert not coefficients.is_productive
        assert "sum to >= 1" in caplog.text


class TestSolvers:
    @pytest.mark.parametrize("method", ["iterative", "direct"])
    def test_hand_case(self, method, solver_config):
        x = leontief_solve(TechnicalCoefficients.from_dense(HAND_A), np.array([1.0, 1.0]),
                           get_solver(method, solver_config))
        np.testing.assert_allclose(x, [2.0, 2.0], rtol=1e-9)

    @pytest.mark.parametrize("method", ["iterative", "direct"])
    def test_identity_case(self, method, solver_config):
        y = np.array([3.5, 0.0, 7.25])
        x = leontief_solve(TechnicalCoefficients.from_dense(np.zeros((3, 3))), y, get_solver(method, solver_config))
        np.testing.assert_array_equal(x, y)

    def test_zero_demand(self, solver_config):
        result = IterativeSolver(solver_config).solve(TechnicalCoefficients.from_dense(HAND_A), np.zeros(2))
        assert result.output.tolist() == [0.0, 0.0]

    def test_divergence(self, solver_config):
        with pytest.raises(NonConvergence) as excinfo:
            IterativeSolver(solver_config).solve(TechnicalCoefficients.from_dense([[1.2]]), np.array([1.0]))
        assert excinfo.value.iterations > 0
        assert excinfo.value.deltas

    def test_fallback_to_factorization(self):
        config = SolverConfig(max_iterations=10, fallback=True)
        result = IterativeSolver(config).solve(TechnicalCoefficients.from_dense([[0.9999]]), np.array([1.0]))
        assert result.method == "iterative+direct"
        assert result.output[0] == pytest.approx(10000.0, rel=1e-9)

    def test_iteration_cap_without_fallback(self):
        config = SolverConfig(max_iterations=10, fallback=False)
        with pytest.raises(NonConvergence):
            IterativeSolver(config).solve(TechnicalCoefficients.from_dense([[0.9999]]), np.array([1.0]))

    def test_demand_length(self, solver_config):
        with pytest.raises(DimensionMismatch):
            DirectSolver(solver_config).solve(TechnicalCoefficients.from_dense(HAND_A), np.ones(3))

    def test_unknown_solver(self, solver_config):
        with pytest.raises(ValueError):
            get_solver("inverse", solver_config)


class TestFootprint:
    def test_hand_case(self, hand_table, solver_config):
        coefficients = technical_coefficients(hand_table, np.array([2.0, 4.0]))
        result = footprint(np.array([1.0, 1.0]), coefficients, np.array([1.0, 1.0]), get_solver("direct", solver_config))
        assert result.total == pytest.approx(4.0, rel=1e-12)
        assert result.breakdown == pytest.approx([2.0, 2.0])
        assert result.total_kt == pytest.approx(4e-6)
        assert result.rows(hand_table.index)[0] == {"region": "XX", "sector": "A", "kgco2e": pytest.approx(2.0)}

    def test_zero_intensity(self, solver_config):
        result = footprint(np.zeros(2), TechnicalCoefficients.from_dense(HAND_A), np.ones(2), DirectSolver(solver_config))
        assert result.total == 0.0

    def test_intensity_length(self, solver_config):
        with pytest.raises(DimensionMismatch):
            footprint(np.ones(3), TechnicalCoefficients.from_dense(HAND_A), np.ones(2), DirectSolver(solver_config))

    def test_negative_intensity(self, solver_config):
        with pytest.raises(NumericError):
            footprint(np.array([1.0, -1.0]), TechnicalCoefficients.from_dense(HAND_A), np.ones(2),
                      DirectSolver(solver_config))

    def test_group_attribution(self, hand_table, solver_config):
        coefficients = technical_coefficients(hand_table, np.array([2.0, 4.0]))
        result = footprint(np.array([1.0, 3.0]), coefficients, np.ones(2), DirectSolver(solver_config))
        assert group_footprint(result, SectorGroup.of_labels("B", ["B"]), hand_table.index) == pytest.approx(6.0)
        assert result.total == pytest.approx(8.0)


@st.composite
def contraction_systems(draw, max_size=6):
    """Nonnegative A with column sums at most 0.9, intensities s and demand y."""
    n = draw(st.integers(min_value=1, max_value=max_size))
    rng = np.random.default_rng(draw(st.integers(min_value=0, max_value=2 ** 32 - 1)))
    density = draw(st.floats(min_value=0.1, max_value=1.0))
    raw = rng.random((n, n)) * (rng.random((n, n)) < density)
    sums = raw.sum(axis=0)
    scale = np.divide(0.9, sums, out=np.zeros(n), where=sums > 0)
    a = raw * scale * draw(st.floats(min_value=0.0, max_value=1.0))
    s = rng.random(n) * 100.0
    y = rng.random(n) * 1000.0
    return a, s, y


class TestProperties:
    @settings(max_examples=1000, deadline=None)
    @given(contraction_systems(), st.floats(min_value=0.0, max_value=10.0), st.floats(min_value=0.0, max_value=10.0))
    def test_linearity(self, system, alpha, beta):
        a, s, y1 = system
        y2 = y1[::-1].copy()
        coefficients = TechnicalCoefficients.from_dense(a)
        solver = DirectSolver(SolverConfig())
        combined = footprint(s, coefficients, alpha * y1 + beta * y2, solver).total
        separate = alpha * footprint(s, coefficients, y1, solver).total + beta * footprint(s, coefficients, y2, solver).total
        assert combined == pytest.approx(separate, rel=1e-8, abs=1e-6)

    @settings(max_examples=1000, deadline=None)
    @given(contraction_systems(), st.data())
    def test_monotonicity(self, system, data):
        a, s, y = system
        k = data.draw(st.integers(min_value=0, max_value=len(y) - 1))
        bump = data.draw(st.floats(min_value=0.0, max_value=1000.0))
        coefficients = TechnicalCoefficients.from_dense(a)
        solver = DirectSolver(SolverConfig())
        before = footprint(s, coefficients, y, solver).total
        y_more = y.copy()
        y_more[k] += bump
        after = footprint(s, coefficients, y_more, solver).total
        assert after >= before - 1e-9 * max(abs(before), 1.0)

    @settings(max_examples=100, deadline=None)
    @given(contraction_systems(max_size=20))
    def test_truncated_series_agrees(self, system):
        a, _, y = system
        expected = np.zeros_like(y)
        term = y.copy()
        for _ in range(201):
            expected += term
            term = a @ term
        x = leontief_solve(TechnicalCoefficients.from_dense(a), y, IterativeSolver(SolverConfig()))
        assert np.abs(x - expected).max() <= 1e-6 * np.abs(expected).max()
