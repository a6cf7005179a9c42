import pytest

from settings.run_config import Budget, Method, ReportFormat, RunConfig, Subcommand, VerifyMode
from utils.myutils import get_config_int, get_config_value, load_defaults, worker_count


class TestConfigLookup:
    def test_defaults_file(self):
        defaults = load_defaults()
        assert defaults["exhaustive_cap"] == 30
        assert defaults["self_check_cap"] == 20

    def test_environment_wins(self, monkeypatch):
        monkeypatch.setenv("IBF_UNCOVERED_CAP", "5")
        assert get_config_int("uncovered_cap", 64) == 5

    def test_fallback_default(self):
        assert get_config_value("no_such_key", "fallback") == "fallback"

    def test_non_integer(self, monkeypatch):
        monkeypatch.setenv("IBF_CANDIDATE_CAP", "lots")
        with pytest.raises(ValueError, match="not an integer"):
            get_config_int("candidate_cap", 5000)

    def test_worker_count(self, monkeypatch):
        monkeypatch.setenv("IBF_THREADS", "3")
        assert worker_count() == 3
        monkeypatch.setenv("IBF_THREADS", "0")
        assert worker_count() >= 1
        monkeypatch.setenv("IBF_THREADS", "-1")
        with pytest.raises(ValueError):
            worker_count()


class TestRunConfig:
    def test_valid_construct(self):
        config = RunConfig(Subcommand.CONSTRUCT, n=7, d=4).validate()
        assert config.method is Method.GENERAL

    @pytest.mark.parametrize("kwargs, message", [
        (dict(n=5, d=5), r"\[2, 4\]"),
        (dict(n=5, d=1), r"\[2, 4\]"),
        (dict(n=7, d=4, method=Method.CYCLE), "n = d\\+1"),
        (dict(n=9, d=5, method=Method.MIN_EDGE), "needs --k"),
        (dict(n=9, d=5, k=2, method=Method.MIN_EDGE), "requires"),
        (dict(n=None, d=4), "needs both"),
    ])
    def test_construct_rejects(self, kwargs, message):
        with pytest.raises(ValueError, match=message):
            RunConfig(Subcommand.CONSTRUCT, **kwargs).validate()

    def test_exact_allows_d_equals_n(self):
        RunConfig(Subcommand.EXACT, n=4, d=4).validate()

    def test_sampled_needs_count(self):
        with pytest.raises(ValueError, match="positive sample count"):
            RunConfig(Subcommand.VERIFY, mode=VerifyMode.SAMPLED, sample_count=0).validate()

    @pytest.mark.parametrize("n", [None, 1, 4])
    def test_pivot_needs_odd_cycle(self, n):
        with pytest.raises(ValueError, match="odd n"):
            RunConfig(Subcommand.PIVOT, n=n).validate()

    def test_pivot_keeps_format(self):
        config = RunConfig(Subcommand.PIVOT, n=7, report_format=ReportFormat.JSON).validate()
        assert config.report_format is ReportFormat.JSON

    def test_table_budget(self):
        with pytest.raises(ValueError, match="budget nodes"):
            RunConfig(Subcommand.TABLE, budget=Budget(nodes=-5)).validate()
        assert RunConfig(Subcommand.TABLE, budget=Budget(nodes=10)).validate().budget.nodes == 10

    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError, match="budget nodes"):
            RunConfig(Subcommand.EXACT, n=4, d=2, budget=Budget(nodes=0)).validate()
