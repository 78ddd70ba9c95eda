from dotenv import load_dotenv
import os

# Load .env file
load_dotenv()

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def load_config():
    return {
        "search": {
            "budget": _int_env("RANKPOP_SEARCH_BUDGET", 10_000_000),
            "threads": _int_env("RANKPOP_THREADS", 1),
        },
        "majority": {
            "topsort_limit": _int_env("RANKPOP_TOPSORT_LIMIT", 10_000),
        },
        "kemeny": {
            "minimizer_cap": _int_env("RANKPOP_MINIMIZER_CAP", 1_000),
        },
        "logging": {
            "log_dir": os.getenv("RANKPOP_LOG_DIR") or os.path.join(project_root, "logs"),
            "level": os.getenv("RANKPOP_LOG_LEVEL", "INFO"),
        },
        "data": {
            "data_dir": os.getenv("RANKPOP_DATA_DIR") or os.path.join(project_root, "data"),
        }
    }


class SearchConfig:
    """
    Limits shared by every exhaustive search
    """

    def __init__(self):
        config = load_config()
        self.budget = config["search"]["budget"]
        self.threads = config["search"]["threads"]
        self.topsort_limit = config["majority"]["topsort_limit"]
        self.minimizer_cap = config["kemeny"]["minimizer_cap"]

    def resolve_budget(self, budget=None) -> int:
        return self.budget if budget is None else budget

    def resolve_threads(self, threads=None) -> int:
        return max(1, self.threads if threads is None else threads)


class LogConfig:
    def __init__(self):
        config = load_config()
        self.log_dir = config["logging"]["log_dir"]
        self.level = config["logging"]["level"]
        self.data_dir = config["data"]["data_dir"]

    def log_path(self, file_name: str) -> str:
        return os.path.join(self.log_dir, file_name)


search_config = SearchConfig()
log_config = LogConfig()
