import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Dict

EXIT_AFFIRMATIVE = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


@dataclass
class Report:
    """
    Result record of one command, printed as a single JSON object.

    ``status`` is the command-specific verdict ("popular", "not-popular",
    "acyclic", "ok", "error", ...). Rankings are plain candidate lists.
    """
    command: str
    inputs: Dict[str, Any]
    status: str = "ok"
    exit_code: int = EXIT_AFFIRMATIVE
    result: Dict[str, Any] = field(default_factory=dict)
    runtime_seconds: float = 0.0
    _started: float = field(default_factory=time.perf_counter, repr=False)

    def finish(self, status: str, exit_code: int, **result) -> "Report":
        self.status = status
        self.exit_code = exit_code
        self.result.update(result)
        self.runtime_seconds = round(time.perf_counter() - self._started, 6)
        return self

    def fail(self, error: Exception) -> "Report":
        return self.finish("error", EXIT_ERROR, error=type(error).__name__, message=str(error))

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data.pop("_started")
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=4, ensure_ascii=False)
