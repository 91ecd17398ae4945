from typing import Any, Dict, Optional

import attrs

from .enums import Verdict


@attrs.define
class Report:
    """
    The machine readable outcome of a command, written to stdout.

    Attributes:
        - command (str): The command name.
        - verdict (Verdict): pass, fail or error.
        - residuals (dict): Named real values behind the verdict.
        - reason (str, optional): The error class name when the verdict is not pass.
        - message (str, optional): A human readable explanation.
        - witness (dict, optional): A serialized counterexample.
        - result (dict, optional): The artifact, when it was not written to a file.
        - timing_ms (float, optional): Wall time; only set with ``--timing``.
    """
    command: str
    verdict: Verdict = Verdict.PASS
    residuals: Dict[str, float] = attrs.field(factory=dict)
    reason: Optional[str] = None
    message: Optional[str] = None
    witness: Optional[Dict[str, Any]] = None
    result: Optional[Any] = None
    timing_ms: Optional[float] = None

    @property
    def exit_code(self) -> int:
        return Verdict(self.verdict).exit_code
