"""Verification report DTOs."""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from simpfib.core.enum import CheckStatus

REPORT_SCHEMA_VERSION = 1

# {
#     "schema_version": 1,
#     "suite": "verify-ses",
#     "passed": true,
#     "config": {"max_dim": 4, "seed": 0, "samples": 1000},
#     "notes": ["Ψ codomain: BK x_τ BL"],
#     "records": [
#         {
#             "name": "psi-bijective",
#             "dimension": 2,
#             "status": "pass",
#             "counterexample": null,
#             "detail": "16 simplices",
#             "elapsed": 0.0012,
#             "checked": 16
#         }
#     ]
# }


@dataclass
class CheckRecord:
    """Outcome of one named check in one dimension."""

    name: str
    dimension: int
    status: CheckStatus
    counterexample: Optional[str] = None
    detail: str = ""
    elapsed: float = 0.0
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["status"] = self.status.value
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckRecord":
        return cls(
            name=data["name"],
            dimension=int(data["dimension"]),
            status=CheckStatus(data["status"]),
            counterexample=data.get("counterexample"),
            detail=data.get("detail", ""),
            elapsed=float(data.get("elapsed", 0.0)),
            checked=int(data.get("checked", 0)),
        )


@dataclass
class Report:
    """A suite of check records plus the configuration it ran with."""

    suite: str
    records: List[CheckRecord] = field(default_factory=list)
    config: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if not record.passed]

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def extend(self, records: List[CheckRecord]) -> None:
        self.records.extend(records)

    def merge(self, other: "Report") -> "Report":
        """Append another report's records and notes; returns self."""
        self.records.extend(other.records)
        self.notes.extend(note for note in other.notes if note not in self.notes)
        return self

    def names(self) -> List[str]:
        return list(dict.fromkeys(record.name for record in self.records))

    def by_name(self, name: str) -> List[CheckRecord]:
        return [record for record in self.records if record.name == name]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "suite": self.suite,
            "passed": self.passed,
            "config": dict(self.config),
            "notes": list(self.notes),
            "records": [record.to_dict() for record in self.records],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        version = data.get("schema_version", REPORT_SCHEMA_VERSION)
        if version != REPORT_SCHEMA_VERSION:
            raise ValueError(f"Unsupported report schema version: {version}")
        return cls(
            suite=data["suite"],
            records=[CheckRecord.from_dict(item) for item in data.get("records", [])],
            config=dict(data.get("config", {})),
            notes=list(data.get("notes", [])),
        )

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))
