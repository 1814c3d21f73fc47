from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

SCHEMA_VERSION = "1.0"


class TractDescriptorModel(BaseModel):
    """Tract descriptor as written in files: {"kind":"gfp","p":5}"""
    model_config = ConfigDict(extra="forbid")

    kind: Literal["krasner", "sign", "phase", "gfp", "d6", "layered"]
    p: Optional[int] = None
    base: Optional[Literal["krasner", "sign", "gfp"]] = None

    @model_validator(mode="after")
    def check_parameters(self):
        if self.kind == "gfp" and self.p is None:
            raise ValueError("gfp needs p")
        if self.kind == "layered" and self.base is None:
            raise ValueError("layered needs base")
        if self.kind == "layered" and self.base == "gfp" and self.p is None:
            raise ValueError("layered gfp base needs p")
        return self

    def as_descriptor(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


class MatroidFileModel(BaseModel):
    """Matroid file: tract, chirality, ordered ground set and circuit vectors"""
    model_config = ConfigDict(extra="forbid")

    tract: TractDescriptorModel
    chirality: Literal["left", "right"] = "left"
    ground: List[str] = Field(min_length=1)
    circuits: List[Dict[str, str]]

    @field_validator("ground")
    @classmethod
    def unique_labels(cls, ground: List[str]) -> List[str]:
        if len(set(ground)) != len(ground):
            raise ValueError("ground labels must be unique")
        return ground


class SigmaFileModel(BaseModel):
    """σ file: new element label and values keyed by cocircuit id"""
    model_config = ConfigDict(extra="forbid")

    p: str = "p"
    values: Dict[str, str]


class TractFileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tract: TractDescriptorModel
    sample: Optional[str] = None


class PropertyVerdict(BaseModel):
    """Outcome of a tract property check over a finite sample"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    check: str
    tract: str
    holds: bool
    witness: Optional[Tuple[Any, ...]] = None
    clause: Optional[str] = None
    sample_size: int = 0
    sample: Optional[str] = None

    @model_validator(mode="after")
    def witness_iff_failure(self):
        if self.holds == (self.witness is not None):
            raise ValueError("witness must be present exactly when the property fails")
        return self

    @field_serializer("witness")
    def serialize_witness(self, witness):
        return None if witness is None else [str(w) for w in witness]


class AxiomResult(BaseModel):
    """Verdict for a single axiom; witness lists the serialized objects of the first violation"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    axiom: str
    passed: bool
    checked: int = 0
    witness: Optional[List[str]] = None
    detail: Optional[str] = None
    witness_objects: Optional[Tuple[Any, ...]] = Field(default=None, exclude=True)


class AxiomReport(BaseModel):
    subject: str
    mode: Literal["weak", "strong"] = "weak"
    results: List[AxiomResult] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, axiom: str) -> Optional[AxiomResult]:
        for r in self.results:
            if r.axiom == axiom:
                return r
        return None

    def failed(self) -> List[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def first_failure(self) -> Optional[AxiomResult]:
        failures = self.failed()
        return failures[0] if failures else None


class CharacterizationVerdict(BaseModel):
    """The three localization verdicts: full matroid, rank-2 contractions, rank-2 minors on 3 elements"""
    mode: Literal["weak", "strong"] = "weak"
    full: bool
    rank2_contractions: bool
    rank2_minors3: bool
    covered: bool = True
    failing_contractions: List[str] = Field(default_factory=list)
    failing_minors: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.full == self.rank2_contractions == self.rank2_minors3

    def as_tuple(self) -> Tuple[bool, bool, bool]:
        return (self.full, self.rank2_contractions, self.rank2_minors3)


class ReportStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


class CommandReport(BaseModel):
    """JSON document written to stdout by every subcommand"""
    schema_version: str = SCHEMA_VERSION
    command: str
    status: ReportStatus
    data: Dict[str, Any] = Field(default_factory=dict)


class ErrorReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    command: str
    status: ReportStatus = ReportStatus.ERROR
    error: str
    error_type: str
    position: Optional[str] = None


class ExtensionReport(BaseModel):
    """Result of the extend subcommand: the localization report and, when it passes, the extension"""
    schema_version: str = SCHEMA_VERSION
    passed: bool
    localization: AxiomReport
    extended: Optional[Dict[str, Any]] = None
    cocircuits: List[Dict[str, Any]] = Field(default_factory=list)


class FixtureReport(BaseModel):
    """Expected against observed verdicts for one embedded fixture"""
    schema_version: str = SCHEMA_VERSION
    fixture: str
    description: str
    expected: Dict[str, Any]
    observed: Dict[str, Any]
    details: Dict[str, Any] = Field(default_factory=dict)

    @property
    def matches(self) -> bool:
        return all(self.observed.get(key) == value for key, value in self.expected.items())

    def mismatches(self) -> List[str]:
        return [key for key, value in self.expected.items() if self.observed.get(key) != value]


class RescalingFileModel(BaseModel):
    """ρ file: values keyed by ground label; labels left out default to 1"""
    model_config = ConfigDict(extra="forbid")

    values: Dict[str, str]
