from enum import Enum
from pydantic import BaseModel, Field
from typing import Dict, List, Optional

SCHEMA_VERSION = 1


class KEKind(str, Enum):
    BIPARTITE = "bipartite"
    KE_NON_BIPARTITE = "ke_non_bipartite"
    ONE_KE = "one_ke"
    OTHER = "other"


class VertexZone(str, Enum):
    OUTSIDE_CORE = "outside_core"
    CORE_MINUS_KER = "core_minus_ker"
    KER = "ker"


class EdgeLocation(str, Enum):
    OUTSIDE_CORE_POCKET = "outside_core_pocket"
    KER_POCKET = "ker_pocket"
    CORE_MINUS_KER_TO_KER_N = "core_minus_ker_to_ker_n"
    CROSS_POCKET = "cross_pocket"


class PairingKind(str, Enum):
    NONE = "none"
    NON_PERFECT = "non_perfect"
    UNIQUE = "unique"
    MULTIPLE = "multiple"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


class KEClass(BaseModel):
    kind: KEKind
    n: int
    alpha: int
    mu: int

    @property
    def is_ke(self) -> bool:
        return self.kind in (KEKind.BIPARTITE, KEKind.KE_NON_BIPARTITE)

    @property
    def is_one_ke(self) -> bool:
        return self.kind == KEKind.ONE_KE


class IndependenceSummary(BaseModel):
    alpha: int
    omega_count: Optional[int] = Field(None, description="Number of maximum independent sets, when enumerated.")
    core: List[int]
    xi: int
    eta: int
    alpha_critical_vertices: List[int]


class CriticalProfile(BaseModel):
    d: int = Field(..., ge=0)
    ker: List[int]
    epsilon: int
    witness: List[int] = Field(..., description="A critical independent set containing ker.")
    max_crit_size: Optional[int] = None


class VertexVerdict(BaseModel):
    vertex: int
    label: str
    zone: Optional[VertexZone] = Field(None, description="Only set for KE graphs.")
    deletion_class: KEClass
    consistent: Optional[bool] = Field(None, description="Whether the deletion class matches the zone.")


class EdgeVerdict(BaseModel):
    u: int
    v: int
    location: Optional[EdgeLocation] = Field(None, description="Only set for KE graphs.")
    mu_critical: bool
    alpha_critical: bool
    deletion_is_ke: bool


class FormulaChecks(BaseModel):
    rho_v_formula: Optional[int] = None
    rho_v_equality: Optional[bool] = None
    rho_e_bound: Optional[int] = None
    rho_e_lower_bound: Optional[bool] = None
    cross_pocket_pairing: Optional[PairingKind] = None
    rho_e_bound_tight: Optional[bool] = None


class KEReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    graph6: str
    n: int
    m: int
    alpha: int
    mu: int
    d: int
    core: List[int]
    xi: int
    ker: List[int]
    epsilon: int
    eta: int
    rho_v: int
    rho_e: int
    ke_class: KEClass
    vertices: List[VertexVerdict] = Field(default_factory=list)
    edges: List[EdgeVerdict] = Field(default_factory=list)
    formulas: FormulaChecks = Field(default_factory=FormulaChecks)
    critical_witness: List[int] = Field(default_factory=list)
    open_problem_flags: List[str] = Field(default_factory=list)

    @staticmethod
    def csv_header() -> List[str]:
        return [
            "graph6", "n", "m", "alpha", "mu", "d", "xi", "epsilon", "eta",
            "rho_v", "rho_e", "class", "rho_v_formula", "rho_v_equality",
            "rho_e_bound", "rho_e_lower_bound", "core", "ker",
        ]

    def csv_row(self) -> List[str]:
        f = self.formulas

        def opt(value) -> str:
            return "" if value is None else str(value).lower() if isinstance(value, bool) else str(value)

        return [
            self.graph6, str(self.n), str(self.m), str(self.alpha), str(self.mu), str(self.d),
            str(self.xi), str(self.epsilon), str(self.eta), str(self.rho_v), str(self.rho_e),
            self.ke_class.kind.value, opt(f.rho_v_formula), opt(f.rho_v_equality),
            opt(f.rho_e_bound), opt(f.rho_e_lower_bound),
            " ".join(str(v) for v in self.core), " ".join(str(v) for v in self.ker),
        ]


class TheoremCheck(BaseModel):
    name: str
    statement: str
    status: CheckStatus
    witness: Optional[str] = None
    sampled: bool = Field(False, description="True when a universal claim was checked on samples only.")


class TheoremReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    graph6: str
    n: int
    m: int
    is_ke: bool
    checks: List[TheoremCheck]

    @property
    def failures(self) -> List[TheoremCheck]:
        return [c for c in self.checks if c.status == CheckStatus.FAIL]


class CheckTally(BaseModel):
    name: str
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0
    sampled: int = 0
    first_failure: Optional[str] = Field(None, description="graph6 of the first graph that failed.")
    first_failure_witness: Optional[str] = None


class VerifySummary(BaseModel):
    schema_version: int = SCHEMA_VERSION
    source: str
    graphs: int = 0
    ke_graphs: int = 0
    errors: int = 0
    tallies: List[CheckTally] = Field(default_factory=list)
    greedy_compared: int = 0
    greedy_maximum: int = 0
    open_problem_counts: Dict[str, int] = Field(default_factory=dict)
    open_problem_examples: Dict[str, List[str]] = Field(default_factory=dict)
    gallery_mismatches: int = 0

    @property
    def failed(self) -> bool:
        return self.gallery_mismatches > 0 or any(t.failed for t in self.tallies)


class GalleryCell(BaseModel):
    fixture: str
    key: str
    expected: str
    computed: str
    match: bool
    discrepancy: bool = Field(False, description="Known discrepancy with the stated value; reported, never fatal.")


class ErrorRecord(BaseModel):
    schema_version: int = SCHEMA_VERSION
    index: int
    line: Optional[int] = None
    graph6: Optional[str] = None
    kind: str
    error: str
