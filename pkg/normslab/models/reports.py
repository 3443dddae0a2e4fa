"""Report models emitted by the verification operations.

Reports are the canonical output of the CLI: they contain no timestamps, and
exact rationals are rendered as strings (``"5/2"``).
"""

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from normslab.models.documents import SequenceDocument


class RamificationReport(BaseModel):
    """Filtration data of one extension."""

    extension: List
    order: int
    i_table: Dict[str, int]
    lower_jumps: List[int]
    upper_jumps: List[str]
    phi_breakpoints: List[Tuple[str, str]]
    phi_final_slope: str
    conductor: int
    different_degree: int
    hasse_arf: bool
    different_oracle: Optional[int] = None


class ApfReport(BaseModel):
    p: int
    level: int
    first_jump: str
    r: int


class PairWitness(BaseModel):
    """Verified precision of N(alpha_{m+1}) = alpha_m, in nu_m units."""

    level: int
    witness: Optional[int]
    exact: bool = True
    passed: bool


class CompatibilityReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    p: int
    depth_range: Tuple[int, int] = Field(alias="range")
    passed: bool
    pairs: List[PairWitness]
    valuations: List[Optional[int]]
    common_valuation: Optional[int] = None
    first_failure: Optional[int] = None


class LevelAgreement(BaseModel):
    """nu_m of a difference against the window it must clear.

    ``agreement`` is None when the difference is an exact zero; ``exact`` is
    False when only a lower bound is known.
    """

    level: int
    agreement: Optional[int]
    exact: bool
    window: int
    certified: bool


class StabilityReport(BaseModel):
    """Agreement of a limit sum between two probe depths."""

    probe_depths: Tuple[int, int]
    levels: List[LevelAgreement]
    stable: bool


class CongruenceReport(BaseModel):
    kind: Literal["approx_apf", "special_congruence", "approximate_lift"]
    levels: List[LevelAgreement]
    passed: bool


class FonAddReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    result: SequenceDocument = Field(alias="sum")
    stability: StabilityReport
    congruence: CongruenceReport


class CrossCheckRecord(BaseModel):
    """Filtration of the explicit Kummer extension over L^m."""

    lower_jumps: List[int]
    upper_jumps: List[str]
    different_degree: int
    agrees: bool


class LevelRecord(BaseModel):
    m: int
    unit_index: Optional[int] = None
    conductor: Optional[int] = None
    d_m: Optional[int] = None
    eisenstein_ok: Optional[bool] = None
    pthpower_ok: Optional[bool] = None
    pthpower_index: Optional[int] = None
    pthpower_bound: Optional[int] = None
    m_0: int
    cross_check: Optional[CrossCheckRecord] = None
    error: Optional[str] = None


class CompositeRecord(BaseModel):
    """The p-th power check across two steps, levels m and m+2."""

    m: int
    index: Optional[int]
    bound: int
    passed: bool


class OortReport(BaseModel):
    p: int
    c: int
    W: str
    precision: int
    d_eta: int
    branch_count: int
    m_0: int
    levels: List[LevelRecord]
    composite: List[CompositeRecord] = Field(default_factory=list)
    conductor_stable: bool
    verdict: Literal["pass", "fail"]
    first_failure: Optional[str] = None
    level_cap: Optional[int] = None


class LiftReport(BaseModel):
    """A lifted sequence and the congruence it was checked against."""

    sequence: SequenceDocument
    congruence: CongruenceReport
