"""Request and response models for the service endpoints.

Weights travel as lists of integers in doubled fundamental-weight
coordinates; exact rationals as "p/q" strings.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class DatumSpec(BaseModel):
    type: str
    grading: list[int]
    subsystems: dict[str, list[int]] = Field(default_factory=dict)


class TermEntry(BaseModel):
    weight: list[int]
    coeff: int


class MultiplicityEntry(BaseModel):
    weight: list[int]
    multiplicity: int


class DatumRequest(BaseModel):
    datum: DatumSpec


class SubsystemInfo(BaseModel):
    name: str
    positive_root_indices: list[int]
    rho: list[int]
    weyl_order: int


class DatumResponse(BaseModel):
    type: str
    grading: list[int]
    rank: int
    positive_roots: list[list[int]]
    compact_indices: list[int]
    rho: list[int]
    rho_c: list[int]
    rho_n: list[int]
    q_half_dim_p: int
    l0: int
    weyl_order: int
    compact_weyl_order: int
    subsystems: list[SubsystemInfo]


class HdFindimRequest(BaseModel):
    datum: DatumSpec
    highest_weight: list[int]


class CohomologyResponse(BaseModel):
    plus: list[MultiplicityEntry]
    minus: list[MultiplicityEntry]


class HdAqRequest(BaseModel):
    datum: DatumSpec
    defining_element: list[int]
    character: list[int]


class HdAqResponse(CohomologyResponse):
    lowest_k_type: list[int]


class HdDsRequest(BaseModel):
    datum: DatumSpec
    parameter: list[int]


class HdDsResponse(CohomologyResponse):
    dominant_parameter: list[int]
    orientation: int


class HdHwRequest(BaseModel):
    datum: DatumSpec
    levi: list[int]
    highest_weight: list[int]


class HdHwResponse(BaseModel):
    entries: list[MultiplicityEntry]
    antidominant: list[int]
    position_word: list[int]
    nilrad_half_sum: list[int]


class IndexRequest(BaseModel):
    datum: DatumSpec
    family: Literal["findim", "aq", "ds"]
    weight: list[int]
    defining_element: Optional[list[int]] = None


class CharResponse(BaseModel):
    terms: list[TermEntry]


class PairingEllRequest(BaseModel):
    datum: DatumSpec
    mu: list[int]
    mu2: list[int]


class PairingResponse(BaseModel):
    value: str
    left: str
    right: str


class PairingT81Request(BaseModel):
    datum: DatumSpec
    parameter: list[int]
    parameter2: list[int]


class KlTableRequest(BaseModel):
    type: str


class KlRow(BaseModel):
    x: list[int]
    w: list[int]
    poly: list[int]


class KlTableResponse(BaseModel):
    type: str
    rows: list[KlRow]


class KlParabolicRequest(BaseModel):
    type: str
    levi: list[int]
    singular: list[int] = Field(default_factory=list)


class SubSelector(BaseModel):
    name: Optional[str] = None
    indices: Optional[list[int]] = None


class TransferFactorRequest(BaseModel):
    datum: DatumSpec
    sub: SubSelector


class TransferFactorResponse(BaseModel):
    factor: list[TermEntry]
    sign_exponent: int
    quotient_checked: bool


class TransferFindimRequest(BaseModel):
    datum: DatumSpec
    sub: SubSelector
    highest_weight: list[int]


class TransferFindimResponse(BaseModel):
    entries: list[MultiplicityEntry]
    sign_exponent: int


class TransferDsRequest(BaseModel):
    datum: DatumSpec
    sub: SubSelector
    parameter: list[int]


class SignedParameter(BaseModel):
    parameter: list[int]
    sign: int


class TransferDsResponse(BaseModel):
    parameters: list[SignedParameter]
    sign_exponent: int


class VerifyRequest(BaseModel):
    suite: str
    bound: Optional[int] = None
    type: Optional[str] = None
    grading: Optional[list[int]] = None


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: int
    counterexample: Optional[dict] = None


class ErrorResponse(BaseModel):
    error: str
