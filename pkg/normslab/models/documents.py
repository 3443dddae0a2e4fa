"""Structured-document formats for arithmetic objects.

These are the canonical JSON shapes read and written by the CLI. Each
arithmetic type converts to and from its document exactly.
"""

from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field


class PAdicDocument(BaseModel):
    """An element of Q_p: ``p^val * sum(digits[i] p^i)`` known to ``relprec`` digits.

    ``val`` is null for the exact zero.
    """

    p: int
    val: Optional[int]
    digits: List[int] = Field(default_factory=list)
    relprec: int = Field(ge=0)


class CycloDocument(BaseModel):
    """An element of Q_p(zeta_{p^m}) by its coordinates in the basis lambda_m^i."""

    p: int
    m: int = Field(ge=0)
    coeffs: List[PAdicDocument]


class SeriesDocument(BaseModel):
    """A truncated power series over Z_p ("Zp") or Z_p[zeta_p] ("R1").

    ``exact`` marks a polynomial: coefficients beyond ``M`` are zero rather
    than unknown.
    """

    ring: Literal["Zp", "R1"]
    p: int
    M: int = Field(ge=0)
    exact: bool = False
    coeffs: List[Union[CycloDocument, PAdicDocument]]


class FactorizationDocument(BaseModel):
    """Weierstrass factorization ``g = varpi^c f U``."""

    c: int = Field(ge=0)
    f: SeriesDocument
    U: SeriesDocument


class SequenceDocument(BaseModel):
    """A finite-depth norm-compatible sequence."""

    model_config = ConfigDict(populate_by_name=True)

    p: int
    depth_range: Tuple[int, int] = Field(alias="range")
    components: List[CycloDocument]
    witnesses: List[Optional[int]] = Field(default_factory=list)
