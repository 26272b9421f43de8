"""
Request models for the Hom complex toolkit
"""

from pydantic import BaseModel, Field, root_validator, validator
from typing import List, Optional

from ..core.workflows import ROUTES

VERBS = ("betti", "hom", "build", "verify", "dismantle", "nerve", "conjecture41", "lemmas")

# Verbs that build G_{k,X}; their k is checked against T at load time
CONSTRUCTION_VERBS = ("build", "verify", "nerve")

# Inputs each verb cannot run without
REQUIRED_INPUTS = {
    "betti": ("x",),
    "hom": ("t", "g"),
    "build": ("x",),
    "verify": ("t", "x"),
    "dismantle": ("g",),
    "nerve": ("x",),
    "conjecture41": ("x",),
    "lemmas": (),
}


class Command(BaseModel):
    """A parsed command line"""
    verb: str = Field(..., description="Subcommand name")
    t: Optional[str] = Field(None, description="Path to the graph T")
    x: List[str] = Field(default=[], description="Paths to complexes X")
    g: Optional[str] = Field(None, description="Path to the graph G")
    k: Optional[int] = Field(None, ge=1, description="Subdivision depth override")
    via: str = Field("exp", description="Hom construction route")
    max_cells: int = Field(..., ge=0, description="Cell cap for every construction")
    seed: int = Field(0, description="Seed for sampled property runs")
    out: Optional[str] = Field(None, description="Where to write the constructed graph or complex")

    @validator("verb")
    def verb_known(cls, v):
        if v not in VERBS:
            raise ValueError(f"unknown verb {v!r}")
        return v

    @validator("via")
    def route_known(cls, v):
        if v not in ROUTES:
            raise ValueError(f"--via must be one of {', '.join(ROUTES)}")
        return v

    @root_validator(skip_on_failure=True)
    def inputs_present(cls, values):
        for name in REQUIRED_INPUTS[values["verb"]]:
            if not values.get(name):
                raise ValueError(f"{values['verb']} requires --{name}")
        if values["verb"] not in ("conjecture41",) and len(values.get("x") or []) > 1:
            raise ValueError(f"{values['verb']} takes a single --x")
        return values
