"""
Loading and saving the JSON inputs and outputs of the toolkit
"""

import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from pydantic import BaseModel, ValidationError

from ..core.errors import InvalidInput
from ..core.graph import Graph
from ..core.simplicial import SimplicialComplex
from ..core.universality import ConstructionParams, params_for
from ..models.domain import ComplexSpec, GraphSpec
from ..models.requests import CONSTRUCTION_VERBS, Command

logger = logging.getLogger(__name__)


@dataclass
class ParsedInputs:
    graphs: Dict[str, Graph] = field(default_factory=dict)
    complexes: Dict[str, SimplicialComplex] = field(default_factory=dict)
    # resolved from T and --k for verbs that build G_{k,X}
    params: Optional[ConstructionParams] = None


def describe_validation_error(path: str, error: ValidationError) -> str:
    first = error.errors()[0]
    where = ".".join(str(p) for p in first["loc"])
    return f"{path}: {where}: {first['msg']}"


class InputService:
    """Reads graph and complex files, enforcing every invariant at load time"""

    def load_json(self, path: str) -> Any:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as e:
            raise InvalidInput(f"cannot read {path}: {e.strerror}", stage="load")
        except json.JSONDecodeError as e:
            raise InvalidInput(f"{path}: malformed JSON: {e.msg} (line {e.lineno})", stage="load")

    def _parse(self, path: str, model):
        try:
            return model.parse_obj(self.load_json(path))
        except ValidationError as e:
            raise InvalidInput(describe_validation_error(path, e), stage="load")

    def load_graph(self, path: str) -> Graph:
        spec = self._parse(path, GraphSpec)
        try:
            return spec.to_graph()
        except InvalidInput as e:
            raise InvalidInput(f"{path}: {e}", stage="load")

    def load_complex(self, path: str) -> SimplicialComplex:
        spec = self._parse(path, ComplexSpec)
        try:
            return spec.to_complex()
        except InvalidInput as e:
            raise InvalidInput(f"{path}: {e}", stage="load")

    def parse_inputs(self, command: Command) -> ParsedInputs:
        parsed = ParsedInputs()
        for name in ("t", "g"):
            path = getattr(command, name)
            if path:
                parsed.graphs[name] = self.load_graph(path)
        for path in command.x:
            name = complex_name(path)
            if name in parsed.complexes:
                name = f"{name}#{len(parsed.complexes)}"
            parsed.complexes[name] = self.load_complex(path)
        if command.verb in CONSTRUCTION_VERBS and "t" in parsed.graphs:
            try:
                parsed.params = params_for(parsed.graphs["t"], command.k)
            except InvalidInput as e:
                raise InvalidInput(f"{command.t}: {e}", stage="parse")
        logger.debug("Loaded %d graphs and %d complexes", len(parsed.graphs), len(parsed.complexes))
        return parsed

    def save(self, path: str, model: BaseModel) -> None:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(model.json())
                fh.write("\n")
        except OSError as e:
            raise InvalidInput(f"cannot write {path}: {e.strerror}", stage="save")
        logger.info("Wrote %s", path)


def complex_name(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


_input_service: Optional[InputService] = None


def get_input_service() -> InputService:
    """Get or create the input service instance"""
    global _input_service
    if _input_service is None:
        _input_service = InputService()
    return _input_service
