"""
Loader for JSON simulation configs
"""
import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from ..errors import ConfigValidationError, ParseError, VLCSimError
from ..schemas import ConfigDocument, format_validation_errors
from ..scenario import SweepSpec, SystemConfig, SystemKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedConfig:
    """A validated config and what the reports need to know about where it came from"""
    system: SystemConfig
    sweep: SweepSpec
    config_hash: str
    responsivity_assumed: bool


def config_hash(document: ConfigDocument) -> str:
    """SHA-256 of the canonical JSON form of a validated document, defaults filled in."""
    canonical = json.dumps(document.model_dump(mode="json"), sort_keys=True,
                           separators=(",", ":"), allow_nan=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def parse_document(text: str) -> ConfigDocument:
    """
    Decode and schema-check a config document.

    Raises:
        ParseError: if the text is not a JSON object
        ConfigValidationError: if a field is missing, unknown or out of range
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
                         line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise ParseError("config document must be a JSON object", line=1, column=1)
    try:
        return ConfigDocument.model_validate(data)
    except ValidationError as e:
        raise ConfigValidationError(format_validation_errors(e)) from e


def parse_config(text: str) -> LoadedConfig:
    """
    Parse a config document into the domain configuration and its sweep.

    Missing optional fields take the scenario defaults; unknown keys are errors.

    Args:
        text: JSON document

    Returns:
        LoadedConfig with the SystemConfig, the SweepSpec and the config hash

    Raises:
        ParseError: if the document is not well-formed
        ConfigValidationError: if the document violates a schema or model invariant
    """
    document = parse_document(text)
    try:
        system = document.to_system_config()
        sweep = document.to_sweep_spec()
        sweep.positions()
    except VLCSimError as e:
        raise ConfigValidationError([f"<root>: {e}"]) from e

    assumed = (system.system is SystemKind.NOMA
               and "responsivity" not in document.access_point.model_fields_set)
    if assumed:
        logger.warning(f"plain NOMA responsivity not given; assuming "
                       f"{system.access_point.responsivity} A/W (red channel)")
    return LoadedConfig(system=system, sweep=sweep, config_hash=config_hash(document),
                        responsivity_assumed=assumed)


def load_config(path: Union[str, Path]) -> LoadedConfig:
    """Read and parse a config file."""
    path = Path(path)
    loaded = parse_config(path.read_text(encoding="utf-8"))
    logger.info(f"loaded config {path} ({loaded.system.system.value}, "
                f"{loaded.system.scheme.value}, {len(loaded.system.users)} users)")
    return loaded
