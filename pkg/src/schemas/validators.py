"""
Validation utilities for simulation config documents.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Tuple

from pydantic import ValidationError

from ..errors import VLCSimError
from .system_config import ConfigDocument

logger = logging.getLogger(__name__)


def format_validation_errors(exc: ValidationError) -> List[str]:
    """Turn pydantic errors into 'section -> field: message' lines."""
    errors = []
    for error in exc.errors():
        location = " -> ".join(str(loc) for loc in error["loc"]) or "<root>"
        errors.append(f"{location}: {error['msg']}")
    return errors


class SchemaValidator:
    """Validator for config documents"""

    @staticmethod
    def validate_config_document(data: Any) -> Tuple[bool, List[str]]:
        """
        Validate a decoded config document against the schema and the domain model.

        Args:
            data: Decoded JSON document

        Returns:
            Tuple of (is_valid, list_of_errors)
        """
        if not isinstance(data, dict):
            return False, ["<root>: config document must be a JSON object"]
        try:
            document = ConfigDocument.model_validate(data)
        except ValidationError as e:
            return False, format_validation_errors(e)
        try:
            document.to_system_config()
            document.to_sweep_spec().positions()
        except VLCSimError as e:
            return False, [f"<root>: {e}"]
        return True, []

    @staticmethod
    def validate_config_file(file_path: Path) -> Tuple[bool, List[str]]:
        """
        Validate a JSON config file.

        Args:
            file_path: Path to the JSON file

        Returns:
            Tuple of (is_valid, list_of_errors)
        """
        try:
            with open(file_path, 'r') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            return False, [f"line {e.lineno}, column {e.colno}: invalid JSON: {e.msg}"]
        except OSError as e:
            return False, [f"cannot read {file_path}: {e}"]
        return SchemaValidator.validate_config_document(data)

    @staticmethod
    def generate_schema_documentation(output_path: Path) -> None:
        """
        Generate markdown documentation for the config schema.

        Args:
            output_path: Path where to save the documentation
        """
        schema = ConfigDocument.model_json_schema()
        definitions = schema.get("$defs", {})

        def field_type(prop: Dict[str, Any]) -> str:
            if "$ref" in prop:
                return prop["$ref"].rsplit("/", 1)[-1]
            if "allOf" in prop:
                return field_type(prop["allOf"][0])
            if "anyOf" in prop:
                return " | ".join(field_type(p) for p in prop["anyOf"])
            if prop.get("type") == "array":
                items = prop.get("items") or prop.get("prefixItems", [{}])
                inner = field_type(items[0] if isinstance(items, list) else items)
                return f"array of {inner}"
            if "enum" in prop:
                return " | ".join(f"`{v}`" for v in prop["enum"])
            return prop.get("type", "any")

        def format_field(name: str, prop: Dict[str, Any], required: bool) -> str:
            md = f"- **{name}**"
            if required:
                md += " (required)"
            md += f"\n  - Type: {field_type(prop)}"
            if "default" in prop:
                md += f"\n  - Default: `{json.dumps(prop['default'])}`"
            if prop.get("description"):
                md += f"\n  - Description: {prop['description']}"
            return md

        def format_section(title: str, section: Dict[str, Any]) -> str:
            required = set(section.get("required", []))
            fields = "\n".join(
                format_field(name, prop, name in required)
                for name, prop in section.get("properties", {}).items()
            )
            heading = f"### {title}"
            if section.get("description"):
                heading += f"\n\n{section['description']}"
            return f"{heading}\n\n{fields}"

        sections = "\n\n".join(
            format_section(name, body) for name, body in definitions.items() if "properties" in body
        )
        doc = f"""# Config Schema Documentation

## Overview
A simulation run is described by one JSON document. Unknown keys are rejected
at every level. Angles are given in degrees, all other quantities in SI units.

## Top level

{format_section("ConfigDocument", schema)}

## Sections

{sections}
"""
        with open(output_path, 'w') as f:
            f.write(doc)
        logger.info(f"wrote schema documentation to {output_path}")
