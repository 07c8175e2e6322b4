"""
Shared click options, field resolution, run configuration and error mapping.
"""
import functools
import logging
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

import click
from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from backend.arithmetic import squarefree_reduce
from backend.atlas import Region
from backend.errors import QuadPrimeError
from backend.field import FieldParams, field_from_discriminant, make_field
from backend.ideals import IdealSpec
from backend.render import RenderConfig
from frontend.config.constants import DEFAULT_BOX, DEFAULT_FORMAT, EXIT_USAGE, EXTENSIONS, RENDER_CONFIG_KEYS

logger = logging.getLogger(__name__)


class PreconditionError(click.ClickException):
    """A usage or precondition failure, reported with exit code 2."""

    exit_code = EXIT_USAGE


def guarded(command: Callable) -> Callable:
    """Map library and validation errors to exit code 2."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except QuadPrimeError as e:
            logger.error(f"{command.__name__} failed: {e}")
            raise PreconditionError(str(e)) from e
        except ValidationError as e:
            logger.error(f"{command.__name__} rejected its configuration: {e}")
            raise PreconditionError(f"Invalid configuration: {e}") from e

    return wrapper


def field_options(command: Callable) -> Callable:
    """-r/--radicand and -d/--discriminant."""
    command = click.option(
        "-d", "--discriminant", type=int, default=None, help="Field discriminant (checked against -r when both given)."
    )(command)
    command = click.option(
        "-r", "--radicand", type=int, default=None, help="Radicand; square factors are removed."
    )(command)
    return command


def resolve_field(radicand: Optional[int], discriminant: Optional[int]) -> Tuple[FieldParams, Optional[str]]:
    """Build the field and, when the radicand was reduced, a note describing the reduction."""
    if radicand is None and discriminant is None:
        raise PreconditionError("Give a radicand (-r) or a discriminant (-d)")

    note = None
    if radicand is not None:
        f = make_field(radicand)
        if radicand != 0:
            r, s = squarefree_reduce(radicand)
            if s != 1:
                note = f"reduced {radicand} = {r} * {s}^2, r={r}"
        if discriminant is not None and discriminant != f.d:
            raise PreconditionError(f"Discriminant {discriminant} does not match radicand {radicand} (d = {f.d})")
        return f, note

    return field_from_discriminant(discriminant), note


class RunConfig(BaseModel):
    """Atlas run: field, region, sieve bound, ideal and output."""

    model_config = ConfigDict(frozen=True)

    radicand: Optional[int] = None
    discriminant: Optional[int] = None
    max: Optional[int] = None
    box: Optional[int] = None
    xmin: Optional[int] = None
    xmax: Optional[int] = None
    ymin: Optional[int] = None
    ymax: Optional[int] = None
    ideal_norm: Optional[int] = None
    ideal_shift: Optional[int] = None
    ideal_auto: bool = False
    output: Optional[str] = None
    format: Optional[str] = None

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        bounds = (self.xmin, self.xmax, self.ymin, self.ymax)
        if self.box is not None and any(b is not None for b in bounds):
            raise ValueError("--box cannot be combined with --xmin/--xmax/--ymin/--ymax")
        if self.box is not None and self.box < 0:
            raise ValueError("--box must be non-negative")
        if (self.ideal_norm is None) != (self.ideal_shift is None):
            raise ValueError("--ideal-norm and --ideal-shift must be given together")
        if self.ideal_auto and self.ideal_norm is not None:
            raise ValueError("--ideal-auto cannot be combined with --ideal-norm/--ideal-shift")
        if self.max is not None and self.max < 2:
            raise ValueError("--max must be at least 2")
        return self

    def region(self) -> Region:
        if self.box is not None:
            return Region.box(self.box)
        return Region(
            self.xmin if self.xmin is not None else -DEFAULT_BOX,
            self.xmax if self.xmax is not None else DEFAULT_BOX,
            self.ymin if self.ymin is not None else -DEFAULT_BOX,
            self.ymax if self.ymax is not None else DEFAULT_BOX,
        )

    def ideal(self) -> Optional[IdealSpec]:
        if self.ideal_norm is None:
            return None
        return IdealSpec(m=self.ideal_norm, shift=self.ideal_shift)

    def output_format(self) -> str:
        if self.format:
            return self.format
        if self.output and Path(self.output).suffix.lower() == EXTENSIONS["text"]:
            return "text"
        return DEFAULT_FORMAT


def load_render_config(path: Optional[str], overrides: Dict[str, Any]) -> RenderConfig:
    """RenderConfig from a key=value file, with non-None overrides taking precedence."""
    values: Dict[str, Any] = {}
    if path:
        file_values = dotenv_values(path)
        unknown = sorted(set(file_values) - set(RENDER_CONFIG_KEYS))
        if unknown:
            raise PreconditionError(f"Unknown keys in {path}: {', '.join(unknown)}")
        values.update({key: value for key, value in file_values.items() if value is not None})
        logger.info(f"Loaded render settings from {path}")
    values.update({key: value for key, value in overrides.items() if value is not None})
    return RenderConfig(**values)
