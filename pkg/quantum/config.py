"""
Run configuration shared by the CLI and the HTTP views.

Precedence, highest first: explicit flags, the QIT_SEED environment variable
(seed only), a JSON config file, then the QIT block of Django settings.
"""
import json
import logging
from dataclasses import dataclass, fields
from pathlib import Path

from decouple import config
from django.conf import settings

from .exceptions import ContractError, MatrixParseError

logger = logging.getLogger(__name__)

SEED_LIMIT = 2 ** 64


@dataclass(frozen=True)
class Config:
    k_boltzmann: float = 1.0
    hbar: float = 1.0
    default_tolerance: float = 1e-9
    seed: int = 20240601

    def __post_init__(self):
        for name in ('k_boltzmann', 'hbar', 'default_tolerance'):
            value = getattr(self, name)
            if not value > 0:
                raise ContractError(f"{name} must be positive, got {value}")
        if not 0 <= self.seed < SEED_LIMIT:
            raise ContractError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def _settings_defaults():
    qit = getattr(settings, 'QIT', {})
    return {
        'k_boltzmann': qit.get('K_BOLTZMANN', 1.0),
        'hbar': qit.get('HBAR', 1.0),
        'default_tolerance': qit.get('TOLERANCE', 1e-9),
        'seed': qit.get('SEED', 20240601),
    }


def _read_file(config_path):
    path = Path(config_path)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise ContractError(f"Config file {path} does not exist")
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"Invalid config JSON: {exc.msg}", exc.lineno, exc.colno)
    if not isinstance(data, dict):
        raise ContractError("Config file must hold a JSON object")
    known = {f.name for f in fields(Config)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ContractError(f"Unknown config keys: {', '.join(unknown)}")
    return data


def parse_config(flags=None, config_path=None):
    """
    Build a Config from CLI flags, environment, config file and settings

    Args:
        flags: mapping of field name to value; None values are ignored
        config_path: optional path of a JSON object with Config fields
    """
    values = _settings_defaults()
    if config_path:
        values.update(_read_file(config_path))
    env_seed = config('QIT_SEED', default=None)
    if env_seed not in (None, ''):
        try:
            values['seed'] = int(env_seed)
        except ValueError:
            raise ContractError(f"QIT_SEED must be an integer, got {env_seed!r}")
    for name, value in (flags or {}).items():
        if value is not None:
            values[name] = value
    try:
        result = Config(
            k_boltzmann=float(values['k_boltzmann']),
            hbar=float(values['hbar']),
            default_tolerance=float(values['default_tolerance']),
            seed=int(values['seed']),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ContractError):
            raise
        raise ContractError(f"Invalid config value: {exc}")
    logger.debug(f"Resolved config {result}")
    return result
