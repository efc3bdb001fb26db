import logging
import os
from typing import Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, PositiveFloat, PositiveInt, field_validator

from utils.utils import load_json

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "configs/config.json"

ENV_OVERRIDES = {
    "GROUP_AUDIT_MAX_COSETS": "max_cosets",
    "GROUP_AUDIT_MAX_ORDER": "max_order",
    "GROUP_AUDIT_TIMEOUT_SECS": "timeout_secs",
    "GROUP_AUDIT_JOBS": "jobs",
}


class AuditSettings(BaseModel):
    """Caps and defaults shared by every command."""

    max_cosets: PositiveInt = 65536
    max_order: PositiveInt = 1024
    isomorphism_cap: PositiveInt = 512
    timeout_secs: PositiveFloat = 30.0
    jobs: PositiveInt = 1
    batch_size: PositiveInt = 16
    corpus_caps: Dict[int, PositiveInt] = {2: 64, 3: 243, 5: 625}

    @field_validator("corpus_caps")
    @classmethod
    def caps_for_primes(cls, caps: Dict[int, int]) -> Dict[int, int]:
        unknown = [p for p in caps if p not in (2, 3, 5)]
        if unknown:
            raise ValueError(f"corpus_caps only covers the primes 2, 3 and 5, got {unknown}")
        return caps


def load_settings(config_path: Optional[str] = DEFAULT_CONFIG_PATH, **overrides) -> AuditSettings:
    """Defaults from the JSON config, then GROUP_AUDIT_* environment variables, then ``overrides``.

    ``None`` overrides are ignored so unset command-line flags fall through.
    """
    load_dotenv()
    values = {}
    if config_path and os.path.exists(config_path):
        values.update(load_json(config_path))
        logger.debug(f"Loaded settings from {config_path}")
    for variable, field in ENV_OVERRIDES.items():
        if os.getenv(variable):
            values[field] = os.getenv(variable)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return AuditSettings(**values)
