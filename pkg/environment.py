# environment.py
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from errors import ConfigError

# Environment variables read at startup and their defaults
DEFAULT_ENVIRONMENT = {
    "SWR_MAX_THREADS": "4",
    "SWR_LOG_LEVEL": "WARNING",
    "SWR_PATH_GUARD": "10",
}


class Settings(BaseModel):
    max_threads: int = Field(4, ge=1)
    log_level: str = "WARNING"
    path_guard: int = Field(10, ge=0)


def get_default_environment() -> dict[str, str]:
    """
    Retrieve the SWR_* variables, falling back to the defaults.
    """

    # a .env next to the working directory may set them too
    load_dotenv()

    # return the dictionary
    return {key: os.environ.get(key) or default for key, default in DEFAULT_ENVIRONMENT.items()}


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    env = get_default_environment()
    try:
        return Settings(
            max_threads=env["SWR_MAX_THREADS"],
            log_level=env["SWR_LOG_LEVEL"].upper(),
            path_guard=env["SWR_PATH_GUARD"],
        )
    except ValidationError as e:
        raise ConfigError(f"Invalid SWR_* environment setting: {e.errors()[0]['msg']}") from e
