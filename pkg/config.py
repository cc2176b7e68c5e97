# config.py
import json
import logging

from errors import ConfigError
from pydantic import ValidationError
from serialization.bfile import FixtureParameters


async def load_config(config_path: str, sequence_id: str) -> FixtureParameters:
    """ Load the b-file fixture entry of one OEIS sequence from a JSON file. """
    try:
        # debug
        logging.debug(f"Loading config from {config_path}")

        # Read the configuration file
        with open(config_path, "r") as config_file:
            config = json.load(config_file)

        # Retrieve the fixture entry
        fixture = config.get("oeisFixtures", {}).get(sequence_id)
        if not fixture:
            error_msg = f"Sequence '{sequence_id}' not found in configuration file."
            logging.error(error_msg)
            raise ConfigError(error_msg)

        # Validate the fixture parameters
        result = FixtureParameters.model_validate(fixture)

        # debug
        logging.debug(f"Loaded config: specialization='{result.specialization}', bfile={result.bfile}, offset={result.offset}")

        # return result
        return result

    except FileNotFoundError:
        # error
        error_msg = f"Configuration file not found: {config_path}"
        logging.error(error_msg)
        raise ConfigError(error_msg)
    except json.JSONDecodeError as e:
        # json error
        error_msg = f"Invalid JSON in configuration file: {e.msg}"
        logging.error(error_msg)
        raise ConfigError(error_msg) from e
    except ValidationError as e:
        # schema error
        error_msg = f"Invalid fixture entry for '{sequence_id}': {e.errors()[0]['msg']}"
        logging.error(error_msg)
        raise ConfigError(error_msg) from e


async def list_fixtures(config_path: str) -> list[str]:
    """ The sequence ids with a fixture entry. """
    try:
        with open(config_path, "r") as config_file:
            return sorted(json.load(config_file).get("oeisFixtures", {}))
    except (OSError, json.JSONDecodeError) as e:
        error_msg = f"Cannot read configuration file {config_path}: {e}"
        logging.error(error_msg)
        raise ConfigError(error_msg) from e
