import json
import os
import traceback

from comfort_vitals.exceptions import InvalidParameterError
from comfort_vitals.logger import logger


SEED_ENV_VAR = "COMFORT_VITALS_SEED"
DEFAULT_SEED = 0


def write_to_file(file_path, data):
    """Write data to a file."""
    logger.debug(f"Writing data to {file_path}")
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, "w") as file:
        file.write(data)


def write_json_to_file(file_path, data):
    """Write JSON data to a file."""
    logger.debug(f"Writing JSON data to {file_path}")
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, "w") as file:
        json.dump(data, file, indent=4)


def log_traceback():
    for line in traceback.format_exc().splitlines():
        logger.error(line)


def resolve_seed(seed=None):
    """Pick the generator seed: explicit value, then environment, then default.

    Args:
        seed (int, optional): Seed given on the command line.

    Returns:
        int: The seed to use.
    """
    if seed is not None:
        return int(seed)

    env_value = os.environ.get(SEED_ENV_VAR)
    if env_value is None or env_value.strip() == "":
        return DEFAULT_SEED

    try:
        return int(env_value)
    except ValueError:
        logger.error(f"{SEED_ENV_VAR} must be an integer, got {env_value!r}")
        raise InvalidParameterError(
            f"{SEED_ENV_VAR} must be an integer, got {env_value!r}"
        )
