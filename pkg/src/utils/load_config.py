import logging
import os

from amoeba_types.types import AmoebaConfig

logger = logging.getLogger(__name__)


def load_config(**overrides) -> AmoebaConfig:
    # AMOEBA_THREADS caps the worker count; explicit overrides win over the environment
    config = AmoebaConfig()

    threads_env = os.environ.get("AMOEBA_THREADS")
    if threads_env:
        try:
            config.threads = max(1, int(threads_env))
        except ValueError:
            logger.warning(f"⚠️  Ignoring non-integer AMOEBA_THREADS={threads_env!r}")

    for key, value in overrides.items():
        if not hasattr(config, key):
            raise TypeError(f"unknown config field: {key}")
        setattr(config, key, value)

    config.__post_init__()
    return config
