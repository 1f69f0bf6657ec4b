import logging
import os

ENV_VAR = "ANTCAL_LOG"


def level_from_env(default: int = logging.WARNING) -> int:
    """
    Read the logging level named by the ANTCAL_LOG environment variable.

    Parameters:
        default (int): Level used when the variable is unset or unknown.

    Returns:
        int: A logging level such as logging.INFO.
    """
    name = os.environ.get(ENV_VAR, "").strip().upper()
    level = logging.getLevelName(name) if name else default
    return level if isinstance(level, int) else default


def configure_logging(level: int | None = None) -> logging.Logger:
    """
    Attach a single stderr handler to the package logger.

    Library modules only create loggers; handlers are installed here, once, by
    the command-line entry point or by scripts.

    Parameters:
        level (int | None): Logging level. Defaults to the ANTCAL_LOG setting.

    Returns:
        logging.Logger: The configured "antcal" logger.
    """
    logger = logging.getLogger("antcal")
    logger.setLevel(level_from_env() if level is None else level)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        logger.addHandler(handler)
    return logger
