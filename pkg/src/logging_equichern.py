import logging
import os
from sys import stdout

# Define logger
logger = logging.getLogger("EQUICHERN")

logger.setLevel(os.getenv("LOG_LEVEL", "INFO").upper())  # set logger level
logFormatter = logging.Formatter(
    "%(name)-12s %(asctime)s %(levelname)-8s %(filename)s:%(funcName)s %(message)s"
)
consoleHandler = logging.StreamHandler(stdout)  # set streamhandler to stdout
consoleHandler.setFormatter(logFormatter)
if not logger.handlers:
    logger.addHandler(consoleHandler)


def set_level(level: str) -> None:
    """Apply a level name from the configuration to the engine logger."""
    logger.setLevel(level.upper())
