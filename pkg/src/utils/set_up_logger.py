import logging
import os


def setup_logger(log_path: str, level: str = "INFO") -> logging.Logger:
    """
    Build (once per file name) a logger writing to ``log_path`` and to stderr.

    :param log_path: Path of the log file; its directory is created if missing
    :param level: Logging level name
    :return: Configured logger
    """
    logger = logging.getLogger(os.path.basename(log_path))
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))

    if not logger.handlers:
        formatter = logging.Formatter("%(asctime)s - %(levelname)s: %(message)s")

        os.makedirs(os.path.dirname(log_path) or ".", exist_ok=True)
        file_handler = logging.FileHandler(log_path, mode='a', encoding='utf-8')
        file_handler.setFormatter(formatter)

        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(formatter)

        logger.addHandler(file_handler)
        logger.addHandler(stream_handler)

    return logger
